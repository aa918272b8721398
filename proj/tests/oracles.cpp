#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracle {

std::uint64_t brute_force_syt_count(const sytinv::Shape& shape) {
  const auto cells = shape.cells();
  std::vector<int> fill(cells.size());
  std::iota(fill.begin(), fill.end(), 1);
  std::uint64_t count = 0;
  auto content = [&](int row, int col) -> int {
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].row == row && cells[i].col == col) return fill[i];
    return 0;
  };
  do {
    bool ok = true;
    for (std::size_t i = 0; i < cells.size() && ok; ++i) {
      const int right = content(cells[i].row, cells[i].col + 1);
      const int up = content(cells[i].row + 1, cells[i].col);
      if ((right && right < fill[i]) || (up && up < fill[i])) ok = false;
    }
    count += ok;
  } while (std::next_permutation(fill.begin(), fill.end()));
  return count;
}

std::uint64_t brute_force_involutions(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    bool inv = true;
    for (int i = 0; i < n && inv; ++i) inv = p[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] == i;
    count += inv;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

namespace {

using Poly = std::vector<long long>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Exact division by a monic-at-zero polynomial 1 + q + ... + q^{m-1}.
Poly divide(const Poly& a, const Poly& b) {
  Poly rem = a;
  Poly out(a.size() - b.size() + 1, 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const long long c = rem[i] / b[0];
    out[i] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[i + j] -= c * b[j];
  }
  for (long long r : rem)
    if (r != 0) throw std::logic_error("q-hook division not exact");
  return out;
}

Poly q_int(int m) { return Poly(static_cast<std::size_t>(m), 1); }

}  // namespace

sytinv::DistributionPolynomial q_hook_maj(const sytinv::Partition& lambda) {
  const int n = lambda.size();
  Poly num{1};
  for (int m = 1; m <= n; ++m) num = multiply(num, q_int(m));
  const auto conj = lambda.conjugate();
  for (int i = 1; i <= static_cast<int>(lambda.length()); ++i)
    for (int j = 1; j <= lambda[i]; ++j) num = divide(num, q_int(lambda[i] - j + conj[j] - i + 1));
  int b = 0;
  for (int i = 1; i <= static_cast<int>(lambda.length()); ++i) b += (i - 1) * lambda[i];
  std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(b), 0);
  for (long long c : num) coeffs.push_back(static_cast<std::uint64_t>(c));
  return sytinv::DistributionPolynomial(std::move(coeffs));
}

int naive_inv(const std::vector<int>& w) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
  return c;
}

int naive_maj(const std::vector<int>& w) {
  int c = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) c += static_cast<int>(i) + 1;
  return c;
}

std::vector<sytinv::Permutation> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<sytinv::Permutation> out;
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace oracle
