#include "sytinv/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>
#include <unordered_map>

#include "sytinv/inversion.hpp"
#include "sytinv/statistics.hpp"

namespace sytinv {

DistributionPolynomial::DistributionPolynomial(std::vector<std::uint64_t> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

void DistributionPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void DistributionPolynomial::add(int exponent, std::uint64_t count) {
  if (exponent < 0) throw std::out_of_range("negative exponent");
  if (count == 0) return;
  const auto e = static_cast<std::size_t>(exponent);
  if (coeffs_.size() <= e) coeffs_.resize(e + 1, 0);
  coeffs_[e] += count;
}

DistributionPolynomial& DistributionPolynomial::operator+=(const DistributionPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

std::uint64_t DistributionPolynomial::at_one() const {
  std::uint64_t total = 0;
  for (auto c : coeffs_) total += c;
  return total;
}

std::string to_string(const DistributionPolynomial& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.coefficients()[i]);
  }
  return out + "]";
}

const char* to_string(Statistic s) {
  switch (s) {
    case Statistic::Maj: return "maj";
    case Statistic::Comaj: return "comaj";
    case Statistic::Inv: return "inv";
    case Statistic::Cinv: return "cinv";
  }
  return "?";
}

Statistic parse_statistic(std::string_view name) {
  if (name == "maj") return Statistic::Maj;
  if (name == "comaj") return Statistic::Comaj;
  if (name == "inv") return Statistic::Inv;
  if (name == "cinv") return Statistic::Cinv;
  throw ParseError("unknown statistic '" + std::string(name) + "' (expected maj, comaj, inv, cinv)");
}

int evaluate(Statistic s, const Tableau& t) {
  switch (s) {
    case Statistic::Maj: return maj(t);
    case Statistic::Comaj: return comaj(t);
    case Statistic::Inv: return inv_statistic(t);
    case Statistic::Cinv: return cinv_statistic(t);
  }
  return 0;
}

namespace {

// Fills contents n, n-1, ..., 1 into removable corners of the remaining cells.
class CornerFiller {
 public:
  CornerFiller(const Shape& shape, const std::function<void(const Tableau&)>& visit)
      : shape_(shape), visit_(visit), rows_(shape.rows()) {
    filled_to_.resize(static_cast<std::size_t>(rows_ + 2), 0);
    rows_content_.resize(static_cast<std::size_t>(rows_));
    for (int i = 1; i <= rows_; ++i) {
      filled_to_[static_cast<std::size_t>(i)] = shape.row_end(i);
      rows_content_[static_cast<std::size_t>(i - 1)].assign(
          static_cast<std::size_t>(shape.row_end(i) - shape.row_begin(i) + 1), 0);
    }
  }

  // Removable corners of the remaining cells, by descending row.
  std::vector<int> corner_rows() const {
    std::vector<int> out;
    for (int i = rows_; i >= 1; --i) {
      const int end = remaining_end(i);
      if (end < shape_.row_begin(i)) continue;
      if (i < rows_ && shape_.row_begin(i + 1) <= end && remaining_end(i + 1) >= end) continue;
      out.push_back(i);
    }
    return out;
  }

  void place(int row, int content) {
    const int col = remaining_end(row);
    rows_content_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - shape_.row_begin(row))] = content;
    --filled_to_[static_cast<std::size_t>(row)];
  }
  void unplace(int row) { ++filled_to_[static_cast<std::size_t>(row)]; }

  void recurse(int m) {
    if (m == 0) {
      visit_(Tableau(shape_, rows_content_));
      return;
    }
    for (int row : corner_rows()) {
      place(row, m);
      recurse(m - 1);
      unplace(row);
    }
  }

 private:
  int remaining_end(int row) const { return filled_to_[static_cast<std::size_t>(row)]; }

  const Shape& shape_;
  const std::function<void(const Tableau&)>& visit_;
  int rows_;
  std::vector<int> filled_to_;
  RowFilling rows_content_;
};

}  // namespace

void for_each_syt(const Shape& shape, const std::function<void(const Tableau&)>& visit) {
  CornerFiller filler(shape, visit);
  filler.recurse(shape.size());
}

std::vector<Tableau> enumerate_syt(const Shape& shape) {
  std::vector<Tableau> out;
  for_each_syt(shape, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

std::vector<Tableau> enumerate_syt_parallel(const Shape& shape, unsigned workers) {
  const int n = shape.size();
  if (workers <= 1 || n == 0) return enumerate_syt(shape);
  std::function<void(const Tableau&)> noop = [](const Tableau&) {};
  const std::vector<int> corners = CornerFiller(shape, noop).corner_rows();
  std::vector<std::vector<Tableau>> parts(corners.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < corners.size(); i = next++) {
      std::function<void(const Tableau&)> collect = [&parts, i](const Tableau& t) { parts[i].push_back(t); };
      CornerFiller filler(shape, collect);
      filler.place(corners[i], n);
      filler.recurse(n - 1);
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned count = std::min<unsigned>(workers, static_cast<unsigned>(corners.size()));
    for (unsigned w = 0; w < count; ++w) pool.emplace_back(work);
  }
  std::vector<Tableau> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

std::uint64_t count_syt(const Shape& shape) {
  const std::vector<Cell> cells = shape.cells();
  if (cells.size() > 64) throw std::length_error("count_syt supports at most 64 cells");
  std::map<Cell, int> index;
  for (std::size_t i = 0; i < cells.size(); ++i) index[cells[i]] = static_cast<int>(i);
  // For each cell, the bits of its north and east neighbours.
  std::vector<std::uint64_t> blockers(cells.size(), 0);
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (Cell nb : {Cell{cells[i].row + 1, cells[i].col}, Cell{cells[i].row, cells[i].col + 1}})
      if (auto it = index.find(nb); it != index.end()) blockers[i] |= std::uint64_t{1} << it->second;

  std::unordered_map<std::uint64_t, std::uint64_t> memo;
  std::function<std::uint64_t(std::uint64_t)> count = [&](std::uint64_t remaining) -> std::uint64_t {
    if (remaining == 0) return 1;
    if (auto it = memo.find(remaining); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if ((remaining & bit) && !(remaining & blockers[i])) total += count(remaining & ~bit);
    }
    memo.emplace(remaining, total);
    return total;
  };
  const std::uint64_t all = cells.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cells.size()) - 1;
  return count(all);
}

DistributionPolynomial distribution(const Shape& shape, Statistic stat, unsigned workers) {
  DistributionPolynomial poly;
  if (workers <= 1) {
    for_each_syt(shape, [&](const Tableau& t) { poly.add(evaluate(stat, t)); });
    return poly;
  }
  for (const auto& t : enumerate_syt_parallel(shape, workers)) poly.add(evaluate(stat, t));
  return poly;
}

bool EquidistributionReport::pass() const {
  return std::all_of(maj_inv.begin(), maj_inv.end(), [](const auto& c) { return c.pass(); }) &&
         std::all_of(comaj_cinv.begin(), comaj_cinv.end(), [](const auto& c) { return c.pass(); });
}

EquidistributionReport equidistribution_report(const Shape& shape, unsigned workers) {
  EquidistributionReport report;
  report.shape = shape;
  const bool global = shape.is_straight();
  std::map<std::optional<Cell>, ClassComparison> by_n, by_one;
  auto tally = [&](const Tableau& t) {
    ++report.count;
    const std::optional<Cell> top = global ? std::nullopt : std::optional<Cell>(t.cell_of(t.size()));
    const std::optional<Cell> bottom = global ? std::nullopt : std::optional<Cell>(t.cell_of(1));
    auto& a = by_n[top];
    a.fixed_cell = top;
    a.lhs.add(maj(t));
    a.rhs.add(inv_statistic(t));
    auto& b = by_one[bottom];
    b.fixed_cell = bottom;
    b.lhs.add(comaj(t));
    b.rhs.add(cinv_statistic(t));
  };
  if (workers <= 1) for_each_syt(shape, tally);
  else for (const auto& t : enumerate_syt_parallel(shape, workers)) tally(t);
  for (auto& [cell, cmp] : by_n) report.maj_inv.push_back(std::move(cmp));
  for (auto& [cell, cmp] : by_one) report.comaj_cinv.push_back(std::move(cmp));
  return report;
}

std::vector<Shape> skew_catalog(int max_cells, int max_rows, int max_cols) {
  std::set<std::pair<int, std::string>> seen;
  std::vector<Shape> out;
  std::vector<int> outer, inner;
  std::function<void()> choose_inner;
  std::function<void(int)> choose_outer = [&](int depth) {
    if (!outer.empty()) {
      inner.clear();
      choose_inner();
    }
    if (depth == max_rows) return;
    const int cap = outer.empty() ? max_cols : outer.back();
    for (int p = 1; p <= cap; ++p) {
      outer.push_back(p);
      choose_outer(depth + 1);
      outer.pop_back();
    }
  };
  choose_inner = [&] {
    const std::size_t i = inner.size();
    if (i == outer.size()) {
      Shape s{Partition(outer), Partition(inner)};
      const int n = s.size();
      if (n < 1 || n > max_cells) return;
      Shape norm = s.normalized();
      if (seen.insert({n, to_string(norm)}).second) out.push_back(std::move(norm));
      return;
    }
    const int cap = std::min(outer[i], i == 0 ? max_cols : inner[i - 1]);
    for (int q = 0; q <= cap; ++q) {
      inner.push_back(q);
      choose_inner();
      inner.pop_back();
    }
  };
  choose_outer(0);
  std::sort(out.begin(), out.end(), [](const Shape& a, const Shape& b) {
    return std::pair(a.size(), to_string(a)) < std::pair(b.size(), to_string(b));
  });
  return out;
}

}  // namespace sytinv
