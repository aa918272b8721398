#include "sytinv/statistics.hpp"

#include <algorithm>
#include <stdexcept>

namespace sytinv {

DescentSet::DescentSet(std::vector<int> indices, int n) : indices_(std::move(indices)), n_(n) {
  std::sort(indices_.begin(), indices_.end());
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 1 || indices_[i] > n - 1) throw std::out_of_range("descent index outside 1..n-1");
    if (i && indices_[i] == indices_[i - 1]) throw std::invalid_argument("repeated descent index");
  }
}

bool DescentSet::contains(int i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }

std::string to_string(const DescentSet& d) {
  std::string out = "{";
  for (std::size_t i = 0; i < d.indices().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d.indices()[i]);
  }
  return out + "}";
}

bool is_descent(const Tableau& t, int i) { return t.cell_of(i + 1).row > t.cell_of(i).row; }

DescentSet descent_set(const Tableau& t) {
  std::vector<int> out;
  for (int i = 1; i < t.size(); ++i)
    if (is_descent(t, i)) out.push_back(i);
  return DescentSet(std::move(out), t.size());
}

int maj(const Tableau& t) {
  int total = 0;
  for (int i = 1; i < t.size(); ++i)
    if (is_descent(t, i)) total += i;
  return total;
}

int comaj(const Tableau& t) {
  int total = 0;
  for (int i = 1; i < t.size(); ++i)
    if (is_descent(t, i)) total += t.size() - i;
  return total;
}

}  // namespace sytinv
