#pragma once

#include <span>
#include <string>
#include <vector>

#include "sytinv/tableau.hpp"

namespace sytinv {

/// Sorted descent indices, each in 1..n-1.
class DescentSet {
 public:
  DescentSet() = default;
  DescentSet(std::vector<int> indices, int n);

  [[nodiscard]] std::span<const int> indices() const { return indices_; }
  [[nodiscard]] bool contains(int i) const;
  [[nodiscard]] std::size_t size() const { return indices_.size(); }
  [[nodiscard]] int n() const { return n_; }

  friend bool operator==(const DescentSet&, const DescentSet&) = default;

 private:
  std::vector<int> indices_;
  int n_ = 0;
};

/// "{1,3}" or "{}".
std::string to_string(const DescentSet& d);

/// i is a descent iff i+1 sits in a strictly higher row than i.
DescentSet descent_set(const Tableau& t);
bool is_descent(const Tableau& t, int i);

int maj(const Tableau& t);
int comaj(const Tableau& t);

}  // namespace sytinv
