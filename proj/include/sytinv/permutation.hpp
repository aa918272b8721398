#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sytinv/tableau.hpp"

namespace sytinv {

/// A permutation of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  /// Throws ParseError unless `values` holds each of 1..n exactly once.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  [[nodiscard]] int size() const { return static_cast<int>(values_.size()); }
  [[nodiscard]] std::span<const int> values() const { return values_; }
  /// sigma_i, 1-based.
  [[nodiscard]] int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  /// 1-based position of value v.
  [[nodiscard]] int position_of(int v) const;
  [[nodiscard]] Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

/// Digit string when n <= 9 ("4137562"), comma list otherwise.
std::string to_string(const Permutation& p);
/// Accepts a digit string or a comma-separated list. Throws ParseError.
Permutation parse_permutation(std::string_view text);

int perm_inv(const Permutation& p);
int perm_maj(const Permutation& p);
std::vector<int> perm_descents(const Permutation& p);

/// Foata's map. Each new letter x splits the current word into blocks ending
/// at letters on the same side of x as the previous letter; every block
/// moves its last letter to the front, then x is appended.
Permutation foata(const Permutation& p);
/// Prefix words phi^(1), ..., phi^(n); the last one is foata(p).
std::vector<std::vector<int>> foata_stages(const Permutation& p);
Permutation foata_inverse(const Permutation& p);

struct PermPhiStage {
  int k = 0;
  /// Blocks as value lists, head (largest) first.
  std::vector<std::vector<int>> blocks;
  Permutation result;
};

/// Permutation-level Phi_3 .. Phi_n: for each k, values k-1..1 split into
/// blocks headed by a value on the same side of k as k-1 followed by values
/// on the other side; each block is reverse cycled.
Permutation perm_phi_direct(const Permutation& p, std::vector<PermPhiStage>* trace = nullptr);

/// Staircase skew tableau with sigma_i in the single cell of row i.
Tableau staircase_tableau(const Permutation& p);
/// Inverse of staircase_tableau; throws InternalError on non-staircase input.
Permutation read_staircase(const Tableau& t);

struct BridgeReport {
  Permutation sigma;
  Permutation omega;           // sigma^-1
  Permutation tableau_phi;     // phi(staircase(sigma)) read back
  Permutation direct_phi;      // perm_phi_direct(sigma)
  Permutation foata_omega;     // foata(omega)
  bool tableau_matches_direct = false;
  bool bridge_holds = false;   // foata(omega) == direct_phi^-1
  [[nodiscard]] bool pass() const { return tableau_matches_direct && bridge_holds; }
};

BridgeReport bridge_check(const Permutation& p);

}  // namespace sytinv
