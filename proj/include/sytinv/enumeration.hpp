#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sytinv/tableau.hpp"

namespace sytinv {

/// Nonnegative integer coefficients of a polynomial in q; index = exponent.
/// Canonical form has a nonzero leading coefficient (empty for zero).
class DistributionPolynomial {
 public:
  DistributionPolynomial() = default;
  explicit DistributionPolynomial(std::vector<std::uint64_t> coefficients);

  void add(int exponent, std::uint64_t count = 1);
  DistributionPolynomial& operator+=(const DistributionPolynomial& other);

  [[nodiscard]] const std::vector<std::uint64_t>& coefficients() const { return coeffs_; }
  [[nodiscard]] std::uint64_t at_one() const;
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }

  friend bool operator==(const DistributionPolynomial&, const DistributionPolynomial&) = default;

 private:
  void trim();
  std::vector<std::uint64_t> coeffs_;
};

/// "[c0,c1,...]"; "[]" for the zero polynomial.
std::string to_string(const DistributionPolynomial& p);

enum class Statistic { Maj, Comaj, Inv, Cinv };

const char* to_string(Statistic s);
/// Accepts maj, comaj, inv, cinv. Throws ParseError.
Statistic parse_statistic(std::string_view name);
int evaluate(Statistic s, const Tableau& t);

/// Visits every SYT of `shape` once. Order: n is placed in each corner cell
/// (corners by descending row), then recursively n-1, and so on.
void for_each_syt(const Shape& shape, const std::function<void(const Tableau&)>& visit);
std::vector<Tableau> enumerate_syt(const Shape& shape);
/// Splits the work by the corner holding n over up to `workers` threads; the
/// concatenated result equals `enumerate_syt(shape)` element for element.
std::vector<Tableau> enumerate_syt_parallel(const Shape& shape, unsigned workers);

/// Corner-removal recurrence with memoisation on the remaining cell set.
/// Requires at most 64 cells.
std::uint64_t count_syt(const Shape& shape);

DistributionPolynomial distribution(const Shape& shape, Statistic stat, unsigned workers = 1);

struct ClassComparison {
  /// Cell holding the fixed content; nullopt for a global comparison.
  std::optional<Cell> fixed_cell;
  DistributionPolynomial lhs;
  DistributionPolynomial rhs;
  [[nodiscard]] bool pass() const { return lhs == rhs; }
};

struct EquidistributionReport {
  Shape shape;
  std::uint64_t count = 0;
  /// maj (lhs) against Inv (rhs); per cell holding n on skew shapes.
  std::vector<ClassComparison> maj_inv;
  /// comaj (lhs) against cinv (rhs); per cell holding 1 on skew shapes.
  std::vector<ClassComparison> comaj_cinv;
  [[nodiscard]] bool pass() const;
};

EquidistributionReport equidistribution_report(const Shape& shape, unsigned workers = 1);

/// All skew shapes with 1..max_cells cells inside a max_rows x max_cols box,
/// translation-normalised and deduplicated, ordered by size then text.
std::vector<Shape> skew_catalog(int max_cells = 8, int max_rows = 4, int max_cols = 4);

}  // namespace sytinv
