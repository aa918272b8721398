#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sytinv {

/// Raised for malformed user input (shape strings, tableau files, permutations).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an algorithm produces a result that violates its own guarantees.
/// Never triggered by valid input; seeing one means a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A cell in French coordinates: row 1 is the bottom row, column 1 the leftmost.
struct Cell {
  int row = 0;
  int col = 0;

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& c);

/// Weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  [[nodiscard]] std::span<const int> parts() const { return parts_; }
  [[nodiscard]] std::size_t length() const { return parts_.size(); }
  [[nodiscard]] bool empty() const { return parts_.empty(); }
  [[nodiscard]] int size() const;
  /// Part i (1-based); 0 past the last part.
  [[nodiscard]] int operator[](int i) const;
  [[nodiscard]] Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const Partition& p);

/// Skew Ferrers diagram outer/inner. A straight shape has an empty inner partition.
///
/// Rows where inner equals outer are allowed (empty rows inside a skew shape).
class Shape {
 public:
  Shape() = default;
  explicit Shape(Partition outer, Partition inner = {});

  [[nodiscard]] const Partition& outer() const { return outer_; }
  [[nodiscard]] const Partition& inner() const { return inner_; }
  [[nodiscard]] bool is_straight() const { return inner_.empty(); }
  [[nodiscard]] int size() const { return outer_.size() - inner_.size(); }
  [[nodiscard]] int rows() const { return static_cast<int>(outer_.length()); }
  [[nodiscard]] int cols() const { return outer_[1]; }

  [[nodiscard]] bool contains(Cell c) const;
  /// Cells of row i, left to right: columns inner_i+1 .. outer_i.
  [[nodiscard]] int row_begin(int row) const { return inner_[row] + 1; }
  [[nodiscard]] int row_end(int row) const { return outer_[row]; }
  /// All cells, rows bottom to top, left to right.
  [[nodiscard]] std::vector<Cell> cells() const;

  /// Reconstructs the shape of an arbitrary cell set, or nullopt when the
  /// set is not of the form outer/inner. Trailing empty rows are dropped.
  static std::optional<Shape> from_cells(std::span<const Cell> cells);

  /// Translation-normal form: no empty bottom/top rows, column 1 nonempty.
  [[nodiscard]] Shape normalized() const;
  [[nodiscard]] bool is_normalized() const { return *this == normalized(); }

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

/// Formats as "4,3,1" or "6,5,4,3,2,1/5,4,3,2,1".
std::string to_string(const Shape& s);

/// Parses `p1,p2,...[/q1,q2,...]`. Throws ParseError.
Shape parse_shape(std::string_view text);

/// Cells with neither a north nor an east neighbour in the shape, ordered by
/// descending row.
std::vector<Cell> corner_cells(const Shape& s);

/// Staircase skew shape (n,...,1)/(n-1,...,1).
Shape staircase_shape(int n);

/// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

}  // namespace sytinv
