#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sytinv/shape.hpp"

namespace sytinv {

struct Violation {
  enum class Kind { ShapeMismatch, ContentOutOfRange, DuplicateContent, RowDecrease, ColumnDecrease };
  Kind kind;
  std::vector<Cell> cells;
  std::string message;
};

const char* to_string(Violation::Kind kind);

class ValidationError : public ParseError {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  [[nodiscard]] const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Raw filling of a shape: one vector per row, bottom to top, holding the
/// contents of the present cells of that row from left to right.
using RowFilling = std::vector<std::vector<int>>;

struct ValidationResult;

/// A standard Young tableau of straight or skew shape.
///
/// Contents are stored in a dense grid over the outer bounding box (0 marks
/// cells outside the shape) together with the inverse index content -> cell,
/// so both lookups are O(1). Instances are immutable once built; the
/// algorithms construct new tableaux through `relabeled`.
class Tableau {
 public:
  /// The empty tableau (n = 0).
  Tableau() { build_index(); }
  /// Validated construction; throws ValidationError listing every violation.
  Tableau(Shape shape, const RowFilling& rows);

  [[nodiscard]] const Shape& shape() const { return shape_; }
  [[nodiscard]] int size() const { return n_; }

  /// Content of a cell, or 0 when the cell is not in the shape.
  [[nodiscard]] int at(Cell c) const {
    if (c.row < 1 || c.row > rows_ || c.col < 1 || c.col > cols_) return 0;
    return grid_[index(c)];
  }
  [[nodiscard]] int at(int row, int col) const { return at(Cell{row, col}); }
  /// Cell holding content k (1 <= k <= n).
  [[nodiscard]] Cell cell_of(int k) const { return where_[static_cast<std::size_t>(k)]; }

  [[nodiscard]] RowFilling rows() const;

  /// New tableau of the same shape where the cell holding k receives
  /// relabel[k] (relabel has n+1 entries, index 0 unused). The result is
  /// re-validated; an InternalError is raised if it is not standard.
  [[nodiscard]] Tableau relabeled(std::span<const int> relabel) const;

  /// Removes the cell containing n; throws InternalError if it is not a corner.
  [[nodiscard]] Tableau without_largest() const;

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.shape_ == b.shape_ && a.grid_ == b.grid_;
  }

 private:
  friend ValidationResult validate_tableau(const Shape&, const RowFilling&);
  Tableau(Shape shape, std::vector<int> grid, int rows, int cols);
  [[nodiscard]] std::size_t index(Cell c) const {
    return static_cast<std::size_t>((c.row - 1) * cols_ + (c.col - 1));
  }
  void build_index();

  Shape shape_;
  int n_ = 0;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> grid_;
  std::vector<Cell> where_;
};

struct ValidationResult {
  std::optional<Tableau> tableau;  // set iff violations is empty
  std::vector<Violation> violations;
  [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Checks a candidate filling and reports every violated constraint.
ValidationResult validate_tableau(const Shape& shape, const RowFilling& rows);

/// Builds a straight-shape tableau from bottom-to-top rows; the shape is
/// read off the row lengths.
Tableau make_tableau(const RowFilling& rows);

Tableau conjugate(const Tableau& t);

/// 180 degree rotation inside the outer bounding box with c -> n+1-c.
/// The result shape is translation-normalised; the map is an involution on
/// normalised shapes.
Tableau rotate_complement(const Tableau& t);

/// Tableau text format.
///
///   shape: 2,2/1        (optional)
///   rows: top-down      (optional; default bottom-up)
///   . 1
///   2 3
///
/// Row lines hold contents separated by whitespace with `.` for inner cells.
/// Lines starting with `#` and blank lines are ignored.
Tableau parse_tableau(std::string_view text);

/// Render in French orientation (top row first) with a `shape:` and
/// `rows: top-down` header, cells right-aligned to max width + 1.
/// `parse_tableau(render_tableau(t)) == t`.
std::string render_tableau(const Tableau& t);

/// One-line reading: contents row by row, bottom to top, left to right.
std::vector<int> reading_word(const Tableau& t);

}  // namespace sytinv
