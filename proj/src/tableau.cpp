#include "sytinv/tableau.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace sytinv {

const char* to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::ShapeMismatch: return "shape mismatch";
    case Violation::Kind::ContentOutOfRange: return "content out of range";
    case Violation::Kind::DuplicateContent: return "duplicate content";
    case Violation::Kind::RowDecrease: return "row decrease";
    case Violation::Kind::ColumnDecrease: return "column decrease";
  }
  return "unknown";
}

namespace {

std::string describe(const std::vector<Violation>& violations) {
  std::string out = "invalid tableau:";
  for (const auto& v : violations) out += "\n  " + v.message;
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : ParseError(describe(violations)), violations_(std::move(violations)) {}

Tableau::Tableau(Shape shape, const RowFilling& rows) {
  auto result = validate_tableau(shape, rows);
  if (!result.ok()) throw ValidationError(std::move(result.violations));
  *this = std::move(*result.tableau);
}

Tableau::Tableau(Shape shape, std::vector<int> grid, int rows, int cols)
    : shape_(std::move(shape)), n_(shape_.size()), rows_(rows), cols_(cols), grid_(std::move(grid)) {
  build_index();
}

void Tableau::build_index() {
  where_.assign(static_cast<std::size_t>(n_ + 1), Cell{});
  for (int i = 1; i <= rows_; ++i)
    for (int j = 1; j <= cols_; ++j)
      if (int c = grid_[index({i, j})]; c > 0) where_[static_cast<std::size_t>(c)] = {i, j};
}

RowFilling Tableau::rows() const {
  RowFilling out(static_cast<std::size_t>(rows_));
  for (int i = 1; i <= rows_; ++i)
    for (int j = shape_.row_begin(i); j <= shape_.row_end(i); ++j)
      out[static_cast<std::size_t>(i - 1)].push_back(at(i, j));
  return out;
}

Tableau Tableau::relabeled(std::span<const int> relabel) const {
  if (relabel.size() != static_cast<std::size_t>(n_ + 1))
    throw InternalError("relabel table has wrong length");
  std::vector<int> grid = grid_;
  for (int& c : grid)
    if (c > 0) c = relabel[static_cast<std::size_t>(c)];
  Tableau out(shape_, std::move(grid), rows_, cols_);
  for (int k = 1; k <= n_; ++k)
    if (out.where_[static_cast<std::size_t>(k)] == Cell{})
      throw InternalError("relabel is not a permutation of 1..n");
  for (int i = 1; i <= rows_; ++i)
    for (int j = shape_.row_begin(i); j <= shape_.row_end(i); ++j) {
      const int c = out.at(i, j);
      if ((shape_.contains({i, j + 1}) && out.at(i, j + 1) < c) ||
          (shape_.contains({i + 1, j}) && out.at(i + 1, j) < c))
        throw InternalError("map produced a non-standard filling at " + to_string(Cell{i, j}));
    }
  return out;
}

Tableau Tableau::without_largest() const {
  const Cell c = cell_of(n_);
  std::vector<Cell> cells;
  for (const Cell& x : shape_.cells())
    if (x != c) cells.push_back(x);
  auto s = Shape::from_cells(cells);
  if (!s || shape_.contains({c.row + 1, c.col}) || shape_.contains({c.row, c.col + 1}))
    throw InternalError("largest content is not in a corner");
  RowFilling rows;
  for (int i = 1; i <= s->rows(); ++i) {
    rows.emplace_back();
    for (int j = s->row_begin(i); j <= s->row_end(i); ++j) rows.back().push_back(at(i, j));
  }
  return Tableau(*s, rows);
}

ValidationResult validate_tableau(const Shape& shape, const RowFilling& rows) {
  ValidationResult result;
  auto& out = result.violations;
  const int n = shape.size();
  const int nrows = shape.rows();
  if (static_cast<int>(rows.size()) != nrows) {
    out.push_back({Violation::Kind::ShapeMismatch, {},
                   "expected " + std::to_string(nrows) + " rows, got " + std::to_string(rows.size())});
    return result;
  }
  for (int i = 1; i <= nrows; ++i) {
    const int expected = shape.row_end(i) - shape.row_begin(i) + 1;
    const auto& row = rows[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != expected)
      out.push_back({Violation::Kind::ShapeMismatch, {},
                     "row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                         " cells, shape needs " + std::to_string(expected)});
  }
  if (!out.empty()) return result;

  const int cols = shape.cols();
  std::vector<int> grid(static_cast<std::size_t>(nrows * cols), 0);
  auto at = [&](Cell c) -> int {
    if (!shape.contains(c)) return 0;
    return grid[static_cast<std::size_t>((c.row - 1) * cols + (c.col - 1))];
  };
  std::vector<std::vector<Cell>> seen(static_cast<std::size_t>(n + 1));
  for (int i = 1; i <= nrows; ++i)
    for (int j = shape.row_begin(i); j <= shape.row_end(i); ++j) {
      const int c = rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - shape.row_begin(i))];
      grid[static_cast<std::size_t>((i - 1) * cols + (j - 1))] = c;
      if (c < 1 || c > n)
        out.push_back({Violation::Kind::ContentOutOfRange, {{i, j}},
                       "content " + std::to_string(c) + " at " + to_string(Cell{i, j}) +
                           " outside 1.." + std::to_string(n)});
      else
        seen[static_cast<std::size_t>(c)].push_back({i, j});
    }
  for (int c = 1; c <= n; ++c)
    if (seen[static_cast<std::size_t>(c)].size() > 1) {
      std::string where;
      for (const Cell& x : seen[static_cast<std::size_t>(c)]) where += " " + to_string(x);
      out.push_back({Violation::Kind::DuplicateContent, seen[static_cast<std::size_t>(c)],
                     "duplicate content " + std::to_string(c) + " at" + where});
    }
  for (int i = 1; i <= nrows; ++i)
    for (int j = shape.row_begin(i); j <= shape.row_end(i); ++j) {
      const Cell c{i, j}, east{i, j + 1}, north{i + 1, j};
      if (shape.contains(east) && at(east) <= at(c))
        out.push_back({Violation::Kind::RowDecrease, {c, east},
                       "row decrease: " + std::to_string(at(c)) + " at " + to_string(c) + " then " +
                           std::to_string(at(east)) + " at " + to_string(east)});
      if (shape.contains(north) && at(north) <= at(c))
        out.push_back({Violation::Kind::ColumnDecrease, {c, north},
                       "column decrease: " + std::to_string(at(c)) + " at " + to_string(c) +
                           " below " + std::to_string(at(north)) + " at " + to_string(north)});
    }
  if (out.empty()) result.tableau = Tableau(shape, std::move(grid), nrows, cols);
  return result;
}

Tableau make_tableau(const RowFilling& rows) {
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Tableau(Shape(Partition(std::move(parts))), rows);
}

Tableau conjugate(const Tableau& t) {
  const Shape& s = t.shape();
  Shape cs(s.outer().conjugate(), s.inner().conjugate());
  RowFilling rows;
  for (int i = 1; i <= cs.rows(); ++i) {
    rows.emplace_back();
    for (int j = cs.row_begin(i); j <= cs.row_end(i); ++j) rows.back().push_back(t.at(j, i));
  }
  return Tableau(std::move(cs), rows);
}

Tableau rotate_complement(const Tableau& t) {
  const Shape& s = t.shape();
  const int R = s.rows(), C = s.cols(), n = t.size();
  std::vector<Cell> cells;
  for (const Cell& c : s.cells()) cells.push_back({R + 1 - c.row, C + 1 - c.col});
  auto rotated = Shape::from_cells(cells);
  if (!rotated) throw InternalError("rotation of a skew shape is not skew");
  RowFilling rows;
  for (int i = 1; i <= rotated->rows(); ++i) {
    rows.emplace_back();
    for (int j = rotated->row_begin(i); j <= rotated->row_end(i); ++j)
      rows.back().push_back(n + 1 - t.at(R + 1 - i, C + 1 - j));
  }
  Tableau raw(*rotated, rows);
  if (rotated->is_normalized()) return raw;
  const Shape norm = rotated->normalized();
  // Translate back: the normalised cells are a shift of the rotated ones.
  int dr = 0, dc = 0;
  {
    int bottom = 1;
    while (rotated->outer()[bottom] == rotated->inner()[bottom]) ++bottom;
    int top = rotated->rows();
    while (rotated->outer()[top] == rotated->inner()[top]) --top;
    dr = bottom - 1;
    dc = rotated->inner()[top];
  }
  RowFilling moved;
  for (int i = 1; i <= norm.rows(); ++i) {
    moved.emplace_back();
    for (int j = norm.row_begin(i); j <= norm.row_end(i); ++j) moved.back().push_back(raw.at(i + dr, j + dc));
  }
  return Tableau(norm, moved);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

struct RawRow {
  int placeholders = 0;
  std::vector<int> contents;
};

RawRow parse_row(std::string_view line, int line_no) {
  RawRow row;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) {
    if (tok == ".") {
      if (!row.contents.empty())
        throw ParseError("line " + std::to_string(line_no) + ": placeholder '.' after a content");
      ++row.placeholders;
      continue;
    }
    int v = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || end != tok.data() + tok.size())
      throw ParseError("line " + std::to_string(line_no) + ": non-numeric token '" + tok + "'");
    row.contents.push_back(v);
  }
  return row;
}

}  // namespace

Tableau parse_tableau(std::string_view text) {
  std::optional<Shape> declared;
  bool top_down = false;
  std::vector<RawRow> raw;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = trim(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (line.starts_with("shape:")) {
      if (declared || !raw.empty()) throw ParseError("line " + std::to_string(line_no) + ": misplaced shape header");
      declared = parse_shape(line.substr(6));
      continue;
    }
    if (line.starts_with("rows:")) {
      const auto mode = trim(line.substr(5));
      if (mode == "top-down") top_down = true;
      else if (mode == "bottom-up") top_down = false;
      else throw ParseError("line " + std::to_string(line_no) + ": unknown row order '" + std::string(mode) + "'");
      continue;
    }
    raw.push_back(parse_row(line, line_no));
  }
  if (raw.empty()) throw ParseError("no tableau rows");
  if (top_down) std::reverse(raw.begin(), raw.end());

  std::vector<int> outer, inner;
  RowFilling rows;
  for (const auto& r : raw) {
    outer.push_back(r.placeholders + static_cast<int>(r.contents.size()));
    inner.push_back(r.placeholders);
    rows.push_back(r.contents);
  }
  Shape shape;
  try {
    shape = Shape(Partition(outer), Partition(inner));
  } catch (const ParseError& e) {
    throw ParseError(std::string("row layout is not a skew shape: ") + e.what());
  }
  if (declared && !(*declared == shape))
    throw ParseError("declared shape " + to_string(*declared) + " does not match the rows (" +
                     to_string(shape) + ")");
  return Tableau(std::move(shape), rows);
}

std::string render_tableau(const Tableau& t) {
  const Shape& s = t.shape();
  const int width = static_cast<int>(std::to_string(std::max(t.size(), 1)).size()) + 1;
  std::string out = "shape: " + to_string(s) + "\nrows: top-down\n";
  for (int i = s.rows(); i >= 1; --i) {
    std::string line;
    for (int j = 1; j <= s.row_end(i); ++j) {
      std::string cell = s.contains({i, j}) ? std::to_string(t.at(i, j)) : ".";
      line += std::string(static_cast<std::size_t>(width) - cell.size(), ' ') + cell;
    }
    out += line.substr(1) + "\n";
  }
  return out;
}

std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> out;
  for (const auto& row : t.rows()) out.insert(out.end(), row.begin(), row.end());
  return out;
}

}  // namespace sytinv
