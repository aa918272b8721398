#include "sytinv/shape.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

namespace sytinv {

std::string to_string(const Cell& c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ParseError("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw ParseError("partition parts must be weakly decreasing: " +
                       to_string(*this));
  }
}

int Partition::size() const {
  int total = 0;
  for (int p : parts_) total += p;
  return total;
}

int Partition::operator[](int i) const {
  if (i < 1 || i > static_cast<int>(parts_.size())) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  const int width = parts_.empty() ? 0 : parts_.front();
  for (int j = 1; j <= width; ++j) {
    int count = 0;
    for (int p : parts_) count += (p >= j);
    out.push_back(count);
  }
  return Partition(std::move(out));
}

std::string to_string(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

Shape::Shape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (inner_.length() > outer_.length())
    throw ParseError("inner partition has more parts than outer");
  for (int i = 1; i <= static_cast<int>(inner_.length()); ++i)
    if (inner_[i] > outer_[i])
      throw ParseError("inner partition does not fit inside outer at row " +
                       std::to_string(i));
}

bool Shape::contains(Cell c) const {
  return c.row >= 1 && c.row <= rows() && c.col > inner_[c.row] &&
         c.col <= outer_[c.row];
}

std::vector<Cell> Shape::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 1; i <= rows(); ++i)
    for (int j = row_begin(i); j <= row_end(i); ++j) out.push_back({i, j});
  return out;
}

std::optional<Shape> Shape::from_cells(std::span<const Cell> cells) {
  if (cells.empty()) return Shape{};
  int top = 0;
  for (const Cell& c : cells) {
    if (c.row < 1 || c.col < 1) return std::nullopt;
    top = std::max(top, c.row);
  }
  std::vector<int> lo(static_cast<std::size_t>(top + 1), 0);
  std::vector<int> hi(static_cast<std::size_t>(top + 1), 0);
  std::vector<int> count(static_cast<std::size_t>(top + 1), 0);
  for (const Cell& c : cells) {
    auto r = static_cast<std::size_t>(c.row);
    lo[r] = count[r] ? std::min(lo[r], c.col) : c.col;
    hi[r] = std::max(hi[r], c.col);
    ++count[r];
  }
  std::vector<int> outer(static_cast<std::size_t>(top));
  std::vector<int> inner(static_cast<std::size_t>(top));
  int above = 0;
  for (int i = top; i >= 1; --i) {
    auto r = static_cast<std::size_t>(i);
    if (count[r]) {
      if (hi[r] - lo[r] + 1 != count[r]) return std::nullopt;
      outer[r - 1] = hi[r];
      inner[r - 1] = lo[r] - 1;
    } else {
      outer[r - 1] = inner[r - 1] = above;
    }
    above = outer[r - 1];
  }
  for (int i = 0; i + 1 < top; ++i) {
    auto a = static_cast<std::size_t>(i);
    if (outer[a] < outer[a + 1] || inner[a] < inner[a + 1]) return std::nullopt;
  }
  // A zero outer part can only come from empty bottom rows under an empty top.
  if (std::find(outer.begin(), outer.end(), 0) != outer.end()) return std::nullopt;
  return Shape(Partition(std::move(outer)), Partition(std::move(inner)));
}

Shape Shape::normalized() const {
  if (size() == 0) return Shape{};
  int bottom = 1;
  while (outer_[bottom] == inner_[bottom]) ++bottom;
  int top = rows();
  while (outer_[top] == inner_[top]) --top;
  const int shift = inner_[top];
  std::vector<Cell> moved;
  for (const Cell& c : cells())
    moved.push_back({c.row - bottom + 1, c.col - shift});
  auto s = from_cells(moved);
  if (!s) throw InternalError("normalisation produced a non-skew cell set");
  return *s;
}

std::string to_string(const Shape& s) {
  std::string out = to_string(s.outer());
  if (!s.inner().empty()) out += "/" + to_string(s.inner());
  return out;
}

namespace {

std::vector<int> parse_parts(std::string_view text, bool allow_zero) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(pos, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
      throw ParseError("non-numeric shape token '" + std::string(token) + "'");
    if (value < 0 || (value == 0 && !allow_zero))
      throw ParseError("shape parts must be positive, got " + std::string(token));
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  for (std::size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] < parts[i + 1])
      throw ParseError("shape parts not weakly decreasing: '" + std::string(text) + "'");
  return parts;
}

}  // namespace

Shape parse_shape(std::string_view text) {
  while (!text.empty() && (text.back() == ' ' || text.back() == '\r')) text.remove_suffix(1);
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  const std::size_t slash = text.find('/');
  Partition outer(parse_parts(text.substr(0, slash), false));
  Partition inner;
  if (slash != std::string_view::npos) inner = Partition(parse_parts(text.substr(slash + 1), true));
  Shape s(std::move(outer), std::move(inner));
  if (s.size() == 0) throw ParseError("empty shape");
  return s;
}

std::vector<Cell> corner_cells(const Shape& s) {
  std::vector<Cell> out;
  for (int i = s.rows(); i >= 1; --i) {
    if (s.row_begin(i) > s.row_end(i)) continue;
    const Cell c{i, s.row_end(i)};
    if (!s.contains({i + 1, c.col})) out.push_back(c);
  }
  return out;
}

Shape staircase_shape(int n) {
  std::vector<int> outer, inner;
  for (int i = n; i >= 1; --i) outer.push_back(i);
  for (int i = n - 1; i >= 1; --i) inner.push_back(i);
  return Shape(Partition(std::move(outer)), Partition(std::move(inner)));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace sytinv
