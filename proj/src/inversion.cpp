#include "sytinv/inversion.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "sytinv/statistics.hpp"

namespace sytinv {

const char* to_string(Side s) { return s == Side::Above ? "above" : "below"; }

LatticePath::LatticePath(Kind kind, Cell anchor, std::vector<Step> steps, int box_cols)
    : kind_(kind), anchor_(anchor), steps_(std::move(steps)), box_cols_(box_cols) {
  if (kind_ == Kind::SouthWest) {
    heights_.assign(static_cast<std::size_t>(std::max(anchor_.col, 1)), -1);
    int x = anchor_.col - 1, y = anchor_.row - 1;
    for (Step s : steps_) {
      if (s == Step::West) {
        heights_[static_cast<std::size_t>(x)] = y;
        --x;
      } else if (s == Step::South) {
        --y;
      } else {
        throw InternalError("SW path with a N/E step");
      }
      if (x < 0 || y < 0) throw InternalError("SW path leaves the quadrant");
    }
  } else {
    heights_.assign(static_cast<std::size_t>(std::max(box_cols_, anchor_.col) + 1), -1);
    int x = anchor_.col, y = anchor_.row;
    for (Step s : steps_) {
      if (s == Step::East) {
        ++x;
        if (x > box_cols_) throw InternalError("NE path leaves the bounding box");
        heights_[static_cast<std::size_t>(x)] = y;
      } else if (s == Step::North) {
        ++y;
      } else {
        throw InternalError("NE path with a S/W step");
      }
    }
  }
}

LatticePoint LatticePath::start() const {
  if (kind_ == Kind::SouthWest) return {anchor_.col - 1, anchor_.row - 1};
  return {anchor_.col, anchor_.row};
}

std::string LatticePath::step_string() const {
  if (steps_.empty()) return "-";
  std::string out;
  for (Step s : steps_) out += static_cast<char>(s);
  return out;
}

Side LatticePath::side_of(Cell c) const {
  if (kind_ == Kind::SouthWest) {
    if (c.col >= anchor_.col) return c.row <= anchor_.row ? Side::Below : Side::Above;
    return c.row <= heights_[static_cast<std::size_t>(c.col)] ? Side::Below : Side::Above;
  }
  if (c.col <= anchor_.col) return c.row >= anchor_.row ? Side::Above : Side::Below;
  if (c.col >= static_cast<int>(heights_.size())) return Side::Below;
  return c.row > heights_[static_cast<std::size_t>(c.col)] ? Side::Above : Side::Below;
}

Side classify_side(const LatticePath& path, Cell c) { return path.side_of(c); }

namespace {

void check_content(const Tableau& t, int k) {
  if (k < 1 || k > t.size())
    throw std::out_of_range("content " + std::to_string(k) + " outside 1.." + std::to_string(t.size()));
}

Tableau cycle_blocks(const Tableau& t, const BlockPartition& bp, bool forward) {
  std::vector<int> relabel(static_cast<std::size_t>(t.size() + 1));
  for (int c = 1; c <= t.size(); ++c) relabel[static_cast<std::size_t>(c)] = c;
  for (const auto& block : bp.blocks) {
    const int first = t.at(block.front());
    const int last = t.at(block.back());
    relabel[static_cast<std::size_t>(first)] = last;
    for (std::size_t i = 1; i < block.size(); ++i) {
      const int c = t.at(block[i]);
      relabel[static_cast<std::size_t>(c)] = forward ? c - 1 : c + 1;
    }
  }
  return t.relabeled(relabel);
}

}  // namespace

LatticePath inversion_path(const Tableau& t, int k) {
  check_content(t, k);
  const Cell anchor = t.cell_of(k);
  std::vector<Step> steps;
  int x = anchor.col - 1, y = anchor.row - 1;
  while (x > 0 || y > 0) {
    Step s;
    if (y == 0) {
      s = Step::West;
    } else if (x == 0) {
      s = Step::South;
    } else {
      const int below = t.at(y, x + 1);
      const int left = t.at(y + 1, x);
      s = (below == 0 && left == 0) || below > left ? Step::South : Step::West;
    }
    steps.push_back(s);
    (s == Step::South ? y : x) -= 1;
  }
  return LatticePath(LatticePath::Kind::SouthWest, anchor, std::move(steps));
}

BlockPartition forward_blocks(const Tableau& t, int k, const LatticePath& path) {
  check_content(t, k);
  if (path.kind() != LatticePath::Kind::SouthWest || path.anchor() != t.cell_of(k))
    throw std::invalid_argument("path is not anchored at the cell containing " + std::to_string(k));
  BlockPartition bp;
  bp.k = k;
  if (k == 1) return bp;
  bp.anchor_side = path.side_of(t.cell_of(1));
  for (int c = 1; c < k; ++c) {
    const Cell cell = t.cell_of(c);
    if (path.side_of(cell) == bp.anchor_side) bp.blocks.push_back({cell});
    else bp.blocks.back().push_back(cell);
  }
  return bp;
}

Tableau psi_k(const Tableau& t, int k) {
  check_content(t, k);
  if (k <= 2) return t;
  return cycle_blocks(t, forward_blocks(t, k, inversion_path(t, k)), true);
}

Tableau psi(const Tableau& t) {
  Tableau cur = t;
  for (int k = t.size(); k >= 3; --k) cur = psi_k(cur, k);
  return cur;
}

std::vector<ForwardStage> psi_trace(const Tableau& t) {
  std::vector<ForwardStage> out;
  Tableau cur = t;
  for (int k = t.size(); k >= 3; --k) {
    LatticePath path = inversion_path(cur, k);
    BlockPartition bp = forward_blocks(cur, k, path);
    cur = cycle_blocks(cur, bp, true);
    out.push_back({k, std::move(path), std::move(bp), cur});
  }
  return out;
}

namespace {

// Working state of the reverse-cycling reconstruction for one k.
class ReverseCycler {
 public:
  ReverseCycler(const Tableau& s, int k)
      : s_(s), shape_(s.shape()), k_(k), rows_(shape_.rows()), cols_(shape_.cols()) {
    top_ = s.cell_of(k);
    anchor_side_ = is_descent(s, k - 1) ? Side::Below : Side::Above;
    work_.assign(static_cast<std::size_t>(rows_ * cols_), 0);
    pos_.assign(static_cast<std::size_t>(s.size() + 1), Cell{});
    appeared_.assign(work_.size(), 0);
    for (int c = 1; c <= s.size(); ++c) {
      pos_[static_cast<std::size_t>(c)] = s.cell_of(c);
      work_[idx(s.cell_of(c))] = c;
    }
    heights_.assign(static_cast<std::size_t>(top_.col), -1);
    x_ = top_.col - 1;
    y_ = top_.row - 1;
  }

  Tableau run(InverseStage* stage) {
    if (top_.row == 1 || top_.col == 1) {
      straighten();
      return finish(stage);
    }
    while (true) {
      if (x_ == 0 || y_ == 0) {
        straighten();
        find_and_cycle(0, true);
        break;
      }
      const int u = y_ + 1, v = x_ + 1;
      find_and_cycle(content({u - 1, v - 1}), false);
      const Step s = next_step(u, v);
      steps_.push_back(s);
      if (s == Step::West) {
        heights_[static_cast<std::size_t>(x_)] = y_;
        --x_;
      } else {
        --y_;
      }
    }
    for (int c = 2; c < k_; ++c)
      if (!appeared_[idx(s_.cell_of(c))])
        throw InternalError("reverse cycling left content " + std::to_string(c) + " unassigned");
    return finish(stage);
  }

 private:
  std::size_t idx(Cell c) const { return static_cast<std::size_t>((c.row - 1) * cols_ + (c.col - 1)); }
  int content(Cell c) const { return shape_.contains(c) ? work_[idx(c)] : 0; }

  void straighten() {
    while (x_ > 0 && y_ == 0) {
      steps_.push_back(Step::West);
      heights_[static_cast<std::size_t>(x_)] = 0;
      --x_;
    }
    while (y_ > 0 && x_ == 0) {
      steps_.push_back(Step::South);
      --y_;
    }
  }

  // Side of a cell relative to the portion of the path built so far, or
  // nullopt while the cell is strictly SW of the current point.
  std::optional<Side> side(Cell c, bool complete) const {
    if (c.col >= top_.col) return c.row <= top_.row ? Side::Below : Side::Above;
    if (c.col > x_ || complete)
      return c.row <= heights_[static_cast<std::size_t>(c.col)] ? Side::Below : Side::Above;
    if (c.row > y_) return Side::Above;
    return std::nullopt;
  }

  // Steps 1/4 and 2/5: collect every new simple block with contents above
  // `bound`, then reverse cycle them.
  void find_and_cycle(int bound, bool complete) {
    std::vector<std::vector<Cell>> found;
    for (int head = k_ - 1; head > bound; --head) {
      const Cell hc = pos_[static_cast<std::size_t>(head)];
      if (appeared_[idx(hc)] || side(hc, complete) != anchor_side_) continue;
      std::vector<Cell> block{hc};
      bool closed = true;
      for (int c = head - 1; c >= 1; --c) {
        const Cell cc = pos_[static_cast<std::size_t>(c)];
        const auto sd = side(cc, complete);
        if (appeared_[idx(cc)] || !sd) {
          closed = false;
          break;
        }
        if (*sd == anchor_side_) break;
        if (c <= bound) {
          closed = false;
          break;
        }
        block.push_back(cc);
      }
      if (closed) found.push_back(std::move(block));
    }
    for (const auto& block : found) {
      std::vector<int> contents;
      for (const Cell& c : block) contents.push_back(work_[idx(c)]);
      blocks_.push_back(contents);
      work_[idx(block.front())] = contents.back();
      for (std::size_t i = 1; i < block.size(); ++i) work_[idx(block[i])] = contents[i] + 1;
      for (const Cell& c : block) {
        pos_[static_cast<std::size_t>(work_[idx(c)])] = c;
        appeared_[idx(c)] = 1;
      }
    }
  }

  // Steps 3/6.
  Step next_step(int u, int v) const {
    const Cell below{u - 1, v}, left{u, v - 1};
    const bool has_below = shape_.contains(below), has_left = shape_.contains(left);
    if (!has_below && !has_left) return Step::South;
    if (!has_below) return Step::West;
    if (!has_left) return Step::South;
    if (anchor_side_ == Side::Below)
      return appeared_[idx(below)] && content(below) > content(left) ? Step::South : Step::West;
    return appeared_[idx(left)] && content(left) > content(below) ? Step::West : Step::South;
  }

  Tableau finish(InverseStage* stage) {
    std::vector<int> relabel(static_cast<std::size_t>(s_.size() + 1));
    for (int c = 1; c <= s_.size(); ++c) relabel[static_cast<std::size_t>(c)] = work_[idx(s_.cell_of(c))];
    Tableau out = s_.relabeled(relabel);
    if (stage) {
      stage->k = k_;
      stage->path = LatticePath(LatticePath::Kind::SouthWest, top_, steps_);
      stage->simple_blocks = blocks_;
      stage->result = out;
    }
    return out;
  }

  const Tableau& s_;
  const Shape& shape_;
  int k_;
  int rows_, cols_;
  Cell top_{};
  Side anchor_side_ = Side::Below;
  std::vector<int> work_;
  std::vector<Cell> pos_;
  std::vector<char> appeared_;
  std::vector<int> heights_;
  std::vector<Step> steps_;
  std::vector<std::vector<int>> blocks_;
  int x_ = 0, y_ = 0;
};

}  // namespace

Tableau phi_k(const Tableau& s, int k, InverseStage* stage) {
  check_content(s, k);
  if (k <= 2) {
    if (stage) *stage = InverseStage{k, inversion_path(s, k), {}, s};
    return s;
  }
  return ReverseCycler(s, k).run(stage);
}

Tableau phi(const Tableau& s) {
  Tableau cur = s;
  for (int k = 3; k <= s.size(); ++k) cur = phi_k(cur, k);
  return cur;
}

std::vector<InverseStage> phi_trace(const Tableau& s) {
  std::vector<InverseStage> out;
  Tableau cur = s;
  for (int k = 3; k <= s.size(); ++k) {
    InverseStage stage{k, {}, {}, cur};
    cur = phi_k(cur, k, &stage);
    out.push_back(std::move(stage));
  }
  return out;
}

InversionPathSet inversion_path_set(const Tableau& t) {
  InversionPathSet set;
  if (t.size() == 0) return set;
  Tableau cur = t;
  std::set<Cell> starts;
  for (int k = t.size(); k >= 2; --k) {
    LatticePath path = inversion_path(cur, k);
    if (!starts.insert(path.anchor()).second)
      throw InternalError("two inversion paths start at " + to_string(path.anchor()));
    if (k >= 3) cur = cycle_blocks(cur, forward_blocks(cur, k, path), true);
    set.paths.push_back(std::move(path));
  }
  set.exempt = cur.cell_of(1);
  if (starts.contains(set.exempt)) throw InternalError("exempt cell already has a path");
  set.closing = inversion_path(cur, 1);
  return set;
}

namespace {

void collect_below(const Tableau& t, const LatticePath& path, std::vector<InversionPair>& out) {
  const Cell p = path.anchor();
  const int cp = t.at(p);
  for (int c = 1; c < cp; ++c) {
    const Cell q = t.cell_of(c);
    if (path.side_of(q) == Side::Below) out.push_back({p, q, cp, c});
  }
}

}  // namespace

std::vector<InversionPair> inversion_pairs(const Tableau& t) {
  std::vector<InversionPair> out;
  if (t.size() == 0) return out;
  const InversionPathSet set = inversion_path_set(t);
  for (const auto& path : set.paths) collect_below(t, path, out);
  collect_below(t, set.closing, out);
  return out;
}

int inv_statistic(const Tableau& t) { return static_cast<int>(inversion_pairs(t).size()); }

std::vector<int> inv_code(const Tableau& t) {
  std::vector<int> code(static_cast<std::size_t>(t.size()), 0);
  for (const auto& pair : inversion_pairs(t)) ++code[static_cast<std::size_t>(pair.path_content - 1)];
  return code;
}

// ---- NE variant -------------------------------------------------------------

LatticePath ne_inversion_path(const Tableau& t, int k) {
  check_content(t, k);
  const Cell anchor = t.cell_of(k);
  const int R = t.shape().rows(), C = t.shape().cols();
  constexpr int kAbsent = std::numeric_limits<int>::max();
  auto content = [&](int row, int col) {
    const int c = t.at(row, col);
    return c == 0 ? kAbsent : c;
  };
  std::vector<Step> steps;
  int x = anchor.col, y = anchor.row;
  while (x < C || y < R) {
    Step s;
    if (y == R) {
      s = Step::East;
    } else if (x == C) {
      s = Step::North;
    } else {
      const int up = content(y + 1, x);
      const int right = content(y, x + 1);
      s = (up == kAbsent && right == kAbsent) || up < right ? Step::North : Step::East;
    }
    steps.push_back(s);
    (s == Step::North ? y : x) += 1;
  }
  return LatticePath(LatticePath::Kind::NorthEast, anchor, std::move(steps), C);
}

BlockPartition ne_blocks(const Tableau& t, int k, const LatticePath& path) {
  check_content(t, k);
  if (path.kind() != LatticePath::Kind::NorthEast || path.anchor() != t.cell_of(k))
    throw std::invalid_argument("path is not the NE path of content " + std::to_string(k));
  BlockPartition bp;
  bp.k = k;
  const int n = t.size();
  if (k == n) return bp;
  bp.anchor_side = path.side_of(t.cell_of(n));
  for (int c = n; c > k; --c) {
    const Cell cell = t.cell_of(c);
    if (path.side_of(cell) == bp.anchor_side) bp.blocks.push_back({cell});
    else bp.blocks.back().push_back(cell);
  }
  return bp;
}

Tableau comaj_map_k(const Tableau& t, int k) {
  check_content(t, k);
  if (k >= t.size() - 1) return t;
  // Blocks are listed by decreasing content, so the shared cycling routine
  // with forward=false gives head -> smallest, others +1.
  return cycle_blocks(t, ne_blocks(t, k, ne_inversion_path(t, k)), false);
}

Tableau comaj_map(const Tableau& t) {
  Tableau cur = t;
  for (int k = 1; k <= t.size() - 2; ++k) cur = comaj_map_k(cur, k);
  return cur;
}

std::vector<InversionPair> cinv_pairs(const Tableau& t) {
  std::vector<InversionPair> out;
  const int n = t.size();
  Tableau cur = t;
  for (int k = 1; k <= n; ++k) {
    const LatticePath path = ne_inversion_path(cur, k);
    const Cell p = path.anchor();
    const int cp = t.at(p);
    for (int c = cp + 1; c <= n; ++c) {
      const Cell q = t.cell_of(c);
      if (path.side_of(q) == Side::Above) out.push_back({p, q, cp, c});
    }
    if (k <= n - 2) cur = cycle_blocks(cur, ne_blocks(cur, k, path), false);
  }
  return out;
}

int cinv_statistic(const Tableau& t) { return static_cast<int>(cinv_pairs(t).size()); }

}  // namespace sytinv
