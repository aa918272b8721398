#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sytinv/tableau.hpp"

namespace sytinv {

enum class Step : char { South = 'S', West = 'W', North = 'N', East = 'E' };

/// Above = weakly NW of a path, Below = weakly SE.
enum class Side { Above, Below };

constexpr Side opposite(Side s) { return s == Side::Above ? Side::Below : Side::Above; }
const char* to_string(Side s);

struct LatticePoint {
  int x = 0;
  int y = 0;
  friend constexpr bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Monotone unit-step path on grid lines.
///
/// A SouthWest path starts at the lower-left corner of its anchor cell and
/// ends at the origin; a NorthEast path starts at the upper-right corner of
/// its anchor and ends at the top-right corner of the outer bounding box.
/// The column-height profile is computed once, so `side_of` is O(1).
class LatticePath {
 public:
  enum class Kind { SouthWest, NorthEast };

  LatticePath() = default;
  /// `box_cols` is the outer width (used by NorthEast paths only).
  LatticePath(Kind kind, Cell anchor, std::vector<Step> steps, int box_cols = 0);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] Cell anchor() const { return anchor_; }
  [[nodiscard]] LatticePoint start() const;
  [[nodiscard]] const std::vector<Step>& steps() const { return steps_; }
  /// "SWWS"; "-" for the empty path.
  [[nodiscard]] std::string step_string() const;

  [[nodiscard]] Side side_of(Cell c) const;

  friend bool operator==(const LatticePath& a, const LatticePath& b) {
    return a.kind_ == b.kind_ && a.anchor_ == b.anchor_ && a.steps_ == b.steps_;
  }

 private:
  Kind kind_ = Kind::SouthWest;
  Cell anchor_{};
  std::vector<Step> steps_;
  int box_cols_ = 0;
  // SouthWest: height of the West step crossing column j (j < anchor.col).
  // NorthEast: height of the East step crossing column j (j > anchor.col).
  std::vector<int> heights_;
};

Side classify_side(const LatticePath& path, Cell c);

/// Ordered partition of the cells with content < k into cycling blocks.
struct BlockPartition {
  int k = 0;
  Side anchor_side = Side::Below;
  /// Each block lists cells in increasing content order; its first cell lies
  /// on `anchor_side`, the others on the opposite side.
  std::vector<std::vector<Cell>> blocks;
};

/// SW inversion path pi(t,k) from the cell containing k.
///
/// Steps South when the cell below holds the larger content, West otherwise;
/// absent cells count as 0 and when both are absent the path steps South.
/// On row 1 or column 1 the path runs straight to the origin.
LatticePath inversion_path(const Tableau& t, int k);

/// Blocks for the forward map. The anchor side is the side of the cell
/// containing 1 (cell (1,1) on straight shapes).
BlockPartition forward_blocks(const Tableau& t, int k, const LatticePath& path);

/// Forward cycling map; identity for k <= 2.
Tableau psi_k(const Tableau& t, int k);
/// psi_3 o ... o psi_n.
Tableau psi(const Tableau& t);

struct ForwardStage {
  int k = 0;
  LatticePath path;
  BlockPartition blocks;
  Tableau result;
};
/// Stages k = n down to 3.
std::vector<ForwardStage> psi_trace(const Tableau& t);

struct InverseStage {
  int k = 0;
  /// The reconstructed path, equal to the path of the preimage.
  LatticePath path;
  /// Simple blocks in the order found, as contents of the input (largest first).
  std::vector<std::vector<int>> simple_blocks;
  Tableau result;
};

/// Inverse of psi_k by reverse cycling along a path reconstructed one unit at
/// a time. `stage`, when given, receives the path and simple blocks.
Tableau phi_k(const Tableau& s, int k, InverseStage* stage = nullptr);
/// phi_n o ... o phi_3.
Tableau phi(const Tableau& s);
std::vector<InverseStage> phi_trace(const Tableau& s);

struct InversionPathSet {
  /// pi(t,n), pi(psi_n(t),n-1), ..., down to k = 2, in that order.
  std::vector<LatticePath> paths;
  /// Cell without a path in `paths`: (1,1) on straight shapes.
  Cell exempt{};
  /// pi(psi(t),1) anchored at `exempt`. Empty on straight shapes; on skew
  /// shapes it carries the exempt cell's inversions.
  LatticePath closing;
};

InversionPathSet inversion_path_set(const Tableau& t);

struct InversionPair {
  Cell path_cell;
  Cell partner;
  int path_content = 0;
  int partner_content = 0;
};

/// Pairs (P,Q) with c(Q) < c(P) and Q below the inversion path of P.
std::vector<InversionPair> inversion_pairs(const Tableau& t);
int inv_statistic(const Tableau& t);
/// code[k-1] = number of inversion pairs whose larger content is k.
std::vector<int> inv_code(const Tableau& t);

// ---- NE variant (comaj side) ----------------------------------------------

/// NE path from the upper-right corner of the cell containing k: steps toward
/// the smaller of the north/east neighbours (absent cells count as +inf, both
/// absent steps North), straight along the box edge once it is reached.
LatticePath ne_inversion_path(const Tableau& t, int k);

/// Blocks over contents > k, anchored on the side of the cell containing n;
/// each block is listed in decreasing content order.
BlockPartition ne_blocks(const Tableau& t, int k, const LatticePath& path);

/// NE cycling: the head of each block takes the block's smallest content and
/// every other member moves up by one. Identity for k >= n-1.
Tableau comaj_map_k(const Tableau& t, int k);
/// Applies comaj_map_k for k = 1 .. n-2; fixes the cell containing 1.
Tableau comaj_map(const Tableau& t);

/// Pairs (P,Q) with c(Q) > c(P) and Q weakly NW of the NE inversion path of P.
std::vector<InversionPair> cinv_pairs(const Tableau& t);
int cinv_statistic(const Tableau& t);

}  // namespace sytinv
