#include <doctest.h>

#include <algorithm>

#include "sytinv/enumeration.hpp"
#include "sytinv/inversion.hpp"
#include "sytinv/statistics.hpp"

using namespace sytinv;

namespace {

std::vector<std::pair<int, int>> pair_contents(const Tableau& t) {
  std::vector<std::pair<int, int>> out;
  for (const auto& p : inversion_pairs(t)) out.emplace_back(p.path_content, p.partner_content);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> sorted(std::vector<std::pair<int, int>> v) {
  std::sort(v.begin(), v.end());
  return v;
}

template <typename F>
void all_straight(int max_n, F f) {
  for (int n = 1; n <= max_n; ++n)
    for (const auto& lam : partitions_of(n)) for_each_syt(Shape(lam), f);
}

}  // namespace

TEST_CASE("inversion path examples") {
  const auto p1 = inversion_path(make_tableau({{1, 2}, {3}}), 3);
  CHECK(p1.start() == LatticePoint{0, 1});
  CHECK(p1.step_string() == "S");

  const auto p2 = inversion_path(make_tableau({{1, 2, 3, 4}}), 4);
  CHECK(p2.start() == LatticePoint{3, 0});
  CHECK(p2.step_string() == "WWW");

  const auto p3 = inversion_path(make_tableau({{1, 3}, {2, 4}}), 4);
  CHECK(p3.start() == LatticePoint{1, 1});
  CHECK(p3.step_string() == "SW");

  CHECK_THROWS_AS(inversion_path(make_tableau({{1, 2}}), 3), std::out_of_range);
}

TEST_CASE("side classification examples") {
  const auto p = inversion_path(make_tableau({{1, 2}, {3}}), 3);
  CHECK(p.side_of({1, 1}) == Side::Below);
  CHECK(p.side_of({1, 2}) == Side::Below);

  const auto row = inversion_path(make_tableau({{1, 2}}), 2);
  CHECK(row.side_of({1, 1}) == Side::Above);

  const auto sq = inversion_path(make_tableau({{1, 3}, {2, 4}}), 4);
  CHECK(sq.side_of({1, 2}) == Side::Below);
  CHECK(sq.side_of({1, 1}) == Side::Above);
  CHECK(sq.side_of({2, 1}) == Side::Above);
}

TEST_CASE("forward blocks examples") {
  const Tableau t = make_tableau({{1, 2}, {3}});
  const auto b = forward_blocks(t, 3, inversion_path(t, 3));
  CHECK(b.anchor_side == Side::Below);
  CHECK(b.blocks == std::vector<std::vector<Cell>>{{{1, 1}}, {{1, 2}}});

  const Tableau s = make_tableau({{1, 3}, {2, 4}});
  const auto c = forward_blocks(s, 4, inversion_path(s, 4));
  CHECK(c.anchor_side == Side::Above);
  CHECK(c.blocks == std::vector<std::vector<Cell>>{{{1, 1}}, {{2, 1}, {1, 2}}});
}

TEST_CASE("psi and phi on the 2x2 square") {
  const Tableau a = make_tableau({{1, 3}, {2, 4}});
  const Tableau b = make_tableau({{1, 2}, {3, 4}});
  CHECK(psi_k(a, 4) == b);
  CHECK(psi_k(b, 4) == a);
  CHECK(psi(a) == b);
  CHECK(psi(b) == a);
  CHECK(phi_k(b, 4) == a);
  CHECK(phi(a) == b);
  CHECK(phi(b) == a);
  CHECK(inv_statistic(a) == 2);
  CHECK(maj(b) == 2);
  CHECK(inv_statistic(b) == 4);
  CHECK(maj(a) == 4);
}

TEST_CASE("small psi examples") {
  const Tableau t = make_tableau({{1, 2}, {3}});
  CHECK(psi(t) == t);
  CHECK(maj(t) == 2);
  CHECK(inv_statistic(t) == 2);
  CHECK(psi_k(make_tableau({{1, 2, 3, 4}}), 4) == make_tableau({{1, 2, 3, 4}}));
  CHECK(psi_k(t, 2) == t);
  CHECK(phi_k(make_tableau({{1}, {2}, {3}, {4}}), 4) == make_tableau({{1}, {2}, {3}, {4}}));
}

TEST_CASE("inversion pairs and code on the 2x2 square") {
  const Tableau b = make_tableau({{1, 2}, {3, 4}});
  CHECK(pair_contents(b) == sorted({{4, 2}, {4, 1}, {3, 1}, {3, 2}}));
  CHECK(inv_code(b) == std::vector<int>{0, 0, 2, 2});
  const auto ps = inversion_path_set(b);
  REQUIRE(ps.paths.size() == 3);
  // T-content 4 uses pi(T,4); T-content 3 sits where 2 lands after psi_4.
  CHECK(ps.paths[0].step_string() == "WS");
  CHECK(ps.paths[2].anchor() == Cell{2, 1});
  CHECK(ps.paths[2].step_string() == "S");
}

TEST_CASE("inversion path set examples") {
  const auto ps = inversion_path_set(make_tableau({{1, 3}, {2, 4}}));
  REQUIRE(ps.paths.size() == 3);
  CHECK(ps.paths[0].anchor() == Cell{2, 2});
  CHECK(ps.paths[1].anchor() == Cell{2, 1});
  CHECK(ps.paths[2].anchor() == Cell{1, 2});
  CHECK(ps.exempt == Cell{1, 1});
  CHECK(ps.closing.steps().empty());

  const auto row = inversion_path_set(make_tableau({{1, 2, 3}}));
  CHECK(row.paths[0].anchor() == Cell{1, 3});
  CHECK(row.paths[1].anchor() == Cell{1, 2});
  CHECK(row.paths[0].step_string() == "WW");

  const auto small = inversion_path_set(make_tableau({{1, 2}, {3}}));
  CHECK(small.paths[0].start() == LatticePoint{0, 1});
  CHECK(small.paths[0].step_string() == "S");
  CHECK(small.paths[1].start() == LatticePoint{1, 0});
  CHECK(small.paths[1].step_string() == "W");
}

TEST_CASE("single row and column statistics") {
  const Tableau row = make_tableau({{1, 2, 3, 4, 5}});
  CHECK(inv_statistic(row) == 0);
  CHECK(inv_code(row) == std::vector<int>(5, 0));
  CHECK(cinv_statistic(row) == 0);
  CHECK(comaj_map(row) == row);

  const Tableau col = make_tableau({{1}, {2}, {3}});
  CHECK(inv_statistic(col) == 3);
  CHECK(inv_code(col) == std::vector<int>{0, 1, 2});
  CHECK(cinv_statistic(col) == 3);
  CHECK(inv_statistic(make_tableau({{1}, {2}, {3}, {4}, {5}, {6}})) == 15);
}

// Reference values computed by an independent implementation of the
// path/cycling definitions and frozen here.
TEST_CASE("frozen reference values") {
  struct Case {
    Shape shape;
    RowFilling rows;
    RowFilling psi_rows;
    int inv;
    std::vector<int> code;
    std::vector<std::pair<int, int>> pairs;
    int cinv;
  };
  const std::vector<Case> cases = {
      {parse_shape("3,2,1"), {{1, 3, 6}, {2, 5}, {4}}, {{1, 2, 6}, {3, 5}, {4}}, 5, {0, 1, 0, 3, 1, 0},
       {{5, 3}, {4, 1}, {4, 3}, {4, 2}, {2, 1}}, 5},
      {parse_shape("4,2,2"), {{1, 2, 5, 8}, {3, 6}, {4, 7}}, {{1, 3, 4, 8}, {2, 6}, {5, 7}}, 11,
       {0, 0, 2, 3, 0, 2, 4, 0},
       {{7, 1}, {7, 2}, {7, 5}, {7, 6}, {6, 2}, {6, 5}, {4, 1}, {4, 2}, {4, 3}, {3, 1}, {3, 2}}, 12},
      {parse_shape("3,2,1,1"), {{1, 4, 7}, {2, 6}, {3}, {5}}, {{1, 3, 7}, {2, 6}, {4}, {5}}, 8,
       {0, 1, 2, 0, 4, 1, 0}, {{6, 4}, {5, 1}, {5, 4}, {5, 2}, {5, 3}, {3, 1}, {3, 2}, {2, 1}}, 8},
      {parse_shape("3,2/1"), {{2, 3}, {1, 4}}, {{1, 2}, {3, 4}}, 2, {0, 0, 0, 2}, {{4, 2}, {4, 3}}, 2},
      {parse_shape("3,2,1/1"), {{1, 4}, {2, 5}, {3}}, {{3, 4}, {1, 5}, {2}}, 5, {0, 1, 2, 0, 2},
       {{5, 1}, {5, 4}, {3, 1}, {3, 2}, {2, 1}}, 5},
  };
  for (const auto& c : cases) {
    const Tableau t(c.shape, c.rows);
    CAPTURE(to_string(c.shape));
    CHECK(psi(t) == Tableau(c.shape, c.psi_rows));
    CHECK(inv_statistic(t) == c.inv);
    CHECK(inv_code(t) == c.code);
    CHECK(pair_contents(t) == sorted(c.pairs));
    CHECK(cinv_statistic(t) == c.cinv);
    CHECK(maj(psi(t)) == c.inv);
  }
}

TEST_CASE("psi_k and phi_k are mutually inverse stage by stage") {
  all_straight(7, [](const Tableau& t) {
    for (int k = 1; k <= t.size(); ++k) {
      const Tableau s = psi_k(t, k);
      CHECK(phi_k(s, k) == t);
      CHECK(s.cell_of(t.size()) == t.cell_of(t.size()));
    }
  });
  for (const auto& shape : skew_catalog(6))
    for_each_syt(shape, [](const Tableau& t) {
      for (int k = 3; k <= t.size(); ++k) CHECK(phi_k(psi_k(t, k), k) == t);
    });
}

TEST_CASE("phi trace records the preimage path") {
  all_straight(6, [](const Tableau& t) {
    for (int k = 3; k <= t.size(); ++k) {
      InverseStage stage;
      const Tableau back = phi_k(psi_k(t, k), k, &stage);
      CHECK(back == t);
      CHECK(stage.path == inversion_path(t, k));
    }
  });
}

TEST_CASE("Inv equals maj of psi and psi is bijective for n <= 8") {
  all_straight(8, [](const Tableau& t) {
    const Tableau s = psi(t);
    CHECK(inv_statistic(t) == maj(s));
    CHECK(phi(s) == t);
    CHECK(psi(phi(t)) == t);
  });
}

TEST_CASE("descent property") {
  all_straight(7, [](const Tableau& t) {
    for (int k = 3; k <= t.size(); ++k) {
      const auto path = inversion_path(t, k);
      const bool below = path.side_of({1, 1}) == Side::Below;
      CHECK(below == descent_set(psi_k(t, k)).contains(k - 1));
    }
  });
}

TEST_CASE("block geometry") {
  all_straight(7, [](const Tableau& t) {
    for (int k = 3; k <= t.size(); ++k) {
      const auto bp = forward_blocks(t, k, inversion_path(t, k));
      for (const auto& b : bp.blocks)
        for (std::size_t i = 1; i < b.size(); ++i) {
          if (bp.anchor_side == Side::Below) CHECK((b[i].row > b[0].row && b[i].col < b[0].col));
          else CHECK((b[i].row < b[0].row && b[i].col > b[0].col));
        }
    }
  });
}

TEST_CASE("block partition invariants") {
  all_straight(7, [](const Tableau& t) {
    for (int k = 3; k <= t.size(); ++k) {
      const auto path = inversion_path(t, k);
      const auto bp = forward_blocks(t, k, path);
      int expected = 1;
      for (const auto& b : bp.blocks) {
        CHECK(path.side_of(b[0]) == bp.anchor_side);
        for (std::size_t i = 0; i < b.size(); ++i) {
          CHECK(t.at(b[i]) == expected++);
          if (i) CHECK(path.side_of(b[i]) == opposite(bp.anchor_side));
        }
      }
      CHECK(expected == k);
    }
  });
}

TEST_CASE("recurrence") {
  all_straight(7, [](const Tableau& t) {
    const int n = t.size();
    if (n < 2) return;
    const Tableau s = psi_k(t, n);
    const int chi = descent_set(s).contains(n - 1) ? 1 : 0;
    CHECK(inv_statistic(t) == inv_statistic(s.without_largest()) + (n - 1) * chi);
  });
}

TEST_CASE("conjugation identity") {
  all_straight(8, [](const Tableau& t) {
    const int n = t.size();
    CHECK(inv_statistic(t) + inv_statistic(conjugate(t)) == n * (n - 1) / 2);
  });
}

TEST_CASE("inversion code bounds") {
  all_straight(8, [](const Tableau& t) {
    const auto code = inv_code(t);
    int total = 0;
    for (int k = 1; k <= t.size(); ++k) {
      CHECK(code[static_cast<std::size_t>(k - 1)] >= 0);
      CHECK(code[static_cast<std::size_t>(k - 1)] <= k - 1);
      total += code[static_cast<std::size_t>(k - 1)];
    }
    CHECK(total == inv_statistic(t));
  });
}

TEST_CASE("path set start cells are distinct") {
  all_straight(7, [](const Tableau& t) {
    if (t.size() < 2) return;
    const auto ps = inversion_path_set(t);
    std::vector<Cell> starts;
    for (const auto& p : ps.paths) starts.push_back(p.anchor());
    starts.push_back(ps.exempt);
    std::sort(starts.begin(), starts.end());
    CHECK(std::adjacent_find(starts.begin(), starts.end()) == starts.end());
    CHECK(ps.exempt == Cell{1, 1});
  });
}

TEST_CASE("comaj variant mirrors the SW construction") {
  all_straight(7, [](const Tableau& t) {
    CHECK(comaj_map(t) == rotate_complement(psi(rotate_complement(t))));
    CHECK(cinv_statistic(t) == comaj(comaj_map(t)));
    CHECK(comaj_map(t).cell_of(1) == t.cell_of(1));
  });
  for (const auto& shape : skew_catalog(6))
    for_each_syt(shape, [](const Tableau& t) {
      CHECK(comaj_map(t) == rotate_complement(psi(rotate_complement(t))));
      CHECK(cinv_statistic(t) == comaj(comaj_map(t)));
    });
}

TEST_CASE("skew shapes: Inv equals maj of psi, bijection, fixed largest cell") {
  for (const auto& shape : skew_catalog(6))
    for_each_syt(shape, [](const Tableau& t) {
      const Tableau s = psi(t);
      CHECK(inv_statistic(t) == maj(s));
      CHECK(phi(s) == t);
      CHECK(s.cell_of(t.size()) == t.cell_of(t.size()));
    });
}
