#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "sytinv/enumeration.hpp"
#include "sytinv/statistics.hpp"

using namespace sytinv;

TEST_CASE("distribution polynomial canonical form") {
  DistributionPolynomial p({0, 1, 1, 0, 0});
  CHECK(p.coefficients() == std::vector<std::uint64_t>{0, 1, 1});
  CHECK(to_string(p) == "[0,1,1]");
  CHECK(p.at_one() == 2);
  CHECK(to_string(DistributionPolynomial()) == "[]");
  CHECK(DistributionPolynomial({0, 0}).is_zero());
  p.add(4);
  CHECK(to_string(p) == "[0,1,1,0,1]");
  p += DistributionPolynomial({1});
  CHECK(to_string(p) == "[1,1,1,0,1]");
}

TEST_CASE("statistic names") {
  CHECK(parse_statistic("cinv") == Statistic::Cinv);
  CHECK(std::string(to_string(Statistic::Comaj)) == "comaj");
  CHECK_THROWS_AS(parse_statistic("des"), ParseError);
}

TEST_CASE("enumeration examples") {
  CHECK(enumerate_syt(parse_shape("4,3,1")).size() == 70);
  CHECK(count_syt(parse_shape("4,3,1")) == 70);
  CHECK(enumerate_syt(parse_shape("1")).size() == 1);
  CHECK(count_syt(staircase_shape(5)) == 120);
  CHECK(enumerate_syt(staircase_shape(4)).size() == 24);
  CHECK(count_syt(parse_shape("5")) == 1);
  CHECK(count_syt(parse_shape("3,3")) == 5);
}

TEST_CASE("enumeration yields distinct valid tableaux in order") {
  const auto all = enumerate_syt(parse_shape("3,2,1"));
  CHECK(all.size() == 16);
  std::set<RowFilling> seen;
  for (const auto& t : all) seen.insert(t.rows());
  CHECK(seen.size() == all.size());
  // n is placed in the highest corner first.
  CHECK(all.front().cell_of(6) == Cell{3, 1});
  CHECK(all.back().cell_of(6) == Cell{1, 3});
}

TEST_CASE("distribution examples") {
  CHECK(to_string(distribution(parse_shape("2,1"), Statistic::Maj)) == "[0,1,1]");
  CHECK(to_string(distribution(parse_shape("2,1"), Statistic::Inv)) == "[0,1,1]");
  CHECK(to_string(distribution(parse_shape("1"), Statistic::Maj)) == "[1]");
  CHECK(to_string(distribution(parse_shape("2,2"), Statistic::Inv)) == "[0,0,1,0,1]");
}

TEST_CASE("count_syt agrees with brute force for n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lam : partitions_of(n)) {
      const Shape s(lam);
      CHECK(count_syt(s) == oracle::brute_force_syt_count(s));
      CHECK(enumerate_syt(s).size() == count_syt(s));
    }
  for (const auto& s : skew_catalog(6)) {
    CAPTURE(to_string(s));
    CHECK(enumerate_syt(s).size() == oracle::brute_force_syt_count(s));
  }
}

TEST_CASE("involution oracle") {
  for (int n = 1; n <= 7; ++n) {
    std::uint64_t total = 0;
    for (const auto& lam : partitions_of(n)) total += count_syt(Shape(lam));
    CHECK(total == oracle::brute_force_involutions(n));
  }
}

TEST_CASE("q-hook formula matches the maj distribution") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& lam : partitions_of(n)) {
      const Shape s(lam);
      CHECK(distribution(s, Statistic::Maj) == oracle::q_hook_maj(lam));
      CHECK(distribution(s, Statistic::Inv) == oracle::q_hook_maj(lam));
    }
}

TEST_CASE("parallel enumeration equals sequential") {
  for (const char* text : {"4,3,2,1", "3,3,2/1", "5,3,1", "6,5,4,3,2,1/5,4,3,2,1"}) {
    const Shape s = parse_shape(text);
    const auto seq = enumerate_syt(s);
    for (unsigned w : {2u, 3u, 8u}) CHECK(enumerate_syt_parallel(s, w) == seq);
    CHECK(distribution(s, Statistic::Inv, 4) == distribution(s, Statistic::Inv));
  }
}

TEST_CASE("equidistribution report") {
  const auto straight = equidistribution_report(parse_shape("3,2"));
  CHECK(straight.pass());
  CHECK(straight.count == 5);
  REQUIRE(straight.maj_inv.size() == 1);
  CHECK_FALSE(straight.maj_inv[0].fixed_cell.has_value());

  const auto skew = equidistribution_report(parse_shape("2,2/1"));
  CHECK(skew.pass());
  REQUIRE(skew.maj_inv.size() == 1);
  CHECK(*skew.maj_inv[0].fixed_cell == Cell{2, 2});
  CHECK(skew.comaj_cinv.size() == 2);

  CHECK(equidistribution_report(parse_shape("3,3,1/2"), 3).pass());
}

TEST_CASE("skew catalog") {
  const auto cat = skew_catalog();
  CHECK(cat.size() == 454);
  std::uint64_t total = 0;
  std::set<std::string> names;
  for (const auto& s : cat) {
    CHECK(s.is_normalized());
    CHECK(s.size() >= 1);
    CHECK(s.size() <= 8);
    CHECK(s.rows() <= 4);
    CHECK(s.cols() <= 4);
    total += count_syt(s);
    names.insert(to_string(s));
  }
  CHECK(names.size() == cat.size());
  CHECK(total == 27397);
}
