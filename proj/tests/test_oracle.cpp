#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "helpers.hpp"
#include "latowa/latowa.hpp"

using namespace latowa;
using latowa::test::make_m3;

namespace {
const UnitLattice u;
}

TEST_CASE("oracle chain: constants and singletons") {
  std::vector<UnitValue> ones(4, u.make(0.4));
  for (const auto& b : oracle_lm(u, ones)) CHECK(b.value() == 0.4);
  std::vector<UnitValue> single{u.make(0.7)};
  auto b = oracle_lm(u, single);
  REQUIRE(b.size() == 1);
  CHECK(b[0].value() == 0.7);
}

TEST_CASE("oracle arity cap") {
  std::vector<UnitValue> nine(9, u.make(0.5));
  CHECK_THROWS_AS(oracle_lm(u, nine), Error);
  std::vector<UnitValue> eight(8, u.make(0.5));
  CHECK_NOTHROW(oracle_lm(u, eight));
}

TEST_CASE("transform agrees with the oracle over the coarse grid cube") {
  auto dom = grid_domain(u, 3);
  CHECK(dom.elements.size() == 5);
  auto report = equivalence_report(
      dom, [&](std::span<const UnitValue> t) { return lm_transform(u, t); },
      [&](std::span<const UnitValue> t) { return oracle_lm(u, t); },
      chain_eq(u, kDefaultTolerance));
  CHECK(report.pass());
  CHECK(report.compared == 125);
}

TEST_CASE("tuple streams respect counts and budget") {
  auto m3 = make_m3();
  auto dom = carrier_domain(m3, 2);
  std::size_t count = 0;
  enumerate_tuples(dom, [&](std::span<const FiniteLattice::Element>) {
    ++count;
    return true;
  });
  CHECK(count == 25);

  auto dom3 = grid_domain(u, 3);
  CHECK_THROWS_AS(enumerate_tuples(
                      dom3, [](std::span<const UnitValue>) { return true; }, 10),
                  Error);
}

TEST_CASE("interval domains are reproducible for a fixed seed") {
  IntervalLattice il;
  auto a = interval_grid_domain(il, 2, 100, 42);
  auto b = interval_grid_domain(il, 2, 100, 42);
  REQUIRE(a.elements.size() == 100);
  for (std::size_t i = 0; i < 100; ++i) {
    CHECK(a.elements[i].lo() == b.elements[i].lo());
    CHECK(a.elements[i].hi() == b.elements[i].hi());
    CHECK(a.elements[i].lo() <= a.elements[i].hi());
  }
}

TEST_CASE("yager and lmowa agree over the grid square") {
  auto pair = unit_pair(u, UnitNorm::Product, UnitConorm::Lukasiewicz);
  std::vector<UnitValue> w{u.make(0.3), u.make(0.7)};
  auto wv = make_weight_vector(pair, w);
  auto dom = grid_domain(u, 2);
  auto report = equivalence_report(
      dom, [&](std::span<const UnitValue> t) { return yager_owa(u, w, t); },
      [&](std::span<const UnitValue> t) { return lmowa(wv, t).value; },
      element_eq(u, 1e-12));
  CHECK(report.pass());
  CHECK(report.compared == 25);
}

TEST_CASE("lmowa and constant-family dyowa agree exhaustively on M3 pairs") {
  auto m3 = make_m3();
  auto pair = meet_join_pair(m3);
  std::vector<FiniteLattice::Element> w{m3.top(), m3.bottom()};
  auto wv = make_weight_vector(pair, w);
  auto fam = constant_family(pair, w);
  auto dom = carrier_domain(m3, 2);
  auto report = equivalence_report(
      dom,
      [&](std::span<const FiniteLattice::Element> t) { return lmowa(wv, t).value; },
      [&](std::span<const FiniteLattice::Element> t) { return dyowa(fam, t).value; },
      element_eq(m3, 0.0));
  CHECK(report.pass());
  CHECK(report.compared == 25);
}

TEST_CASE("swapped weights diverge at the first asymmetric tuple") {
  std::vector<UnitValue> w1{u.make(0.3), u.make(0.7)};
  std::vector<UnitValue> w2{u.make(0.7), u.make(0.3)};
  auto dom = grid_domain(u, 2);
  auto report = equivalence_report(
      dom, [&](std::span<const UnitValue> t) { return yager_owa(u, w1, t); },
      [&](std::span<const UnitValue> t) { return yager_owa(u, w2, t); },
      element_eq(u, kDefaultTolerance));
  REQUIRE_FALSE(report.pass());
  // (0,0) agrees; (0,0.25) is the first tuple with distinct coordinates.
  CHECK(report.divergence->index == 1);
  REQUIRE(report.divergence->input.size() == 2);
  CHECK(report.divergence->input[0].value() == 0.0);
  CHECK(report.divergence->input[1].value() == 0.25);
  CHECK(report.divergence->left == "0.075");
  CHECK(report.divergence->right == "0.175");
}
