#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "panto/examples.hpp"
#include "panto/volume.hpp"

using namespace panto;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("series and quadrature evaluations of Lambda agree") {
  const double angles[] = {kPi / 12, kPi / 6,  kPi / 4, kPi / 3, 0.1,
                           1.0,      1.5,      2.5,     3.0,     kPi - 1e-4};
  for (double th : angles) {
    double series = lobachevsky(th);
    double quad = detail::lobachevsky_quadrature(th);
    INFO("theta = " << th);
    CHECK(std::fabs(series - quad) < 1e-10);
  }
}

TEST_CASE("Lambda is odd, pi-periodic, and vanishes at multiples of pi") {
  CHECK(lobachevsky(0.0) == 0.0);
  CHECK(std::fabs(lobachevsky(kPi)) < 1e-14);
  for (double th : {0.3, 0.9, 1.4}) {
    CHECK(std::fabs(lobachevsky(-th) + lobachevsky(th)) < 1e-15);
    CHECK(std::fabs(lobachevsky(th + kPi) - lobachevsky(th)) < 1e-12);
  }
  // Maximum at pi/6 equals half the ideal tetrahedron volume.
  CHECK(lobachevsky(kPi / 6) > lobachevsky(kPi / 6 + 0.01));
  CHECK(lobachevsky(kPi / 6) > lobachevsky(kPi / 6 - 0.01));
}

TEST_CASE("octahedron and tetrahedron volumes match their known values") {
  HyperbolicConstants c = hyperbolic_constants();
  CHECK(std::fabs(c.v_oct - 3.663862376708876) < 1e-12);
  CHECK(std::fabs(c.v_tet - 1.014941606409654) < 1e-12);
  CHECK(std::fabs(c.v_oct / c.v_tet - 3.609924308522295) < 1e-12);
  CHECK(std::fabs(3 * c.v_tet / (2 * c.v_oct) - 0.4155211776764421) < 1e-12);
  // Requesting more digits does not drift the double-precision result.
  HyperbolicConstants hi = hyperbolic_constants(30);
  CHECK(std::fabs(hi.v_oct - c.v_oct) < 1e-15);
  CHECK(std::fabs(hi.v_tet - c.v_tet) < 1e-15);
}

TEST_CASE("bounds report for the smallest example") {
  GeneratedExample ex = fenley();
  BoundsReport r = evaluate_bounds(ex.map, {{ex.path, 1}});
  CHECK(r.phi_norm == 2);
  CHECK(r.xi_boundary == 6);
  REQUIRE(r.upper_total_coeff.has_value());
  CHECK(r.upper_total_coeff->num == 9);
  CHECK(r.upper_total_coeff->den == 1);
  CHECK(std::fabs(r.lower_tau - 2 * 0.4155211776764421) < 1e-12);
  CHECK(std::fabs(r.upper_volume() - 9 * r.constants.v_oct) < 1e-12);
  bool has_pass = false;
  for (const auto& line : r.provenance) has_pass |= line.find("PASS") != std::string::npos;
  CHECK(has_pass);
  CHECK(r.provenance.size() >= 3);
}

TEST_CASE("no candidate path leaves only the lower bound") {
  GeneratedExample ex = fenley();
  BoundsReport r = evaluate_bounds(ex.map, {});
  CHECK_FALSE(r.upper_total_coeff.has_value());
  CHECK(r.lower_tau > 0.8);
  CHECK(r.upper_volume() == 0.0);
}

TEST_CASE("both lower bound routes coincide") {
  for (auto& ex : block_instances()) {
    BoundsReport r = evaluate_bounds(ex.map, {});
    double via_norm = 3.0 * r.constants.v_tet * static_cast<double>(r.phi_norm) /
                      (2.0 * r.constants.v_oct);
    double via_boundary = r.constants.v_tet * static_cast<double>(r.xi_boundary) /
                          (2.0 * r.constants.v_oct);
    CHECK(r.xi_boundary == 3 * r.phi_norm);
    CHECK(std::fabs(via_norm - via_boundary) < 1e-15);
    CHECK(std::fabs(r.lower_tau - via_norm) < 1e-15);
  }
}

TEST_CASE("the best path wins among several candidates") {
  GeneratedExample ex = fenley();
  MovePath padded = ex.path;
  // A redundant out-and-back twist pair on the tracked one-holed torus t1_0.
  Slope at = path_endpoint(ex.path).slopes.at("t1_0");
  Slope out = farey_geodesic(at, Slope{0, 1})[1];
  padded.moves.push_back(ElementaryMove{"t1_0", PieceKind::T, at, out});
  padded.moves.push_back(ElementaryMove{"t1_0", PieceKind::T, out, at});
  BoundsReport r = evaluate_bounds(ex.map, {{padded, 1}, {ex.path, 1}});
  REQUIRE(r.upper_total_coeff.has_value());
  CHECK(r.upper_total_coeff->num == 9);
  CHECK(r.upper_total_coeff->den == 1);
}

TEST_CASE("redundant twist pairs grow the certified weight by exactly four") {
  SharpnessDemo demo = sharpness_demo();
  long long base = path_weight(demo.path);
  for (int k = 0; k <= 10; ++k) {
    auto [fk, pk] = sharpness_family(demo.map, demo.path, demo.sigma, k);
    CHECK(path_weight(pk) == base + 4 * k);
    Rational est = upper_translation_estimate(fk, pk, 1);
    CHECK(est.num == base + 4 * k);
    CHECK(est.den == 1);
    if (k == 0) {
      CHECK(pk.moves.size() == demo.path.moves.size());
      CHECK(fk.word.size() == demo.map.word.size());
    } else {
      CHECK(pk.moves.size() == demo.path.moves.size() + 2 * k);
      CHECK(fk.word.size() == demo.map.word.size() + 2 * k);
    }
    BoundsReport r = evaluate_bounds(fk, {{pk, 1}});
    REQUIRE(r.upper_total_coeff.has_value());
    CHECK(r.upper_total_coeff->num == base + 4 * k);
  }
}

TEST_CASE("designated pieces with repeated cuff classes are rejected") {
  SharpnessDemo demo = sharpness_demo();
  // The k = 1 ladder bridge sees the torus chain twice through its frame.
  GeneratedExample narrow = twisted_ladder(1, 3);
  CHECK_THROWS_MATCHES(
      sharpness_family(narrow.map, narrow.path, {"s_0", "s_1", "t1_0", "t1_0"}, 1), Error,
      Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("distinct")));
  // The k = 2 strip separator sees the seam chain on both sides.
  GeneratedExample mid = twisted_ladder(2, 0);
  CHECK_THROWS_MATCHES(
      sharpness_family(mid.map, mid.path, {"s_0", "b1_0", "s_1", "b2_0"}, 1), Error,
      Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("distinct")));
  // Unknown cuff sets never match a tracked piece.
  CHECK_THROWS_MATCHES(
      sharpness_family(demo.map, demo.path, {"s_0", "s_1", "s_2", "s_3"}, 1), Error,
      Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("no tracked")));
}

TEST_CASE("negative twist counts are rejected") {
  SharpnessDemo demo = sharpness_demo();
  CHECK_THROWS_AS(sharpness_family(demo.map, demo.path, demo.sigma, -1), Error);
}
