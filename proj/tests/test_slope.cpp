#include <catch2/catch_amalgamated.hpp>

#include "panto/slope.hpp"

using namespace panto;

TEST_CASE("slope normalization") {
  CHECK(make_slope(2, 4) == Slope{1, 2});
  CHECK(make_slope(-2, 4) == Slope{-1, 2});
  CHECK(make_slope(2, -4) == Slope{-1, 2});
  CHECK(make_slope(-2, -4) == Slope{1, 2});
  CHECK(make_slope(5, 0) == slope_inf);
  CHECK(make_slope(-3, 0) == slope_inf);
  CHECK(make_slope(0, 7) == slope_zero);
  CHECK_THROWS(make_slope(0, 0));
}

TEST_CASE("slope formatting and parsing") {
  CHECK(to_string(Slope{3, 5}) == "3/5");
  CHECK(to_string(slope_inf) == "1/0");
  CHECK(parse_slope("3/5") == Slope{3, 5});
  CHECK(parse_slope("-3/5") == Slope{-3, 5});
  CHECK(parse_slope("6/10") == Slope{3, 5});
  CHECK(parse_slope("inf") == slope_inf);
  CHECK(parse_slope("1/0") == slope_inf);
  CHECK(parse_slope("4") == Slope{4, 1});
  CHECK(parse_slope("0/0") == std::nullopt);
  CHECK(parse_slope("x") == std::nullopt);
  CHECK(parse_slope("") == std::nullopt);
}

TEST_CASE("determinant and adjacency") {
  CHECK(det(Slope{0, 1}, Slope{1, 0}) == -1);
  CHECK(farey_adjacent(Slope{0, 1}, Slope{1, 0}));
  CHECK(farey_adjacent(Slope{1, 2}, Slope{1, 3}));
  CHECK(!farey_adjacent(Slope{0, 1}, Slope{2, 1}));
  CHECK(!farey_adjacent(Slope{1, 2}, Slope{1, 2}));
}

TEST_CASE("intersection numbers by piece kind") {
  CHECK(intersection_in_piece(Slope{0, 1}, Slope{1, 0}, PieceKind::T) == 1);
  CHECK(intersection_in_piece(Slope{0, 1}, Slope{1, 0}, PieceKind::S) == 2);
  CHECK(intersection_in_piece(Slope{1, 2}, Slope{3, 5}, PieceKind::T) == 1);
  CHECK(intersection_in_piece(Slope{2, 1}, Slope{0, 1}, PieceKind::S) == 4);
}

TEST_CASE("twist action on slopes") {
  // Twisting 0/1 once about 1/0 yields 1/1.
  CHECK(twist_slope(Slope{0, 1}, slope_inf, 1) == Slope{1, 1});
  // The twisting curve is fixed.
  CHECK(twist_slope(slope_inf, slope_inf, 5) == slope_inf);
  CHECK(twist_slope(Slope{2, 3}, Slope{2, 3}, -4) == Slope{2, 3});
  // Inverse twist undoes the twist.
  Slope x{3, 7}, g{1, 2};
  CHECK(twist_slope(twist_slope(x, g, 3), g, -3) == x);
}

TEST_CASE("twist changes intersection quadratically") {
  // i(T_g^k x, x) = |k| i(g, x)^2 in the one-holed torus piece.
  for (long long k = -3; k <= 3; ++k) {
    for (auto [g, x] : {std::pair<Slope, Slope>{{1, 0}, {0, 1}},
                        {{1, 2}, {3, 5}},
                        {{2, 5}, {1, 1}}}) {
      long long i0 = intersection_in_piece(g, x, PieceKind::T);
      Slope tx = twist_slope(x, g, k);
      CHECK(intersection_in_piece(tx, x, PieceKind::T) == std::abs(k) * i0 * i0);
    }
  }
}

TEST_CASE("parity classes partition slopes") {
  CHECK(parity_class(Slope{0, 1}) == 0);
  CHECK(parity_class(Slope{2, 1}) == 0);
  CHECK(parity_class(Slope{1, 0}) == 1);
  CHECK(parity_class(Slope{3, 2}) == 1);
  CHECK(parity_class(Slope{1, 1}) == 2);
  CHECK(parity_class(Slope{3, 5}) == 2);
}

TEST_CASE("matrix algebra") {
  Mat2 a{1, 1, 0, 1}, b{1, 0, 1, 1};
  Mat2 ab = a.mul(b);
  CHECK(ab.determinant() == 1);
  Mat2 inv = ab.inverse();
  Mat2 id = ab.mul(inv);
  CHECK(id.a == 1);
  CHECK(id.b == 0);
  CHECK(id.c == 0);
  CHECK(id.d == 1);
  Slope s{3, 5};
  CHECK(inv.apply(ab.apply(s)) == s);
}
