#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace panto {

// Slope p/q on a complexity-one piece, kept in lowest terms with q >= 0.
// The point at infinity is 1/0.
struct Slope {
  long long p = 0;
  long long q = 1;

  friend bool operator==(const Slope&, const Slope&) = default;
  friend auto operator<=>(const Slope&, const Slope&) = default;
};

inline Slope make_slope(long long p, long long q) {
  if (p == 0 && q == 0) throw std::invalid_argument("slope 0/0");
  long long g = std::gcd(p < 0 ? -p : p, q < 0 ? -q : q);
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return Slope{p, q};
}

inline const Slope slope_inf{1, 0};
inline const Slope slope_zero{0, 1};

inline std::string to_string(const Slope& s) {
  return std::to_string(s.p) + "/" + std::to_string(s.q);
}

inline std::optional<Slope> parse_slope(const std::string& text) {
  if (text == "inf" || text == "infinity") return slope_inf;
  auto bar = text.find('/');
  try {
    size_t used = 0;
    if (bar == std::string::npos) {
      long long p = std::stoll(text, &used);
      if (used != text.size()) return std::nullopt;
      return Slope{p, 1};
    }
    long long p = std::stoll(text.substr(0, bar), &used);
    if (used != bar) return std::nullopt;
    std::string den = text.substr(bar + 1);
    long long q = std::stoll(den, &used);
    if (used != den.size()) return std::nullopt;
    if (p == 0 && q == 0) return std::nullopt;
    return make_slope(p, q);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline long long det(const Slope& a, const Slope& b) {
  return a.p * b.q - a.q * b.p;
}

inline bool farey_adjacent(const Slope& a, const Slope& b) {
  long long d = det(a, b);
  return d == 1 || d == -1;
}

enum class PieceKind { T, S };

// Geometric intersection number of two slope curves within a piece:
// |ps - qr| on the one-holed torus, twice that on the four-holed sphere.
inline long long intersection_in_piece(const Slope& a, const Slope& b, PieceKind kind) {
  long long d = det(a, b);
  if (d < 0) d = -d;
  return kind == PieceKind::T ? d : 2 * d;
}

// Dehn twist about the slope-gamma curve, acting on slopes:
// x -> x + k <gamma, x> gamma where <g, x> = det(g, x).
inline Slope twist_slope(const Slope& x, const Slope& gamma, long long power) {
  long long d = det(gamma, x);
  return make_slope(x.p + power * d * gamma.p, x.q + power * d * gamma.q);
}

// Twist action in a piece of the given kind.  On the four-holed sphere a full
// twist acts doubled (the slope curve lifts to two parallel circles in the
// torus double cover), so parity classes are preserved there.
inline Slope twist_slope_in_piece(const Slope& x, const Slope& gamma, long long power,
                                  PieceKind kind) {
  return twist_slope(x, gamma, kind == PieceKind::T ? power : 2 * power);
}

// Integer 2x2 matrix acting on slopes as (p, q) -> (ap + bq, cp + dq).
struct Mat2 {
  long long a = 1, b = 0, c = 0, d = 1;

  long long determinant() const { return a * d - b * c; }

  Slope apply(const Slope& s) const {
    return make_slope(a * s.p + b * s.q, c * s.p + d * s.q);
  }

  Mat2 mul(const Mat2& o) const {
    return Mat2{a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
  }

  // Inverse of a determinant +-1 matrix.
  Mat2 inverse() const {
    long long dt = determinant();
    if (dt != 1 && dt != -1) throw std::logic_error("non-unimodular matrix");
    return Mat2{dt * d, dt * -b, dt * -c, dt * a};
  }
};

// Parity class of a slope mod 2; the three classes index the pairings of the
// four cuffs of a four-holed sphere.
inline int parity_class(const Slope& s) {
  int pp = static_cast<int>(((s.p % 2) + 2) % 2);
  int qq = static_cast<int>(((s.q % 2) + 2) % 2);
  if (pp == 0) return 0;  // 0/1 class
  if (qq == 0) return 1;  // 1/0 class
  return 2;               // 1/1 class
}

}  // namespace panto
