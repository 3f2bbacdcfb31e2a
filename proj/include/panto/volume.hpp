#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "panto/end_periodic.hpp"
#include "panto/farey.hpp"
#include "panto/moves.hpp"

namespace panto {

namespace detail {

// zeta(s) for real s >= 2 by Euler-Maclaurin; error well below 1e-20 with
// these cutoffs.
inline long double zeta_em(long double s) {
  const int big_j = 100;
  long double sum = 0;
  for (int j = 1; j < big_j; ++j) sum += std::pow(static_cast<long double>(j), -s);
  long double jj = big_j;
  sum += std::pow(jj, -s) / 2 + std::pow(jj, 1 - s) / (s - 1);
  // Bernoulli correction terms B2, B4, B6, B8.
  const long double bern[] = {1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30};
  long double rising = s;  // s(s+1)...(s+2i-2)
  long double fact = 2;    // (2i)!
  for (int i = 1; i <= 4; ++i) {
    sum += bern[i - 1] / fact * rising * std::pow(jj, -s - 2 * i + 1);
    rising *= (s + 2 * i - 1) * (s + 2 * i);
    fact *= (2 * i + 1) * (2 * i + 2);
  }
  return sum;
}

const long double pi_l = 3.14159265358979323846264338327950288L;

// Clausen function Cl2 on [0, pi] via the zeta power series
//   Cl2(x) = x(1 - ln x) + sum_m zeta(2m)/(m(2m+1)) x^(2m+1)/(2pi)^(2m),
// with the geometric tail certified below tol.
inline long double clausen2_core(long double x, long double tol) {
  if (x == 0) return 0;
  long double sum = x * (1 - std::log(x));
  long double ratio = (x / (2 * pi_l)) * (x / (2 * pi_l));
  long double pow_term = ratio;  // (x/2pi)^(2m)
  for (int m = 1; m <= 200; ++m) {
    long double term = zeta_em(2.0L * m) / (static_cast<long double>(m) * (2 * m + 1)) *
                       pow_term * x;
    sum += term;
    long double tail_bound = term * ratio / (1 - ratio) * 2;
    if (tail_bound < tol) return sum;
    pow_term *= ratio;
  }
  return sum;
}

inline long double clausen2(long double x, long double tol) {
  const long double two_pi = 2 * pi_l;
  x = std::fmod(x, two_pi);
  if (x < 0) x += two_pi;
  if (x > pi_l) return -clausen2_core(two_pi - x, tol);
  return clausen2_core(x, tol);
}

// Independent check method: adaptive Simpson quadrature of -log|2 sin t| with
// the log singularity at 0 integrated analytically.
inline double simpson_rec(double (*g)(double), double a, double b, double fa, double fm,
                          double fb, double whole, double tol, int depth) {
  double m = (a + b) / 2;
  double lm = (a + m) / 2, rm = (m + b) / 2;
  double flm = g(lm), frm = g(rm);
  double left = (m - a) / 6 * (fa + 4 * flm + fm);
  double right = (b - m) / 6 * (fm + 4 * frm + fb);
  if (depth <= 0 || std::fabs(left + right - whole) < 15 * tol)
    return left + right + (left + right - whole) / 15;
  return simpson_rec(g, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         simpson_rec(g, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

inline double lobachevsky_quadrature(double theta) {
  if (theta == 0) return 0;
  double sign = theta < 0 ? -1 : 1;
  theta = std::fabs(theta);
  // Near 0 split off -int_0^eps log(2t) dt = eps(1 - log(2 eps)) and integrate
  // the smooth remainder -log(sin t / t).
  const double eps = std::min(theta, 1e-3);
  double head = eps * (1 - std::log(2 * eps));
  auto smooth = [](double t) {
    if (t < 1e-12) return 0.0;
    return -std::log(std::sin(t) / t);
  };
  auto integrand = [](double t) { return -std::log(2 * std::sin(t)); };
  double fa = smooth(0), fm = smooth(eps / 2), fb = smooth(eps);
  double whole = eps / 6 * (fa + 4 * fm + fb);
  head += simpson_rec(+[](double t) { return t < 1e-12 ? 0.0 : -std::log(std::sin(t) / t); }, 0,
                      eps, fa, fm, fb, whole, 1e-14, 40);
  double total = head;
  if (theta > eps) {
    double a = eps, b = theta;
    double ga = integrand(a), gm = integrand((a + b) / 2), gb = integrand(b);
    double w = (b - a) / 6 * (ga + 4 * gm + gb);
    total += simpson_rec(+[](double t) { return -std::log(2 * std::sin(t)); }, a, b, ga, gm, gb,
                         w, 1e-13, 48);
  }
  return sign * total;
}

}  // namespace detail

// Lobachevsky function via the Clausen series with a certified truncation
// tail; precision counts requested decimal digits of truncation error.
inline double lobachevsky(double theta, int precision = 15) {
  long double tol = std::pow(10.0L, -static_cast<long double>(std::max(precision, 15)) - 2);
  return static_cast<double>(detail::clausen2(2.0L * theta, tol) / 2);
}

struct HyperbolicConstants {
  double v_oct = 0;  // regular ideal octahedron, 8 Lambda(pi/4)
  double v_tet = 0;  // regular ideal tetrahedron, 2 Lambda(pi/6)
  int precision = 15;
};

inline HyperbolicConstants hyperbolic_constants(int precision = 15) {
  HyperbolicConstants c;
  c.precision = precision;
  c.v_oct = 8 * lobachevsky(static_cast<double>(detail::pi_l) / 4, precision);
  c.v_tet = 2 * lobachevsky(static_cast<double>(detail::pi_l) / 6, precision);
  return c;
}

struct BoundsReport {
  std::optional<Rational> upper_total_coeff;      // min weight/power over supplied paths
  std::optional<Rational> upper_component_coeff;  // same path family, fixed component
  double lower_tau = 0;                           // Cor 1.4 = Cor 1.5 value
  long long phi_norm = 0;
  long long xi_boundary = 0;
  HyperbolicConstants constants;
  std::vector<std::string> provenance;

  double upper_volume() const {
    return upper_total_coeff ? upper_total_coeff->value() * constants.v_oct : 0;
  }
};

namespace detail {

inline bool rational_less(const Rational& a, const Rational& b) {
  return a.num * b.den < b.num * a.den;
}

}  // namespace detail

// Evaluate the four bound formulas for f given candidate (path, power) pairs;
// every path is validated as a path for f^power before its weight counts.
inline BoundsReport evaluate_bounds(const EndPeriodicMap& f,
                                    const std::vector<std::pair<MovePath, int>>& paths,
                                    int precision = 15) {
  BoundsReport r;
  r.constants = hyperbolic_constants(precision);
  EndBehavior b = f.end_behavior();
  r.phi_norm = phi_star_norm(b);
  r.xi_boundary = boundary_complexity(b);
  r.lower_tau = 3.0 * r.constants.v_tet * static_cast<double>(r.phi_norm) /
                (2.0 * r.constants.v_oct);
  {
    std::ostringstream p;
    p << "lower tau bound " << r.lower_tau << " = 3 V_tet |Phi*| / (2 V_oct), |Phi*| = "
      << r.phi_norm << " (Cor 1.5; equals Cor 1.4 via xi(bdry) = " << r.xi_boundary << ")";
    r.provenance.push_back(p.str());
  }
  for (const auto& [path, power] : paths) {
    Rational est = upper_translation_estimate(f, path, power);
    std::ostringstream p;
    p << "path with " << path.moves.size() << " moves, weight " << path_weight(path)
      << ", power " << power << " -> upper estimate " << est.num << "/" << est.den
      << " (Thm 1.1 route)";
    r.provenance.push_back(p.str());
    if (!r.upper_total_coeff || detail::rational_less(est, *r.upper_total_coeff)) {
      r.upper_total_coeff = est;
      r.upper_component_coeff = est;  // paths live in the component of their base
    }
  }
  if (r.upper_total_coeff) {
    double upper = r.upper_total_coeff->value();
    if (upper < r.lower_tau - 1e-12)
      throw Error("BoundViolation", "upper translation estimate fell below the Cor 1.5 lower "
                                    "bound; this cannot happen for valid inputs");
    std::ostringstream p;
    p << "consistency: upper " << upper << " >= lower " << r.lower_tau << " PASS";
    r.provenance.push_back(p.str());
  }
  return r;
}

// f_k = f composed with k canceling twist pairs about the gamma_0 curve of a
// designated four-holed-sphere piece, plus a path extended by k redundant
// move pairs: weight grows by exactly 4k while the tracked endpoint is
// unchanged.  The piece's four cuffs must have pairwise distinct chain
// classes so that no window symmetry identifies them.
inline std::pair<EndPeriodicMap, MovePath> sharpness_family(const EndPeriodicMap& f,
                                                            const MovePath& base_path,
                                                            const std::array<std::string, 4>& sigma,
                                                            int k) {
  if (k < 0) throw convention_violation("twist count must be nonnegative");
  // Locate the tracked S-curve whose frame cuffs are exactly sigma.
  std::string piece;
  for (const auto& [id, fr] : base_path.base.frames) {
    if (fr.kind != PieceKind::S) continue;
    std::array<std::string, 4> cuffs{fr.cuffs[0], fr.cuffs[1], fr.cuffs[2], fr.cuffs[3]};
    std::array<std::string, 4> want = sigma;
    std::sort(cuffs.begin(), cuffs.end());
    std::sort(want.begin(), want.end());
    if (cuffs == want) {
      piece = id;
      break;
    }
  }
  if (piece.empty())
    throw convention_violation("no tracked four-holed-sphere piece has the designated cuffs");
  {
    std::set<std::string> classes;
    for (const std::string& c : sigma) classes.insert(c.substr(0, c.find('_')));
    if (classes.size() != 4)
      throw convention_violation("designated piece cuffs must have all distinct types");
  }
  if (k == 0) return {f, base_path};

  const Slope gamma0 = slope_inf;
  std::vector<TwistGen> gens;
  for (int i = 0; i < k; ++i) {
    gens.push_back(TwistGen{piece, gamma0, 1});
    gens.push_back(TwistGen{piece, gamma0, -1});
  }
  EndPeriodicMap fk = compose_with_twists(f, gens);

  MovePath path = base_path;
  Slope at = path_endpoint(base_path).slopes.at(piece);
  // A neighbor of the endpoint slope for the out-and-back pair.
  Slope out = at == gamma0 ? Slope{1, 1} : farey_geodesic(at, gamma0)[1];
  for (int i = 0; i < k; ++i) {
    path.moves.push_back(ElementaryMove{piece, PieceKind::S, at, out});
    path.moves.push_back(ElementaryMove{piece, PieceKind::S, out, at});
  }
  return {fk, path};
}

}  // namespace panto
