#pragma once

#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "panto/errors.hpp"
#include "panto/moves.hpp"
#include "panto/pants.hpp"
#include "panto/surface.hpp"

namespace panto {

// Signed genus flux past each end.
struct EndBehavior {
  std::vector<long long> w;
};

inline long long phi_star_norm(const EndBehavior& b) {
  long long sum = 0, norm = 0;
  for (long long wi : b.w) {
    sum += wi;
    norm += std::llabs(wi);
  }
  if (sum != 0) throw unbalanced_end_behavior("end weights sum to " + std::to_string(sum));
  return norm;
}

inline long long quotient_genus(const EndBehavior& b, size_t end_index) {
  long long wi = b.w.at(end_index);
  if (wi == 0) throw zero_shift_end("end " + std::to_string(end_index) + " has zero shift");
  return 1 + std::llabs(wi);
}

// Complexity of one quotient boundary surface S_+ or S_- (both agree).
inline long long quotient_side_complexity(const EndBehavior& b) {
  long long norm = phi_star_norm(b);
  for (long long wi : b.w)
    if (wi == 0) throw zero_shift_end("zero-shift end in boundary complexity");
  return 3 * norm / 2;  // integral: each end contributes 3|w_i| split over one side
}

// Complexity of the full boundary of the compactified mapping torus.
inline long long boundary_complexity(const EndBehavior& b) {
  return 2 * quotient_side_complexity(b);
}

struct StripRecord {
  std::string id;
  std::string repelling_end;
  std::string attracting_end;
  int window_genus = 2;
};

struct HandleShiftSystem {
  std::vector<StripRecord> strips;
};

// The supported window family: k parallel strips between one repelling and
// one attracting end, truncated to d_rep + d_att periods.  Curves are indexed
// by (chain, period); the shift moves every chain one period toward the
// attracting side.
enum class ChainType { Seam, Esep, Bridge, Loop };

struct Chain {
  ChainType type = ChainType::Seam;
  int idx = 0;  // 1-based strip index; 0 for the seam

  friend bool operator==(const Chain&, const Chain&) = default;
  friend auto operator<=>(const Chain&, const Chain&) = default;
};

struct SlotRef {
  Chain chain;
  int period = 0;

  friend bool operator==(const SlotRef&, const SlotRef&) = default;
  friend auto operator<=>(const SlotRef&, const SlotRef&) = default;
};

struct LadderModel {
  int k = 1;
  int d_rep = 4;
  int d_att = 4;

  friend bool operator==(const LadderModel&, const LadderModel&) = default;

  static std::string period_str(int j) {
    return j < 0 ? "m" + std::to_string(-j) : std::to_string(j);
  }

  std::string chain_str(const Chain& c) const {
    switch (c.type) {
      case ChainType::Seam: return "s";
      case ChainType::Esep: return "e" + std::to_string(c.idx);
      case ChainType::Bridge: return "b" + std::to_string(c.idx);
      default: return "t" + std::to_string(c.idx);
    }
  }

  std::string curve_id(const SlotRef& s) const {
    return chain_str(s.chain) + "_" + period_str(s.period);
  }

  std::vector<Chain> chains() const {
    std::vector<Chain> out{Chain{ChainType::Seam, 0}};
    for (int i = 1; i < k; ++i) out.push_back(Chain{ChainType::Esep, i});
    for (int i = 1; i <= k; ++i) out.push_back(Chain{ChainType::Bridge, i});
    for (int i = 1; i <= k; ++i) out.push_back(Chain{ChainType::Loop, i});
    return out;
  }

  // Tracked period range; window-boundary seams sit just outside it.
  int min_period(const Chain& c) const { return c.type == ChainType::Seam ? -d_rep + 1 : -d_rep; }
  int max_period(const Chain&) const { return d_att - 1; }

  bool in_window(const SlotRef& s) const {
    return s.period >= min_period(s.chain) && s.period <= max_period(s.chain);
  }

  PieceKind piece_kind(const Chain& c) const {
    return c.type == ChainType::Loop ? PieceKind::T : PieceKind::S;
  }

  std::vector<SlotRef> slots() const {
    std::vector<SlotRef> out;
    for (const Chain& c : chains())
      for (int j = min_period(c); j <= max_period(c); ++j) out.push_back(SlotRef{c, j});
    return out;
  }

  // Inverse of curve_id over tracked slots.
  std::map<std::string, SlotRef> slot_index() const {
    std::map<std::string, SlotRef> out;
    for (const SlotRef& s : slots()) out[curve_id(s)] = s;
    return out;
  }

  Window window() const {
    Window w;
    w.core = SurfaceSig{k * (d_rep + d_att), 2};
    w.ends = {EndStub{"E+", Orientation::Attracting, d_att},
              EndStub{"E-", Orientation::Repelling, d_rep}};
    return w;
  }

  // q_i(j): the i-th vertical curve of period j, i = 0..k; q_0 is the seam
  // and q_k wraps to the next period's seam.
  std::string vertical_id(int i, int j) const {
    if (i == 0) return "s_" + period_str(j);
    if (i == k) return "s_" + period_str(j + 1);
    return "e" + std::to_string(i) + "_" + period_str(j);
  }

  PantsDecomposition decomposition() const {
    PantsDecomposition pd;
    std::map<std::string, Curve> curves;
    auto attach = [&curves](const std::string& curve, const std::string& pant, int slot) {
      curves[curve].id = curve;
      curves[curve].ends.push_back(CurveEnd{pant, slot});
    };
    for (int j = -d_rep; j <= d_att - 1; ++j) {
      for (int i = 1; i <= k; ++i) {
        std::string sa = std::to_string(i) + "_" + period_str(j);
        std::string pa = "A" + sa, pb = "B" + sa;
        std::string bi = "b" + sa, ti = "t" + sa;
        pd.pants.push_back(PantNode{pa, {vertical_id(i - 1, j), vertical_id(i, j), bi}});
        pd.pants.push_back(PantNode{pb, {bi, ti, ti}});
        attach(vertical_id(i - 1, j), pa, 0);
        attach(vertical_id(i, j), pa, 1);
        attach(bi, pa, 2);
        attach(bi, pb, 0);
        attach(ti, pb, 1);
        attach(ti, pb, 2);
      }
    }
    for (auto& [id, c] : curves) {
      if (c.ends.size() == 1)
        c.boundary = (id == "s_" + period_str(-d_rep)) ? "E-" : "E+";
      pd.curves.push_back(c);
    }
    for (const SlotRef& s : slots()) pd.slopes[curve_id(s)] = slope_zero;
    init_frames(pd);
    return pd;
  }
};

// One Dehn twist generator of the compact word: the curve of slope gamma
// inside the complexity-one piece of a tracked curve.
struct TwistGen {
  std::string piece;  // tracked curve id naming the piece
  Slope gamma;
  long long power = 1;

  friend bool operator==(const TwistGen&, const TwistGen&) = default;
};

struct EndPeriodicMap {
  LadderModel ladder;
  std::vector<TwistGen> word;  // h applies the generators in listed order
  int power = 1;               // this map is (rho h)^power

  HandleShiftSystem shift() const {
    HandleShiftSystem hs;
    for (int i = 1; i <= ladder.k; ++i)
      hs.strips.push_back(StripRecord{"H" + std::to_string(i), "E-", "E+",
                                      ladder.d_rep + ladder.d_att});
    return hs;
  }

  EndBehavior end_behavior() const {
    return EndBehavior{{static_cast<long long>(ladder.k) * power,
                        -static_cast<long long>(ladder.k) * power}};
  }
};

namespace detail {

// The compact word restricted to one piece, acting on its slope.
inline Slope apply_word_at(const EndPeriodicMap& f, const std::string& piece_curve,
                           PieceKind kind, Slope x, bool inverse) {
  if (!inverse) {
    for (const TwistGen& g : f.word)
      if (g.piece == piece_curve) x = twist_slope_in_piece(x, g.gamma, g.power, kind);
  } else {
    for (auto it = f.word.rbegin(); it != f.word.rend(); ++it)
      if (it->piece == piece_curve) x = twist_slope_in_piece(x, it->gamma, -it->power, kind);
  }
  return x;
}

inline void check_word_in_window(const EndPeriodicMap& f) {
  auto index = f.ladder.slot_index();
  for (const TwistGen& g : f.word) {
    auto it = index.find(g.piece);
    if (it == index.end())
      throw curve_outside_window("twist piece " + g.piece + " is not a tracked window curve");
    const SlotRef& s = it->second;
    if (s.period <= f.ladder.min_period(s.chain) || s.period >= f.ladder.max_period(s.chain))
      throw curve_outside_window("twist piece " + g.piece + " lies in an end stub layer");
    if (g.gamma == slope_zero)
      throw curve_outside_window("twist about the tracked curve itself is trivial here");
  }
}

}  // namespace detail

// One application of rho h (dir=+1) or its inverse (dir=-1) to the slope
// decoration of a pattern decomposition.
inline PantsDecomposition act_once(const EndPeriodicMap& f, const PantsDecomposition& pd,
                                   int dir) {
  detail::check_word_in_window(f);
  const LadderModel& lm = f.ladder;
  PantsDecomposition pattern = lm.decomposition();
  if (!(pattern.pants == pd.pants && pattern.curves == pd.curves))
    throw support_mismatch("decomposition is not the window pattern of this map");
  for (const auto& [id, slope] : pd.slopes)
    if (!pattern.slopes.count(id)) throw support_mismatch("unexpected tracked curve " + id);
  if (pd.slopes.size() != pattern.slopes.size())
    throw support_mismatch("tracked curve set does not match the window pattern");
  // The end stubs must carry the periodic (default) pattern at the edges.
  for (const Chain& c : lm.chains()) {
    for (int j : {lm.min_period(c), lm.max_period(c)}) {
      const Slope& s = pd.slopes.at(lm.curve_id(SlotRef{c, j}));
      if (s != slope_zero)
        throw support_mismatch("curve " + lm.curve_id(SlotRef{c, j}) +
                               " breaks the periodic pattern on the end stub");
    }
  }
  PantsDecomposition out = pd;
  for (const SlotRef& s : lm.slots()) {
    SlotRef src{s.chain, s.period - dir};
    Slope v = slope_zero;
    if (lm.in_window(src)) v = pd.slopes.at(lm.curve_id(src));
    std::string tw = dir > 0 ? lm.curve_id(src) : lm.curve_id(s);
    v = detail::apply_word_at(f, tw, lm.piece_kind(s.chain), v, dir < 0);
    out.slopes[lm.curve_id(s)] = v;
  }
  return out;
}

// Action of f (or its inverse) on a window decomposition; applies the
// underlying rho h map |power| times.
inline PantsDecomposition act_on_pants(const EndPeriodicMap& f, const PantsDecomposition& pd,
                                       int dir = 1) {
  PantsDecomposition out = pd;
  for (int i = 0; i < f.power; ++i) out = act_once(f, out, dir);
  return out;
}

inline EndPeriodicMap compose_with_twists(const EndPeriodicMap& f,
                                          const std::vector<TwistGen>& twists) {
  EndPeriodicMap out = f;
  for (const TwistGen& g : twists) out.word.push_back(g);
  detail::check_word_in_window(out);
  return out;
}

inline EndPeriodicMap map_power(const EndPeriodicMap& f, int n) {
  if (n <= 0) throw Error("InvalidPower", "power must be positive");
  EndPeriodicMap out = f;
  out.power = f.power * n;
  return out;
}

struct Rational {
  long long num = 0;
  long long den = 1;

  void reduce() {
    long long g = std::gcd(std::llabs(num), std::llabs(den));
    if (g) {
      num /= g;
      den /= g;
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
};

// Upper estimate for the translation distance of f from a path for f^power:
// path weight divided by power, after checking the path really ends at
// f^{-power}(base).
inline Rational upper_translation_estimate(const EndPeriodicMap& f, const MovePath& path,
                                           int power) {
  if (power <= 0) throw Error("InvalidPower", "power must be positive");
  PantsDecomposition target = path.base;
  for (int i = 0; i < power; ++i) target = act_on_pants(f, target, -1);
  if (!(path_endpoint(path) == target))
    throw path_endpoint_mismatch("path does not end at the f^-" + std::to_string(power) +
                                 " image of its base");
  Rational r{path_weight(path), power};
  r.reduce();
  return r;
}

}  // namespace panto
