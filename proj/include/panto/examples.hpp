#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "panto/end_periodic.hpp"
#include "panto/moves.hpp"
#include "panto/projection.hpp"

namespace panto {

struct GeneratedExample {
  std::string name;
  EndPeriodicMap map;
  MovePath path;
};

// Shortest path from the default decoration to the f^{-1} image: per-slot
// Farey geodesics on the slots the map moves, interleaved by seed.  Distinct
// slots commute, so every interleaving is valid and all share one weight.
inline MovePath canonical_path(const EndPeriodicMap& f, unsigned seed = 0) {
  MovePath p;
  p.base = f.ladder.decomposition();
  PantsDecomposition target = act_on_pants(f, p.base, -1);
  std::vector<std::vector<ElementaryMove>> per_slot;
  size_t total = 0;
  for (const auto& [id, to] : target.slopes) {
    Slope from = p.base.slopes.at(id);
    if (from == to) continue;
    std::vector<Slope> geo = farey_geodesic(from, to);
    std::vector<ElementaryMove> mv;
    PieceKind kind = p.base.frames.at(id).kind;
    for (size_t i = 0; i + 1 < geo.size(); ++i)
      mv.push_back(ElementaryMove{id, kind, geo[i], geo[i + 1]});
    total += mv.size();
    per_slot.push_back(std::move(mv));
  }
  std::mt19937 rng(seed);
  std::vector<size_t> cursor(per_slot.size(), 0);
  while (p.moves.size() < total) {
    std::vector<size_t> live;
    for (size_t i = 0; i < per_slot.size(); ++i)
      if (cursor[i] < per_slot[i].size()) live.push_back(i);
    size_t pick = live[rng() % live.size()];
    p.moves.push_back(per_slot[pick][cursor[pick]++]);
  }
  return p;
}

// Ladder map with one seeded twist on every chain: loops get a full or double
// twist about 1/0, the four-holed-sphere chains a single twist about 1/0 or
// 1/1.  Path lengths stay at 5..6 for k = 1 and 10..12 for k = 2.
inline GeneratedExample twisted_ladder(int k, unsigned seed, int d_rep = 4, int d_att = 4) {
  GeneratedExample ex;
  ex.name = "twisted-k" + std::to_string(k) + "-s" + std::to_string(seed);
  ex.map.ladder = LadderModel{k, d_rep, d_att};
  std::mt19937 rng(seed * 2654435761u + static_cast<unsigned>(k));
  for (const Chain& c : ex.map.ladder.chains()) {
    std::string piece = ex.map.ladder.curve_id(SlotRef{c, 0});
    if (ex.map.ladder.piece_kind(c) == PieceKind::T) {
      long long pw = 1 + static_cast<long long>(rng() % 2);
      if (rng() % 2) pw = -pw;
      ex.map.word.push_back(TwistGen{piece, slope_inf, pw});
    } else {
      Slope gamma = rng() % 2 ? slope_inf : Slope{1, 1};
      long long pw = rng() % 2 ? 1 : -1;
      ex.map.word.push_back(TwistGen{piece, gamma, pw});
    }
  }
  detail::check_word_in_window(ex.map);
  ex.path = canonical_path(ex.map, seed);
  return ex;
}

// The k = 1 demonstration map: single twists about 1/0 on the loop, bridge
// and seam pieces; its canonical path has five moves of weight nine.
inline GeneratedExample fenley() {
  GeneratedExample ex;
  ex.name = "fenley";
  ex.map.ladder = LadderModel{1, 4, 4};
  ex.map.word = {TwistGen{"t1_0", slope_inf, 1}, TwistGen{"b1_0", slope_inf, 1},
                 TwistGen{"s_0", slope_inf, 1}};
  detail::check_word_in_window(ex.map);
  ex.path = canonical_path(ex.map);
  return ex;
}

// Pure handle shift: empty compact word.  Every curve family is
// shift-invariant, so block tracing reports a reducing witness.
inline GeneratedExample pure_shift(int k) {
  GeneratedExample ex;
  ex.name = "laddershift-k" + std::to_string(k);
  ex.map.ladder = LadderModel{k, 4, 4};
  ex.path.base = ex.map.ladder.decomposition();
  return ex;
}

// Insert one out-and-back move pair at a seeded position: same endpoint,
// weight grows, boundary structure of the complex must not change.
inline MovePath variant_backtrack(const MovePath& p, unsigned seed) {
  std::mt19937 rng(seed + 17);
  size_t at = p.moves.empty() ? 0 : rng() % (p.moves.size() + 1);
  PantsDecomposition pd = p.base;
  for (size_t i = 0; i < at; ++i) pd = apply_move(pd, p.moves[i]);
  std::vector<std::string> ids;
  for (const auto& [id, s] : pd.slopes) ids.push_back(id);
  const std::string& id = ids[rng() % ids.size()];
  Slope cur = pd.slopes.at(id);
  PieceKind kind = p.base.frames.at(id).kind;
  Slope out = cur == slope_inf ? Slope{1, 1} : farey_geodesic(cur, slope_inf)[1];
  MovePath q;
  q.base = p.base;
  q.moves.assign(p.moves.begin(), p.moves.begin() + at);
  q.moves.push_back(ElementaryMove{id, kind, cur, out});
  q.moves.push_back(ElementaryMove{id, kind, out, cur});
  q.moves.insert(q.moves.end(), p.moves.begin() + at, p.moves.end());
  return q;
}

// Swap the first adjacent pair of moves on distinct slots at or after a
// seeded position; returns the path unchanged when no pair commutes.
inline MovePath variant_swap(const MovePath& p, unsigned seed) {
  if (p.moves.size() < 2) return p;
  std::mt19937 rng(seed + 40507);
  size_t start = rng() % (p.moves.size() - 1);
  MovePath q = p;
  for (size_t off = 0; off + 1 < q.moves.size(); ++off) {
    size_t i = (start + off) % (q.moves.size() - 1);
    if (q.moves[i].curve != q.moves[i + 1].curve) {
      std::swap(q.moves[i], q.moves[i + 1]);
      return q;
    }
  }
  return q;
}

struct CertifyDemo {
  std::string name;
  EndPeriodicMap map;
  SupportDescriptor support;
  std::string eta, alpha;
  MovePath path;
};

// Certificate demonstration on a k = 2 ladder: the compact word is
// (T_{1/0} T_{1/1}^{-1})^twists supported on the separating piece e1_0, eta
// and alpha are seam curves three periods apart, and the declared markings
// put the projected images at Farey distance one.
inline CertifyDemo certify_demo(int twists, bool fully, int depth = 7) {
  CertifyDemo d;
  d.name = std::string(fully ? "cert-fully-t" : "cert-partial-t") + std::to_string(twists);
  d.map.ladder = LadderModel{2, depth, depth};
  for (int i = 0; i < twists; ++i) {
    d.map.word.push_back(TwistGen{"e1_0", slope_inf, 1});
    d.map.word.push_back(TwistGen{"e1_0", Slope{1, 1}, -1});
  }
  detail::check_word_in_window(d.map);
  d.eta = "s_0";
  d.alpha = "s_3";
  d.support.boundary_minus = {"s_0", "b1_0"};
  d.support.boundary_plus = {"s_3", "b2_0"};
  d.support.separation = fully ? Separation::FullySeparating : Separation::PartiallySeparating;
  d.support.flags = ConventionFlags{true, true, true, true};
  d.support.piece = "e1_0";
  d.support.crossing = {"s_1", "s_2"};
  d.support.inside_u = {"s_m3"};
  d.support.marking_eta = slope_zero;
  d.support.marking_alpha = slope_inf;
  d.path = canonical_path(d.map);
  return d;
}

struct SharpnessDemo {
  std::string name;
  EndPeriodicMap map;
  MovePath path;
  std::array<std::string, 4> sigma;  // frame cuffs of the designated piece
};

// Base map for the redundant-move family: a fully twisted k = 3 ladder whose
// e2_0 piece has four frame cuffs of pairwise distinct chain types.
inline SharpnessDemo sharpness_demo() {
  SharpnessDemo s;
  GeneratedExample ex = twisted_ladder(3, 1);
  s.name = "sharp-base";
  s.map = ex.map;
  s.path = ex.path;
  s.sigma = {"e1_0", "b2_0", "s_1", "b3_0"};
  return s;
}

// Instance pool for the block-complex checks: twelve k = 1 maps and eight
// k = 2 maps, all with canonical paths of length at most twelve.
inline std::vector<GeneratedExample> block_instances() {
  std::vector<GeneratedExample> out;
  for (unsigned s = 0; s < 12; ++s) out.push_back(twisted_ladder(1, s));
  for (unsigned s = 0; s < 8; ++s) out.push_back(twisted_ladder(2, s));
  return out;
}

// Wider-norm instances: the parity of four-holed-sphere twists forces at
// least two moves per such chain, so |Phi*| = 6 needs fifteen moves; these
// run through the same invariant checks as the pool above.
inline std::vector<GeneratedExample> wide_instances() {
  std::vector<GeneratedExample> out;
  out.push_back(twisted_ladder(3, 0));
  GeneratedExample cubed;
  cubed.name = "fenley-cubed";
  cubed.map = map_power(fenley().map, 3);
  cubed.path = canonical_path(cubed.map);
  out.push_back(cubed);
  return out;
}

}  // namespace panto
