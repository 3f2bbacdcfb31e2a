#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "panto/end_periodic.hpp"
#include "panto/farey.hpp"
#include "panto/surface.hpp"

namespace panto {

enum class Separation { Neither, PartiallySeparating, FullySeparating };

// A fully separating support is in particular partially separating.
inline bool partially_separating(Separation s) { return s != Separation::Neither; }

struct ConventionFlags {
  bool planar_complement = false;
  bool boundary_arc_condition = false;
  bool strip_genus_ge_2 = false;
  bool disjoint_from_U = false;
};

// The support C of the compact word, described in window coordinates: its
// boundary split by side, the separation property, the checklist flags, and
// the complexity-one piece where distances are certified together with the
// declared projection markings on it.
struct SupportDescriptor {
  std::vector<std::string> boundary_plus;
  std::vector<std::string> boundary_minus;
  Separation separation = Separation::Neither;
  ConventionFlags flags;
  std::string piece;  // tracked curve naming the measured piece
  std::set<std::string> crossing;
  std::set<std::string> inside_u;
  Slope marking_eta = slope_zero;   // pi_C(rho(eta)) on the piece
  Slope marking_alpha = slope_inf;  // pi_C(rho^{-1}(alpha)) on the piece
};

inline bool projection_nonempty(const std::string& alpha, const SupportDescriptor& c) {
  for (const std::string& b : c.boundary_plus)
    if (b == alpha) return false;  // peripheral
  for (const std::string& b : c.boundary_minus)
    if (b == alpha) return false;
  if (c.crossing.count(alpha)) return true;
  return false;  // disjoint (inside U or elsewhere off the support)
}

struct ProjectionQuery {
  SurfaceSig subsurface;
  std::optional<Slope> slope_a, slope_b;       // complexity-one coordinates
  std::vector<long long> ivec_a, ivec_b;       // intersection data otherwise
  long long intersection = -1;                 // i(a, b) when known
};

struct DistanceResult {
  enum Kind { Exact, LowerBound, Unknown } kind = Unknown;
  long long d = 0;
};

// Distance between two projected markings inside one piece.  Complexity one
// is exact (Farey); larger pieces report only what the disjointness and
// intersection criteria justify.
inline DistanceResult distance_in_piece(const ProjectionQuery& q) {
  const long long cap = 64;
  if (complexity(q.subsurface) < 1)
    throw empty_projection("subsurface carries no essential curves");
  if (complexity(q.subsurface) == 1) {
    if (!q.slope_a || !q.slope_b)
      throw empty_projection("missing slope coordinates on a complexity-one piece");
    return {DistanceResult::Exact, farey_distance(*q.slope_a, *q.slope_b)};
  }
  if (q.ivec_a.empty() || q.ivec_b.empty())
    throw empty_projection("missing intersection coordinates");
  for (long long v : q.ivec_a)
    if (v > cap) return {DistanceResult::Unknown, 0};
  for (long long v : q.ivec_b)
    if (v > cap) return {DistanceResult::Unknown, 0};
  if (q.ivec_a == q.ivec_b) return {DistanceResult::Exact, 0};
  if (q.intersection == 0) return {DistanceResult::Exact, 1};
  if (q.intersection > 0) return {DistanceResult::LowerBound, 2};
  return {DistanceResult::Unknown, 0};
}

enum class Classification { StronglyIrreducible, Irreducible, Inconclusive };

struct Certificate {
  Classification result = Classification::Inconclusive;
  std::string reason;  // failed check when inconclusive
  std::vector<std::string> evidence;
  long long distance = -1;  // the d_C(rho(eta), h(rho(eta))) witness
  std::string oracle;
};

namespace detail {

struct CertCtx {
  SlotRef eta_slot, alpha_slot, piece_slot;
  PieceKind piece_kind = PieceKind::S;
  std::set<std::string> pattern_ids;
};

inline CertCtx cert_preconditions(const EndPeriodicMap& f, const SupportDescriptor& c,
                                  const std::string& eta, const std::string& alpha) {
  auto has = [](const std::vector<std::string>& v, const std::string& x) {
    for (const std::string& s : v)
      if (s == x) return true;
    return false;
  };
  if (!has(c.boundary_minus, eta))
    throw convention_violation("eta must be a component of the minus boundary of C");
  if (!has(c.boundary_plus, alpha))
    throw convention_violation("alpha must be a component of the plus boundary of C");
  auto idx = f.ladder.slot_index();
  auto ie = idx.find(eta), ia = idx.find(alpha), ip = idx.find(c.piece);
  if (ie == idx.end() || ia == idx.end())
    throw convention_violation("eta and alpha must be tracked window curves");
  if (ip == idx.end())
    throw convention_violation("the designated distance piece must be a tracked window curve");
  CertCtx ctx;
  ctx.eta_slot = ie->second;
  ctx.alpha_slot = ia->second;
  ctx.piece_slot = ip->second;
  ctx.piece_kind = f.ladder.piece_kind(ctx.piece_slot.chain);
  for (const Curve& cu : f.ladder.decomposition().curves) ctx.pattern_ids.insert(cu.id);
  return ctx;
}

inline std::string shift_id(const LadderModel& lm, const SlotRef& s, int by) {
  return lm.curve_id(SlotRef{s.chain, s.period + by});
}

}  // namespace detail

// The irreducibility certificate: verify the support checklist, the
// disjointness hypothesis, and the distance witness d >= 9 on the designated
// piece, then classify by the separation property.
inline Certificate certify(const EndPeriodicMap& f, const SupportDescriptor& c,
                           const std::string& eta, const std::string& alpha) {
  detail::CertCtx ctx = detail::cert_preconditions(f, c, eta, alpha);
  Certificate cert;
  auto row = [&cert](const std::string& s) { cert.evidence.push_back(s); };
  auto fail = [&cert, &row](const std::string& reason) {
    row("FAIL " + reason);
    cert.result = Classification::Inconclusive;
    cert.reason = reason;
    return cert;
  };

  const std::pair<const char*, bool> flags[] = {
      {"planar_complement", c.flags.planar_complement},
      {"boundary_arc_condition", c.flags.boundary_arc_condition},
      {"strip_genus_ge_2", c.flags.strip_genus_ge_2},
      {"disjoint_from_U", c.flags.disjoint_from_U},
  };
  for (auto [name, ok] : flags) {
    if (!ok) return fail(std::string("convention flag ") + name + " not established");
    row(std::string("convention flag ") + name + ": yes");
  }
  if (!partially_separating(c.separation)) return fail("support does not separate the ends");
  row(c.separation == Separation::FullySeparating ? "separation: fully separating"
                                                  : "separation: partially separating");

  // i(rho(eta), rho^{-1}(alpha)) = 0: the shifted images are distinct pattern
  // curves of one decomposition, hence disjoint.
  std::string rho_eta = detail::shift_id(f.ladder, ctx.eta_slot, 1);
  std::string rho_inv_alpha = detail::shift_id(f.ladder, ctx.alpha_slot, -1);
  if (!ctx.pattern_ids.count(rho_eta) || !ctx.pattern_ids.count(rho_inv_alpha))
    return fail("window too small to verify the disjointness hypothesis");
  if (rho_eta == rho_inv_alpha)
    return fail("shifted curves coincide; disjointness not established");
  row("i(rho(eta), rho^{-1}(alpha)) = 0: distinct pattern curves " + rho_eta + ", " +
      rho_inv_alpha);

  long long d0 = farey_distance(c.marking_eta, c.marking_alpha);
  if (d0 > 1) return fail("declared markings contradict the disjointness hypothesis");
  {
    std::ostringstream s;
    s << "d(pi_C(rho eta), pi_C(rho^{-1} alpha)) = " << d0 << " on the piece";
    row(s.str());
  }

  SurfaceSig sig = ctx.piece_kind == PieceKind::T ? SurfaceSig{1, 1} : SurfaceSig{0, 4};
  Slope hx = detail::apply_word_at(f, c.piece, ctx.piece_kind, c.marking_eta, false);
  ProjectionQuery q;
  q.subsurface = sig;
  q.slope_a = c.marking_eta;
  q.slope_b = hx;
  DistanceResult dr = distance_in_piece(q);
  cert.oracle = "farey geodesic on the complexity-one piece " + c.piece;
  if (dr.kind != DistanceResult::Exact) return fail("distance not certified");
  cert.distance = dr.d;
  {
    std::ostringstream s;
    s << "d_C(rho(eta), h(rho(eta))) = " << dr.d << " (Exact, Farey oracle)";
    row(s.str());
  }
  if (dr.d < 9) {
    std::ostringstream s;
    s << "distance witness d = " << dr.d << " < 9";
    return fail(s.str());
  }
  row("distance witness d >= 9: yes");

  if (c.separation == Separation::FullySeparating) {
    cert.result = Classification::StronglyIrreducible;
    row("fully separating support with all checks passed: strongly irreducible");
  } else {
    cert.result = Classification::Irreducible;
    row("partially (not fully) separating support: irreducible, not strongly");
  }
  return cert;
}

struct ProbeRow {
  int k = 1;
  bool eta_in_window = false;
  bool eta_pattern_curve = false;
  bool eta_disjoint_from_seed = false;
  bool eta_in_ball = false;
  bool alpha_in_window = false;
  bool alpha_pattern_curve = false;
  bool alpha_disjoint_from_seed = false;
  bool alpha_in_ball = false;
};

struct ProbeReport {
  int k_max = 0;
  long long distance_witness = -1;
  std::vector<ProbeRow> rows;
  bool all_in_ball = true;
};

// Orbit probe for the filling-pair lemma chain: drive f^k(eta) and
// f^{-k}(alpha) through the window, verify at each step the combinatorial
// hypotheses the induction consumes (orbit tracked, image still a pattern
// curve, disjoint from the seed), and report ball membership.  A property
// harness, not a proof.
inline ProbeReport filling_pair_probe(const EndPeriodicMap& f, const SupportDescriptor& c,
                                      const std::string& eta, const std::string& alpha,
                                      int k_max) {
  if (k_max < 1) throw convention_violation("probe depth must be positive");
  detail::CertCtx ctx = detail::cert_preconditions(f, c, eta, alpha);

  ProbeReport rep;
  rep.k_max = k_max;
  {
    Slope hx = detail::apply_word_at(f, c.piece, ctx.piece_kind, c.marking_eta, false);
    rep.distance_witness = farey_distance(c.marking_eta, hx);
  }
  bool ball_machinery = rep.distance_witness >= 9 &&
                        farey_distance(c.marking_eta, c.marking_alpha) <= 1;

  auto step = [&f, &ctx](SlotRef& at, bool& pattern, int dir) {
    for (int i = 0; i < f.power; ++i) {
      if (dir > 0) {
        // f = rho h: the word acts first, then the shift.
        for (const TwistGen& g : f.word)
          if (g.piece == f.ladder.curve_id(at)) pattern = false;
        at.period += 1;
      } else {
        at.period -= 1;
        for (const TwistGen& g : f.word)
          if (g.piece == f.ladder.curve_id(at)) pattern = false;
      }
      if (!ctx.pattern_ids.count(f.ladder.curve_id(at)))
        throw orbit_escaped_window("orbit of " + f.ladder.curve_id(at) +
                                   " left the window before step bound; deepen the stubs");
    }
  };

  SlotRef eta_at = ctx.eta_slot;
  SlotRef alpha_at = ctx.alpha_slot;
  bool eta_pattern = true, alpha_pattern = true;
  for (int k = 1; k <= k_max; ++k) {
    ProbeRow r;
    r.k = k;
    step(eta_at, eta_pattern, +1);
    step(alpha_at, alpha_pattern, -1);
    r.eta_in_window = ctx.pattern_ids.count(f.ladder.curve_id(eta_at)) > 0;
    r.alpha_in_window = ctx.pattern_ids.count(f.ladder.curve_id(alpha_at)) > 0;
    r.eta_pattern_curve = eta_pattern;
    r.alpha_pattern_curve = alpha_pattern;
    r.eta_disjoint_from_seed = eta_pattern && f.ladder.curve_id(eta_at) != eta;
    r.alpha_disjoint_from_seed = alpha_pattern && f.ladder.curve_id(alpha_at) != alpha;
    // k = 1 is the base case f(eta) = rho(eta); beyond it the induction also
    // needs the d >= 9 witness.
    bool induction = k == 1 || ball_machinery;
    r.eta_in_ball = r.eta_in_window && r.eta_pattern_curve && r.eta_disjoint_from_seed &&
                    induction;
    r.alpha_in_ball = r.alpha_in_window && r.alpha_pattern_curve &&
                      r.alpha_disjoint_from_seed && induction;
    rep.all_in_ball = rep.all_in_ball && r.eta_in_ball && r.alpha_in_ball;
    rep.rows.push_back(r);
  }
  return rep;
}

}  // namespace panto
