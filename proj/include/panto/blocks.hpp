#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "panto/end_periodic.hpp"
#include "panto/moves.hpp"

namespace panto {

// A pants-curve state inside one decomposition level: its slot in the window
// pattern plus the slope it carries there.  Slots just outside the tracked
// range stand for window-boundary curves and always carry the default slope.
struct CurveState {
  SlotRef slot;
  Slope slope;

  friend bool operator==(const CurveState&, const CurveState&) = default;
  friend auto operator<=>(const CurveState&, const CurveState&) = default;
};

struct AnnulusEnd {
  enum Kind { Block, Boundary } kind = Block;
  int level = -1;              // block level when kind == Block
  std::string boundary_class;  // curve class on S_+/S_- when kind == Boundary

  friend bool operator==(const AnnulusEnd&, const AnnulusEnd&) = default;
};

struct AnnulusRecord {
  int id = 0;
  std::vector<std::pair<int, std::string>> curve_orbit;  // (level, curve id), upward
  AnnulusEnd lower;  // Block -> attaches the d1_plus circle of that level
  AnnulusEnd upper;  // Block -> attaches the d1_minus circle of that level
  bool degenerate = false;
};

struct FlipTable {
  std::vector<AnnulusRecord> orbits;
};

struct PantsBlock {
  int level = 0;
  PieceKind kind = PieceKind::T;
  std::string curve;
  Slope d1_minus;                 // slope removed by the move
  Slope d1_plus;                  // slope inserted by the move
  std::vector<std::string> d1_v;  // vertical cuffs: 1 for T, 4 for S
  int faces_per_side() const { return kind == PieceKind::T ? 1 : 2; }
};

struct FaceRef {
  int level = 0;
  bool plus = false;
  int idx = 0;

  friend bool operator==(const FaceRef&, const FaceRef&) = default;
  friend auto operator<=>(const FaceRef&, const FaceRef&) = default;
};

inline std::string face_name(const FaceRef& f) {
  return std::to_string(f.level) + (f.plus ? ".plus." : ".minus.") + std::to_string(f.idx);
}

struct FacePartner {
  enum Kind { Face, Boundary } kind = Face;
  FaceRef face;                // when kind == Face
  std::string boundary_pants;  // quotient pants class when kind == Boundary
  bool plus_side = false;      // boundary on S_+ (true) or S_- (false)

  friend bool operator==(const FacePartner&, const FacePartner&) = default;
};

struct BoundaryPantClass {
  std::string id;
  std::array<std::string, 3> cuffs;  // curve classes

  friend bool operator==(const BoundaryPantClass&, const BoundaryPantClass&) = default;
};

struct BoundarySide {
  std::vector<BoundaryPantClass> pants;         // sorted by id
  std::map<std::string, int> curve_to_annulus;  // curve class -> annulus id
  std::map<std::string, std::string> pant_to_face;
};

struct BoundaryPants {
  BoundarySide plus_side;
  BoundarySide minus_side;
};

// Equality of the induced boundary decompositions as labeled structures;
// annulus ids and face names are path-dependent bookkeeping and are excluded.
inline bool same_boundary_structure(const BoundaryPants& a, const BoundaryPants& b) {
  auto keys = [](const auto& m) {
    std::set<std::string> out;
    for (const auto& [k, v] : m) out.insert(k);
    return out;
  };
  return a.plus_side.pants == b.plus_side.pants && a.minus_side.pants == b.minus_side.pants &&
         keys(a.plus_side.curve_to_annulus) == keys(b.plus_side.curve_to_annulus) &&
         keys(a.minus_side.curve_to_annulus) == keys(b.minus_side.curve_to_annulus) &&
         keys(a.plus_side.pant_to_face) == keys(b.plus_side.pant_to_face) &&
         keys(a.minus_side.pant_to_face) == keys(b.minus_side.pant_to_face);
}

struct BlockComplex {
  std::vector<PantsBlock> blocks;
  std::map<FaceRef, FacePartner> gluings;  // every d2 face appears as a key
  std::vector<AnnulusRecord> annuli;
  BoundaryPants boundary;
  long long phi_norm = 0;
  int n_t = 0, n_s = 0;
};

namespace detail {

struct TraceCtx {
  const EndPeriodicMap* f = nullptr;
  LadderModel lm;
  std::vector<PantsDecomposition> levels;  // P_0 .. P_n
  std::vector<ElementaryMove> moves;
  std::map<std::string, SlotRef> slots_by_curve;
  int n = 0;

  Slope slope_at(int level, const SlotRef& s) const {
    if (!lm.in_window(s)) return slope_zero;
    return levels[level].slopes.at(lm.curve_id(s));
  }

  SlotRef move_slot(int k) const { return slots_by_curve.at(moves[k].curve); }

  // One application of the underlying map to a curve state (up), or of its
  // inverse (down); nullopt when the state leaves the tracked window.
  std::optional<CurveState> transport(CurveState c, int dir) const {
    for (int i = 0; i < f->power; ++i) {
      if (dir > 0) {
        if (lm.in_window(c.slot))
          c.slope =
              apply_word_at(*f, lm.curve_id(c.slot), lm.piece_kind(c.slot.chain), c.slope, false);
        c.slot.period += 1;
      } else {
        c.slot.period -= 1;
        if (lm.in_window(c.slot))
          c.slope =
              apply_word_at(*f, lm.curve_id(c.slot), lm.piece_kind(c.slot.chain), c.slope, true);
      }
    }
    if (!lm.in_window(c.slot)) {
      if (c.slope != slope_zero)
        throw Error("WindowTooSmall", "a twisted curve reached the truncation boundary");
      return std::nullopt;
    }
    return c;
  }

  std::string residue_class(const Chain& chain, int period) const {
    int n_cover = f->power;
    int r = ((period % n_cover) + n_cover) % n_cover;
    std::string base = lm.chain_str(chain);
    return n_cover == 1 ? base : base + "@" + std::to_string(r);
  }
};

// A pants curve of one decomposition level, as a canonical flow state.
struct TraceState {
  SlotRef slot;
  int level = 0;

  friend bool operator==(const TraceState&, const TraceState&) = default;
  friend auto operator<=>(const TraceState&, const TraceState&) = default;
};

inline TraceCtx make_ctx(const EndPeriodicMap& f, const MovePath& path) {
  TraceCtx ctx;
  ctx.f = &f;
  ctx.lm = f.ladder;
  ctx.levels = path_levels(path);
  ctx.moves = path.moves;
  ctx.n = static_cast<int>(path.moves.size());
  ctx.slots_by_curve = f.ladder.slot_index();
  PantsDecomposition target = act_on_pants(f, path.base, -1);
  if (!(ctx.levels.back() == target))
    throw path_endpoint_mismatch("path does not end at the inverse image of its base");
  return ctx;
}

}  // namespace detail

// Trace every pants-curve orbit of the suspension flow: upward until it is
// the curve removed by some move (flips forward) or leaves through the
// attracting end; downward until it is a curve inserted by some move (flips
// backward) or leaves through the repelling end.  An orbit that does neither
// certifies a periodic or shift-invariant curve family.
inline FlipTable trace_flips(const EndPeriodicMap& f, const MovePath& path) {
  detail::TraceCtx ctx = detail::make_ctx(f, path);
  const int n = ctx.n;
  const int level_count = std::max(n, 1);

  using State = detail::TraceState;
  std::set<State> consumed;
  FlipTable table;

  std::vector<State> all;
  for (int lvl = 0; lvl < level_count; ++lvl)
    for (const SlotRef& s : ctx.lm.slots()) all.push_back(State{s, lvl});

  for (const State& seed : all) {
    if (consumed.count(seed)) continue;

    // Walk down to the lower end of this orbit.
    std::vector<State> below;
    State at = seed;
    AnnulusEnd lower;
    std::set<State> seen;
    bool found_lower = false;
    while (!found_lower) {
      if (!seen.insert(at).second)
        throw non_terminating_orbit("periodic curve orbit through " + ctx.lm.curve_id(at.slot));
      if (at.level > 0) {
        const ElementaryMove& m = ctx.moves[at.level - 1];
        if (ctx.move_slot(at.level - 1) == at.slot && ctx.slope_at(at.level, at.slot) == m.to) {
          lower = AnnulusEnd{AnnulusEnd::Block, at.level - 1, ""};
          found_lower = true;
          break;
        }
        at = State{at.slot, at.level - 1};
        below.push_back(at);
        continue;
      }
      // Cross the seam downward: the level-0 curve equals a level-n curve of
      // the previous window pass.
      CurveState c{at.slot, ctx.slope_at(0, at.slot)};
      auto moved = ctx.transport(c, -1);
      if (!moved) {
        lower = AnnulusEnd{AnnulusEnd::Boundary, -1,
                           ctx.residue_class(at.slot.chain, at.slot.period - f.power)};
        found_lower = true;
        break;
      }
      if (n == 0) {
        at = State{moved->slot, 0};
        below.push_back(at);
        continue;
      }
      const ElementaryMove& m = ctx.moves[n - 1];
      if (ctx.move_slot(n - 1) == moved->slot && moved->slope == m.to) {
        lower = AnnulusEnd{AnnulusEnd::Block, n - 1, ""};
        found_lower = true;
        break;
      }
      at = State{moved->slot, n - 1};
      below.push_back(at);
    }

    // Walk up to the upper end.
    std::vector<State> above;
    at = seed;
    AnnulusEnd upper;
    seen.clear();
    bool found_upper = false;
    while (!found_upper) {
      if (!seen.insert(at).second)
        throw non_terminating_orbit("periodic curve orbit through " + ctx.lm.curve_id(at.slot));
      if (at.level < n) {
        const ElementaryMove& m = ctx.moves[at.level];
        if (ctx.move_slot(at.level) == at.slot && ctx.slope_at(at.level, at.slot) == m.from) {
          upper = AnnulusEnd{AnnulusEnd::Block, at.level, ""};
          found_upper = true;
          break;
        }
      }
      if (at.level + 1 < level_count) {
        at = State{at.slot, at.level + 1};
        above.push_back(at);
        continue;
      }
      // Cross the seam upward from the top level.
      CurveState c{at.slot, ctx.slope_at(n, at.slot)};
      auto moved = ctx.transport(c, +1);
      if (!moved) {
        upper = AnnulusEnd{AnnulusEnd::Boundary, -1,
                           ctx.residue_class(at.slot.chain, at.slot.period + f.power)};
        found_upper = true;
        break;
      }
      at = State{moved->slot, 0};
      above.push_back(at);
    }

    if (lower.kind == AnnulusEnd::Boundary && upper.kind == AnnulusEnd::Boundary)
      throw non_terminating_orbit("curve family " + ctx.lm.chain_str(seed.slot.chain) +
                                  " never flips: shift-invariant, reducing");

    AnnulusRecord rec;
    rec.id = static_cast<int>(table.orbits.size());
    rec.lower = lower;
    rec.upper = upper;
    std::reverse(below.begin(), below.end());
    std::vector<State> orbit_states = below;
    orbit_states.push_back(seed);
    for (const State& s : above) orbit_states.push_back(s);
    for (const State& s : orbit_states) {
      rec.curve_orbit.push_back({s.level, ctx.lm.curve_id(s.slot)});
      consumed.insert(s);
    }
    rec.degenerate = orbit_states.size() == 1 && rec.lower.kind == AnnulusEnd::Block &&
                     rec.upper.kind == AnnulusEnd::Block;
    table.orbits.push_back(rec);
  }
  return table;
}

namespace detail {

// A face is a pair of pants of some level, named by the fixed window
// pattern; it persists as a product region until a move touches one of its
// pattern cuffs, and crossing the seam shifts its period.
struct FaceState {
  char ptype = 'A';
  int strip = 1;
  int period = 0;
};

inline int parse_period(const std::string& s) {
  return s[0] == 'm' ? -std::stoi(s.substr(1)) : std::stoi(s);
}

inline FaceState parse_pants_name(const std::string& name) {
  FaceState fs;
  fs.ptype = name[0];
  size_t us = name.find('_');
  fs.strip = std::stoi(name.substr(1, us - 1));
  fs.period = parse_period(name.substr(us + 1));
  return fs;
}

inline std::string pants_name(const FaceState& fs) {
  return std::string(1, fs.ptype) + std::to_string(fs.strip) + "_" +
         LadderModel::period_str(fs.period);
}

inline std::string boundary_pant_class(int n_cover, const FaceState& fs) {
  int r = ((fs.period % n_cover) + n_cover) % n_cover;
  std::string base = std::string(1, fs.ptype) + std::to_string(fs.strip);
  return n_cover == 1 ? base : base + "@" + std::to_string(r);
}

// The pattern pants rebuilt by block k, in face-index order; the frames are
// frozen at creation, so any level's copy gives the same answer.
inline std::vector<std::string> block_pant_names(const TraceCtx& ctx, int k) {
  const PieceFrame& fr = ctx.levels[0].frames.at(ctx.moves[k].curve);
  std::vector<std::string> out{fr.pants[0]};
  if (fr.kind == PieceKind::S) out.push_back(fr.pants[1]);
  return out;
}

}  // namespace detail

// Assemble the full complex: one block per move, face gluings from the
// product regions between consecutive flips, annuli from the flip table, and
// the induced boundary pants decompositions.
inline BlockComplex build_blocks(const EndPeriodicMap& f, const MovePath& path) {
  FlipTable table = trace_flips(f, path);
  detail::TraceCtx ctx = detail::make_ctx(f, path);
  const int n = ctx.n;
  if (n == 0) throw invalid_path("empty path: nothing to build");

  BlockComplex bc;
  bc.phi_norm = phi_star_norm(f.end_behavior());
  bc.n_t = count_t_moves(path);
  bc.n_s = count_s_moves(path);
  bc.annuli = table.orbits;

  for (int k = 0; k < n; ++k) {
    const ElementaryMove& m = ctx.moves[k];
    PantsBlock b;
    b.level = k;
    b.kind = m.kind;
    b.curve = m.curve;
    b.d1_minus = m.from;
    b.d1_plus = m.to;
    b.d1_v = path.base.frames.at(m.curve).cuffs;
    bc.blocks.push_back(b);
  }

  // Pants classes of the two quotient surfaces (identical patterns: each end
  // quotient is the mapping torus of the window pattern under the shift).
  auto quotient_pants = [&]() {
    std::vector<BoundaryPantClass> out;
    int n_cover = f.power;
    const LadderModel& lm = f.ladder;
    for (int r = 0; r < n_cover; ++r) {
      auto cls = [&](const std::string& base, int rr) {
        int rw = ((rr % n_cover) + n_cover) % n_cover;
        return n_cover == 1 ? base : base + "@" + std::to_string(rw);
      };
      auto vert = [&](int i, int rr) {
        if (i == 0) return cls("s", rr);
        if (i == lm.k) return cls("s", rr + 1);
        return cls("e" + std::to_string(i), rr);
      };
      for (int i = 1; i <= lm.k; ++i) {
        std::string bi = cls("b" + std::to_string(i), r), ti = cls("t" + std::to_string(i), r);
        out.push_back(
            BoundaryPantClass{cls("A" + std::to_string(i), r), {vert(i - 1, r), vert(i, r), bi}});
        out.push_back(BoundaryPantClass{cls("B" + std::to_string(i), r), {bi, ti, ti}});
      }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return out;
  };
  bc.boundary.plus_side.pants = quotient_pants();
  bc.boundary.minus_side.pants = quotient_pants();

  for (const AnnulusRecord& a : bc.annuli) {
    if (a.lower.kind == AnnulusEnd::Boundary) {
      auto [it, fresh] =
          bc.boundary.minus_side.curve_to_annulus.insert({a.lower.boundary_class, a.id});
      if (!fresh)
        throw Error("GluingInconsistency",
                    "two annuli end on boundary curve " + a.lower.boundary_class);
    }
    if (a.upper.kind == AnnulusEnd::Boundary) {
      auto [it, fresh] =
          bc.boundary.plus_side.curve_to_annulus.insert({a.upper.boundary_class, a.id});
      if (!fresh)
        throw Error("GluingInconsistency",
                    "two annuli end on boundary curve " + a.upper.boundary_class);
    }
  }

  // Flow every face to its partner, both directions.  A face exits through
  // an end once its period leaves the pattern range; its cuffs there are all
  // untracked stub curves, so it lands on the periodic quotient pattern.
  const int max_cross = (f.ladder.d_rep + f.ladder.d_att) / std::max(f.power, 1) + 3;
  auto flow = [&](int k, int idx, bool plus) -> FacePartner {
    detail::FaceState fs = detail::parse_pants_name(detail::block_pant_names(ctx, k)[idx]);
    int lvl = plus ? k + 1 : k;  // the face is a pants of P_lvl
    int crossings = 0;
    while (true) {
      std::string name = detail::pants_name(fs);
      if (plus) {
        for (int m = lvl; m < n; ++m) {
          auto bp = detail::block_pant_names(ctx, m);
          for (int i = 0; i < static_cast<int>(bp.size()); ++i)
            if (bp[i] == name)
              return FacePartner{FacePartner::Face, FaceRef{m, false, i}, "", false};
        }
        fs.period += f.power;
        lvl = 0;
        if (fs.period > f.ladder.d_att - 1)
          return FacePartner{FacePartner::Boundary, {}, detail::boundary_pant_class(f.power, fs),
                             true};
      } else {
        for (int m = lvl - 1; m >= 0; --m) {
          auto bp = detail::block_pant_names(ctx, m);
          for (int i = 0; i < static_cast<int>(bp.size()); ++i)
            if (bp[i] == name)
              return FacePartner{FacePartner::Face, FaceRef{m, true, i}, "", false};
        }
        fs.period -= f.power;
        lvl = n;
        if (fs.period < -f.ladder.d_rep)
          return FacePartner{FacePartner::Boundary, {}, detail::boundary_pant_class(f.power, fs),
                             false};
      }
      if (++crossings > max_cross)
        throw Error("GluingInconsistency", "face flow failed to terminate");
    }
  };

  for (int k = 0; k < n; ++k) {
    for (int idx = 0; idx < bc.blocks[k].faces_per_side(); ++idx) {
      for (bool plus : {true, false}) {
        FaceRef here{k, plus, idx};
        bc.gluings[here] = flow(k, idx, plus);
      }
    }
  }

  // Audit: block-to-block gluing is a symmetric perfect matching (the upward
  // and downward flows are computed independently, so this is a real check);
  // boundary faces cover each quotient pants exactly once.
  for (const auto& [ref, partner] : bc.gluings) {
    if (partner.kind == FacePartner::Face) {
      auto back = bc.gluings.find(partner.face);
      if (back == bc.gluings.end() || back->second.kind != FacePartner::Face ||
          !(back->second.face == ref))
        throw Error("GluingInconsistency", "gluing of " + face_name(ref) + " is not mutual");
    } else {
      auto& side = partner.plus_side ? bc.boundary.plus_side : bc.boundary.minus_side;
      auto [it, fresh] = side.pant_to_face.insert({partner.boundary_pants, face_name(ref)});
      if (!fresh)
        throw Error("GluingInconsistency",
                    "two faces glue to boundary pants " + partner.boundary_pants);
    }
  }
  for (const auto* side : {&bc.boundary.plus_side, &bc.boundary.minus_side}) {
    if (side->pant_to_face.size() != side->pants.size())
      throw Error("GluingInconsistency", "some quotient pants received no face");
    if (side->curve_to_annulus.size() != side->pants.size() * 3 / 2)
      throw Error("GluingInconsistency", "boundary curve classes not covered by annuli");
  }
  return bc;
}

inline int link_components(const BlockComplex& bc) { return static_cast<int>(bc.annuli.size()); }

inline long long drilled_volume_coefficient(const BlockComplex& bc) {
  return bc.n_t + 2LL * bc.n_s;
}

inline std::string annulus_end_text(const AnnulusEnd& e, bool upper) {
  if (e.kind == AnnulusEnd::Block)
    return "block." + std::to_string(e.level) + (upper ? ".minus" : ".plus");
  return std::string("boundary.") + (upper ? "S+." : "S-.") + e.boundary_class;
}

// Deterministic text form: blocks, then gluings keyed by their plus or
// boundary-attached face, then annuli in discovery order.
inline std::string export_gluing(const BlockComplex& bc) {
  std::ostringstream out;
  out << "panto gluing v1\n";
  for (const PantsBlock& b : bc.blocks) {
    out << "block " << b.level << ' ' << (b.kind == PieceKind::T ? 'T' : 'S') << ' '
        << to_string(b.d1_minus) << ' ' << to_string(b.d1_plus) << '\n';
  }
  for (const auto& [ref, partner] : bc.gluings) {
    if (partner.kind == FacePartner::Face) {
      if (ref.plus) out << "glue " << face_name(ref) << ' ' << face_name(partner.face) << '\n';
    } else {
      out << "glue " << face_name(ref) << " boundary." << (partner.plus_side ? "S+" : "S-") << '.'
          << partner.boundary_pants << '\n';
    }
  }
  for (const AnnulusRecord& a : bc.annuli) {
    out << "annulus " << a.id << ' ' << annulus_end_text(a.lower, false) << ' '
        << annulus_end_text(a.upper, true);
    if (a.degenerate) out << " degenerate";
    out << '\n';
  }
  return out.str();
}

}  // namespace panto
