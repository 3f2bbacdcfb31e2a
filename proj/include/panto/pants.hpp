#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "panto/errors.hpp"
#include "panto/slope.hpp"
#include "panto/surface.hpp"

namespace panto {

// One trivalent vertex of the decomposition graph.
struct PantNode {
  std::string id;
  std::array<std::string, 3> cuffs;  // curve id at each slot

  friend bool operator==(const PantNode&, const PantNode&) = default;
};

struct CurveEnd {
  std::string pants;
  int slot = 0;  // 0..2

  friend bool operator==(const CurveEnd&, const CurveEnd&) = default;
  friend auto operator<=>(const CurveEnd&, const CurveEnd&) = default;
};

struct Curve {
  std::string id;
  std::vector<CurveEnd> ends;           // two for internal, one for boundary
  std::optional<std::string> boundary;  // window end id for boundary curves

  bool internal() const { return !boundary.has_value(); }

  friend bool operator==(const Curve&, const Curve&) = default;
};

// The complexity-one neighborhood of a tracked curve, with its cuff labels
// frozen at creation.  For a four-holed sphere the four labels (w,x,y,z) are
// arranged so that the pairing determined by the parity class of the current
// slope reproduces the cuff grouping: parity 0 groups (w,x|y,z), parity 1
// (w,y|x,z), parity 2 (w,z|x,y).
struct PieceFrame {
  PieceKind kind = PieceKind::T;
  std::array<std::string, 2> pants;  // equal ids for a T piece
  std::vector<std::string> cuffs;    // 1 label for T, 4 for S
};

struct PantsDecomposition {
  std::vector<PantNode> pants;
  std::vector<Curve> curves;
  std::map<std::string, Slope> slopes;   // tracked curves only
  std::map<std::string, PieceFrame> frames;  // derived at creation, not compared

  friend bool operator==(const PantsDecomposition& a, const PantsDecomposition& b) {
    return a.pants == b.pants && a.curves == b.curves && a.slopes == b.slopes;
  }

  const PantNode* find_pant(const std::string& id) const {
    for (const auto& p : pants)
      if (p.id == id) return &p;
    return nullptr;
  }

  const Curve* find_curve(const std::string& id) const {
    for (const auto& c : curves)
      if (c.id == id) return &c;
    return nullptr;
  }
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

inline ValidationReport validate_pants(const PantsDecomposition& pd, const Window& w) {
  ValidationReport rep;
  auto fail = [&rep](const std::string& v) { rep.violations.push_back(v); };

  std::set<std::string> pant_ids, curve_ids, end_ids;
  for (const auto& e : w.ends) end_ids.insert(e.id);
  for (const auto& p : pd.pants)
    if (!pant_ids.insert(p.id).second) fail("duplicate pants id " + p.id);
  for (const auto& c : pd.curves)
    if (!curve_ids.insert(c.id).second) fail("duplicate curve id " + c.id);

  // Slot coverage: every cuff slot used by exactly one attachment.
  std::map<std::pair<std::string, int>, int> slot_use;
  int internal = 0, boundary = 0;
  for (const auto& c : pd.curves) {
    size_t want = c.internal() ? 2 : 1;
    if (c.ends.size() != want)
      fail("curve " + c.id + " has " + std::to_string(c.ends.size()) + " attachments");
    if (c.internal())
      ++internal;
    else {
      ++boundary;
      if (!end_ids.count(*c.boundary))
        fail("curve " + c.id + " attached to unknown end " + *c.boundary);
    }
    for (const auto& e : c.ends) {
      const PantNode* p = pd.find_pant(e.pants);
      if (!p || e.slot < 0 || e.slot > 2) {
        fail("curve " + c.id + " attached to missing slot " + e.pants);
        continue;
      }
      if (p->cuffs[e.slot] != c.id)
        fail("slot " + e.pants + ".s" + std::to_string(e.slot + 1) + " does not name " + c.id);
      ++slot_use[{e.pants, e.slot}];
    }
  }
  for (const auto& p : pd.pants)
    for (int s = 0; s < 3; ++s) {
      int n = slot_use.count({p.id, s}) ? slot_use[{p.id, s}] : 0;
      if (n != 1)
        fail("slot " + p.id + ".s" + std::to_string(s + 1) + " used " + std::to_string(n) +
             " times");
    }

  if (static_cast<int>(pd.pants.size()) != pants_count(w.core))
    fail("expected " + std::to_string(pants_count(w.core)) + " pants, found " +
         std::to_string(pd.pants.size()));
  if (internal != complexity(w.core))
    fail("expected " + std::to_string(complexity(w.core)) + " internal curves, found " +
         std::to_string(internal));
  if (boundary != static_cast<int>(w.ends.size()))
    fail("expected " + std::to_string(w.ends.size()) + " boundary curves, found " +
         std::to_string(boundary));

  for (const auto& [id, slope] : pd.slopes) {
    (void)slope;
    const Curve* c = pd.find_curve(id);
    if (!c)
      fail("slope on unknown curve " + id);
    else if (!c->internal())
      fail("slope on boundary curve " + id);
  }

  // Dual graph connectivity over internal curves.
  if (!pd.pants.empty() && rep.ok()) {
    std::set<std::string> seen;
    std::vector<std::string> stack{pd.pants.front().id};
    seen.insert(stack.back());
    while (!stack.empty()) {
      std::string at = stack.back();
      stack.pop_back();
      for (const auto& c : pd.curves) {
        if (!c.internal()) continue;
        bool touches = false;
        for (const auto& e : c.ends) touches |= (e.pants == at);
        if (!touches) continue;
        for (const auto& e : c.ends)
          if (seen.insert(e.pants).second) stack.push_back(e.pants);
      }
    }
    if (seen.size() != pd.pants.size()) fail("dual graph is disconnected");
  }
  return rep;
}

inline PieceKind complexity_one_piece(const PantsDecomposition& pd, const std::string& curve) {
  const Curve* c = pd.find_curve(curve);
  if (!c) throw curve_not_internal("no curve named " + curve);
  if (!c->internal()) throw curve_not_internal(curve + " is a window-boundary curve");
  return c->ends[0].pants == c->ends[1].pants ? PieceKind::T : PieceKind::S;
}

namespace detail {

inline std::vector<std::string> other_cuffs(const PantNode& p, int used_slot) {
  std::vector<std::string> out;
  for (int s = 0; s < 3; ++s)
    if (s != used_slot) out.push_back(p.cuffs[s]);
  return out;
}

// Frame index pairs grouped together for each parity class; the pair listed
// first contains index 0 and belongs to frame.pants[0].
inline std::pair<std::array<int, 2>, std::array<int, 2>> parity_pairs(int parity) {
  switch (parity) {
    case 0: return {{0, 1}, {2, 3}};
    case 1: return {{0, 2}, {1, 3}};
    default: return {{0, 3}, {1, 2}};
  }
}

}  // namespace detail

// Freeze the piece frames from the creation-time graph and slopes.
inline void init_frames(PantsDecomposition& pd) {
  pd.frames.clear();
  for (const auto& [id, slope] : pd.slopes) {
    const Curve* c = pd.find_curve(id);
    PieceFrame fr;
    if (complexity_one_piece(pd, id) == PieceKind::T) {
      const PantNode* p = pd.find_pant(c->ends[0].pants);
      fr.kind = PieceKind::T;
      fr.pants = {p->id, p->id};
      int self_slots = 3 - c->ends[0].slot - c->ends[1].slot;
      fr.cuffs = {p->cuffs[self_slots]};
    } else {
      const PantNode* p1 = pd.find_pant(c->ends[0].pants);
      const PantNode* p2 = pd.find_pant(c->ends[1].pants);
      auto o1 = detail::other_cuffs(*p1, c->ends[0].slot);
      auto o2 = detail::other_cuffs(*p2, c->ends[1].slot);
      fr.kind = PieceKind::S;
      fr.pants = {p1->id, p2->id};
      fr.cuffs.resize(4);
      auto [pa, pb] = detail::parity_pairs(parity_class(slope));
      fr.cuffs[pa[0]] = o1[0];
      fr.cuffs[pa[1]] = o1[1];
      fr.cuffs[pb[0]] = o2[0];
      fr.cuffs[pb[1]] = o2[1];
    }
    pd.frames[id] = fr;
  }
}

// One pair of pants of the piece of a tracked curve, as grouped by the
// current slope's parity.  cuffs[0] is the tracked curve itself.
struct PiecePant {
  std::string pants;
  std::array<std::string, 3> cuffs;

  friend bool operator==(const PiecePant&, const PiecePant&) = default;
};

// The dual-graph rewiring as a derived value: the pants of the tracked
// curve's piece under the pairing selected by its slope parity.
inline std::vector<PiecePant> piece_pants(const PantsDecomposition& pd, const std::string& curve) {
  auto fit = pd.frames.find(curve);
  if (fit == pd.frames.end()) throw curve_not_internal("curve " + curve + " is not tracked");
  const PieceFrame& fr = fit->second;
  auto sit = pd.slopes.find(curve);
  if (fr.kind == PieceKind::T)
    return {PiecePant{fr.pants[0], {curve, curve, fr.cuffs[0]}}};
  auto [pa, pb] = detail::parity_pairs(parity_class(sit->second));
  return {PiecePant{fr.pants[0], {curve, fr.cuffs[pa[0]], fr.cuffs[pa[1]]}},
          PiecePant{fr.pants[1], {curve, fr.cuffs[pb[0]], fr.cuffs[pb[1]]}}};
}

inline int euler_characteristic(const PantsDecomposition& pd) {
  return -static_cast<int>(pd.pants.size());
}

}  // namespace panto
