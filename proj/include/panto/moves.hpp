#pragma once

#include <string>
#include <vector>

#include "panto/pants.hpp"

namespace panto {

struct ElementaryMove {
  std::string curve;
  PieceKind kind = PieceKind::T;
  Slope from;
  Slope to;

  friend bool operator==(const ElementaryMove&, const ElementaryMove&) = default;
};

inline ElementaryMove inverse_move(const ElementaryMove& m) {
  return ElementaryMove{m.curve, m.kind, m.to, m.from};
}

inline int move_weight(const ElementaryMove& m) { return m.kind == PieceKind::T ? 1 : 2; }

inline PantsDecomposition apply_move(const PantsDecomposition& pd, const ElementaryMove& m) {
  const Curve* c = pd.find_curve(m.curve);
  if (!c) throw curve_not_internal("no curve named " + m.curve);
  if (!c->internal()) throw curve_not_internal(m.curve + " is a window-boundary curve");
  auto fit = pd.frames.find(m.curve);
  auto sit = pd.slopes.find(m.curve);
  if (fit == pd.frames.end() || sit == pd.slopes.end())
    throw move_not_applicable(m.curve + " is not a tracked piece");
  if (fit->second.kind != m.kind)
    throw move_not_applicable("move kind does not match the piece of " + m.curve);
  if (sit->second != m.from)
    throw move_not_applicable("slope of " + m.curve + " is " + to_string(sit->second) +
                              ", move expects " + to_string(m.from));
  if (!farey_adjacent(m.from, m.to))
    throw move_not_applicable("slopes " + to_string(m.from) + " and " + to_string(m.to) +
                              " are not Farey-adjacent");
  PantsDecomposition out = pd;
  out.slopes[m.curve] = m.to;
  return out;
}

struct MovePath {
  PantsDecomposition base;
  std::vector<ElementaryMove> moves;
};

inline int count_t_moves(const MovePath& p) {
  int n = 0;
  for (const auto& m : p.moves) n += (m.kind == PieceKind::T);
  return n;
}

inline int count_s_moves(const MovePath& p) {
  int n = 0;
  for (const auto& m : p.moves) n += (m.kind == PieceKind::S);
  return n;
}

// All decompositions P_0 .. P_n along the path; throws InvalidPath when some
// move fails its precondition.
inline std::vector<PantsDecomposition> path_levels(const MovePath& p) {
  std::vector<PantsDecomposition> levels{p.base};
  for (size_t k = 0; k < p.moves.size(); ++k) {
    try {
      levels.push_back(apply_move(levels.back(), p.moves[k]));
    } catch (const Error& e) {
      throw invalid_path("move " + std::to_string(k) + ": " + e.what());
    }
  }
  return levels;
}

inline PantsDecomposition path_endpoint(const MovePath& p) { return path_levels(p).back(); }

inline int path_weight(const MovePath& p) {
  path_levels(p);  // validate
  return count_t_moves(p) + 2 * count_s_moves(p);
}

}  // namespace panto
