#pragma once

#include <sstream>
#include <string>

#include "panto/blocks.hpp"

namespace panto {

namespace detail {

inline std::string dot_end_node(const AnnulusEnd& e, bool upper) {
  if (e.kind == AnnulusEnd::Block) return "B" + std::to_string(e.level);
  return std::string(upper ? "S+." : "S-.") + e.boundary_class;
}

}  // namespace detail

// Block-gluing graph: block nodes shaped by kind, boundary pants classes as
// dashed ellipses, face gluings solid, annuli dashed (degenerate dotted).
// Iteration orders are all deterministic, so the bytes are too.
inline std::string emit_dot(const BlockComplex& bc) {
  std::ostringstream out;
  out << "digraph blocks {\n";
  if (!bc.blocks.empty()) out << "  rankdir=BT;\n";
  for (const PantsBlock& b : bc.blocks) {
    out << "  \"B" << b.level << "\" [shape=" << (b.kind == PieceKind::T ? "box" : "hexagon")
        << ",label=\"" << b.level << ' ' << (b.kind == PieceKind::T ? 'T' : 'S') << ' '
        << b.curve << "\"];\n";
  }
  for (const BoundaryPantClass& p : bc.boundary.minus_side.pants)
    out << "  \"S-." << p.id << "\" [shape=ellipse,style=dashed,label=\"S- " << p.id
        << "\"];\n";
  for (const BoundaryPantClass& p : bc.boundary.plus_side.pants)
    out << "  \"S+." << p.id << "\" [shape=ellipse,style=dashed,label=\"S+ " << p.id
        << "\"];\n";
  for (const auto& [ref, partner] : bc.gluings) {
    if (partner.kind == FacePartner::Face) {
      if (!ref.plus) continue;  // each face pair drawn once, from the plus side
      out << "  \"B" << ref.level << "\" -> \"B" << partner.face.level
          << "\" [style=solid,label=\"" << face_name(ref) << '|' << face_name(partner.face)
          << "\"];\n";
    } else {
      out << "  \"B" << ref.level << "\" -> \"" << (partner.plus_side ? "S+." : "S-.")
          << partner.boundary_pants << "\" [style=solid,label=\"" << face_name(ref)
          << "\"];\n";
    }
  }
  for (const AnnulusRecord& a : bc.annuli) {
    out << "  \"" << detail::dot_end_node(a.lower, false) << "\" -> \""
        << detail::dot_end_node(a.upper, true) << "\" [style="
        << (a.degenerate ? "dotted" : "dashed") << ",label=\"a" << a.id << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace panto
