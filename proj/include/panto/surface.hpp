#pragma once

#include <string>
#include <vector>

#include "panto/errors.hpp"

namespace panto {

// Signature of a finite-type surface.
struct SurfaceSig {
  int genus = 0;
  int boundary = 0;  // punctures or boundary components

  friend bool operator==(const SurfaceSig&, const SurfaceSig&) = default;
};

inline int complexity(const SurfaceSig& s) { return 3 * s.genus - 3 + s.boundary; }

// Number of pairs of pants in any pants decomposition.
inline int pants_count(const SurfaceSig& s) { return 2 * s.genus - 2 + s.boundary; }

// A surface admits a pants decomposition iff complexity >= 1, or it is
// already a pair of pants; the closed torus is excluded.
inline bool decomposable(const SurfaceSig& s) {
  if (s.genus == 1 && s.boundary == 0) return false;
  return complexity(s) >= 0 && pants_count(s) >= 1;
}

enum class Orientation { Attracting, Repelling, Unassigned };

inline std::string to_string(Orientation o) {
  switch (o) {
    case Orientation::Attracting: return "attracting";
    case Orientation::Repelling: return "repelling";
    default: return "unassigned";
  }
}

// One truncated end of the infinite surface: the boundary curve v_i of its
// nesting neighborhood plus how many fundamental-domain layers are kept.
struct EndStub {
  std::string id;
  Orientation orientation = Orientation::Unassigned;
  int stub_depth = 0;

  friend bool operator==(const EndStub&, const EndStub&) = default;
};

// A finite truncation of the infinite-type surface: a core with one boundary
// curve per end.
struct Window {
  SurfaceSig core;  // core.boundary == ends.size()
  std::vector<EndStub> ends;

  friend bool operator==(const Window&, const Window&) = default;
};

inline void validate_window(const Window& w) {
  if (w.ends.size() < 2) throw Error("InvalidWindow", "need at least 2 ends");
  if (w.core.boundary != static_cast<int>(w.ends.size()))
    throw Error("InvalidWindow", "core boundary count must equal number of ends");
  if (w.core.genus < 0) throw Error("InvalidWindow", "negative genus");
  for (const auto& e : w.ends)
    if (e.stub_depth < 0) throw Error("InvalidWindow", "negative stub depth");
}

}  // namespace panto
