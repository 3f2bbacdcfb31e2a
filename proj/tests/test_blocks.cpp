#include <catch2/catch_amalgamated.hpp>

#include "panto/blocks.hpp"
#include "panto/examples.hpp"

using namespace panto;

TEST_CASE("fenley complex by hand") {
  GeneratedExample ex = fenley();
  REQUIRE(ex.path.moves.size() == 5);
  BlockComplex bc = build_blocks(ex.map, ex.path);

  CHECK(bc.blocks.size() == 5);
  CHECK(bc.n_t == 1);
  CHECK(bc.n_s == 4);
  CHECK(bc.phi_norm == 2);
  CHECK(drilled_volume_coefficient(bc) == 9);
  CHECK(drilled_volume_coefficient(bc) == path_weight(ex.path));

  // One block per move, in path order, with the moved slopes on its d1 disks.
  for (size_t k = 0; k < bc.blocks.size(); ++k) {
    CHECK(bc.blocks[k].level == static_cast<int>(k));
    CHECK(bc.blocks[k].curve == ex.path.moves[k].curve);
    CHECK(bc.blocks[k].d1_minus == ex.path.moves[k].from);
    CHECK(bc.blocks[k].d1_plus == ex.path.moves[k].to);
    CHECK(bc.blocks[k].d1_v.size() == (bc.blocks[k].kind == PieceKind::T ? 1u : 4u));
  }

  // Link components: one annulus per block plus three per strip and side.
  CHECK(link_components(bc) == 5 + 3);

  // Boundary: two quotient pants and three curve classes per side.
  for (const BoundarySide* side : {&bc.boundary.plus_side, &bc.boundary.minus_side}) {
    REQUIRE(side->pants.size() == 2);
    CHECK(side->pants[0].id == "A1");
    CHECK(side->pants[1].id == "B1");
    CHECK(side->pants[0].cuffs == std::array<std::string, 3>{"s", "s", "b1"});
    CHECK(side->pants[1].cuffs == std::array<std::string, 3>{"b1", "t1", "t1"});
    CHECK(side->curve_to_annulus.size() == 3);
    CHECK(side->pant_to_face.size() == 2);
  }
  // 2 * 2 + 2 * 2 * 3 = 16 S faces? No: one T block has 2 faces, four S
  // blocks have 4 each, 18 faces total, 4 of them on the boundary.
  CHECK(bc.gluings.size() == 18);
  int boundary_faces = 0, face_faces = 0;
  for (const auto& [ref, p] : bc.gluings)
    p.kind == FacePartner::Boundary ? ++boundary_faces : ++face_faces;
  CHECK(boundary_faces == 4);
  CHECK(face_faces == 14);
}

TEST_CASE("annulus ends are consistently attached") {
  GeneratedExample ex = fenley();
  BlockComplex bc = build_blocks(ex.map, ex.path);

  std::map<int, int> lower_at_block, upper_at_block;
  for (const AnnulusRecord& a : bc.annuli) {
    REQUIRE_FALSE(a.curve_orbit.empty());
    if (a.lower.kind == AnnulusEnd::Block) {
      CHECK(a.lower.level >= 0);
      CHECK(a.lower.level < static_cast<int>(bc.blocks.size()));
      ++lower_at_block[a.lower.level];
    }
    if (a.upper.kind == AnnulusEnd::Block) ++upper_at_block[a.upper.level];
    if (a.degenerate) {
      CHECK(a.curve_orbit.size() == 1);
      CHECK(a.lower.kind == AnnulusEnd::Block);
      CHECK(a.upper.kind == AnnulusEnd::Block);
    }
  }
  // Every block bounds exactly one annulus below (its inserted curve) and
  // one above (its removed curve).
  for (int k = 0; k < static_cast<int>(bc.blocks.size()); ++k) {
    CHECK(lower_at_block[k] == 1);
    CHECK(upper_at_block[k] == 1);
  }
}

TEST_CASE("counting formulas across the instance pool") {
  for (const GeneratedExample& ex : block_instances()) {
    CAPTURE(ex.name);
    int n = static_cast<int>(ex.path.moves.size());
    int k = ex.map.ladder.k;
    BlockComplex bc = build_blocks(ex.map, ex.path);
    CHECK(static_cast<int>(bc.blocks.size()) == n);
    CHECK(link_components(bc) == n + 3 * (bc.phi_norm / 2));
    CHECK(bc.n_t + bc.n_s == n);
    CHECK(drilled_volume_coefficient(bc) == path_weight(ex.path));
    int curve_classes = static_cast<int>(bc.boundary.plus_side.curve_to_annulus.size() +
                                         bc.boundary.minus_side.curve_to_annulus.size());
    CHECK(curve_classes == 3 * bc.phi_norm);
    CHECK(static_cast<int>(bc.boundary.plus_side.pants.size()) == 2 * k);
  }
}

TEST_CASE("wider-norm instances satisfy the same formulas") {
  for (const GeneratedExample& ex : wide_instances()) {
    CAPTURE(ex.name);
    BlockComplex bc = build_blocks(ex.map, ex.path);
    CHECK(bc.phi_norm == 6);
    CHECK(static_cast<int>(bc.blocks.size()) == static_cast<int>(ex.path.moves.size()));
    CHECK(link_components(bc) == static_cast<int>(ex.path.moves.size()) + 9);
    int curve_classes = static_cast<int>(bc.boundary.plus_side.curve_to_annulus.size() +
                                         bc.boundary.minus_side.curve_to_annulus.size());
    CHECK(curve_classes == 18);
  }
}

TEST_CASE("backtrack variants create a degenerate annulus and keep the boundary") {
  GeneratedExample ex = twisted_ladder(1, 4);
  BlockComplex base = build_blocks(ex.map, ex.path);

  MovePath variant = variant_backtrack(ex.path, 4);
  REQUIRE(variant.moves.size() == ex.path.moves.size() + 2);
  BlockComplex vb = build_blocks(ex.map, variant);
  CHECK(vb.blocks.size() == base.blocks.size() + 2);
  bool any_degenerate = false;
  for (const AnnulusRecord& a : vb.annuli) any_degenerate |= a.degenerate;
  CHECK(any_degenerate);
  CHECK(same_boundary_structure(base.boundary, vb.boundary));
  CHECK(link_components(vb) == link_components(base) + 2);
}

TEST_CASE("boundary structure is invariant across path variants") {
  int pairs = 0;
  for (unsigned s = 0; s < 5; ++s) {
    GeneratedExample ex = twisted_ladder(s % 2 ? 2 : 1, s);
    BlockComplex base = build_blocks(ex.map, ex.path);
    for (MovePath variant : {variant_backtrack(ex.path, s), variant_swap(ex.path, s)}) {
      BlockComplex vb = build_blocks(ex.map, variant);
      CHECK(same_boundary_structure(base.boundary, vb.boundary));
      ++pairs;
    }
  }
  CHECK(pairs == 10);
}

TEST_CASE("pure shifts are recognized as reducible") {
  for (int k : {1, 2}) {
    GeneratedExample ex = pure_shift(k);
    try {
      build_blocks(ex.map, ex.path);
      FAIL("expected NonTerminatingOrbit");
    } catch (const Error& e) {
      CHECK(e.code() == "NonTerminatingOrbit");
      CHECK(std::string(e.what()).find("never flips") != std::string::npos);
    }
  }
}

TEST_CASE("a chain missed by the word yields a reducing witness") {
  // Twist only strip 1 of a k = 2 ladder: the b2 and t2 curve families are
  // shift-invariant and the trace must refuse to build.
  EndPeriodicMap f;
  f.ladder = LadderModel{2, 4, 4};
  f.word = {TwistGen{"s_0", slope_inf, 1}, TwistGen{"e1_0", slope_inf, 1},
            TwistGen{"b1_0", slope_inf, 1}, TwistGen{"t1_0", slope_inf, 1}};
  MovePath path = canonical_path(f);
  CHECK_THROWS_AS(build_blocks(f, path), Error);
  try {
    trace_flips(f, path);
    FAIL("expected NonTerminatingOrbit");
  } catch (const Error& e) {
    CHECK(e.code() == "NonTerminatingOrbit");
  }
}

TEST_CASE("covering maps multiply the complex") {
  GeneratedExample ex = twisted_ladder(1, 3);
  BlockComplex base = build_blocks(ex.map, ex.path);
  int n = static_cast<int>(base.blocks.size());

  for (int cover : {2, 3}) {
    EndPeriodicMap fn = map_power(ex.map, cover);
    MovePath pn = canonical_path(fn);
    BlockComplex bn = build_blocks(fn, pn);
    CAPTURE(cover);
    CHECK(static_cast<int>(bn.blocks.size()) == cover * n);
    CHECK(link_components(bn) == cover * link_components(base));
    CHECK(bn.boundary.plus_side.pants.size() ==
          static_cast<size_t>(cover) * base.boundary.plus_side.pants.size());
    // Residue classes label the lifted boundary pattern.
    bool residues = true;
    for (const auto& p : bn.boundary.plus_side.pants)
      residues &= p.id.find('@') != std::string::npos;
    CHECK(residues);
  }
}

TEST_CASE("export is deterministic and complete") {
  GeneratedExample ex = twisted_ladder(2, 1);
  BlockComplex a = build_blocks(ex.map, ex.path);
  BlockComplex b = build_blocks(ex.map, ex.path);
  std::string ta = export_gluing(a), tb = export_gluing(b);
  CHECK(ta == tb);
  CHECK(ta.rfind("panto gluing v1\n", 0) == 0);

  size_t block_lines = 0, annulus_lines = 0;
  for (size_t pos = 0; (pos = ta.find("\nblock ", pos)) != std::string::npos; ++pos)
    ++block_lines;
  for (size_t pos = 0; (pos = ta.find("\nannulus ", pos)) != std::string::npos; ++pos)
    ++annulus_lines;
  CHECK(block_lines == a.blocks.size());
  CHECK(annulus_lines == a.annuli.size());
}

TEST_CASE("paths that do not reach the inverse image are rejected") {
  GeneratedExample ex = fenley();
  MovePath wrong = ex.path;
  wrong.moves.pop_back();
  try {
    build_blocks(ex.map, wrong);
    FAIL("expected PathEndpointMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == "PathEndpointMismatch");
  }
}
