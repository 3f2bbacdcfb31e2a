#pragma once

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "panto/blocks.hpp"
#include "panto/dot.hpp"
#include "panto/examples.hpp"
#include "panto/json_io.hpp"

namespace panto {

namespace detail {

inline std::string error_text(const Error& e) {
  std::string w = e.what();  // "code: message"
  return w.substr(e.code().size() + 2);
}

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream f(path);
  if (!f) throw parse_error("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw parse_error("cannot open " + path + " for writing");
  f << text;
}

// The document emitted by `example fenley` carries a support section so the
// certify pipeline has something to chew on; the word is not concentrated
// deep in the window, so the classification is honestly inconclusive.
inline CertifyInput fenley_support() {
  CertifyInput ci;
  ci.eta = "s_0";
  ci.alpha = "s_3";
  ci.support.boundary_minus = {"s_0"};
  ci.support.boundary_plus = {"s_3"};
  ci.support.separation = Separation::FullySeparating;
  ci.support.flags = ConventionFlags{true, true, true, true};
  ci.support.piece = "b1_0";
  ci.support.crossing = {"s_1", "s_2"};
  return ci;
}

}  // namespace detail

inline int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                    std::ostream& err) {
  CLI::App app{"combinatorics of end-periodic maps on a truncation window"};
  app.name("panto");

  int precision = 15;
  if (const char* env = std::getenv("PANTO_PRECISION")) {
    char* endp = nullptr;
    long v = std::strtol(env, &endp, 10);
    if (endp == env || *endp != '\0' || v < 8 || v > 30) {
      err << "E:usage: PANTO_PRECISION must be an integer in [8, 30]\n";
      return 1;
    }
    precision = static_cast<int>(v);
  }
  app.add_option("--precision", precision, "decimal digits for the volume constants")
      ->check(CLI::Range(8, 30));

  auto* validate = app.add_subcommand("validate", "parse a document and check its invariants");
  std::string v_file;
  validate->add_option("file", v_file, "document path or -")->required();

  auto* farey = app.add_subcommand("farey", "Farey graph queries");
  auto* fdist = farey->add_subcommand("dist", "distance between two slopes");
  std::string f_a, f_b;
  fdist->add_option("a", f_a, "slope p/q")->required();
  fdist->add_option("b", f_b, "slope p/q")->required();
  farey->require_subcommand(1);

  auto* pweight = app.add_subcommand("path-weight", "weighted length of the document's path");
  std::string p_file;
  pweight->add_option("file", p_file, "document path or -")->required();

  auto* blocks = app.add_subcommand("blocks", "block decomposition of the mapping torus");
  auto* bbuild = blocks->add_subcommand("build", "assemble and export the block complex");
  std::string b_file, b_out, b_dot;
  bbuild->add_option("file", b_file, "document path or -")->required();
  bbuild->add_option("--out", b_out, "write the gluing file here instead of stdout");
  bbuild->add_option("--dot", b_dot, "also write the DOT graph here");
  blocks->require_subcommand(1);

  auto* bounds = app.add_subcommand("bounds", "volume and translation-length bounds");
  std::string bd_map, bd_path;
  int bd_power = 1;
  bool bd_json = false;
  bounds->add_option("mapfile", bd_map, "document path or -")->required();
  bounds->add_option("pathfile", bd_path, "separate path document (default: embedded path)");
  bounds->add_option("--power", bd_power, "the path joins P to f^-power(P)")
      ->check(CLI::PositiveNumber);
  bounds->add_flag("--json", bd_json, "machine-readable record");

  auto* certify_cmd = app.add_subcommand("certify", "irreducibility certificate");
  std::string c_file;
  certify_cmd->add_option("file", c_file, "document path or -")->required();

  auto* example = app.add_subcommand("example", "emit a generated instance document");
  std::string e_name, e_ends;
  int e_twists = 6, e_strips = 1;
  int e_seed = -1;
  bool e_partial = false;
  example->add_option("name", e_name, "fenley | laddershift | sharp | cert")
      ->required()
      ->check(CLI::IsMember({"fenley", "laddershift", "sharp", "cert"}));
  example->add_option("--twists", e_twists, "twist count for sharp and cert");
  example->add_option("--seed", e_seed, "seed for the generated path");
  example->add_option("--ends", e_ends, "end behavior as m,-m (laddershift)");
  example->add_option("--strips", e_strips, "strip count (laddershift)")
      ->check(CLI::PositiveNumber);
  example->add_flag("--partial", e_partial, "partially instead of fully separating (cert)");

  app.require_subcommand(1);

  std::vector<const char*> argv{"panto"};
  for (const std::string& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "E:usage: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*validate) {
      MapDocument doc = parse_document(detail::read_input(v_file, in));
      detail::check_word_in_window(doc.map);
      const LadderModel& lm = doc.map.ladder;
      out << "OK window: " << lm.k << " strip(s), stub depths " << lm.d_rep << "+" << lm.d_att
          << ", core genus " << lm.window().core.genus << "\n";
      out << "OK word: " << doc.map.word.size() << " generator(s) inside the window, power "
          << doc.map.power << "\n";
      if (doc.path)
        out << "OK path: " << doc.path->moves.size() << " move(s), weight "
            << path_weight(*doc.path) << "\n";
      if (doc.certify) {
        detail::cert_preconditions(doc.map, doc.certify->support, doc.certify->eta,
                                   doc.certify->alpha);
        out << "OK support: eta " << doc.certify->eta << ", alpha " << doc.certify->alpha
            << ", piece " << doc.certify->support.piece << "\n";
      }
      return 0;
    }

    if (*fdist) {
      auto a = parse_slope(f_a), b = parse_slope(f_b);
      if (!a || !b) throw parse_error("slopes must be p/q with coprime entries");
      out << farey_distance(*a, *b) << "\n";
      return 0;
    }

    if (*pweight) {
      MapDocument doc = parse_document(detail::read_input(p_file, in));
      if (!doc.path) throw parse_error("document has no path section");
      out << path_weight(*doc.path) << "\n";
      return 0;
    }

    if (*bbuild) {
      MapDocument doc = parse_document(detail::read_input(b_file, in));
      if (!doc.path) throw parse_error("document has no path section");
      BlockComplex bc = build_blocks(doc.map, *doc.path);
      detail::write_output(b_out, export_gluing(bc), out);
      if (!b_dot.empty()) {
        std::ofstream f(b_dot);
        if (!f) throw parse_error("cannot open " + b_dot + " for writing");
        f << emit_dot(bc);
      }
      return 0;
    }

    if (*bounds) {
      MapDocument doc = parse_document(detail::read_input(bd_map, in));
      std::optional<MovePath> path = doc.path;
      if (!bd_path.empty()) {
        MapDocument pd = parse_document(detail::read_input(bd_path, in));
        if (!pd.path) throw parse_error("path document has no path section");
        path = pd.path;
      }
      std::vector<std::pair<MovePath, int>> cands;
      if (path) cands.push_back({*path, bd_power});
      BoundsReport r = evaluate_bounds(doc.map, cands, precision);
      if (bd_json) {
        out << bounds_json(r);
        return 0;
      }
      out << std::setprecision(15);
      out << "|Phi*| = " << r.phi_norm << ", xi(boundary) = " << r.xi_boundary << "\n";
      out << "V_oct = " << r.constants.v_oct << " (8 Lambda(pi/4)), V_tet = "
          << r.constants.v_tet << " (2 Lambda(pi/6))\n";
      if (r.upper_total_coeff)
        out << "upper: vol(M_f) <= " << r.upper_total_coeff->num << "/"
            << r.upper_total_coeff->den << " x V_oct = " << r.upper_volume()
            << " (Thm 1.1 upper bound)\n";
      else
        out << "upper: none (no candidate path supplied)\n";
      out << "lower: tau(f) >= " << r.lower_tau << " (Cor 1.5 lower bound)\n";
      out << "provenance:\n";
      for (const std::string& line : r.provenance) out << "  " << line << "\n";
      return 0;
    }

    if (*certify_cmd) {
      MapDocument doc = parse_document(detail::read_input(c_file, in));
      if (!doc.certify) throw parse_error("document has no support section");
      Certificate cert =
          certify(doc.map, doc.certify->support, doc.certify->eta, doc.certify->alpha);
      const char* label = cert.result == Classification::StronglyIrreducible
                              ? "StronglyIrreducible"
                              : cert.result == Classification::Irreducible ? "Irreducible"
                                                                           : "Inconclusive";
      out << "classification: " << label << " (Thm 1.2 route)\n";
      if (cert.result == Classification::Inconclusive) out << "reason: " << cert.reason << "\n";
      if (cert.distance >= 0)
        out << "distance witness: " << cert.distance << " (threshold 9)\n";
      out << "oracle: " << cert.oracle << "\n";
      out << "evidence:\n";
      for (const std::string& line : cert.evidence) out << "  " << line << "\n";
      return cert.result == Classification::Inconclusive ? 2 : 0;
    }

    if (*example) {
      MapDocument doc;
      unsigned seed = e_seed < 0 ? 0 : static_cast<unsigned>(e_seed);
      if (e_name == "fenley") {
        GeneratedExample ex = fenley();
        doc.map = ex.map;
        doc.path = e_seed < 0 ? ex.path : canonical_path(ex.map, seed);
        doc.certify = detail::fenley_support();
      } else if (e_name == "laddershift") {
        int m = e_strips;
        if (!e_ends.empty()) {
          std::istringstream ss(e_ends);
          long long w1 = 0, w2 = 0;
          char comma = 0;
          if (!(ss >> w1 >> comma >> w2) || comma != ',' || !ss.eof() || w1 <= 0 || w1 != -w2)
            throw parse_error("--ends must be m,-m with m > 0");
          if (w1 % e_strips != 0)
            throw parse_error("--ends magnitude must be a multiple of --strips");
          m = static_cast<int>(w1);
        }
        doc.map = pure_shift(e_strips).map;
        doc.map.power = m / e_strips;
        doc.path = canonical_path(doc.map, seed);
      } else if (e_name == "sharp") {
        SharpnessDemo demo = sharpness_demo();
        if (e_seed >= 0) demo.path = canonical_path(demo.map, seed);
        auto [fk, pk] = sharpness_family(demo.map, demo.path, demo.sigma, e_twists);
        doc.map = fk;
        doc.path = pk;
      } else {
        CertifyDemo demo = certify_demo(e_twists, !e_partial);
        doc.map = demo.map;
        doc.path = e_seed < 0 ? demo.path : canonical_path(demo.map, seed);
        doc.certify = CertifyInput{demo.support, demo.eta, demo.alpha};
      }
      out << emit_document(doc);
      return 0;
    }
  } catch (const Error& e) {
    if (e.code() == "parse") {
      err << "E:parse: " << detail::error_text(e) << "\n";
      return 1;
    }
    if (e.code() == "NonTerminatingOrbit") {
      err << "E:NonTerminatingOrbit: reducibility witness found (" << detail::error_text(e)
          << ")\n";
      return 3;
    }
    err << "E:" << e.code() << ": " << detail::error_text(e) << "\n";
    return 3;
  }
  err << "E:usage: no subcommand selected\n";
  return 1;
}

}  // namespace panto
