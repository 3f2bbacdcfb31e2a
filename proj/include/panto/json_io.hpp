#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "panto/end_periodic.hpp"
#include "panto/moves.hpp"
#include "panto/projection.hpp"
#include "panto/volume.hpp"

namespace panto {

// One self-contained input document.  A map is always present; a path and a
// certification support section are optional.  Unknown sections are ignored
// so documents can be extended without breaking older readers.
struct CertifyInput {
  SupportDescriptor support;
  std::string eta, alpha;
};

struct MapDocument {
  EndPeriodicMap map;
  std::optional<MovePath> path;
  std::optional<CertifyInput> certify;
};

namespace detail {

using ojson = nlohmann::ordered_json;

inline ojson slope_json(const Slope& s) { return to_string(s); }

inline Slope slope_from_json(const ojson& j, const std::string& where) {
  if (!j.is_string()) throw parse_error(where + ": slope must be a \"p/q\" string");
  auto s = parse_slope(j.get<std::string>());
  if (!s) throw parse_error(where + ": bad slope " + j.get<std::string>());
  return *s;
}

inline ojson window_json(const Window& w) {
  ojson ends = ojson::array();
  for (const EndStub& e : w.ends)
    ends.push_back({{"id", e.id}, {"orientation", to_string(e.orientation)},
                    {"stub_depth", e.stub_depth}});
  return {{"genus", w.core.genus}, {"ends", std::move(ends)}};
}

inline ojson pants_json(const PantsDecomposition& pd) {
  ojson pants = ojson::array();
  for (const PantNode& p : pd.pants)
    pants.push_back({{"id", p.id}, {"cuffs", {p.cuffs[0], p.cuffs[1], p.cuffs[2]}}});
  ojson curves = ojson::array();
  for (const Curve& c : pd.curves) {
    ojson attach;
    if (c.internal()) {
      attach = ojson::array();
      for (const CurveEnd& e : c.ends)
        attach.push_back(e.pants + ".s" + std::to_string(e.slot + 1));
    } else {
      attach = ojson{{"boundary", *c.boundary}};
    }
    curves.push_back({{"id", c.id}, {"attach", std::move(attach)}});
  }
  ojson slopes = ojson::object();
  for (const auto& [id, s] : pd.slopes) slopes[id] = slope_json(s);
  return {{"pants", std::move(pants)}, {"curves", std::move(curves)},
          {"slopes", std::move(slopes)}};
}

inline PantsDecomposition pants_from_json(const ojson& j) {
  PantsDecomposition pd;
  if (!j.contains("pants") || !j.contains("curves"))
    throw parse_error("pants schema needs \"pants\" and \"curves\"");
  for (const ojson& p : j.at("pants")) {
    PantNode node;
    node.id = p.at("id").get<std::string>();
    const ojson& cu = p.at("cuffs");
    if (!cu.is_array() || cu.size() != 3)
      throw parse_error("pant " + node.id + " needs exactly 3 cuffs");
    for (int s = 0; s < 3; ++s) node.cuffs[s] = cu[s].get<std::string>();
    pd.pants.push_back(std::move(node));
  }
  for (const ojson& c : j.at("curves")) {
    Curve curve;
    curve.id = c.at("id").get<std::string>();
    const ojson& attach = c.at("attach");
    if (attach.is_array()) {
      for (const ojson& a : attach) {
        std::string text = a.get<std::string>();
        size_t dot = text.rfind(".s");
        if (dot == std::string::npos)
          throw parse_error("attachment " + text + " is not pant.sN");
        int slot = std::stoi(text.substr(dot + 2)) - 1;
        curve.ends.push_back(CurveEnd{text.substr(0, dot), slot});
      }
    } else if (attach.is_object() && attach.contains("boundary")) {
      curve.boundary = attach.at("boundary").get<std::string>();
      // The single pant attachment is implicit; recover it from the cuffs.
      for (const PantNode& p : pd.pants)
        for (int s = 0; s < 3; ++s)
          if (p.cuffs[s] == curve.id) curve.ends.push_back(CurveEnd{p.id, s});
      if (curve.ends.size() != 1)
        throw parse_error("boundary curve " + curve.id + " must fill exactly one cuff slot");
    } else {
      throw parse_error("curve " + curve.id + ": attach must be a list or {\"boundary\": ...}");
    }
    pd.curves.push_back(std::move(curve));
  }
  if (j.contains("slopes"))
    for (auto it = j.at("slopes").begin(); it != j.at("slopes").end(); ++it)
      pd.slopes[it.key()] = slope_from_json(it.value(), "slope of " + it.key());
  return pd;
}

inline ojson path_json(const MovePath& p) {
  ojson moves = ojson::array();
  for (const ElementaryMove& m : p.moves)
    moves.push_back({{"curve", m.curve}, {"kind", m.kind == PieceKind::T ? "T" : "S"},
                     {"from", slope_json(m.from)}, {"to", slope_json(m.to)}});
  return {{"base", pants_json(p.base)}, {"moves", std::move(moves)}};
}

inline ojson support_json(const CertifyInput& ci) {
  const SupportDescriptor& c = ci.support;
  const char* sep = c.separation == Separation::FullySeparating ? "fully"
                    : c.separation == Separation::PartiallySeparating ? "partially"
                                                                      : "none";
  return {{"eta", ci.eta},
          {"alpha", ci.alpha},
          {"boundary_minus", c.boundary_minus},
          {"boundary_plus", c.boundary_plus},
          {"separation", sep},
          {"flags",
           {{"planar_complement", c.flags.planar_complement},
            {"boundary_arc_condition", c.flags.boundary_arc_condition},
            {"strip_genus_ge_2", c.flags.strip_genus_ge_2},
            {"disjoint_from_U", c.flags.disjoint_from_U}}},
          {"piece", c.piece},
          {"crossing", std::vector<std::string>(c.crossing.begin(), c.crossing.end())},
          {"inside_u", std::vector<std::string>(c.inside_u.begin(), c.inside_u.end())},
          {"marking_eta", slope_json(c.marking_eta)},
          {"marking_alpha", slope_json(c.marking_alpha)}};
}

inline CertifyInput support_from_json(const ojson& j) {
  CertifyInput ci;
  ci.eta = j.at("eta").get<std::string>();
  ci.alpha = j.at("alpha").get<std::string>();
  SupportDescriptor& c = ci.support;
  for (const ojson& b : j.at("boundary_minus")) c.boundary_minus.push_back(b.get<std::string>());
  for (const ojson& b : j.at("boundary_plus")) c.boundary_plus.push_back(b.get<std::string>());
  std::string sep = j.value("separation", "none");
  if (sep == "fully")
    c.separation = Separation::FullySeparating;
  else if (sep == "partially")
    c.separation = Separation::PartiallySeparating;
  else if (sep == "none")
    c.separation = Separation::Neither;
  else
    throw parse_error("separation must be fully, partially, or none");
  if (j.contains("flags")) {
    const ojson& fl = j.at("flags");
    c.flags.planar_complement = fl.value("planar_complement", false);
    c.flags.boundary_arc_condition = fl.value("boundary_arc_condition", false);
    c.flags.strip_genus_ge_2 = fl.value("strip_genus_ge_2", false);
    c.flags.disjoint_from_U = fl.value("disjoint_from_U", false);
  }
  c.piece = j.at("piece").get<std::string>();
  if (j.contains("crossing"))
    for (const ojson& x : j.at("crossing")) c.crossing.insert(x.get<std::string>());
  if (j.contains("inside_u"))
    for (const ojson& x : j.at("inside_u")) c.inside_u.insert(x.get<std::string>());
  if (j.contains("marking_eta"))
    c.marking_eta = slope_from_json(j.at("marking_eta"), "marking_eta");
  if (j.contains("marking_alpha"))
    c.marking_alpha = slope_from_json(j.at("marking_alpha"), "marking_alpha");
  return ci;
}

}  // namespace detail

inline std::string emit_document(const MapDocument& doc) {
  detail::ojson j;
  j["window"] = detail::window_json(doc.map.ladder.window());
  detail::ojson strips = detail::ojson::array();
  for (const StripRecord& s : doc.map.shift().strips)
    strips.push_back({{"from", s.repelling_end}, {"to", s.attracting_end},
                      {"window_genus", s.window_genus}});
  j["strips"] = std::move(strips);
  detail::ojson word = detail::ojson::array();
  for (const TwistGen& g : doc.map.word)
    word.push_back({{"twist", g.piece}, {"slope", detail::slope_json(g.gamma)},
                    {"power", g.power}});
  j["word"] = std::move(word);
  j["power"] = doc.map.power;
  if (doc.path) j["path"] = detail::path_json(*doc.path);
  if (doc.certify) j["support"] = detail::support_json(*doc.certify);
  return j.dump(2) + "\n";
}

inline MapDocument parse_document(const std::string& text) {
  detail::ojson j;
  try {
    j = detail::ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(e.what());
  }
  try {
    MapDocument doc;
    if (!j.contains("window") || !j.contains("strips"))
      throw parse_error("document needs \"window\" and \"strips\" sections");
    const detail::ojson& w = j.at("window");
    int d_att = -1, d_rep = -1;
    for (const detail::ojson& e : w.at("ends")) {
      std::string orient = e.at("orientation").get<std::string>();
      if (orient == "attracting")
        d_att = e.at("stub_depth").get<int>();
      else if (orient == "repelling")
        d_rep = e.at("stub_depth").get<int>();
      else
        throw parse_error("end " + e.at("id").get<std::string>() + " has no orientation");
    }
    if (d_att < 1 || d_rep < 1)
      throw parse_error("window needs one attracting and one repelling end with depth >= 1");
    int k = static_cast<int>(j.at("strips").size());
    if (k < 1) throw parse_error("at least one strip is required");
    for (const detail::ojson& s : j.at("strips"))
      if (s.value("window_genus", d_rep + d_att) != d_rep + d_att)
        throw parse_error("strip window_genus must equal the total stub depth");
    doc.map.ladder = LadderModel{k, d_rep, d_att};
    if (w.at("genus").get<int>() != k * (d_rep + d_att))
      throw parse_error("window genus must equal strips x (stub depths)");
    if (j.contains("word"))
      for (const detail::ojson& g : j.at("word")) {
        TwistGen tg;
        tg.piece = g.at("twist").get<std::string>();
        tg.gamma = g.contains("slope") ? detail::slope_from_json(g.at("slope"), "word slope")
                                       : slope_inf;
        tg.power = g.value("power", 1);
        doc.map.word.push_back(tg);
      }
    doc.map.power = j.value("power", 1);
    if (doc.map.power < 1) throw parse_error("power must be >= 1");
    if (j.contains("path")) {
      MovePath p;
      p.base = detail::pants_from_json(j.at("path").at("base"));
      init_frames(p.base);
      ValidationReport rep = validate_pants(p.base, doc.map.ladder.window());
      if (!rep.ok()) throw parse_error("path base: " + rep.violations.front());
      for (const detail::ojson& m : j.at("path").at("moves")) {
        ElementaryMove mv;
        mv.curve = m.at("curve").get<std::string>();
        std::string kind = m.at("kind").get<std::string>();
        if (kind != "T" && kind != "S") throw parse_error("move kind must be T or S");
        mv.kind = kind == "T" ? PieceKind::T : PieceKind::S;
        mv.from = detail::slope_from_json(m.at("from"), "move from");
        mv.to = detail::slope_from_json(m.at("to"), "move to");
        p.moves.push_back(mv);
      }
      doc.path = std::move(p);
    }
    if (j.contains("support")) doc.certify = detail::support_from_json(j.at("support"));
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(e.what());
  }
}

// Machine-readable bounds record.
inline std::string bounds_json(const BoundsReport& r) {
  detail::ojson j;
  if (r.upper_total_coeff)
    j["upper_voct_coeff"] = {{"num", r.upper_total_coeff->num},
                             {"den", r.upper_total_coeff->den}};
  else
    j["upper_voct_coeff"] = nullptr;
  j["lower_tau"] = r.lower_tau;
  j["phi_norm"] = r.phi_norm;
  j["xi_boundary"] = r.xi_boundary;
  j["constants"] = {{"v_oct", r.constants.v_oct}, {"v_tet", r.constants.v_tet},
                    {"precision", r.constants.precision}};
  j["provenance"] = r.provenance;
  return j.dump(2) + "\n";
}

}  // namespace panto
