#pragma once

// JSON encodings shared by the CLI and the report files. Weights are
// two-element integer arrays, rationals are "p/q" strings, Laurent
// characters are maps keyed by "m,n".

#include "flopkit/bott_weyman.hpp"
#include "flopkit/characters.hpp"
#include "flopkit/gamma.hpp"
#include "flopkit/genclosure.hpp"
#include "flopkit/git.hpp"
#include "flopkit/koszul.hpp"
#include "flopkit/potential.hpp"
#include "flopkit/windows.hpp"

#include <json.hpp>

#include <string>

namespace flopkit {

using nlohmann::json;

inline json to_json(const Weight& w) { return json::array({to_i64(w.a), to_i64(w.b)}); }

inline Weight weight_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("weight: expected [a,b]");
  return Weight(Int(j[0].get<std::int64_t>()), Int(j[1].get<std::int64_t>()));
}

inline json to_json(const WeightSet& s) {
  json a = json::array();
  for (const auto& w : s) a.push_back(to_json(w));
  return a;
}

inline json to_json(const IrrepDecomp& d) {
  json o = json::object();
  for (auto& [w, m] : d) o[w.a.str() + "," + w.b.str()] = m;
  return o;
}

inline json to_json(const LaurentChar& c) {
  json o = json::object();
  for (auto& [w, m] : c.mult) o[w.a.str() + "," + w.b.str()] = m;
  return o;
}

inline json to_json(const BinaryCubic& psi) {
  return json::array({rat_to_string(psi.c30), rat_to_string(psi.c21), rat_to_string(psi.c12),
                      rat_to_string(psi.c03)});
}

inline BinaryCubic cubic_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("cubic: expected 4 coefficients");
  return BinaryCubic(rat_from_string(j[0].get<std::string>()),
                     rat_from_string(j[1].get<std::string>()),
                     rat_from_string(j[2].get<std::string>()),
                     rat_from_string(j[3].get<std::string>()));
}

inline json to_json(const PointV& p) {
  json phi = json::array();
  for (const auto& row : p.phi) {
    json r = json::array();
    for (const auto& c : row) r.push_back(rat_to_string(c));
    phi.push_back(r);
  }
  return json{{"phi", phi}, {"psi", to_json(p.psi)}};
}

inline PointV point_from_json(const json& j) {
  PointV p;
  const auto& phi = j.at("phi");
  if (!phi.is_array() || phi.size() != 2) throw std::invalid_argument("point: phi must be 2x6");
  for (int r = 0; r < 2; ++r) {
    if (phi[r].size() != 6) throw std::invalid_argument("point: phi must be 2x6");
    for (int i = 0; i < 6; ++i) p.phi[r][i] = rat_from_string(phi[r][i].get<std::string>());
  }
  p.psi = cubic_from_json(j.at("psi"));
  return p;
}

inline json to_json(const GitProblem& p) {
  json v = json::array(), g = json::array(), l = json::array();
  for (const auto& w : p.v_weights) v.push_back(to_json(w));
  for (const auto& w : p.g_weights) g.push_back(to_json(w));
  for (const auto& lam : p.lambdas) l.push_back(json::array({to_i64(lam.w1), to_i64(lam.w2)}));
  return json{{"v_weights", v}, {"g_weights", g}, {"lambdas", l}};
}

inline GitProblem git_problem_from_json(const json& j) {
  GitProblem p;
  for (const auto& w : j.at("v_weights")) p.v_weights.push_back(weight_from_json(w));
  for (const auto& w : j.at("g_weights")) p.g_weights.push_back(weight_from_json(w));
  for (const auto& l : j.at("lambdas"))
    p.lambdas.emplace_back(Int(l[0].get<std::int64_t>()), Int(l[1].get<std::int64_t>()));
  return p;
}

inline json to_json(const WeymanComplex& c) {
  json terms = json::array();
  for (const auto& t : c.terms)
    terms.push_back(json{{"hom_degree", t.hom_degree},
                         {"gen_degree", t.gen_degree},
                         {"bundles", to_json(t.bundles)}});
  return json{{"model", c.model},
              {"twist", json::array({to_i64(c.twist.a), to_i64(c.twist.b)})},
              {"omitted_acyclic", c.omitted_acyclic},
              {"terms", terms}};
}

inline json to_json(const GammaCharTable& t) {
  json classes = json::array();
  for (const auto& cls : t.group.classes) {
    classes.push_back(json{{"rep", {{"swap", cls.rep.swap}, {"i", cls.rep.i}, {"j", cls.rep.j}}},
                           {"size", cls.size()}});
  }
  json irreps = json::array();
  for (const auto& ir : t.irreps) {
    json vals = json::array();
    for (const auto& v : ir.values) vals.push_back(json::array({v.x, v.y}));
    irreps.push_back(json{{"label", ir.label}, {"dim", ir.dim}, {"values", vals}});
  }
  return json{{"order", 18}, {"classes", classes}, {"irreps", irreps}};
}

inline json to_json(const OrthoReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    const char* v = e.verdict == OrthoEntry::Verdict::Pass
                        ? "pass"
                        : (e.verdict == OrthoEntry::Verdict::Boundary ? "boundary" : "fail");
    entries.push_back(json{{"chi", to_json(e.chi)},
                           {"value", to_i64(e.value)},
                           {"partner_value", to_i64(e.partner_value)},
                           {"verdict", v}});
  }
  return json{{"pivot", to_json(r.pivot)},
              {"pivot_value", to_i64(r.pivot_value)},
              {"strict", r.strict},
              {"entries", entries},
              {"failures", [&] {
                 json a = json::array();
                 for (const auto& w : r.failures) a.push_back(to_json(w));
                 return a;
               }()},
              {"boundary", [&] {
                 json a = json::array();
                 for (const auto& w : r.boundary) a.push_back(to_json(w));
                 return a;
               }()}};
}

inline json to_json(const ClosureState& st) {
  json gen = json::array();
  for (const auto& w : st.generated) gen.push_back(to_json(w));
  json trace = json::array();
  for (const auto& step : st.trace) {
    json prod = json::array();
    for (const auto& w : step.produced) prod.push_back(to_json(w));
    trace.push_back(json{{"template", step.tmpl},
                         {"twist", step.twist},
                         {"produced", prod},
                         {"produced_kernel", step.produced_kernel}});
  }
  json kt = json::array();
  for (long k : st.kernel_twists) kt.push_back(k);
  return json{{"generated", gen}, {"kernel_twists", kt}, {"trace", trace}};
}

inline const char* koszul_status_name(KoszulStatus s) {
  switch (s) {
    case KoszulStatus::Exact: return "exact";
    case KoszulStatus::CertifiedToTruncation: return "certified-to-truncation";
    default: return "inconclusive";
  }
}

inline const char* regularity_name(Regularity r) {
  switch (r) {
    case Regularity::Regular: return "regular";
    case Regularity::NotRegular: return "not-regular";
    default: return "inconclusive";
  }
}

inline json to_json(const TorWeightReport& r) {
  json support = json::object();
  for (auto& [j, byw] : r.support) {
    json wmap = json::object();
    for (auto& [w, series] : byw) {
      json s = json::object();
      for (auto& [deg, mult] : series) s[std::to_string(deg)] = mult;
      wmap[w.str()] = s;
    }
    support[std::to_string(j)] = wmap;
  }
  json gens = json::object();
  for (auto& [j, ws] : r.generator_support) {
    json a = json::array();
    for (const auto& w : ws) a.push_back(to_i64(w));
    gens[std::to_string(j)] = a;
  }
  json reduced_elems = json::array();
  for (const auto& f : r.reduced.elements) {
    json terms = json::array();
    for (auto& [e, c] : f.terms) {
      json exps = json::array();
      for (int x : e) exps.push_back(x);
      terms.push_back(json{{"coeff", rat_to_string(c)}, {"exps", exps}});
    }
    reduced_elems.push_back(terms);
  }
  return json{{"status", koszul_status_name(r.status)},
              {"truncation", r.truncation},
              {"path", r.path},
              {"regularity",
               {{"verdict", regularity_name(r.regularity.verdict)},
                {"exact", r.regularity.exact},
                {"reason", r.regularity.reason}}},
              {"support", support},
              {"generator_support", gens},
              {"reduced",
               {{"vars", r.reduced.ring.var_names},
                {"weights", [&] {
                   json a = json::array();
                   for (const auto& w : r.reduced.ring.weights) a.push_back(to_i64(w));
                   return a;
                 }()},
                {"elements", reduced_elems}}}};
}

// Custom Koszul problems: {"vars":[{"name","weight","invertible"}...],
// "elements":[[{"coeff":"p/q","exps":[..]},...],...]}.
inline KoszulProblem koszul_problem_from_json(const json& j) {
  KoszulProblem p;
  for (const auto& v : j.at("vars")) {
    p.ring.var_names.push_back(v.at("name").get<std::string>());
    p.ring.weights.emplace_back(v.at("weight").get<std::int64_t>());
    p.ring.invertible.push_back(v.value("invertible", false));
  }
  size_t n = p.ring.nvars();
  for (const auto& fe : j.at("elements")) {
    Poly f;
    for (const auto& term : fe) {
      Expv e = term.at("exps").get<std::vector<int>>();
      if (e.size() != n) throw std::invalid_argument("koszul element: bad exponent length");
      f.add_term(e, rat_from_string(term.at("coeff").get<std::string>()));
    }
    p.elements.push_back(std::move(f));
  }
  return p;
}

}  // namespace flopkit
