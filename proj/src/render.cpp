#include "qpb/render.hpp"

#include <map>
#include <sstream>

namespace qpb {

namespace {

// "(xi - 2 h)" with an optional power.
std::string linear_factor(int m, int e) {
  std::ostringstream os;
  os << "(xi - ";
  if (m != 1) os << m << " ";
  os << "h)";
  if (e != 1) os << "^" << e;
  return os.str();
}

// Factored prod over the splitting type, each summand contributing
// (xi - m h)^{m-1} (first relation) or (xi - m h) (second relation);
// exponent-0 factors omitted; the empty product renders as "".
std::string factored_split_product(const BundleSpec& spec, bool twist_powers) {
  std::map<int, int> exponents;  // m -> accumulated exponent
  for (int m : spec.splitting()) exponents[m] += twist_powers ? m - 1 : 1;
  std::string out;
  for (const auto& [m, e] : exponents) {
    if (e == 0) continue;
    if (!out.empty()) out += " ";
    out += linear_factor(m, e);
  }
  return out;
}

std::string q_power(int d) {
  std::ostringstream os;
  os << "q";
  if (d != 1) os << "^" << d;
  return os.str();
}

Json term_json(int i, int j, int k, const Int& coeff) {
  Json t;
  t["i"] = i;
  t["j"] = j;
  t["k"] = k;
  t["coeff"] = coeff.get_str();
  return t;
}

Json poly_terms_json(const IntPoly& p) {
  Json arr = Json::array();
  for (const auto& [e, c] : p.terms())
    arr.push_back(term_json(e[0], e[1], e[2], c));
  return arr;
}

}  // namespace

std::string render_relations_text(const QuantumRelations& rel) {
  const BundleSpec& spec = rel.spec();
  std::ostringstream os;

  os << "f1: h^" << spec.n() + 1 << " = ";
  if (spec.is_split()) {
    // rhs1 = prod (xi - m h)^{m-1} q^{n+1+r-c_1}, kept factored.
    std::string prod = factored_split_product(spec, true);
    int d = spec.n() + 1 + spec.r() - static_cast<int>(spec.c1());
    if (!prod.empty()) os << prod << " ";
    os << q_power(d);
  } else {
    os << rel.rhs1().str();
  }
  os << "\n";

  os << "f2: ";
  if (spec.is_split())
    os << factored_split_product(spec, false);
  else
    os << classical_lhs2(spec).str();
  os << " = " << rel.rhs2().str() << "\n";
  return os.str();
}

std::string render_template_text(const RelationTemplate& tpl) {
  const BundleSpec& spec = tpl.spec();
  std::ostringstream os;

  auto emit_terms = [&os](const RelationTemplate::Holes& holes,
                          const char* name, int lhs_degree, bool leading) {
    bool first = leading;
    for (const auto& [ij, v] : holes) {
      const auto [i, j] = ij;
      if (v && *v == 0) continue;
      std::ostringstream mono;
      if (i > 0) mono << "h" << (i > 1 ? "^" + std::to_string(i) : "") << " ";
      if (j > 0) mono << "xi" << (j > 1 ? "^" + std::to_string(j) : "") << " ";
      mono << q_power(lhs_degree - i - j);
      if (v) {
        Int c = *v;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Int a = abs(c);
        if (a != 1) os << a.get_str() << " ";
        os << mono.str();
      } else {
        if (!first) os << " + ";
        first = false;
        os << name << "(" << i << "," << j << ") " << mono.str();
      }
    }
    if (first) os << "0";
  };

  os << "f1: h^" << spec.n() + 1 << " = ";
  emit_terms(tpl.a(), "a", spec.n() + 1, true);
  os << "\n";
  os << "f2: " << classical_lhs2(spec).str() << " = "
     << q_power(spec.r());
  emit_terms(tpl.b(), "b", spec.r(), false);
  os << "\n";
  return os.str();
}

Json spec_json(const BundleSpec& spec) {
  Json j;
  j["kind"] = spec.is_split() ? "split" : "tangent";
  j["n"] = spec.n();
  j["r"] = spec.r();
  if (spec.is_split()) j["m"] = spec.splitting();
  Json chern = Json::array();
  for (const Int& c : spec.chern()) chern.push_back(c.get_str());
  j["chern"] = chern;
  return j;
}

Json relations_json(const QuantumRelations& rel) {
  const BundleSpec& spec = rel.spec();
  Json j;
  j["spec"] = spec_json(spec);
  Json f1;
  f1["lhs"] = poly_terms_json(classical_lhs1(spec));
  f1["rhs"] = poly_terms_json(rel.rhs1());
  Json f2;
  f2["lhs"] = poly_terms_json(classical_lhs2(spec));
  f2["rhs"] = poly_terms_json(rel.rhs2());
  j["f1"] = f1;
  j["f2"] = f2;
  j["text"] = render_relations_text(rel);
  return j;
}

Json template_json(const RelationTemplate& tpl) {
  const BundleSpec& spec = tpl.spec();
  Json j;
  j["spec"] = spec_json(spec);
  auto holes_json = [](const RelationTemplate::Holes& holes, int lhs_degree,
                       const char* name) {
    Json arr = Json::array();
    for (const auto& [ij, v] : holes) {
      Json t;
      t["i"] = ij.first;
      t["j"] = ij.second;
      t["k"] = lhs_degree - ij.first - ij.second;
      if (v)
        t["coeff"] = v->get_str();
      else
        t["hole"] = std::string(name) + "(" + std::to_string(ij.first) + "," +
                    std::to_string(ij.second) + ")";
      arr.push_back(t);
    }
    return arr;
  };
  j["f1_rhs"] = holes_json(tpl.a(), spec.n() + 1, "a");
  Json f2 = Json::array();
  f2.push_back(term_json(0, 0, spec.r(), 1));
  for (const auto& t : holes_json(tpl.b(), spec.r(), "b")) f2.push_back(t);
  j["f2_rhs"] = f2;
  j["complete"] = tpl.complete();
  j["text"] = render_template_text(tpl);
  return j;
}

Json hypothesis_json(const BundleSpec& spec, const HypothesisReport& rep) {
  Json j;
  j["spec"] = spec_json(spec);
  j["split_closed_form_bound"] = rep.split_closed_form_bound;
  j["template_c1_le_n"] = rep.template_c1_le_n;
  j["template_twist_nef"] = rep.template_twist_nef;
  j["leading_coeff_bound"] = rep.leading_coeff_bound;
  j["f1_single_ray_bound"] = rep.f1_single_ray_bound;
  j["f2_single_ray_bound"] = rep.f2_single_ray_bound;
  j["small_c1_ray_bound"] = rep.small_c1_ray_bound;
  j["twist_nef"] = rep.twist_nef;
  j["xi_m1h_nef"] = rep.xi_m1h_nef;
  return j;
}

Json gw_json(const GwQuery& q, const GwResult& res) {
  Json j;
  Json query;
  query["spec"] = spec_json(q.spec);
  query["curve"] = {{"a", q.curve.a}, {"b", q.curve.b}};
  Json ins = Json::array();
  for (const auto& [i, jx] : q.insertions)
    ins.push_back({{"i", i}, {"j", jx}});
  query["insertions"] = ins;
  j["query"] = query;
  j["status"] = res.known ? "known" : "unknown";
  if (res.known) j["value"] = res.value.get_str();
  j["provenance"] = res.provenance;
  if (!res.note.empty()) j["note"] = res.note;
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qpb
