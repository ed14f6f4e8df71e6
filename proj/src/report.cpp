#include "kcs/report.hpp"

#include <sstream>

namespace kcs {

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const GaussianRational& z) {
  Json j;
  j["re"] = z.re().str();
  j["im"] = z.im().str();
  return j;
}

Json to_json(const Inertia& in) {
  return Json{{"positive", in.positive}, {"negative", in.negative}, {"zero", in.zero}};
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json class_json(const IntersectionRing& r, const ClassVector& c) {
  Json j;
  j["degree"] = c.degree();
  j["literal"] = format_class(r, c);
  Json coeffs = Json::array();
  for (const auto& z : c.coeffs()) coeffs.push_back(to_json(z));
  j["coeffs"] = std::move(coeffs);
  if (c.flag() != Positivity::none) j["flag"] = to_string(c.flag());
  return j;
}

Json to_json(const ValidationReport& rep) {
  Json j;
  j["ok"] = rep.ok();
  j["checks"] = rep.checks;
  Json issues = Json::array();
  for (const auto& i : rep.issues) {
    issues.push_back(Json{{"constraint", i.constraint}, {"location", i.location}, {"detail", i.detail}});
  }
  j["issues"] = std::move(issues);
  return j;
}

Json to_json(const KahlerSanityReport& rep) {
  Json j;
  j["passed"] = rep.passed;
  j["volume"] = to_json(rep.volume);
  j["non_injective_degrees"] = rep.non_injective_degrees;
  j["h11_inertia"] = rep.h11_inertia ? to_json(*rep.h11_inertia) : Json();
  j["failures"] = rep.failures;
  return j;
}

Json setup_json(const IntersectionRing& r, const MixedSetup& setup) {
  Json j;
  j["p"] = setup.p();
  j["mode"] = to_string(setup.mode());
  j["omega"] = class_json(r, setup.omega());
  Json omegas = Json::array();
  for (const auto& c : setup.omegas()) omegas.push_back(class_json(r, c));
  j["omegas"] = std::move(omegas);
  j["volume"] = to_json(setup.volume());
  return j;
}

Json to_json(const SymmetricFormReport& rep) {
  Json j;
  j["p"] = rep.p;
  j["sign_factor"] = rep.sign_factor;
  j["gram"] = to_json(rep.gram);
  j["inertia"] = to_json(rep.inertia);
  j["unsigned_inertia"] = to_json(rep.unsigned_inertia);
  return j;
}

Json hr_json(const IntersectionRing& r, const HrReport& rep) {
  Json j;
  j["p"] = rep.p;
  j["passed"] = rep.passed();
  Json basis = Json::array();
  for (const auto& c : rep.primitive.basis) basis.push_back(format_class(r, c));
  j["primitive_dimension"] = rep.primitive.dimension();
  j["expected_dimension"] = rep.expected_dimension;
  j["dimension_ok"] = rep.dimension_ok;
  j["primitive_basis"] = std::move(basis);
  j["restricted_gram"] = to_json(rep.restricted);
  j["restricted_inertia"] = to_json(rep.restricted_inertia);
  j["positive_definite"] = rep.positive_definite;
  j["h11_unsigned_inertia"] = to_json(rep.h11_unsigned_inertia);
  j["h11_ok"] = rep.h11_ok;
  j["violations"] = rep.violations;
  return j;
}

Json decomposition_json(const IntersectionRing& r, const DecompositionResult& d) {
  Json j;
  j["p"] = d.p;
  j["lambda"] = to_json(d.lambda);
  j["lambda_closed_form"] = to_json(d.lambda_closed_form);
  Json comps = Json::array();
  for (std::size_t i = 1; i <= d.components.size(); ++i) {
    comps.push_back(Json{{"i", i},
                         {"component", class_json(r, d.component(i))},
                         {"certificate_zero", d.certificates[i - 1].is_zero()}});
  }
  j["components"] = std::move(comps);
  j["certificates_zero"] = d.certificates_zero();
  j["odd_components_vanish"] = d.odd_components_vanish();
  j["even_components_vanish"] = d.even_components_vanish();
  return j;
}

Json to_json(const CsVerdict& v) {
  Json j;
  j["direction"] = to_string(v.direction);
  j["mode"] = to_string(v.mode);
  j["g"] = to_json(v.g_value);
  j["relation"] = to_string(v.relation);
  j["satisfied"] = v.satisfied;
  j["proportional"] = v.proportional;
  j["equality"] = to_string(v.equality);
  j["odd_components_vanish"] = v.odd_components_vanish ? Json(*v.odd_components_vanish) : Json();
  j["even_components_vanish"] = v.even_components_vanish ? Json(*v.even_components_vanish) : Json();
  return j;
}

Json to_json(const HodgeCondition& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["holds"] = c.holds;
  j["first"] = c.first;
  j["last"] = c.last;
  j["failing"] = c.failing;
  return j;
}

Json counterexample_json(const IntersectionRing& r, const Counterexample& ce) {
  Json j;
  j["direction"] = to_string(ce.direction);
  j["i0"] = ce.i0;
  j["level"] = ce.level;
  j["primitive"] = class_json(r, ce.primitive);
  j["theta"] = class_json(r, ce.theta);
  j["g"] = to_json(ce.g);
  return j;
}

Json theorem_json(const IntersectionRing& r, const TheoremReport& rep) {
  Json j;
  j["p"] = rep.p;
  j["seed"] = rep.seed;
  j["condition_cs"] = to_json(rep.condition_cs);
  j["condition_opposite"] = to_json(rep.condition_opp);
  j["samples_tested"] = rep.samples_tested;
  j["equalities"] = rep.equalities;
  j["proportional_samples"] = rep.proportional_samples;
  Json samples = Json::array();
  for (const auto& s : rep.samples) {
    samples.push_back(
        Json{{"index", s.index}, {"g", to_json(s.g)}, {"relation", to_string(s.relation)}, {"proportional", s.proportional}});
  }
  j["samples"] = std::move(samples);
  Json violations = Json::array();
  for (const auto& v : rep.violations) {
    violations.push_back(
        Json{{"index", v.index}, {"reason", v.reason}, {"alpha", class_json(r, v.alpha)}, {"g", to_json(v.g)}});
  }
  j["violations"] = std::move(violations);
  Json ces = Json::array();
  for (const auto& ce : rep.counterexamples) ces.push_back(counterexample_json(r, ce));
  j["counterexamples"] = std::move(ces);
  return j;
}

Json to_json(const KtReport& rep) {
  Json j;
  j["mode"] = to_string(rep.mode);
  j["proportional"] = rep.proportional;
  j["holds"] = rep.holds();
  j["strict_everywhere"] = rep.strict_everywhere();
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    rows.push_back(Json{{"k", row.k},
                        {"middle", to_json(row.middle)},
                        {"lhs", to_json(row.lhs)},
                        {"rhs", to_json(row.rhs)},
                        {"holds", row.holds},
                        {"strict", row.strict}});
  }
  j["rows"] = std::move(rows);
  return j;
}

Json bundle_summary_json(const RingBundle& b) {
  const IntersectionRing& r = b.ring;
  Json j;
  j["name"] = r.name();
  j["n"] = r.dim();
  j["hodge"] = r.hodge_numbers();
  j["basis"] = r.basis_labels();
  Json samples = Json::array();
  for (const auto& s : b.samples) {
    samples.push_back(Json{{"name", s.name}, {"literal", format_class(r, s.cls)}, {"flag", to_string(s.cls.flag())}});
  }
  j["samples"] = std::move(samples);
  if (!b.note.empty()) j["note"] = b.note;
  return j;
}

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

bool is_flat(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (!is_scalar(e) && !is_flat(e)) return false;
  return true;
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

std::string inline_text(const Json& j) {
  if (!j.is_array()) return scalar_text(j);
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + inline_text(j[i]);
  return s + "]";
}

bool is_gaussian(const Json& j) { return j.is_object() && j.size() == 2 && j.contains("re") && j.contains("im"); }

std::string gaussian_text(const Json& j) {
  const GaussianRational z(Rational::parse(j["re"].get<std::string>()), Rational::parse(j["im"].get<std::string>()));
  return z.str();
}

void render(const Json& j, std::size_t indent, std::ostringstream& out) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& item : j.items()) {
      const Json& v = item.value();
      if (is_gaussian(v)) {
        out << pad << item.key() << ": " << gaussian_text(v) << "\n";
      } else if (is_scalar(v) || (is_flat(v) && !v.empty())) {
        out << pad << item.key() << ": " << inline_text(v) << "\n";
      } else if (v.empty()) {
        out << pad << item.key() << ": " << (v.is_array() ? "[]" : "{}") << "\n";
      } else {
        out << pad << item.key() << ":\n";
        render(v, indent + 2, out);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (is_gaussian(e)) {
        out << pad << "- " << gaussian_text(e) << "\n";
      } else if (is_scalar(e) || is_flat(e)) {
        out << pad << "- " << inline_text(e) << "\n";
      } else {
        out << pad << "-\n";
        render(e, indent + 2, out);
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream out;
  render(j, 0, out);
  return out.str();
}

}  // namespace kcs
