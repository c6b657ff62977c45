#include "vanishlab/report.hpp"

#include <ostream>

namespace vanishlab {

namespace {

Json optional_int(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::string series_text(const TruncSeries& s, const VarNames& vars) {
  std::string out = format_poly(s.body(), vars);
  for (std::size_t v = 0; v < s.arity(); ++v)
    if (auto d = s.precision(v)) out += " + O(" + vars[v] + "^" + std::to_string(*d + 1) + ")";
  return out;
}

std::string value_text(const Json& j) {
  if (j.is_null()) return "-";
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string out = "(";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? "," : "") + value_text(j[i]);
    return out + ")";
  }
  if (j.is_object()) {
    std::string out = "{";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      out += (first ? "" : " ") + k + "=" + value_text(v);
      first = false;
    }
    return out + "}";
  }
  return j.dump();
}

}  // namespace

Json fraction(const Rational& q) { return to_string(q); }

Json point_json(const Point& p) {
  Json out = Json::array();
  for (const auto& x : p) out.push_back(fraction(x));
  return out;
}

Json certificate_json(const SeparationCertificate& c) {
  return Json{{"c", point_json(c.c)}, {"delta", fraction(c.delta)}};
}

Json witness_json(const OrthantWitness& w) {
  return Json{{"point", point_json(w.point)}, {"weights", point_json(w.weights)}};
}

Records profile_records(const VanishingProfile& prof, const VarNames& vars) {
  Records out;
  for (const auto& s : prof.steps)
    out.push_back(Json{{"record", "step"},
                       {"m", s.m},
                       {"hypothesis", format_poly(s.hypothesis, vars)},
                       {"target", format_poly(s.target, vars)}});
  Json summary{{"record", "summary"}, {"kind", "vanish"}, {"horizon", prof.horizon}};
  summary["first_hypothesis_failure"] = optional_int(prof.first_hypothesis_failure);
  summary["first_target_failure"] = optional_int(prof.first_target_failure);
  summary["target_vanishes_from"] = optional_int(prof.target_vanishes_from);
  if (prof.first_hypothesis_failure) {
    summary["verdict"] = "hypothesis-fails";
    summary["residual"] =
        format_poly(prof.steps[*prof.first_hypothesis_failure - 1].hypothesis, vars);
  } else if (prof.target_vanishes_from) {
    summary["verdict"] = "verified-to-horizon";
  } else {
    summary["verdict"] = "inconclusive";
  }
  out.push_back(summary);
  return out;
}

Records case_records(const CaseVerdict& v, const VarNames& vars) {
  Records out;
  for (const auto& c : v.checks)
    out.push_back(Json{{"record", "check"},
                       {"name", c.name},
                       {"passed", c.passed},
                       {"hypothesis", c.hypothesis}});
  for (const auto& r : v.residuals)
    out.push_back(Json{{"record", "residual"},
                       {"m", r.m},
                       {"label", r.label},
                       {"value", format_poly(r.value, vars)}});
  for (const auto& a : v.anomalies) out.push_back(Json{{"record", "anomaly"}, {"text", a}});

  Json s{{"record", "summary"},
         {"kind", "case"},
         {"case", v.case_name},
         {"status", to_string(v.status())},
         {"horizon", v.horizon}};
  s["bound"] = v.bound ? fraction(*v.bound) : Json(nullptr);
  s["verified"] = v.verified_first <= v.verified_last
                      ? Json::array({v.verified_first, v.verified_last})
                      : Json(nullptr);
  s["moveaway"] = optional_int(v.moveaway);
  s["certificate"] = v.certificate ? certificate_json(*v.certificate) : Json(nullptr);
  s["witness"] = v.witness ? witness_json(*v.witness) : Json(nullptr);
  if (v.witness_pair)
    s["witness_pair"] = Json{{"u", point_json(v.witness_pair->first)},
                             {"v", point_json(v.witness_pair->second)}};
  out.push_back(s);
  return out;
}

Records meet_records(const OrthantMeet& meet) {
  Json s{{"record", "meet"}};
  if (auto* c = std::get_if<SeparationCertificate>(&meet)) {
    s["result"] = "disjoint";
    s["certificate"] = certificate_json(*c);
  } else {
    s["result"] = "meets";
    s["witness"] = witness_json(std::get<OrthantWitness>(meet));
  }
  return {s};
}

Records ray_records(const RaySearchReport& r, const VarNames& vars) {
  Records out;
  Json ms = Json::array();
  for (const auto& h : r.hits) {
    out.push_back(Json{{"record", "hit"},
                       {"m", h.m},
                       {"lambda", format_exponent(h.lambda)},
                       {"monomial", format_poly(LaurentPoly::monomial(h.lambda), vars)}});
    if (ms.empty() || ms.back() != h.m) ms.push_back(h.m);
  }
  out.push_back(Json{{"record", "summary"},
                     {"kind", "density"},
                     {"u", point_json(r.u)},
                     {"horizon", r.horizon},
                     {"hit_m", ms},
                     {"verdict", to_string(r.verdict)}});
  return out;
}

Records dk_records(const DkReport& r) {
  Records out;
  for (std::size_t i = 0; i < r.constant_terms.size(); ++i)
    out.push_back(Json{{"record", "constant-term"},
                       {"m", static_cast<std::int64_t>(i + 1)},
                       {"value", fraction(r.constant_terms[i])}});
  out.push_back(Json{{"record", "summary"},
                     {"kind", "dk"},
                     {"horizon", r.horizon},
                     {"first_nonzero", optional_int(r.first_nonzero)},
                     {"origin_in_polytope", r.origin_in_polytope},
                     {"verdict", to_string(r.verdict)}});
  return out;
}

Records ddv_records(const DdvReport& r) {
  const VarNames vars{"x", "y"};
  Records out;
  for (const auto& row : r.rows)
    out.push_back(Json{{"record", "row"},
                       {"m", row.m},
                       {"precision", row.precision},
                       {"hypothesis_zero", row.hypothesis_zero},
                       {"next_power_matches", row.next_power_matches},
                       {"next_power_x_free", row.next_power_x_free},
                       {"target_matches", row.target_matches},
                       {"next_power", series_text(row.next_power, vars)},
                       {"target", series_text(row.target, vars)}});
  out.push_back(Json{{"record", "summary"},
                     {"kind", "counterexample-ddv"},
                     {"horizon", r.horizon},
                     {"precision", r.precision},
                     {"passed", r.passed()}});
  return out;
}

Records dk_series_records(const DkSeriesReport& r) {
  Records out;
  for (const auto& row : r.rows)
    out.push_back(Json{{"record", "row"},
                       {"m", row.m},
                       {"constant_term", fraction(row.constant_term)},
                       {"constant_term_g", fraction(row.constant_term_g)},
                       {"expected_g", fraction(row.expected_g)},
                       {"x_range_ok", row.x_range_ok}});
  out.push_back(Json{{"record", "summary"},
                     {"kind", "counterexample-dk"},
                     {"horizon", r.horizon},
                     {"precision", r.precision},
                     {"passed", r.passed()}});
  return out;
}

Records binomial_gap_records(std::int64_t d, std::int64_t r, const BinomialGap& gap) {
  return {Json{{"record", "summary"},
               {"kind", "binomial-gap"},
               {"d", d},
               {"r", r},
               {"lhs", gap.lhs.str()},
               {"rhs", gap.rhs.str()},
               {"expression", gap.expression ? Json(gap.expression->str()) : Json(nullptr)},
               {"holds", gap.holds()}}};
}

void write_records(std::ostream& out, const Records& records, Format format) {
  for (const auto& rec : records) {
    if (format == Format::Structured) {
      out << rec.dump() << '\n';
      continue;
    }
    out << rec.value("record", std::string("record"));
    for (const auto& [k, v] : rec.items())
      if (k != "record") out << "  " << k << '=' << value_text(v);
    out << '\n';
  }
}

}  // namespace vanishlab
