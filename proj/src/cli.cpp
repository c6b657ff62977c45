#include "vanishlab/cli.hpp"

#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "vanishlab/expoly.hpp"
#include "vanishlab/report.hpp"

namespace vanishlab::cli {

namespace {

class Inputs {
 public:
  explicit Inputs(std::istream& in) : in_(in) {}

  /// The text itself, or stdin when it is "-".
  std::string text(const std::string& value) {
    if (value != "-") return value;
    if (!stdin_) {
      std::string all{std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
      while (!all.empty() && std::isspace(static_cast<unsigned char>(all.back()))) all.pop_back();
      stdin_ = all;
    }
    return *stdin_;
  }

 private:
  std::istream& in_;
  std::optional<std::string> stdin_;
};

ExponentVector to_exponent(const Point& p, const char* what) {
  std::vector<std::int64_t> out;
  for (const auto& x : p) {
    if (denominator(x) != 1 || x < 0)
      throw DomainError(std::string(what) + " must have nonnegative integer entries");
    out.push_back(numerator(x).convert_to<std::int64_t>());
  }
  return ExponentVector(std::move(out));
}

int case_exit(const CaseVerdict& v) {
  switch (v.status()) {
    case CaseStatus::Confirmed: return kConfirmed;
    case CaseStatus::HypothesisFails:
    case CaseStatus::CheckFailed: return kFailed;
    case CaseStatus::Inconclusive: return kInconclusive;
  }
  return kUsage;
}

int profile_exit(const VanishingProfile& p) {
  if (p.first_hypothesis_failure) return kFailed;
  return p.target_vanishes_from ? kConfirmed : kInconclusive;
}

struct Args {
  std::string format = "text";
  std::string vars = "x,y";
  std::string op, p, g = "1", f, phi, a = "1", b = "1";
  std::string alpha, beta, sigma, point, u;
  std::int64_t horizon = kDefaultHorizon;
  std::int64_t precision = 12;
  std::int64_t d = 0, r = 0;
  bool homogeneous = false;
};

void add_horizon(CLI::App* app, Args& a) {
  app->add_option("-M,--horizon", a.horizon, "largest m examined")
      ->envname("VANISHLAB_HORIZON")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err) {
  Args a;
  CLI::App app{"Exact checks of the vanishing conjecture for differential operators", "vanishlab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", a.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}));

  auto* vanish = app.add_subcommand("vanish", "Lambda^m(P^m) and Lambda^m(P^m g) for m <= M");
  vanish->add_option("--vars", a.vars, "variable names")->required();
  vanish->add_option("--op", a.op, "operator symbol in dx, dy, ...")->required();
  vanish->add_option("--p", a.p, "polynomial P")->required();
  vanish->add_option("--g", a.g, "polynomial g");
  add_horizon(vanish, a);

  auto* polytope = app.add_subcommand("polytope", "orthant test, certificate and move-away bound");
  polytope->add_option("--sigma", a.sigma, "generators (a,b);(c,d);...")->required();
  polytope->add_option("--beta", a.beta, "translation point for the move-away bound");
  polytope->add_option("--point", a.point, "point to test for membership");
  polytope->add_option("--vars", a.vars, "variable names (informational)");

  auto* density = app.add_subcommand("density", "lattice points of Supp(P^m) on a ray");
  density->add_option("--vars", a.vars, "variable names")->required();
  density->add_option("--p", a.p, "polynomial P")->required();
  density->add_option("--u", a.u, "direction u in Poly(P)")->required();
  density->add_flag("--homogeneous", a.homogeneous, "search m*u in Supp(P^m)");
  add_horizon(density, a);

  auto* dk = app.add_subcommand("dk", "constant terms of f^m for a Laurent polynomial f");
  dk->add_option("--vars", a.vars, "variable names")->required();
  dk->add_option("--f", a.f, "Laurent polynomial f")->required();
  add_horizon(dk, a);

  auto* cases = app.add_subcommand("case", "solved cases of the conjecture");
  cases->require_subcommand(1);
  auto* one_var = cases->add_subcommand("one-var", "one variable");
  one_var->add_option("--vars", a.vars, "variable name");
  one_var->add_option("--op", a.op, "operator symbol")->required();
  one_var->add_option("--p", a.p, "polynomial P")->required();
  one_var->add_option("--g", a.g, "polynomial g");
  add_horizon(one_var, a);

  auto* phi = cases->add_subcommand("phi", "Lambda = dx - Phi(dy), P = e^{x Phi(dy)} f(y)");
  phi->add_option("--vars", a.vars, "variable names x,y");
  phi->add_option("--phi", a.phi, "Phi in dy")->required();
  phi->add_option("--f", a.f, "f in y")->required();
  phi->add_option("--g", a.g, "polynomial g in x,y");
  add_horizon(phi, a);

  auto* monomial = cases->add_subcommand("monomial", "P = z^alpha, general Lambda");
  monomial->add_option("--vars", a.vars, "variable names");
  monomial->add_option("--op", a.op, "operator symbol")->required();
  monomial->add_option("--alpha", a.alpha, "exponent of P")->required();
  monomial->add_option("--g", a.g, "polynomial g");
  add_horizon(monomial, a);

  auto* monomial_op = cases->add_subcommand("monomial-op", "Lambda = d^alpha, general P");
  monomial_op->add_option("--vars", a.vars, "variable names");
  monomial_op->add_option("--alpha", a.alpha, "exponent of Lambda")->required();
  monomial_op->add_option("--p", a.p, "polynomial P")->required();
  monomial_op->add_option("--g", a.g, "polynomial g");
  add_horizon(monomial_op, a);

  auto* two = cases->add_subcommand("two-monomial", "Lambda = a d^alpha + b d^beta, P homogeneous");
  two->add_option("--vars", a.vars, "variable names");
  two->add_option("--a", a.a, "coefficient a");
  two->add_option("--alpha", a.alpha, "exponent alpha")->required();
  two->add_option("--b", a.b, "coefficient b");
  two->add_option("--beta", a.beta, "exponent beta")->required();
  two->add_option("--p", a.p, "homogeneous polynomial P")->required();
  two->add_option("--g", a.g, "polynomial g");
  add_horizon(two, a);

  auto* two_p =
      cases->add_subcommand("two-monomial-p", "P = a z^alpha + b z^beta, Lambda homogeneous");
  two_p->add_option("--vars", a.vars, "variable names");
  two_p->add_option("--op", a.op, "homogeneous operator symbol")->required();
  two_p->add_option("--a", a.a, "coefficient a");
  two_p->add_option("--alpha", a.alpha, "exponent alpha")->required();
  two_p->add_option("--b", a.b, "coefficient b");
  two_p->add_option("--beta", a.beta, "exponent beta")->required();
  two_p->add_option("--g", a.g, "polynomial g");
  add_horizon(two_p, a);

  auto* gap = cases->add_subcommand("binomial-gap", "C(2d,r) >= 2^r C(d,r) and the leading term");
  gap->add_option("--d", a.d, "d")->required()->check(CLI::NonNegativeNumber);
  gap->add_option("--r", a.r, "r")->required()->check(CLI::NonNegativeNumber);

  auto* counter = app.add_subcommand("counterexample", "formal-series counterexamples");
  counter->require_subcommand(1);
  auto* ddv = counter->add_subcommand("ddv", "P = x + e^y, Lambda = dx dy");
  auto* dks = counter->add_subcommand("dk", "f = y^-1 (1 + x^-1 e^y), g = x");
  for (auto* sub : {ddv, dks}) {
    add_horizon(sub, a);
    sub->add_option("-D,--precision", a.precision, "series precision in y")
        ->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kConfirmed : kUsage;
  }

  const Format format = a.format == "structured" ? Format::Structured : Format::Text;
  Inputs inputs(in);
  try {
    const VarNames vars = parse_var_list(a.vars);
    const VarNames ops = operator_names(vars);
    auto poly = [&](const std::string& s) { return parse_poly(inputs.text(s), vars); };
    auto symbol = [&](const std::string& s) { return DiffOp(parse_poly(inputs.text(s), ops)); };
    auto emit = [&](const Records& r, int code) {
      write_records(out, r, format);
      return code;
    };

    if (*vanish) {
      auto prof = vanishing_profile(symbol(a.op), poly(a.p), poly(a.g), a.horizon);
      return emit(profile_records(prof, vars), profile_exit(prof));
    }
    if (*polytope) {
      auto gens = parse_point_list(a.sigma);
      if (gens.empty()) throw DomainError("--sigma needs at least one generator");
      RationalPolytope sigma(gens.front().size(), gens);
      auto meet = orthant_meet(sigma);
      Records r = meet_records(meet);
      if (!a.beta.empty()) {
        Json rec{{"record", "moveaway"}, {"beta", point_json(parse_point(a.beta))}};
        if (auto* c = std::get_if<SeparationCertificate>(&meet))
          rec["N"] = moveaway_bound(parse_point(a.beta), sigma, *c);
        else
          rec["N"] = nullptr;
        r.push_back(rec);
      }
      if (!a.point.empty()) {
        auto w = parse_point(a.point);
        auto weights = contains_point(sigma, w);
        r.push_back(Json{{"record", "contains"},
                         {"point", point_json(w)},
                         {"inside", weights.has_value()},
                         {"weights", weights ? point_json(*weights) : Json(nullptr)}});
      }
      return emit(r, kConfirmed);
    }
    if (*density) {
      auto p = poly(a.p);
      auto u = parse_point(a.u);
      if (a.homogeneous) {
        auto ms = homogeneous_density(p, u, a.horizon);
        return emit({Json{{"record", "summary"},
                          {"kind", "homogeneous-density"},
                          {"u", point_json(u)},
                          {"horizon", a.horizon},
                          {"hit_m", ms}}},
                    ms.empty() ? kInconclusive : kConfirmed);
      }
      auto rep = ray_hits_support(p, u, a.horizon);
      return emit(ray_records(rep, vars),
                  rep.verdict == RayVerdict::Found ? kConfirmed : kInconclusive);
    }
    if (*dk) {
      auto rep = dk_check(poly(a.f), a.horizon);
      int code = rep.verdict == DkVerdict::Consistent        ? kConfirmed
                 : rep.verdict == DkVerdict::HypothesisFails ? kFailed
                                                             : kInconclusive;
      return emit(dk_records(rep), code);
    }
    if (*cases) {
      std::optional<CaseVerdict> v;
      if (*gap) {
        auto res = binomial_gap_check(a.d, a.r);
        return emit(binomial_gap_records(a.d, a.r, res), res.holds() ? kConfirmed : kFailed);
      }
      if (*one_var) {
        VarNames one = vars.size() == 2 && a.vars == "x,y" ? VarNames{"x"} : vars;
        auto p1 = parse_poly(inputs.text(a.p), one);
        auto g1 = parse_poly(inputs.text(a.g), one);
        auto op1 = DiffOp(parse_poly(inputs.text(a.op), operator_names(one)));
        auto verdict = one_var_check(op1, p1, g1, a.horizon);
        return emit(case_records(verdict, one), case_exit(verdict));
      }
      if (*phi) {
        if (vars.size() != 2) throw DomainError("case phi needs exactly two variables");
        auto phi1 = parse_poly(inputs.text(a.phi), VarNames{ops[1]});
        auto f1 = parse_poly(inputs.text(a.f), VarNames{vars[1]});
        v = phi_case_check(phi1, f1, poly(a.g), a.horizon);
      } else if (*monomial) {
        v = monomial_case_check(symbol(a.op), to_exponent(parse_point(a.alpha), "alpha"),
                                poly(a.g), a.horizon);
      } else if (*monomial_op) {
        v = monomial_operator_case_check(to_exponent(parse_point(a.alpha), "alpha"), poly(a.p),
                                         poly(a.g), a.horizon);
      } else if (*two) {
        v = two_monomial_check(parse_rational(a.a), to_exponent(parse_point(a.alpha), "alpha"),
                               parse_rational(a.b), to_exponent(parse_point(a.beta), "beta"),
                               poly(a.p), poly(a.g), a.horizon);
      } else if (*two_p) {
        v = homogeneous_two_monomial_P_check(
            symbol(a.op), parse_rational(a.a), to_exponent(parse_point(a.alpha), "alpha"),
            parse_rational(a.b), to_exponent(parse_point(a.beta), "beta"), poly(a.g), a.horizon);
      }
      return emit(case_records(*v, vars), case_exit(*v));
    }
    if (*ddv) {
      auto rep = counterexample_ddv(a.horizon, a.precision);
      return emit(ddv_records(rep), rep.passed() ? kConfirmed : kFailed);
    }
    if (*dks) {
      auto rep = counterexample_dk(a.horizon, a.precision);
      return emit(dk_series_records(rep), rep.passed() ? kConfirmed : kFailed);
    }
  } catch (const ParseError& e) {
    err << "parse error at position " << e.position() << ": " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace vanishlab::cli
