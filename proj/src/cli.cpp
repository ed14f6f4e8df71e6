#include "kcs/cli.hpp"

#include <algorithm>
#include <optional>

#include "CLI11.hpp"
#include "kcs/report.hpp"
#include "kcs/sampling.hpp"
#include "kcs/zoo.hpp"

namespace kcs {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string output = "text";
  std::uint64_t seed = 0;
  std::int64_t height = 10;
  std::string ring;
  std::string zoo_name;
  std::size_t p = 1;
  std::string alpha;
  std::string omega;
  std::vector<std::string> omegas;
  std::string direction = "cs";
  bool direction_given = false;
  std::size_t samples = 100;
  std::string d1;
  std::string d2;
};

/// Degree-1 reference class: "@sample", "nef:<literal>", or a literal that
/// must pass the Kahler sanity checks.
ClassVector parse_reference(const RingBundle& b, const std::string& text) {
  std::string body = text;
  const bool nef = body.rfind("nef:", 0) == 0;
  if (nef) body = body.substr(4);
  ClassVector c = parse_class_literal(b, body);
  if (c.degree() != 1) throw UsageError("reference class '" + text + "' must have degree 1");
  if (!c.is_real()) throw UsageError("reference class '" + text + "' must be real");
  if (nef) return c.with_flag(Positivity::nef);
  if (c.flag() != Positivity::none) return c;
  const KahlerSanityReport rep = sanity_check_kahler(b.ring, c);
  if (!rep.passed) {
    throw UsageError("'" + text + "' is not accepted as a Kahler class (" + rep.failures.front() +
                     "); prefix it with nef: to use it as a nef class");
  }
  return rep.checked;
}

ClassVector parse_alpha(const RingBundle& b, const std::string& text, std::size_t p) {
  if (text.empty()) throw UsageError("--alpha is required");
  ClassVector a = parse_class_literal(b, text);
  if (a.degree() != p) {
    throw UsageError("alpha has degree " + std::to_string(a.degree()) + " but -p is " + std::to_string(p));
  }
  return a;
}

ClassVector default_omega(const RingBundle& b) {
  for (const auto& s : b.samples)
    if (s.cls.flag() == Positivity::kahler) return s.cls;
  throw UsageError("ring declares no kahler sample; pass --omega");
}

MixedSetup build_setup(const RingBundle& b, const Options& o) {
  const IntersectionRing& r = b.ring;
  if (o.p < 1 || 2 * o.p > r.dim()) {
    throw UsageError("-p must satisfy 1 <= p <= n/2 (n = " + std::to_string(r.dim()) + ")");
  }
  ClassVector omega = o.omega.empty() ? default_omega(b) : parse_reference(b, o.omega);
  std::vector<ClassVector> omegas;
  if (o.omegas.empty()) {
    omegas.assign(r.dim() - 2 * o.p, omega);
  } else {
    for (const auto& s : o.omegas) omegas.push_back(parse_reference(b, s));
  }
  return MixedSetup::make(r, o.p, std::move(omega), std::move(omegas));
}

struct Outcome {
  Json result;
  int code = exit_ok;
};

Outcome cmd_info(const RingBundle& b) {
  Outcome o;
  o.result = bundle_summary_json(b);
  o.result["validation"] = to_json(validate_ring(b.ring));
  Json sanity = Json::array();
  for (const auto& s : b.samples) {
    if (s.cls.flag() != Positivity::kahler) continue;
    Json j = to_json(sanity_check_kahler(b.ring, s.cls));
    j["sample"] = s.name;
    sanity.push_back(std::move(j));
  }
  o.result["kahler_sanity"] = std::move(sanity);
  return o;
}

Outcome cmd_validate(const RingBundle& b) {
  Outcome o;
  const ValidationReport rep = validate_ring(b.ring);
  o.result = to_json(rep);
  bool ok = rep.ok();
  Json samples = Json::array();
  if (ok) {
    for (const auto& s : b.samples) {
      Json j{{"name", s.name}, {"flag", to_string(s.cls.flag())}};
      if (s.cls.flag() == Positivity::kahler) {
        const KahlerSanityReport kr = sanity_check_kahler(b.ring, s.cls);
        j["passed"] = kr.passed;
        j["failures"] = kr.failures;
        ok = ok && kr.passed;
      } else {
        const Rational vol = b.ring.integrate(b.ring.power(s.cls, b.ring.dim())).re();
        j["volume"] = to_json(vol);
        j["passed"] = vol.sign() >= 0;
        ok = ok && vol.sign() >= 0;
      }
      samples.push_back(std::move(j));
    }
  }
  o.result["samples"] = std::move(samples);
  o.result["ok"] = ok;
  o.code = ok ? exit_ok : exit_violation;
  return o;
}

Outcome cmd_zoo(const Options& opt) {
  Outcome o;
  if (!opt.zoo_name.empty()) {
    o.result = bundle_summary_json(load_bundled(opt.zoo_name));
    return o;
  }
  Json list = Json::array();
  for (const auto& name : catalogue()) {
    const ZooEntry e = load_bundled(name);
    list.push_back(Json{{"name", name}, {"n", e.ring.dim()}, {"hodge", e.ring.hodge_numbers()}});
  }
  o.result["data_directory"] = data_directory().string();
  o.result["entries"] = std::move(list);
  return o;
}

Outcome cmd_signature(const RingBundle& b, const Options& opt) {
  Outcome o;
  const MixedSetup setup = build_setup(b, opt);
  const IntersectionRing& r = b.ring;
  o.result["setup"] = setup_json(r, setup);
  o.result["form"] = to_json(gram_matrix_Q(r, opt.p, setup.omegas()));
  if (setup.mode() == SetupMode::strict) {
    const HrReport hr = hr_check(r, opt.p, setup.omega(), setup.omegas());
    o.result["hodge_riemann"] = hr_json(r, hr);
    if (!hr.passed()) o.code = exit_violation;
  }
  return o;
}

Outcome cmd_decompose(const RingBundle& b, const Options& opt) {
  Outcome o;
  const MixedSetup setup = build_setup(b, opt);
  if (setup.mode() != SetupMode::strict) throw UsageError("decompose needs Kahler reference classes");
  const IntersectionRing& r = b.ring;
  const ClassVector alpha = parse_alpha(b, opt.alpha, opt.p);
  const DecompositionResult d = mixed_lefschetz_decompose(r, alpha, setup);
  const bool reconstructs = reconstruct(r, d, setup) == alpha;
  const bool lambda_ok = d.lambda == d.lambda_closed_form;
  o.result["setup"] = setup_json(r, setup);
  o.result["alpha"] = class_json(r, alpha);
  o.result["decomposition"] = decomposition_json(r, d);
  o.result["reconstructs"] = reconstructs;
  o.result["lambda_agrees"] = lambda_ok;
  if (!reconstructs || !lambda_ok || !d.certificates_zero()) o.code = exit_violation;
  return o;
}

Outcome cmd_g(const RingBundle& b, const Options& opt) {
  Outcome o;
  const MixedSetup setup = build_setup(b, opt);
  const IntersectionRing& r = b.ring;
  const ClassVector alpha = parse_alpha(b, opt.alpha, opt.p);
  const Rational g = compute_g_direct(r, alpha, setup);
  o.result["setup"] = setup_json(r, setup);
  o.result["alpha"] = class_json(r, alpha);
  o.result["g"] = to_json(g);
  if (setup.mode() == SetupMode::strict) {
    const GDecomposition dec = compute_g_decomposed(r, alpha, setup);
    Json terms = Json::array();
    for (const auto& t : dec.terms) terms.push_back(to_json(t));
    o.result["g_decomposed"] = to_json(dec.value);
    o.result["terms"] = std::move(terms);
    o.result["routes_agree"] = dec.value == g;
    if (dec.value != g) o.code = exit_violation;
  }
  return o;
}

Outcome cmd_check(const RingBundle& b, const Options& opt) {
  Outcome o;
  const Direction dir = direction_from_string(opt.direction);
  const MixedSetup setup = build_setup(b, opt);
  const IntersectionRing& r = b.ring;
  const ClassVector alpha = parse_alpha(b, opt.alpha, opt.p);
  const CsVerdict v = check_cs(r, alpha, setup, dir);
  o.result["setup"] = setup_json(r, setup);
  o.result["alpha"] = class_json(r, alpha);
  o.result["verdict"] = to_json(v);
  o.result["hodge_condition"] = to_json(hodge_condition(r, opt.p, dir));
  o.code = v.satisfied ? exit_ok : exit_violation;
  return o;
}

Outcome cmd_verify(const RingBundle& b, const Options& opt) {
  Outcome o;
  const IntersectionRing& r = b.ring;
  if (opt.p < 1 || 2 * opt.p > r.dim()) throw UsageError("-p must satisfy 1 <= p <= n/2");
  VerifyOptions vo;
  vo.height = opt.height;
  const std::vector<ClassVector> gens = b.generators();
  const TheoremReport rep = verify_theorem(r, gens, opt.p, opt.samples, opt.seed, vo);
  o.result = theorem_json(r, rep);
  o.code = rep.violations.empty() ? exit_ok : exit_violation;
  return o;
}

Outcome cmd_counterexample(const RingBundle& b, const Options& opt) {
  Outcome o;
  const IntersectionRing& r = b.ring;
  const MixedSetup setup = build_setup(b, opt);
  if (setup.mode() != SetupMode::strict) throw UsageError("counterexample needs Kahler reference classes");
  o.result["setup"] = setup_json(r, setup);
  const std::vector<Direction> dirs = opt.direction_given
                                          ? std::vector<Direction>{direction_from_string(opt.direction)}
                                          : std::vector<Direction>{Direction::cs, Direction::opposite};
  Json list = Json::array();
  for (Direction d : dirs) {
    Json j;
    j["direction"] = to_string(d);
    j["condition"] = to_json(hodge_condition(r, opt.p, d));
    const auto ce = construct_counterexample(r, opt.p, setup, d);
    j["counterexample"] = ce ? counterexample_json(r, *ce) : Json();
    list.push_back(std::move(j));
  }
  o.result["directions"] = std::move(list);
  return o;
}

Outcome cmd_kt(const RingBundle& b, const Options& opt) {
  Outcome o;
  if (opt.d1.empty() || opt.d2.empty()) throw UsageError("kt needs --d1 and --d2");
  const IntersectionRing& r = b.ring;
  const ClassVector d1 = parse_reference(b, opt.d1);
  const ClassVector d2 = parse_reference(b, opt.d2);
  const KtReport rep = kt_chain(r, d1, d2);
  o.result["d1"] = class_json(r, d1);
  o.result["d2"] = class_json(r, d2);
  o.result["chain"] = to_json(rep);
  const bool strict_expected = rep.mode == SetupMode::strict && !rep.proportional;
  o.result["strict_expected"] = strict_expected;
  if (!rep.holds() || (strict_expected && !rep.strict_everywhere())) o.code = exit_violation;
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact checks of mixed Hodge-Riemann and Cauchy-Schwarz type inequalities on intersection rings", "kcs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--output", opt.output, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", opt.seed, "Seed of the sampling streams");
  app.add_option("--height", opt.height, "Height bound of random rationals")->check(CLI::PositiveNumber);

  const auto ring_positional = [&](CLI::App* sub) {
    sub->add_option("ring", opt.ring, "zoo:<name> or a ring bundle file")->required();
  };
  const auto reference_options = [&](CLI::App* sub) {
    sub->add_option("-p", opt.p, "Degree p");
    sub->add_option("--omega", opt.omega, "Reference class omega");
    sub->add_option("--omegas", opt.omegas, "Classes omega_1..omega_{n-2p}")->delimiter(',');
  };

  CLI::App* info = app.add_subcommand("info", "Describe a ring");
  ring_positional(info);
  CLI::App* validate = app.add_subcommand("validate", "Run the ring validators");
  ring_positional(validate);
  CLI::App* zoo = app.add_subcommand("zoo", "List bundled rings or show one");
  zoo->add_option("name", opt.zoo_name, "Catalogue name");
  CLI::App* signature = app.add_subcommand("signature", "Inertia of Q and the mixed Hodge-Riemann check");
  ring_positional(signature);
  reference_options(signature);
  CLI::App* decompose = app.add_subcommand("decompose", "Mixed Lefschetz decomposition of alpha");
  ring_positional(decompose);
  reference_options(decompose);
  decompose->add_option("--alpha", opt.alpha, "Class alpha of degree p")->required();
  CLI::App* g = app.add_subcommand("g", "Evaluate g(alpha, omega; Omega_p) by both routes");
  ring_positional(g);
  reference_options(g);
  g->add_option("--alpha", opt.alpha, "Class alpha of degree p")->required();
  CLI::App* check = app.add_subcommand("check", "Check one inequality instance");
  ring_positional(check);
  reference_options(check);
  check->add_option("--alpha", opt.alpha, "Class alpha of degree p")->required();
  check->add_option("--direction", opt.direction, "cs or opposite")->check(CLI::IsMember({"cs", "opposite"}));
  CLI::App* verify = app.add_subcommand("verify", "Seeded random test of the inequality");
  ring_positional(verify);
  verify->add_option("-p", opt.p, "Degree p");
  verify->add_option("--samples", opt.samples, "Number of samples");
  CLI::App* counterexample = app.add_subcommand("counterexample", "Construct theta violating the inequality");
  ring_positional(counterexample);
  reference_options(counterexample);
  counterexample->add_option("--direction", opt.direction, "cs or opposite")->check(CLI::IsMember({"cs", "opposite"}));
  CLI::App* kt = app.add_subcommand("kt", "Khovanskii-Teissier chain for two divisors");
  ring_positional(kt);
  kt->add_option("--d1", opt.d1, "First divisor")->required();
  kt->add_option("--d2", opt.d2, "Second divisor")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }
  opt.direction_given = counterexample->count("--direction") > 0;

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    Outcome outcome;
    std::optional<RingBundle> bundle;
    if (command == "zoo") {
      outcome = cmd_zoo(opt);
    } else {
      bundle.emplace(load_ring_argument(opt.ring, command != "validate"));
      if (command == "info") outcome = cmd_info(*bundle);
      else if (command == "validate") outcome = cmd_validate(*bundle);
      else if (command == "signature") outcome = cmd_signature(*bundle, opt);
      else if (command == "decompose") outcome = cmd_decompose(*bundle, opt);
      else if (command == "g") outcome = cmd_g(*bundle, opt);
      else if (command == "check") outcome = cmd_check(*bundle, opt);
      else if (command == "verify") outcome = cmd_verify(*bundle, opt);
      else if (command == "counterexample") outcome = cmd_counterexample(*bundle, opt);
      else outcome = cmd_kt(*bundle, opt);
    }

    Json report;
    report["command"] = command;
    report["argv"] = args;
    if (bundle) report["ring"] = bundle->ring.name();
    report["seed"] = opt.seed;
    report["height"] = opt.height;
    report["rng"] = Xoshiro256::algorithm;
    report["result"] = std::move(outcome.result);
    report["status"] = outcome.code == exit_ok ? "ok" : "violation";
    report["exit_code"] = outcome.code;
    if (opt.output == "json") out << report.dump(2) << "\n";
    else out << render_text(report);
    return outcome.code;
  } catch (const BundleError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "violation: " << e.what() << "\n";
    return exit_violation;
  }
}

}  // namespace kcs
