#include "kcs/inequality.hpp"

#include <algorithm>

#include "kcs/sampling.hpp"

namespace kcs {

const char* to_string(Direction d) { return d == Direction::cs ? "cs" : "opposite"; }

Direction direction_from_string(const std::string& s) {
  if (s == "cs") return Direction::cs;
  if (s == "opposite") return Direction::opposite;
  throw std::invalid_argument("direction must be 'cs' or 'opposite', got '" + s + "'");
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::strictly_positive:
      return "strictly_positive";
    case Relation::strictly_negative:
      return "strictly_negative";
    case Relation::zero:
      break;
  }
  return "zero";
}

const char* to_string(EqualityCase e) {
  switch (e) {
    case EqualityCase::proportional:
      return "proportional";
    case EqualityCase::non_proportional:
      return "non_proportional";
    case EqualityCase::uncharacterized:
      return "uncharacterized";
    case EqualityCase::none:
      break;
  }
  return "none";
}

namespace {

Relation relation_of(const Rational& g) {
  if (g.sign() > 0) return Relation::strictly_positive;
  if (g.sign() < 0) return Relation::strictly_negative;
  return Relation::zero;
}

Rational real_part_checked(const GaussianRational& z, const char* what) {
  if (!z.is_real()) throw std::logic_error(std::string(what) + " has a nonzero imaginary part");
  return z.re();
}

void require_degree(const ClassVector& alpha, const MixedSetup& setup) {
  if (alpha.degree() != setup.p()) {
    throw std::invalid_argument("alpha has degree " + std::to_string(alpha.degree()) + ", setup is for p = " +
                                std::to_string(setup.p()));
  }
}

}  // namespace

Rational compute_g_direct(const IntersectionRing& r, const ClassVector& alpha, const MixedSetup& setup) {
  r.check_class(alpha);
  require_degree(alpha, setup);
  const ClassVector abar = alpha.conj();
  const GaussianRational self = r.pairing(r.wedge(alpha, setup.omega_p_product()), abar);
  const GaussianRational mixed = r.pairing(alpha, setup.omega_power_product());
  const GaussianRational mixed_bar = r.pairing(abar, setup.omega_power_product());
  const GaussianRational g = self * GaussianRational(setup.volume()) - mixed * mixed_bar;
  return real_part_checked(g, "g");
}

GDecomposition compute_g_decomposed(const IntersectionRing& r, const ClassVector& alpha, const MixedSetup& setup) {
  GDecomposition out;
  out.decomposition = mixed_lefschetz_decompose(r, alpha, setup);
  out.volume = setup.volume();
  const std::size_t p = setup.p();
  Rational sum;
  for (std::size_t i = 1; i <= p; ++i) {
    const ClassVector& ai = out.decomposition.component(i);
    const ClassVector weight = r.wedge(r.power(setup.omega(), 2 * (p - i)), setup.omega_p_product());
    const Rational term = real_part_checked(r.pairing(r.wedge(ai, weight), ai.conj()), "decomposition term");
    sum += term;
    out.terms.push_back(term);
  }
  out.value = out.volume * sum;
  return out;
}

bool proportional_to_omega_power(const IntersectionRing& r, const ClassVector& alpha, const MixedSetup& setup) {
  const ClassVector wp = r.power(setup.omega(), setup.p());
  return rank(Matrix::from_rows({alpha.coeffs(), wp.coeffs()}, alpha.size())) <= 1;
}

CsVerdict check_cs(const IntersectionRing& r, const ClassVector& alpha, const MixedSetup& setup, Direction direction) {
  CsVerdict v;
  v.direction = direction;
  v.g_value = compute_g_direct(r, alpha, setup);
  v.relation = relation_of(v.g_value);
  v.satisfied = direction == Direction::cs ? v.g_value.sign() >= 0 : v.g_value.sign() <= 0;
  v.proportional = proportional_to_omega_power(r, alpha, setup);
  v.mode = setup.mode();
  if (v.relation == Relation::zero) {
    if (v.mode == SetupMode::boundary) {
      v.equality = EqualityCase::uncharacterized;
    } else {
      v.equality = v.proportional ? EqualityCase::proportional : EqualityCase::non_proportional;
    }
  }
  if (v.mode == SetupMode::strict) {
    try {
      const DecompositionResult d = mixed_lefschetz_decompose(r, alpha, setup);
      v.odd_components_vanish = d.odd_components_vanish();
      v.even_components_vanish = d.even_components_vanish();
    } catch (const DecompositionError&) {
      // Reported as absent flags; the g value stands on its own.
    }
  }
  return v;
}

HodgeCondition hodge_condition(const IntersectionRing& r, std::size_t p, Direction kind) {
  if (p < 1 || 2 * p > r.dim()) {
    throw std::invalid_argument("hodge_condition: p = " + std::to_string(p) + " is not in 1..floor(n/2)");
  }
  HodgeCondition c;
  c.kind = kind;
  if (kind == Direction::cs) {
    c.first = 0;
    c.last = static_cast<std::ptrdiff_t>((p + 1) / 2) - 1;
    for (std::size_t i = 0; static_cast<std::ptrdiff_t>(i) <= c.last; ++i)
      if (r.hodge(2 * i) != r.hodge(2 * i + 1)) c.failing.push_back(i);
  } else {
    c.first = 1;
    c.last = static_cast<std::ptrdiff_t>(p / 2);
    for (std::size_t i = 1; static_cast<std::ptrdiff_t>(i) <= c.last; ++i)
      if (r.hodge(2 * i - 1) != r.hodge(2 * i)) c.failing.push_back(i);
  }
  c.holds = c.failing.empty();
  return c;
}

std::optional<Counterexample> construct_counterexample(const IntersectionRing& r, std::size_t p,
                                                       const MixedSetup& setup, Direction kind) {
  if (setup.p() != p) throw std::invalid_argument("construct_counterexample: setup is for a different p");
  if (setup.mode() != SetupMode::strict) throw std::invalid_argument("construct_counterexample requires a strict setup");
  const HodgeCondition cond = hodge_condition(r, p, kind);
  if (cond.holds) return std::nullopt;

  Counterexample ce;
  ce.direction = kind;
  ce.i0 = cond.failing.front();
  ce.level = kind == Direction::cs ? 2 * ce.i0 + 1 : 2 * ce.i0;
  const ClassVector& omega = setup.omega();
  const ClassVector reference = r.wedge(r.power(omega, 2 * (p - ce.level)), setup.omega_p_product());
  const PrimitiveSubspace prim = primitive_basis_for(r, ce.level, omega, reference);
  if (prim.basis.empty()) {
    throw std::logic_error("no nonzero primitive class at degree " + std::to_string(ce.level) +
                           " although the Hodge numbers differ");
  }
  ce.primitive = prim.basis.front();
  ce.theta = r.power(omega, p) + r.wedge(ce.primitive, r.power(omega, p - ce.level));
  ce.g = compute_g_direct(r, ce.theta, setup);
  const bool violates = kind == Direction::cs ? ce.g.sign() < 0 : ce.g.sign() > 0;
  if (!violates) {
    throw std::runtime_error("constructed theta does not violate the inequality; the reference classes are not Kahler");
  }
  return ce;
}

MixedSetup canonical_setup(const IntersectionRing& r, std::size_t p, std::span<const ClassVector> generators) {
  const auto it = std::find_if(generators.begin(), generators.end(),
                               [](const ClassVector& c) { return c.flag() == Positivity::kahler; });
  if (it == generators.end()) throw std::invalid_argument("no kahler-flagged sample class declared");
  return MixedSetup::make(r, p, *it, std::vector<ClassVector>(r.dim() - std::min(r.dim(), 2 * p), *it));
}

TheoremReport verify_theorem(const IntersectionRing& r, std::span<const ClassVector> generators, std::size_t p,
                             std::size_t samples, std::uint64_t seed, const VerifyOptions& options) {
  TheoremReport rep;
  rep.p = p;
  rep.seed = seed;
  rep.condition_cs = hodge_condition(r, p, Direction::cs);
  rep.condition_opp = hodge_condition(r, p, Direction::opposite);

  for (std::size_t k = 0; k < samples; ++k) {
    Xoshiro256 gen = Xoshiro256::stream(seed, k);
    const MixedSetup setup = random_setup(r, p, generators, options.height, gen);
    const bool complex = k % 2 == 1;
    ClassVector alpha;
    if (options.proportional_every != 0 && k % options.proportional_every == options.proportional_every - 1) {
      GaussianRational c(random_positive_rational(gen, options.height),
                         complex ? random_rational(gen, options.height) : Rational());
      alpha = r.power(setup.omega(), p).scaled(c);
    } else {
      alpha = random_class(r, p, options.height, gen, complex);
    }

    const Rational g = compute_g_direct(r, alpha, setup);
    const bool prop = proportional_to_omega_power(r, alpha, setup);
    rep.samples.push_back({k, g, relation_of(g), prop});
    ++rep.samples_tested;
    if (g.is_zero()) ++rep.equalities;
    if (prop) ++rep.proportional_samples;

    auto violate = [&](std::string reason) { rep.violations.push_back({k, std::move(reason), alpha, g}); };
    if (prop && !g.is_zero()) violate("alpha is proportional to omega^p but g != 0");
    if (rep.condition_cs.holds) {
      if (g.sign() < 0) violate("g < 0 although the Cauchy-Schwarz Hodge condition holds");
      if (g.is_zero() && !prop) violate("g = 0 at an alpha not proportional to omega^p (cs)");
    }
    if (rep.condition_opp.holds) {
      if (g.sign() > 0) violate("g > 0 although the opposite Hodge condition holds");
      if (g.is_zero() && !prop) violate("g = 0 at an alpha not proportional to omega^p (opposite)");
    }

    if (options.two_route) {
      try {
        const GDecomposition dec = compute_g_decomposed(r, alpha, setup);
        if (dec.value != g) violate("decomposition route disagrees with the direct g");
        if (!(reconstruct(r, dec.decomposition, setup) == alpha)) violate("decomposition does not reconstruct alpha");
        if (!dec.decomposition.certificates_zero()) violate("nonzero primitivity certificate");
        for (std::size_t i = 1; i <= p; ++i) {
          const Rational signed_term = i % 2 == 0 ? dec.terms[i - 1] : -dec.terms[i - 1];
          const bool zero_component = dec.decomposition.component(i).is_zero();
          if (signed_term.sign() < 0 || (signed_term.is_zero() != zero_component)) {
            violate("sign law fails for alpha_" + std::to_string(i));
          }
        }
      } catch (const DecompositionError& e) {
        violate(e.what());
      }
    }
  }

  const MixedSetup base = canonical_setup(r, p, generators);
  for (Direction kind : {Direction::cs, Direction::opposite}) {
    if (auto ce = construct_counterexample(r, p, base, kind)) rep.counterexamples.push_back(std::move(*ce));
  }
  return rep;
}

bool KtReport::holds() const {
  return std::all_of(rows.begin(), rows.end(), [](const KtRow& r) { return r.holds; });
}

bool KtReport::strict_everywhere() const {
  return std::all_of(rows.begin(), rows.end(), [](const KtRow& r) { return r.strict; });
}

KtReport kt_chain(const IntersectionRing& r, const ClassVector& d1, const ClassVector& d2) {
  for (const auto* d : {&d1, &d2}) {
    r.check_class(*d);
    if (d->degree() != 1) throw std::invalid_argument("kt_chain: divisors must have degree 1");
    if (d->flag() == Positivity::none) throw std::invalid_argument("kt_chain: divisors must be flagged kahler or nef");
  }
  KtReport rep;
  rep.mode = (d1.flag() == Positivity::nef || d2.flag() == Positivity::nef) ? SetupMode::boundary : SetupMode::strict;
  rep.proportional = rank(Matrix::from_rows({d1.coeffs(), d2.coeffs()}, d1.size())) <= 1;
  const std::size_t n = r.dim();
  std::vector<ClassVector> p1{r.unit()};
  std::vector<ClassVector> p2{r.unit()};
  for (std::size_t j = 1; j <= n; ++j) {
    p1.push_back(r.wedge(p1.back(), d1));
    p2.push_back(r.wedge(p2.back(), d2));
  }
  auto mixed = [&](std::size_t a) { return real_part_checked(r.pairing(p1[a], p2[n - a]), "intersection number"); };
  for (std::size_t k = 1; k + 1 <= n; ++k) {
    KtRow row;
    row.k = k;
    row.middle = mixed(k);
    row.lhs = row.middle * row.middle;
    row.rhs = mixed(k - 1) * mixed(k + 1);
    row.holds = row.lhs >= row.rhs;
    row.strict = row.lhs > row.rhs;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace kcs
