#include "kcs/hodge.hpp"

#include <algorithm>

namespace kcs {

namespace {

void require_reference_classes(const IntersectionRing& r, std::size_t p, std::span<const ClassVector> classes) {
  if (2 * p > r.dim()) throw std::invalid_argument("degree p = " + std::to_string(p) + " exceeds n/2");
  const std::size_t expected = r.dim() - 2 * p;
  if (classes.size() != expected) {
    throw std::invalid_argument("expected " + std::to_string(expected) + " degree-1 classes, got " +
                                std::to_string(classes.size()));
  }
  for (const auto& c : classes) {
    r.check_class(c);
    if (c.degree() != 1) throw std::invalid_argument("reference classes must have degree 1");
    if (c.flag() == Positivity::none) throw std::invalid_argument("reference classes must be flagged kahler or nef");
  }
}

}  // namespace

int hodge_riemann_sign(std::size_t p) { return p % 2 == 0 ? 1 : -1; }

LefschetzOperator lefschetz_operator(const IntersectionRing& r, std::size_t p, std::span<const ClassVector> classes) {
  require_reference_classes(r, p, classes);
  const ClassVector big_omega = r.product(classes);
  const std::size_t target = r.dim() - p;
  std::vector<Vector> columns;
  for (std::size_t i = 0; i < r.hodge(p); ++i) columns.push_back(r.wedge(r.basis_vector(p, i), big_omega).coeffs());
  LefschetzOperator op{Matrix::from_columns(columns, r.hodge(target)), false};
  op.isomorphism = op.matrix.square() && rank(op.matrix) == r.hodge(p);
  return op;
}

PrimitiveSubspace primitive_basis_for(const IntersectionRing& r, std::size_t p, const ClassVector& omega,
                                      const ClassVector& reference) {
  r.check_class(omega);
  r.check_class(reference);
  if (omega.degree() != 1) throw std::invalid_argument("primitive_basis: omega must have degree 1");
  if (2 * p > r.dim() || reference.degree() != r.dim() - 2 * p) {
    throw std::invalid_argument("primitive_basis: reference product must have degree n - 2p");
  }
  PrimitiveSubspace out{p, omega, reference, {}};
  if (p == 0) {
    // alpha ^ omega ^ Omega lands in degree n + 1, which is zero.
    out.basis.push_back(r.unit());
    return out;
  }
  const ClassVector omega_ref = r.wedge(omega, reference);
  std::vector<Vector> columns;
  for (std::size_t i = 0; i < r.hodge(p); ++i) columns.push_back(r.wedge(r.basis_vector(p, i), omega_ref).coeffs());
  const Matrix m = Matrix::from_columns(columns, r.hodge(omega_ref.degree() + p));
  for (auto& v : nullspace(m)) out.basis.emplace_back(p, std::move(v));
  return out;
}

PrimitiveSubspace primitive_basis(const IntersectionRing& r, std::size_t p, const ClassVector& omega,
                                  std::span<const ClassVector> omegas) {
  require_reference_classes(r, p, omegas);
  return primitive_basis_for(r, p, omega, r.product(omegas));
}

Matrix restricted_gram(const IntersectionRing& r, std::size_t p, const std::vector<ClassVector>& vectors,
                       const ClassVector& reference) {
  const GaussianRational sign(hodge_riemann_sign(p));
  Matrix g(vectors.size(), vectors.size());
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    const ClassVector vk = r.wedge(vectors[k], reference);
    for (std::size_t l = 0; l < vectors.size(); ++l) g(k, l) = sign * r.pairing(vk, vectors[l].conj());
  }
  return g;
}

SymmetricFormReport gram_matrix_Q_for(const IntersectionRing& r, std::size_t p, const ClassVector& reference) {
  if (2 * p > r.dim() || reference.degree() != r.dim() - 2 * p) {
    throw std::invalid_argument("gram_matrix_Q: reference product must have degree n - 2p");
  }
  std::vector<ClassVector> basis;
  for (std::size_t i = 0; i < r.hodge(p); ++i) basis.push_back(r.basis_vector(p, i));
  SymmetricFormReport rep;
  rep.p = p;
  rep.sign_factor = hodge_riemann_sign(p);
  rep.gram = restricted_gram(r, p, basis, reference);
  rep.inertia = inertia(rep.gram, true);
  rep.unsigned_inertia = rep.sign_factor > 0 ? rep.inertia : Inertia{rep.inertia.negative, rep.inertia.positive, rep.inertia.zero};
  return rep;
}

SymmetricFormReport gram_matrix_Q(const IntersectionRing& r, std::size_t p, std::span<const ClassVector> omegas) {
  require_reference_classes(r, p, omegas);
  return gram_matrix_Q_for(r, p, r.product(omegas));
}

HrReport hr_check(const IntersectionRing& r, std::size_t p, const ClassVector& omega,
                  std::span<const ClassVector> omegas) {
  require_reference_classes(r, p, omegas);
  auto is_nef = [](const ClassVector& c) { return c.flag() == Positivity::nef; };
  if (is_nef(omega) || std::any_of(omegas.begin(), omegas.end(), is_nef)) {
    throw std::invalid_argument("hr_check requires strict Kahler classes");
  }
  if (omega.flag() != Positivity::kahler) throw std::invalid_argument("hr_check: omega must be flagged kahler");

  HrReport rep;
  rep.p = p;
  const ClassVector reference = r.product(omegas);
  rep.primitive = primitive_basis_for(r, p, omega, reference);
  rep.expected_dimension = r.hodge(p) - (p >= 1 ? r.hodge(p - 1) : 0);
  rep.dimension_ok = rep.primitive.dimension() == rep.expected_dimension;
  if (!rep.dimension_ok) {
    rep.violations.push_back("dim P^{p,p} = " + std::to_string(rep.primitive.dimension()) + ", expected h^{p,p} - h^{p-1,p-1} = " +
                             std::to_string(rep.expected_dimension));
  }
  rep.restricted = restricted_gram(r, p, rep.primitive.basis, reference);
  rep.restricted_inertia = inertia(rep.restricted, true);
  rep.positive_definite = rep.restricted_inertia == Inertia{rep.primitive.dimension(), 0, 0};
  if (!rep.positive_definite) rep.violations.push_back("Q_Omega is not positive-definite on the mixed primitive subspace");

  if (p >= 1) {
    // Unsigned intersection form on H^{1,1} against n-2 classes omega^{2(p-1)} ^ Omega_p.
    const ClassVector ref11 = r.wedge(r.power(omega, 2 * (p - 1)), reference);
    const std::size_t h = r.hodge(1);
    Matrix g(h, h);
    for (std::size_t i = 0; i < h; ++i) {
      const ClassVector ui = r.wedge(r.basis_vector(1, i), ref11);
      for (std::size_t j = 0; j < h; ++j) g(i, j) = r.pairing(ui, r.basis_vector(1, j));
    }
    rep.h11_unsigned_inertia = inertia(g);
    rep.h11_ok = rep.h11_unsigned_inertia == Inertia{1, h - 1, 0};
    if (!rep.h11_ok) rep.violations.push_back("unsigned H^{1,1} form does not have inertia (1, h^{1,1}-1, 0)");
  } else {
    rep.h11_ok = true;
  }
  return rep;
}

bool DecompositionResult::certificates_zero() const {
  return std::all_of(certificates.begin(), certificates.end(), [](const auto& c) { return c.is_zero(); });
}

bool DecompositionResult::odd_components_vanish() const {
  for (std::size_t i = 1; i <= components.size(); i += 2)
    if (!component(i).is_zero()) return false;
  return true;
}

bool DecompositionResult::even_components_vanish() const {
  for (std::size_t i = 2; i <= components.size(); i += 2)
    if (!component(i).is_zero()) return false;
  return true;
}

DecompositionResult mixed_lefschetz_decompose(const IntersectionRing& r, const ClassVector& alpha,
                                              const MixedSetup& setup) {
  const std::size_t p = setup.p();
  r.check_class(alpha);
  if (alpha.degree() != p) throw std::invalid_argument("decompose: alpha must have degree p");
  if (setup.mode() != SetupMode::strict) {
    throw std::invalid_argument("decompose: nef references are not supported, the split may degenerate");
  }
  const ClassVector& omega = setup.omega();

  DecompositionResult out;
  out.p = p;
  out.components.resize(p);
  out.certificates.resize(p);

  ClassVector remainder = alpha;
  for (std::size_t i = p; i >= 1; --i) {
    // Level i splits H^{i,i} = P^{i,i}(omega, omega^{2(p-i)} ^ Omega_p) + omega ^ H^{i-1,i-1}.
    const ClassVector reference = r.wedge(r.power(omega, 2 * (p - i)), setup.omega_p_product());
    const PrimitiveSubspace prim = primitive_basis_for(r, i, omega, reference);
    std::vector<Vector> columns;
    for (const auto& v : prim.basis) columns.push_back(v.coeffs());
    for (std::size_t j = 0; j < r.hodge(i - 1); ++j) columns.push_back(r.wedge(omega, r.basis_vector(i - 1, j)).coeffs());
    const Matrix split = Matrix::from_columns(columns, r.hodge(i));
    if (!split.square() || rank(split) != r.hodge(i)) {
      throw DecompositionError("singular split system at degree " + std::to_string(i) +
                               ": the reference classes do not behave like Kahler classes");
    }
    const Vector x = *solve(split, remainder.coeffs());

    ClassVector component = r.zero(i);
    for (std::size_t k = 0; k < prim.dimension(); ++k) component += prim.basis[k].scaled(x[k]);
    Vector lower(r.hodge(i - 1));
    for (std::size_t j = 0; j < lower.size(); ++j) lower[j] = x[prim.dimension() + j];

    out.certificates[i - 1] = r.wedge(r.wedge(component, omega), reference);
    out.components[i - 1] = std::move(component);
    remainder = ClassVector(i - 1, std::move(lower));
  }
  out.lambda = remainder[0];
  out.lambda_closed_form = r.pairing(alpha, setup.omega_power_product()) / GaussianRational(setup.volume());
  if (!(out.lambda == out.lambda_closed_form)) {
    throw std::logic_error("decompose: recursion remainder disagrees with the closed-form lambda");
  }
  return out;
}

ClassVector reconstruct(const IntersectionRing& r, const DecompositionResult& d, const MixedSetup& setup) {
  const std::size_t p = setup.p();
  ClassVector sum = r.power(setup.omega(), p).scaled(d.lambda);
  for (std::size_t i = 1; i <= p; ++i) sum += r.wedge(d.component(i), r.power(setup.omega(), p - i));
  return sum;
}

}  // namespace kcs
