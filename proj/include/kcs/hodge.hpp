#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kcs/matrix.hpp"
#include "kcs/ring.hpp"

namespace kcs {

/// Matrix of alpha -> alpha ^ Omega from H^{p,p} to H^{n-p,n-p}.
struct LefschetzOperator {
  Matrix matrix;
  bool isomorphism = false;
};

LefschetzOperator lefschetz_operator(const IntersectionRing& r, std::size_t p, std::span<const ClassVector> classes);

/// Mixed primitive subspace P^{p,p}(omega, Omega) = ker(alpha -> alpha ^ omega ^ Omega).
struct PrimitiveSubspace {
  std::size_t p = 0;
  ClassVector omega;
  ClassVector reference;  // Omega, degree n - 2p
  std::vector<ClassVector> basis;

  std::size_t dimension() const { return basis.size(); }
};

PrimitiveSubspace primitive_basis(const IntersectionRing& r, std::size_t p, const ClassVector& omega,
                                  std::span<const ClassVector> omegas);
/// Same, with the reference product Omega already formed.
PrimitiveSubspace primitive_basis_for(const IntersectionRing& r, std::size_t p, const ClassVector& omega,
                                      const ClassVector& reference);

/// Gram matrix of Q_Omega(a, b) = (-1)^p int a ^ conj(b) ^ Omega on H^{p,p}.
/// `inertia` is for the signed form; `unsigned_inertia` for the same form
/// without the (-1)^p prefactor.
struct SymmetricFormReport {
  std::size_t p = 0;
  Matrix gram;
  Inertia inertia;
  int sign_factor = 1;
  Inertia unsigned_inertia;
};

SymmetricFormReport gram_matrix_Q(const IntersectionRing& r, std::size_t p, std::span<const ClassVector> omegas);
SymmetricFormReport gram_matrix_Q_for(const IntersectionRing& r, std::size_t p, const ClassVector& reference);

/// Q_Omega restricted to span(vectors).
Matrix restricted_gram(const IntersectionRing& r, std::size_t p, const std::vector<ClassVector>& vectors,
                       const ClassVector& reference);

/// (-1)^p
int hodge_riemann_sign(std::size_t p);

struct HrReport {
  std::size_t p = 0;
  PrimitiveSubspace primitive;
  std::size_t expected_dimension = 0;  // h^{p,p} - h^{p-1,p-1}
  Matrix restricted;
  Inertia restricted_inertia;
  bool positive_definite = false;
  bool dimension_ok = false;
  Inertia h11_unsigned_inertia;  // int u v omega^{2(p-1)} Omega_p on H^{1,1}
  bool h11_ok = false;
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
};

/// Strict Kahler references only; throws std::invalid_argument on nef input.
HrReport hr_check(const IntersectionRing& r, std::size_t p, const ClassVector& omega,
                  std::span<const ClassVector> omegas);

class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// alpha = lambda omega^p + sum_i alpha_i ^ omega^{p-i}, alpha_i primitive with
/// respect to (omega, omega^{2(p-i)} ^ Omega_p).
struct DecompositionResult {
  std::size_t p = 0;
  GaussianRational lambda;
  GaussianRational lambda_closed_form;  // int alpha omega^p Omega_p / int omega^{2p} Omega_p
  std::vector<ClassVector> components;    // components[i-1] = alpha_i, degree i
  std::vector<ClassVector> certificates;  // alpha_i ^ omega^{2(p-i)+1} ^ Omega_p, all zero

  const ClassVector& component(std::size_t i) const { return components.at(i - 1); }
  bool certificates_zero() const;
  bool odd_components_vanish() const;
  bool even_components_vanish() const;
};

/// Throws std::invalid_argument for boundary setups or wrong degree, and
/// DecompositionError when a split system is singular (the reference classes
/// are then not Kahler).
DecompositionResult mixed_lefschetz_decompose(const IntersectionRing& r, const ClassVector& alpha,
                                              const MixedSetup& setup);

/// lambda omega^p + sum_i alpha_i ^ omega^{p-i}
ClassVector reconstruct(const IntersectionRing& r, const DecompositionResult& d, const MixedSetup& setup);

}  // namespace kcs
