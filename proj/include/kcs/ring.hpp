#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "kcs/matrix.hpp"
#include "kcs/rational.hpp"

namespace kcs {

enum class Positivity { none, kahler, nef };

const char* to_string(Positivity p);
Positivity positivity_from_string(const std::string& s);

/// Element of one graded piece H^{p,p}, coefficients in the ring basis.
class ClassVector {
 public:
  ClassVector() = default;
  ClassVector(std::size_t degree, Vector coeffs, Positivity flag = Positivity::none);

  std::size_t degree() const { return degree_; }
  const Vector& coeffs() const { return coeffs_; }
  const GaussianRational& operator[](std::size_t i) const { return coeffs_[i]; }
  std::size_t size() const { return coeffs_.size(); }
  Positivity flag() const { return flag_; }

  ClassVector with_flag(Positivity flag) const { return ClassVector(degree_, coeffs_, flag); }

  bool is_zero() const;
  bool is_real() const;
  ClassVector conj() const;
  ClassVector scaled(const GaussianRational& s) const;

  ClassVector& operator+=(const ClassVector& o);
  ClassVector& operator-=(const ClassVector& o);
  friend ClassVector operator+(ClassVector a, const ClassVector& b) { return a += b; }
  friend ClassVector operator-(ClassVector a, const ClassVector& b) { return a -= b; }
  friend ClassVector operator*(const GaussianRational& s, const ClassVector& a) { return a.scaled(s); }

  /// Compares degree and coefficients; the positivity flag is metadata.
  friend bool operator==(const ClassVector& a, const ClassVector& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::size_t degree_ = 0;
  Vector coeffs_;
  Positivity flag_ = Positivity::none;
};

/// Raised when ring data is structurally unusable. `path` locates the field,
/// `constraint` names the violated rule.
class RingError : public std::runtime_error {
 public:
  RingError(std::string path, std::string constraint, const std::string& detail)
      : std::runtime_error(path + ": " + constraint + ": " + detail),
        path_(std::move(path)),
        constraint_(std::move(constraint)) {}
  const std::string& path() const { return path_; }
  const std::string& constraint() const { return constraint_; }

 private:
  std::string path_;
  std::string constraint_;
};

/// One structure constant record: e^{da}_{ia} * e^{db}_{ib} = sum_k out[k] e^{da+db}_k.
struct ProductEntry {
  std::size_t da = 0;
  std::size_t ia = 0;
  std::size_t db = 0;
  std::size_t ib = 0;
  std::vector<Rational> out;
};

struct RingData {
  std::string name;
  std::size_t n = 0;
  std::vector<std::vector<std::string>> basis;
  std::vector<ProductEntry> products;
  std::vector<Rational> integral;
};

/// Even "Hodge diagonal" cohomology ring: graded pieces H^{p,p}, p = 0..n, with
/// rational structure constants and an integration functional on degree n.
class IntersectionRing {
 public:
  using Slot = std::pair<std::size_t, std::size_t>;  // (degree, index)
  using Key = std::pair<Slot, Slot>;                 // canonical: first <= second

  /// Shape-checks `data` and throws RingError on any inconsistency. Products
  /// (a,b) and (b,a) share one slot; conflicting duplicates are a
  /// commutativity error. Products with a degree-0 factor must be the identity
  /// and are not stored. Does not run validate_ring.
  explicit IntersectionRing(const RingData& data);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return n_; }
  std::size_t hodge(std::size_t p) const { return basis_.at(p).size(); }
  std::vector<std::size_t> hodge_numbers() const;
  const std::vector<std::string>& labels(std::size_t p) const { return basis_.at(p); }
  const std::vector<std::vector<std::string>>& basis_labels() const { return basis_; }
  const std::vector<Rational>& integral_functional() const { return integral_; }
  /// Nonzero structure constants keyed by canonical slot pair, degrees >= 1.
  const std::map<Key, std::vector<Rational>>& structure_constants() const { return products_; }

  /// Locates a basis label; labels are unique across all degrees.
  std::optional<Slot> find_label(const std::string& label) const;

  ClassVector unit() const;
  ClassVector zero(std::size_t degree) const;
  ClassVector basis_vector(std::size_t degree, std::size_t index) const;

  /// Product of two basis elements as a coefficient vector in degree da+db.
  std::vector<Rational> basis_product(Slot a, Slot b) const;

  /// Throws std::invalid_argument on degree overflow or malformed input.
  ClassVector wedge(const ClassVector& a, const ClassVector& b) const;
  ClassVector power(const ClassVector& a, std::size_t k) const;
  /// Wedge of all classes; the empty product is the unit.
  ClassVector product(std::span<const ClassVector> classes) const;
  GaussianRational integrate(const ClassVector& a) const;
  /// Shorthand for integrate(wedge(a, b)).
  GaussianRational pairing(const ClassVector& a, const ClassVector& b) const;

  void check_class(const ClassVector& a) const;

  friend bool operator==(const IntersectionRing&, const IntersectionRing&) = default;

 private:
  std::string name_;
  std::size_t n_;
  std::vector<std::vector<std::string>> basis_;
  std::map<Key, std::vector<Rational>> products_;
  std::vector<Rational> integral_;
  std::map<std::string, Slot> label_index_;
};

struct ValidationIssue {
  std::string constraint;  // "commutativity", "associativity", "poincare-duality", ...
  std::string location;    // offending basis pair/triple or degree
  std::string detail;
};

struct ValidationReport {
  std::vector<std::string> checks;
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

ValidationReport validate_ring(const IntersectionRing& r);

/// Necessary (not sufficient) conditions for w to be a Kahler class.
struct KahlerSanityReport {
  Rational volume;                              // integral of w^n
  std::vector<std::size_t> non_injective_degrees;  // p with w: H^{p,p} -> H^{p+1,p+1} not injective
  std::optional<Inertia> h11_inertia;           // of u,v -> int u v w^{n-2}; absent when n < 2
  std::vector<std::string> failures;
  bool passed = false;
  ClassVector checked;                          // w, flagged kahler when passed
};

KahlerSanityReport sanity_check_kahler(const IntersectionRing& r, const ClassVector& w);

enum class SetupMode { strict, boundary };
const char* to_string(SetupMode m);

/// Reference classes (omega; omega_1..omega_{n-2p}) for degree p, with the
/// products the inequality formulas keep reusing.
class MixedSetup {
 public:
  /// Throws std::invalid_argument unless 1 <= p <= n/2, |omegas| = n-2p and all
  /// classes are real degree-1 classes flagged kahler or nef.
  static MixedSetup make(const IntersectionRing& r, std::size_t p, ClassVector omega,
                         std::vector<ClassVector> omegas);

  std::size_t p() const { return p_; }
  const ClassVector& omega() const { return omega_; }
  const std::vector<ClassVector>& omegas() const { return omegas_; }
  /// omega_1 ^ ... ^ omega_{n-2p}
  const ClassVector& omega_p_product() const { return omega_p_product_; }
  /// omega^p ^ Omega_p, degree n-p
  const ClassVector& omega_power_product() const { return omega_power_product_; }
  /// integral of omega^{2p} ^ Omega_p
  const Rational& volume() const { return volume_; }
  SetupMode mode() const { return mode_; }

 private:
  MixedSetup(std::size_t p, ClassVector omega, std::vector<ClassVector> omegas, ClassVector omega_p_product,
             ClassVector omega_power_product, Rational volume, SetupMode mode);

  std::size_t p_;
  ClassVector omega_;
  std::vector<ClassVector> omegas_;
  ClassVector omega_p_product_;
  ClassVector omega_power_product_;
  Rational volume_;
  SetupMode mode_;
};

}  // namespace kcs
