#include "kcs/ring.hpp"

#include <algorithm>
#include <sstream>

namespace kcs {

const char* to_string(Positivity p) {
  switch (p) {
    case Positivity::kahler:
      return "kahler";
    case Positivity::nef:
      return "nef";
    case Positivity::none:
      break;
  }
  return "none";
}

Positivity positivity_from_string(const std::string& s) {
  if (s == "kahler") return Positivity::kahler;
  if (s == "nef") return Positivity::nef;
  if (s == "none") return Positivity::none;
  throw std::invalid_argument("unknown positivity flag '" + s + "'");
}

const char* to_string(SetupMode m) { return m == SetupMode::strict ? "strict" : "boundary"; }

// ---------------------------------------------------------------------------
// ClassVector

ClassVector::ClassVector(std::size_t degree, Vector coeffs, Positivity flag)
    : degree_(degree), coeffs_(std::move(coeffs)), flag_(flag) {
  if (flag_ != Positivity::none && degree_ != 1) {
    throw std::invalid_argument("kahler/nef flags apply only to degree-1 classes");
  }
}

bool ClassVector::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& z) { return z.is_zero(); });
}

bool ClassVector::is_real() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& z) { return z.is_real(); });
}

ClassVector ClassVector::conj() const {
  Vector c;
  c.reserve(coeffs_.size());
  for (const auto& z : coeffs_) c.push_back(z.conj());
  return ClassVector(degree_, std::move(c));
}

ClassVector ClassVector::scaled(const GaussianRational& s) const {
  Vector c;
  c.reserve(coeffs_.size());
  for (const auto& z : coeffs_) c.push_back(z * s);
  return ClassVector(degree_, std::move(c));
}

ClassVector& ClassVector::operator+=(const ClassVector& o) {
  if (degree_ != o.degree_ || coeffs_.size() != o.coeffs_.size())
    throw std::invalid_argument("adding classes of different degrees");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  flag_ = Positivity::none;
  return *this;
}

ClassVector& ClassVector::operator-=(const ClassVector& o) {
  if (degree_ != o.degree_ || coeffs_.size() != o.coeffs_.size())
    throw std::invalid_argument("subtracting classes of different degrees");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  flag_ = Positivity::none;
  return *this;
}

// ---------------------------------------------------------------------------
// IntersectionRing

namespace {

std::string path_of(std::size_t k) { return "products[" + std::to_string(k) + "]"; }

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& q) { return q.is_zero(); });
}

std::string slot_str(const std::vector<std::vector<std::string>>& basis, IntersectionRing::Slot s) {
  return basis[s.first][s.second];
}

}  // namespace

IntersectionRing::IntersectionRing(const RingData& data)
    : name_(data.name), n_(data.n), basis_(data.basis), integral_(data.integral) {
  if (basis_.size() != n_ + 1) {
    throw RingError("basis", "grading",
                    "expected " + std::to_string(n_ + 1) + " graded pieces, got " + std::to_string(basis_.size()));
  }
  if (basis_.front().size() != 1) throw RingError("basis[0]", "grading", "h^{0,0} must be 1");
  if (basis_.back().size() != 1) throw RingError("basis[" + std::to_string(n_) + "]", "grading", "h^{n,n} must be 1");
  for (std::size_t p = 0; p <= n_; ++p) {
    for (std::size_t i = 0; i < basis_[p].size(); ++i) {
      const auto& label = basis_[p][i];
      const std::string where = "basis[" + std::to_string(p) + "][" + std::to_string(i) + "]";
      if (label.empty()) throw RingError(where, "labels", "empty label");
      if (!label_index_.emplace(label, Slot{p, i}).second) throw RingError(where, "labels", "duplicate label '" + label + "'");
    }
  }
  if (integral_.size() != basis_[n_].size()) {
    throw RingError("integral", "shape", "expected " + std::to_string(basis_[n_].size()) + " entries");
  }

  std::map<Key, std::vector<Rational>> table;
  for (std::size_t k = 0; k < data.products.size(); ++k) {
    const auto& e = data.products[k];
    if (e.da > n_ || e.db > n_ || e.ia >= basis_[e.da].size() || e.ib >= basis_[e.db].size()) {
      throw RingError(path_of(k), "shape", "basis index out of range");
    }
    if (e.da + e.db > n_) throw RingError(path_of(k), "degree-overflow", "product degree exceeds n");
    const std::size_t d = e.da + e.db;
    if (e.out.size() != basis_[d].size()) {
      throw RingError(path_of(k) + ".out", "shape",
                      "expected " + std::to_string(basis_[d].size()) + " coefficients, got " + std::to_string(e.out.size()));
    }
    if (e.da == 0 || e.db == 0) {
      const std::size_t other = e.da == 0 ? e.ib : e.ia;
      for (std::size_t j = 0; j < e.out.size(); ++j) {
        if (e.out[j] != Rational(j == other ? 1 : 0)) {
          throw RingError(path_of(k), "identity", "the degree-0 basis element must act as the identity");
        }
      }
      continue;
    }
    Slot a{e.da, e.ia};
    Slot b{e.db, e.ib};
    if (b < a) std::swap(a, b);
    auto [it, inserted] = table.emplace(Key{a, b}, e.out);
    if (!inserted && it->second != e.out) {
      throw RingError(path_of(k), "commutativity",
                      slot_str(basis_, a) + "*" + slot_str(basis_, b) + " differs from " + slot_str(basis_, b) + "*" +
                          slot_str(basis_, a));
    }
  }
  for (auto& [key, out] : table) {
    if (!all_zero(out)) products_.emplace(key, std::move(out));
  }
}

std::vector<std::size_t> IntersectionRing::hodge_numbers() const {
  std::vector<std::size_t> h;
  for (const auto& b : basis_) h.push_back(b.size());
  return h;
}

std::optional<IntersectionRing::Slot> IntersectionRing::find_label(const std::string& label) const {
  const auto it = label_index_.find(label);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

ClassVector IntersectionRing::unit() const { return basis_vector(0, 0); }

ClassVector IntersectionRing::zero(std::size_t degree) const {
  if (degree > n_) throw std::invalid_argument("degree overflow: class of degree " + std::to_string(degree));
  return ClassVector(degree, Vector(hodge(degree)));
}

ClassVector IntersectionRing::basis_vector(std::size_t degree, std::size_t index) const {
  ClassVector z = zero(degree);
  Vector c = z.coeffs();
  c.at(index) = 1;
  return ClassVector(degree, std::move(c));
}

std::vector<Rational> IntersectionRing::basis_product(Slot a, Slot b) const {
  const std::size_t d = a.first + b.first;
  if (d > n_) throw std::invalid_argument("degree overflow in basis product");
  std::vector<Rational> out(hodge(d));
  if (a.first == 0) {
    out[b.second] = 1;
    return out;
  }
  if (b.first == 0) {
    out[a.second] = 1;
    return out;
  }
  if (b < a) std::swap(a, b);
  const auto it = products_.find(Key{a, b});
  if (it != products_.end()) out = it->second;
  return out;
}

void IntersectionRing::check_class(const ClassVector& a) const {
  if (a.degree() > n_) throw std::invalid_argument("class degree exceeds ring dimension");
  if (a.size() != hodge(a.degree())) {
    throw std::invalid_argument("class has " + std::to_string(a.size()) + " coefficients, degree " +
                                std::to_string(a.degree()) + " has dimension " + std::to_string(hodge(a.degree())));
  }
}

ClassVector IntersectionRing::wedge(const ClassVector& a, const ClassVector& b) const {
  check_class(a);
  check_class(b);
  const std::size_t d = a.degree() + b.degree();
  if (d > n_) {
    throw std::invalid_argument("degree overflow: wedge of degrees " + std::to_string(a.degree()) + " and " +
                                std::to_string(b.degree()) + " exceeds n = " + std::to_string(n_));
  }
  if (a.degree() == 0) return b.scaled(a[0]);
  if (b.degree() == 0) return a.scaled(b[0]);

  Vector out(hodge(d));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      Slot sa{a.degree(), i};
      Slot sb{b.degree(), j};
      if (sb < sa) std::swap(sa, sb);
      const auto it = products_.find(Key{sa, sb});
      if (it == products_.end()) continue;
      const GaussianRational c = a[i] * b[j];
      for (std::size_t k = 0; k < out.size(); ++k) {
        if (!it->second[k].is_zero()) out[k] += c * it->second[k];
      }
    }
  }
  return ClassVector(d, std::move(out));
}

ClassVector IntersectionRing::power(const ClassVector& a, std::size_t k) const {
  check_class(a);
  if (a.degree() * k > n_) throw std::invalid_argument("degree overflow in power");
  ClassVector r = unit();
  for (std::size_t i = 0; i < k; ++i) r = wedge(r, a);
  return r;
}

ClassVector IntersectionRing::product(std::span<const ClassVector> classes) const {
  ClassVector r = unit();
  for (const auto& c : classes) r = wedge(r, c);
  return r;
}

GaussianRational IntersectionRing::integrate(const ClassVector& a) const {
  check_class(a);
  if (a.degree() != n_) {
    throw std::invalid_argument("integrate: class of degree " + std::to_string(a.degree()) + ", expected " +
                                std::to_string(n_));
  }
  GaussianRational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * integral_[i];
  return s;
}

GaussianRational IntersectionRing::pairing(const ClassVector& a, const ClassVector& b) const {
  return integrate(wedge(a, b));
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate_ring(const IntersectionRing& r) {
  ValidationReport rep;
  const std::size_t n = r.dim();
  const auto& basis = r.basis_labels();
  auto label = [&](std::size_t d, std::size_t i) { return basis[d][i]; };

  rep.checks.push_back("grading");
  if (r.hodge(0) != 1 || r.hodge(n) != 1) rep.issues.push_back({"grading", "hodge", "h^{0,0} and h^{n,n} must be 1"});

  rep.checks.push_back("identity");
  for (std::size_t d = 0; d <= n; ++d) {
    for (std::size_t i = 0; i < r.hodge(d); ++i) {
      const ClassVector e = r.basis_vector(d, i);
      if (!(r.wedge(r.unit(), e) == e)) rep.issues.push_back({"identity", label(d, i), "1*e != e"});
    }
  }

  rep.checks.push_back("commutativity");
  for (std::size_t da = 1; da <= n; ++da)
    for (std::size_t db = da; da + db <= n; ++db)
      for (std::size_t i = 0; i < r.hodge(da); ++i)
        for (std::size_t j = 0; j < r.hodge(db); ++j)
          if (r.basis_product({da, i}, {db, j}) != r.basis_product({db, j}, {da, i}))
            rep.issues.push_back({"commutativity", "(" + label(da, i) + ", " + label(db, j) + ")", "e_i*e_j != e_j*e_i"});

  rep.checks.push_back("associativity");
  for (std::size_t da = 1; da <= n; ++da) {
    for (std::size_t db = 1; da + db <= n; ++db) {
      for (std::size_t dc = 1; da + db + dc <= n; ++dc) {
        for (std::size_t i = 0; i < r.hodge(da); ++i) {
          const ClassVector ei = r.basis_vector(da, i);
          for (std::size_t j = 0; j < r.hodge(db); ++j) {
            const ClassVector ej = r.basis_vector(db, j);
            const ClassVector eij = r.wedge(ei, ej);
            for (std::size_t k = 0; k < r.hodge(dc); ++k) {
              const ClassVector ek = r.basis_vector(dc, k);
              if (!(r.wedge(eij, ek) == r.wedge(ei, r.wedge(ej, ek)))) {
                rep.issues.push_back({"associativity",
                                      "(" + label(da, i) + ", " + label(db, j) + ", " + label(dc, k) + ")",
                                      "(e_i*e_j)*e_k != e_i*(e_j*e_k)"});
              }
            }
          }
        }
      }
    }
  }

  rep.checks.push_back("poincare-duality");
  for (std::size_t p = 0; p <= n; ++p) {
    const std::size_t q = n - p;
    const std::string where = "p = " + std::to_string(p);
    if (r.hodge(p) != r.hodge(q)) {
      rep.issues.push_back({"poincare-duality", where,
                            "h^{p,p} = " + std::to_string(r.hodge(p)) + " differs from h^{n-p,n-p} = " +
                                std::to_string(r.hodge(q))});
      continue;
    }
    Matrix m(r.hodge(p), r.hodge(q));
    for (std::size_t i = 0; i < r.hodge(p); ++i)
      for (std::size_t j = 0; j < r.hodge(q); ++j) m(i, j) = r.pairing(r.basis_vector(p, i), r.basis_vector(q, j));
    const std::size_t rk = rank(m);
    if (rk != r.hodge(p)) {
      rep.issues.push_back({"poincare-duality", where,
                            "pairing H^{p,p} x H^{n-p,n-p} has rank " + std::to_string(rk) + " < " +
                                std::to_string(r.hodge(p))});
    }
  }
  return rep;
}

KahlerSanityReport sanity_check_kahler(const IntersectionRing& r, const ClassVector& w) {
  if (w.degree() != 1) throw std::invalid_argument("sanity_check_kahler: class must have degree 1");
  r.check_class(w);
  KahlerSanityReport rep;
  rep.checked = w;
  const std::size_t n = r.dim();
  if (!w.is_real()) rep.failures.push_back("class is not real");

  const GaussianRational vol = r.integrate(r.power(w, n));
  rep.volume = vol.re();
  if (rep.volume.sign() <= 0) rep.failures.push_back("integral of w^n = " + rep.volume.str() + " is not positive");

  for (std::size_t p = 0; 2 * p < n; ++p) {
    std::vector<Vector> columns;
    for (std::size_t i = 0; i < r.hodge(p); ++i) columns.push_back(r.wedge(w, r.basis_vector(p, i)).coeffs());
    if (rank(Matrix::from_columns(columns, r.hodge(p + 1))) != r.hodge(p)) {
      rep.non_injective_degrees.push_back(p);
      rep.failures.push_back("multiplication by w is not injective on H^{" + std::to_string(p) + "," +
                             std::to_string(p) + "}");
    }
  }

  if (n >= 2 && w.is_real()) {
    const ClassVector wn2 = r.power(w, n - 2);
    const std::size_t h = r.hodge(1);
    Matrix g(h, h);
    for (std::size_t i = 0; i < h; ++i) {
      const ClassVector ui = r.wedge(r.basis_vector(1, i), wn2);
      for (std::size_t j = 0; j < h; ++j) g(i, j) = r.pairing(ui, r.basis_vector(1, j));
    }
    rep.h11_inertia = inertia(g);
    if (!(*rep.h11_inertia == Inertia{1, h - 1, 0})) {
      rep.failures.push_back("form int u v w^{n-2} on H^{1,1} does not have inertia (1, h^{1,1}-1, 0)");
    }
  }

  rep.passed = rep.failures.empty();
  if (rep.passed) rep.checked = w.with_flag(Positivity::kahler);
  return rep;
}

// ---------------------------------------------------------------------------
// MixedSetup

MixedSetup::MixedSetup(std::size_t p, ClassVector omega, std::vector<ClassVector> omegas, ClassVector omega_p_product,
                       ClassVector omega_power_product, Rational volume, SetupMode mode)
    : p_(p),
      omega_(std::move(omega)),
      omegas_(std::move(omegas)),
      omega_p_product_(std::move(omega_p_product)),
      omega_power_product_(std::move(omega_power_product)),
      volume_(std::move(volume)),
      mode_(mode) {}

MixedSetup MixedSetup::make(const IntersectionRing& r, std::size_t p, ClassVector omega, std::vector<ClassVector> omegas) {
  const std::size_t n = r.dim();
  if (p < 1 || 2 * p > n) {
    throw std::invalid_argument("degree p = " + std::to_string(p) + " is not admissible: need 1 <= p <= n/2 with n = " +
                                std::to_string(n));
  }
  if (omegas.size() != n - 2 * p) {
    throw std::invalid_argument("expected " + std::to_string(n - 2 * p) + " reference classes, got " +
                                std::to_string(omegas.size()));
  }
  SetupMode mode = SetupMode::strict;
  auto check = [&](const ClassVector& c, const std::string& what) {
    r.check_class(c);
    if (c.degree() != 1) throw std::invalid_argument(what + " must have degree 1");
    if (!c.is_real()) throw std::invalid_argument(what + " must be a real class");
    if (c.flag() == Positivity::none) throw std::invalid_argument(what + " must be flagged kahler or nef");
    if (c.flag() == Positivity::nef) mode = SetupMode::boundary;
  };
  check(omega, "omega");
  for (std::size_t i = 0; i < omegas.size(); ++i) check(omegas[i], "omega_" + std::to_string(i + 1));

  ClassVector big_omega = r.product(omegas);
  ClassVector omega_power = r.wedge(r.power(omega, p), big_omega);
  Rational volume = r.integrate(r.wedge(r.power(omega, p), omega_power)).re();
  return MixedSetup(p, std::move(omega), std::move(omegas), std::move(big_omega), std::move(omega_power),
                    std::move(volume), mode);
}

}  // namespace kcs
