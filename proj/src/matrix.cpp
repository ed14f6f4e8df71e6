#include "kcs/matrix.hpp"

#include <stdexcept>

namespace kcs {

Matrix::Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  Vector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!x[j].is_zero()) y[i] += (*this)(i, j) * x[j];
    }
  }
  return y;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::adjoint() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j).conj();
  return t;
}

bool Matrix::is_real() const {
  for (const auto& z : data_)
    if (!z.is_real()) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

bool Matrix::is_hermitian() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (!((*this)(i, j) == (*this)(j, i).conj())) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& z : data_)
    if (!z.is_zero()) return false;
  return true;
}

EchelonForm row_echelon(Matrix m) {
  EchelonForm out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
    }
    const GaussianRational inv = GaussianRational(1) / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const GaussianRational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_echelon(m).pivot_columns.size(); }

std::vector<Vector> nullspace(const Matrix& m) {
  const std::size_t cols = m.cols();
  const EchelonForm e = row_echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;

  std::vector<Vector> raw;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivot_columns.size(); ++k) v[e.pivot_columns[k]] = -e.reduced(k, f);
    raw.push_back(std::move(v));
  }
  if (raw.empty()) return {};

  const EchelonForm canon = row_echelon(Matrix::from_rows(raw, cols));
  std::vector<Vector> basis;
  basis.reserve(canon.pivot_columns.size());
  for (std::size_t k = 0; k < canon.pivot_columns.size(); ++k) basis.push_back(canon.reduced.row(k));
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const EchelonForm e = row_echelon(std::move(aug));
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t k = 0; k < e.pivot_columns.size(); ++k) x[e.pivot_columns[k]] = e.reduced(k, m.cols());
  return x;
}

Inertia inertia(const Matrix& m, bool hermitian) {
  if (!m.square()) throw std::invalid_argument("inertia: matrix is not square");
  if (hermitian) {
    if (!m.is_hermitian()) throw std::invalid_argument("inertia: matrix is not Hermitian");
  } else if (!m.is_real() || !m.is_symmetric()) {
    throw std::invalid_argument("inertia: matrix is not real symmetric");
  }

  Matrix a = m;
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < a.rows(); ++i) active.push_back(i);
  Inertia result;

  auto drop = [&active](std::size_t idx) { std::erase(active, idx); };

  while (!active.empty()) {
    std::optional<std::size_t> diag;
    for (auto i : active) {
      if (!a(i, i).is_zero()) {
        diag = i;
        break;
      }
    }
    if (diag) {
      const std::size_t k = *diag;
      const GaussianRational pivot = a(k, k);  // real for both admissible inputs
      (pivot.re().sign() > 0 ? result.positive : result.negative) += 1;
      drop(k);
      for (auto i : active) {
        if (a(i, k).is_zero()) continue;
        const GaussianRational f = a(i, k) / pivot;
        for (auto j : active) a(i, j) -= f * a(k, j);
      }
      continue;
    }

    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (std::size_t x = 0; x < active.size() && !pair; ++x)
      for (std::size_t y = x + 1; y < active.size() && !pair; ++y)
        if (!a(active[x], active[y]).is_zero()) pair = {active[x], active[y]};
    if (!pair) {
      result.zero += active.size();
      break;
    }

    // Hyperbolic 2x2 block [[0, b], [conj b, 0]] has inertia (1, 1, 0);
    // eliminate it through its Schur complement.
    const auto [k, l] = *pair;
    result.positive += 1;
    result.negative += 1;
    drop(k);
    drop(l);
    const GaussianRational inv_lk = GaussianRational(1) / a(l, k);
    const GaussianRational inv_kl = GaussianRational(1) / a(k, l);
    for (auto i : active) {
      const GaussianRational ck = a(i, k) * inv_lk;
      const GaussianRational cl = a(i, l) * inv_kl;
      if (ck.is_zero() && cl.is_zero()) continue;
      for (auto j : active) a(i, j) -= ck * a(l, j) + cl * a(k, j);
    }
  }
  return result;
}

}  // namespace kcs
