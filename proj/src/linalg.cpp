#include "hopfkit/linalg.hpp"

#include <sstream>

namespace hk {

namespace {

void need(bool ok, const char* what) {
  if (!ok) throw Error(Error::Code::DimensionMismatch, what);
}

}  // namespace

Matrix Matrix::identity(const Field& F, std::size_t n) {
  Matrix m(F, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = F.one();
  return m;
}

Matrix Matrix::from_rows(const Field& F, const std::vector<std::vector<long long>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix m(F, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    need(rows[i].size() == c, "ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = F.from_int(rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_columns(const Field& F, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(F, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Matrix::set_column(std::size_t j, const Vector& v) {
  need(v.size() == rows_, "column length");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

bool Matrix::is_zero() const {
  for (auto& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? field_.one() : field_.zero())) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  need(a.cols() == b.rows(), "matrix product shapes");
  const Field& F = a.field();
  Matrix c(F, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Scalar x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& y = b.at(k, j);
        if (!y.is_zero()) c.at(i, j) = F.fma(c.at(i, j), x, y);
      }
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  need(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum shapes");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.field().add(a.at(i, j), b.at(i, j));
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  need(a.rows() == b.rows() && a.cols() == b.cols(), "matrix difference shapes");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.field().sub(a.at(i, j), b.at(i, j));
  return c;
}

Matrix scale(const Matrix& a, Scalar s) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.field().mul(a.at(i, j), s);
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
  return t;
}

Vector apply(const Matrix& a, const Vector& v) {
  need(a.cols() == v.size(), "matrix-vector shapes");
  const Field& F = a.field();
  Vector r(a.rows(), F.zero());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (!a.at(i, j).is_zero()) r[i] = F.fma(r[i], a.at(i, j), v[j]);
  }
  return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  need(a.field() == b.field(), "kron over different fields");
  const Field& F = a.field();
  Matrix c(F, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Scalar x = a.at(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c.at(i * b.rows() + k, j * b.cols() + l) = F.mul(x, b.at(k, l));
    }
  return c;
}

Matrix swap_matrix(const Field& F, std::size_t dx, std::size_t dy) {
  Matrix s(F, dx * dy, dx * dy);
  for (std::size_t i = 0; i < dx; ++i)
    for (std::size_t j = 0; j < dy; ++j) s.at(j * dx + i, i * dy + j) = F.one();
  return s;
}

std::vector<std::size_t> rref(Matrix& a) {
  const Field& F = a.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a.at(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
    Scalar inv = F.inv(a.at(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) = F.mul(a.at(r, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Scalar f = F.neg(a.at(i, c));
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a.at(r, j).is_zero()) a.at(i, j) = F.fma(a.at(i, j), f, a.at(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Matrix& a) {
  Matrix m = a.rows() <= a.cols() ? a : transpose(a);
  return rref(m).size();
}

std::vector<Vector> kernel_basis(const Matrix& a) {
  const Field& F = a.field();
  Matrix m = a;
  auto piv = rref(m);
  std::vector<bool> is_piv(a.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_piv[f]) continue;
    Vector v(a.cols(), F.zero());
    v[f] = F.one();
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F.neg(m.at(r, f));
    out.push_back(std::move(v));
  }
  return out;
}

Vector solve(const Matrix& a, const Vector& b) {
  need(a.rows() == b.size(), "solve shapes");
  const Field& F = a.field();
  Matrix aug(F, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == a.cols())
    throw Error(Error::Code::NoSolution, "inconsistent linear system");
  Vector x(a.cols(), F.zero());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug.at(r, a.cols());
  return x;
}

Matrix inverse(const Matrix& a) {
  need(a.is_square(), "inverse of non-square matrix");
  const Field& F = a.field();
  const std::size_t n = a.rows();
  Matrix aug(F, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = F.one();
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw Error(Error::Code::Singular, "singular matrix");
  Matrix inv(F, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

Poly char_poly(const Matrix& a) {
  need(a.is_square(), "char_poly of non-square matrix");
  const Field& F = a.field();
  const std::size_t n = a.rows();
  Matrix h = a;
  // reduce to upper Hessenberg form by similarity
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h.at(i, m - 1).is_zero()) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h.at(i, j), h.at(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h.at(j, i), h.at(j, m));
    }
    Scalar pinv = F.inv(h.at(m, m - 1));
    for (std::size_t r = m + 1; r < n; ++r) {
      Scalar u = F.mul(h.at(r, m - 1), pinv);
      if (u.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) h.at(r, j) = F.sub(h.at(r, j), F.mul(u, h.at(m, j)));
      for (std::size_t j = 0; j < n; ++j) h.at(j, m) = F.add(h.at(j, m), F.mul(u, h.at(j, r)));
    }
  }
  // p_k via the Hessenberg recurrence (1-based indices in the comments)
  std::vector<Poly> p(n + 1);
  p[0] = Poly{F.one()};
  for (std::size_t m = 1; m <= n; ++m) {
    Poly xm{F.neg(h.at(m - 1, m - 1)), F.one()};
    p[m] = poly_mul(F, xm, p[m - 1]);
    Scalar t = F.one();
    for (std::size_t i = 1; i < m; ++i) {
      t = F.mul(t, h.at(m - i, m - i - 1));
      Scalar c = F.mul(t, h.at(m - i - 1, m - 1));
      if (c.is_zero()) continue;
      Poly term = p[m - i - 1];
      for (auto& s : term) s = F.mul(s, c);
      p[m] = poly_sub(F, p[m], term);
    }
  }
  return p[n];
}

std::vector<Vector> eigenspace(const Matrix& a, Scalar lambda) {
  need(a.is_square(), "eigenspace of non-square matrix");
  Matrix m = a;
  for (std::size_t i = 0; i < a.rows(); ++i) m.at(i, i) = a.field().sub(m.at(i, i), lambda);
  return kernel_basis(m);
}

std::vector<Vector> span_basis(const Field& F, std::size_t dim, const std::vector<Vector>& vs) {
  Matrix m(F, vs.size(), dim);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = vs[i][j];
  auto piv = rref(m);
  std::vector<Vector> out;
  for (std::size_t r = 0; r < piv.size(); ++r) {
    Vector v(dim);
    for (std::size_t j = 0; j < dim; ++j) v[j] = m.at(r, j);
    out.push_back(std::move(v));
  }
  return out;
}

Vector zero_vector(const Field& F, std::size_t n) { return Vector(n, F.zero()); }

Vector unit_vector(const Field& F, std::size_t n, std::size_t i) {
  Vector v(n, F.zero());
  v[i] = F.one();
  return v;
}

bool is_zero(const Vector& v) {
  for (auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Vector vadd(const Field& F, const Vector& a, const Vector& b) {
  need(a.size() == b.size(), "vector sum");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
  return r;
}

Vector vsub(const Field& F, const Vector& a, const Vector& b) {
  need(a.size() == b.size(), "vector difference");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
  return r;
}

Vector vscale(const Field& F, const Vector& a, Scalar c) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  return r;
}

std::string to_string(const Matrix& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? " " : "") << a.field().str(a.at(i, j));
    os << "]\n";
  }
  return os.str();
}

}  // namespace hk
