#include "hopfkit/grouplike.hpp"

#include <algorithm>
#include <functional>

namespace hk {

namespace {

// Columns of W spanning a subspace; returns the columns of W ∩ ker(A).
Matrix restrict_kernel(const Matrix& A, const Matrix& W) {
  const Field& F = A.field();
  auto K = kernel_basis(A * W);
  Matrix out(F, W.rows(), K.size());
  for (std::size_t j = 0; j < K.size(); ++j) out.set_column(j, hk::apply(W, K[j]));
  return out;
}

Scalar dot(const Field& F, const Vector& a, const Vector& b) {
  Scalar s = F.zero();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s = F.fma(s, a[i], b[i]);
  return s;
}

}  // namespace

bool is_character(const Algebra& A, const Vector& chi) {
  const Field& F = A.field;
  if (chi.size() != A.dim || dot(F, chi, A.unit) != F.one()) return false;
  for (std::size_t i = 0; i < A.dim; ++i) {
    if (chi[i].is_zero()) {
      // χ(e_i e_j) must vanish for every j
      for (std::size_t j = 0; j < A.dim; ++j) {
        Scalar s = F.zero();
        for (auto& t : A.mult.col(i * A.dim + j)) s = F.fma(s, t.c, chi[t.idx]);
        if (!s.is_zero()) return false;
      }
      continue;
    }
    for (std::size_t j = 0; j < A.dim; ++j) {
      Scalar s = F.zero();
      for (auto& t : A.mult.col(i * A.dim + j)) s = F.fma(s, t.c, chi[t.idx]);
      if (s != F.mul(chi[i], chi[j])) return false;
    }
  }
  return true;
}

std::vector<Vector> characters(const Algebra& A) {
  const Field& F = A.field;
  const std::size_t n = A.dim;
  std::vector<std::size_t> gens = algebra_generators(A);
  std::vector<Matrix> ops;
  std::vector<std::vector<Scalar>> roots;
  for (std::size_t g : gens) {
    ops.push_back(transpose(A.left_mult(unit_vector(F, n, g))));
    roots.push_back(poly_roots(F, char_poly(ops.back())));
  }
  std::vector<Vector> out;
  std::function<void(std::size_t, const Matrix&)> split = [&](std::size_t k, const Matrix& W) {
    if (W.cols() == 0) return;
    if (k == ops.size()) {
      // a common eigenspace of all generators is spanned by one character
      Vector v = W.column(0);
      Scalar v1 = dot(F, v, A.unit);
      if (v1.is_zero()) return;
      Vector chi = vscale(F, v, F.inv(v1));
      if (W.cols() == 1 && is_character(A, chi)) out.push_back(std::move(chi));
      return;
    }
    for (const Scalar& r : roots[k]) {
      Matrix shifted = ops[k] - scale(Matrix::identity(F, n), r);
      split(k + 1, restrict_kernel(shifted, W));
    }
  };
  split(0, Matrix::identity(F, n));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_grouplike(const HopfData& L, const Vector& g) {
  return is_character(dual_hopf(L), g);
}

std::vector<Vector> grouplikes(const HopfData& L) { return characters(dual_hopf(L)); }

std::vector<Vector> characters_in_C(const BraidedHopf& B) {
  const YDModule& X = B.obj;
  YDModule k = trivial_module(X.base);
  const Field& F = B.field();
  std::vector<Vector> out;
  for (auto& chi : characters(B.alg)) {
    Matrix m(F, 1, chi.size());
    for (std::size_t i = 0; i < chi.size(); ++i) m.at(0, i) = chi[i];
    if (is_linear(m, X, k) && is_colinear(m, X, k)) out.push_back(chi);
  }
  return out;
}

std::vector<Vector> grouplikes_in_C(const BraidedHopf& B) {
  const YDModule& X = B.obj;
  YDModule k = trivial_module(X.base);
  const Field& F = B.field();
  std::vector<Vector> out;
  for (auto& g : grouplikes(B.alg)) {
    Matrix m(F, g.size(), 1);
    m.set_column(0, g);
    if (is_linear(m, k, X) && is_colinear(m, k, X)) out.push_back(g);
  }
  return out;
}

Matrix inner_auto(const HopfData& H, const Vector& g) {
  Vector gi = hk::apply(H.antipode, g);
  return H.left_mult(g) * H.right_mult(gi);
}

Vector character_inverse(const HopfData& H, const Vector& chi) {
  // (χ∘S)(e_j) = Σ_i χ_i S[i][j]
  const Field& F = H.field;
  Vector out(H.dim, F.zero());
  for (std::size_t j = 0; j < H.dim; ++j)
    for (std::size_t i = 0; i < H.dim; ++i) out[j] = F.fma(out[j], chi[i], H.antipode.at(i, j));
  return out;
}

Vector character_product(const HopfData& H, const Vector& a, const Vector& b) {
  const Field& F = H.field;
  Vector out(H.dim, F.zero());
  for (std::size_t i = 0; i < H.dim; ++i)
    for (auto& t : H.comult.col(i)) out[i] = F.fma(out[i], t.c, F.mul(a[t.idx / H.dim], b[t.idx % H.dim]));
  return out;
}

Matrix coinner_auto(const HopfData& H, const Vector& chi) {
  const Field& F = H.field;
  const std::size_t d = H.dim;
  Vector inv = character_inverse(H, chi);
  Matrix m(F, d, d);
  for (std::size_t b = 0; b < d; ++b)
    for (auto& t : H.comult.col(b)) {
      std::size_t b1 = t.idx / d, rest = t.idx % d;
      if (chi[b1].is_zero()) continue;
      for (auto& u : H.comult.col(rest)) {
        std::size_t b2 = u.idx / d, b3 = u.idx % d;
        if (inv[b3].is_zero()) continue;
        m.at(b2, b) = F.fma(m.at(b2, b), F.mul(t.c, u.c), F.mul(chi[b1], inv[b3]));
      }
    }
  return m;
}

GammaReport gamma_iso(const DoubleData& D) {
  const Field& F = D.B.field();
  const std::size_t d = D.B.dim();
  auto lam = characters_in_C(D.B);
  auto gs = grouplikes_in_C(D.B);
  auto gd = grouplikes_in_C(D.D);
  GammaReport r;
  r.g_bstar = lam.size();
  r.g_b = gs.size();
  r.g_d = gd.size();
  auto gamma = [&](const Vector& l, const Vector& g) {
    Vector v(d * d, F.zero());
    for (std::size_t f = 0; f < d; ++f)
      for (std::size_t b = 0; b < d; ++b) v[f * d + b] = F.mul(l[f], g[b]);
    return v;
  };
  std::vector<Vector> images;
  r.lands = true;
  for (auto& l : lam)
    for (auto& g : gs) {
      Vector v = gamma(l, g);
      if (std::find(gd.begin(), gd.end(), v) == gd.end()) r.lands = false;
      images.push_back(std::move(v));
    }
  std::vector<Vector> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  r.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  r.surjective = r.lands && r.injective && images.size() == gd.size();
  // both cross actions fix group-likes: g▷λ = λ and g◁λ = g
  r.actions_trivial = true;
  for (auto& l : lam)
    for (auto& g : gs) {
      Vector gl(d * d, F.zero());
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t f = 0; f < d; ++f) gl[a * d + f] = F.mul(g[a], l[f]);
      if (hk::apply(D.left_act, gl) != l || hk::apply(D.right_act, gl) != g) r.actions_trivial = false;
    }
  r.multiplicative = true;
  const HopfData& DD = D.D.alg;
  for (auto& l1 : lam)
    for (auto& g1 : gs)
      for (auto& l2 : lam)
        for (auto& g2 : gs) {
          Vector lhs = DD.product(gamma(l1, g1), gamma(l2, g2));
          Vector rhs = gamma(D.Bstar.alg.product(l1, l2), D.B.alg.product(g1, g2));
          if (lhs != rhs) r.multiplicative = false;
        }
  return r;
}

std::vector<Pair> s_group(const BraidedHopf& B) {
  std::vector<Pair> out;
  auto gs = grouplikes_in_C(B);
  for (auto& l : characters_in_C(B)) {
    Matrix lb = coinner_auto(B.alg, l);
    for (auto& g : gs)
      if (inner_auto(B.alg, g) == lb) out.push_back({l, g});
  }
  return out;
}

Vector pair_functional(const DoubleData& D, const Pair& p) {
  const Field& F = D.B.field();
  const std::size_t d = D.B.dim();
  Vector v(d * d, F.zero());
  for (std::size_t f = 0; f < d; ++f)
    for (std::size_t b = 0; b < d; ++b) v[f * d + b] = F.mul(p.g[f], p.lambda[b]);
  return v;
}

EquivReport equiv_cond_check(const DoubleData& D, const Pair& p) {
  const HopfData& H = D.B.alg;
  const Field& F = H.field;
  const std::size_t d = H.dim;
  EquivReport r;
  r.character_of_D = is_character(D.D.alg, pair_functional(D, p));
  r.twisted_commute = true;
  Matrix Lg = H.left_mult(p.g), Rg = H.right_mult(p.g);
  for (std::size_t b = 0; b < d && r.twisted_commute; ++b) {
    Vector lhs(d, F.zero()), rhs(d, F.zero());
    for (auto& t : H.comult.col(b)) {
      std::size_t b1 = t.idx / d, b2 = t.idx % d;
      lhs[b2] = F.fma(lhs[b2], t.c, p.lambda[b1]);
      rhs[b1] = F.fma(rhs[b1], t.c, p.lambda[b2]);
    }
    r.twisted_commute = hk::apply(Rg, lhs) == hk::apply(Lg, rhs);
  }
  r.inner_equal = inner_auto(H, p.g) == coinner_auto(H, p.lambda);
  return r;
}

Matrix theta_map(const HopfData& H, const Pair& p) { return inner_auto(H, p.g) * coinner_auto(H, p.lambda); }

Matrix scaling_automorphism(const BraidedHopf& B, Scalar xi) {
  const Field& F = B.field();
  if (xi.is_zero()) throw Error(Error::Code::NotInvertible, "ξ = 0");
  Matrix m(F, B.dim(), B.dim());
  for (std::size_t i = 0; i < B.dim(); ++i) m.at(i, i) = F.pow(xi, static_cast<long long>(i));
  return m;
}

Matrix taft_scaling(int n, const Field& F, Scalar xi) {
  if (xi.is_zero()) throw Error(Error::Code::NotInvertible, "ξ = 0");
  Matrix m(F, n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m.at(a * n + b, a * n + b) = F.pow(xi, b);
  return m;
}

Matrix gl_automorphism(const HopfData& H, int n, const Matrix& A) {
  const Field& F = H.field;
  if (A.rows() != static_cast<std::size_t>(n) || !A.is_square() || rank(A) != A.rows())
    throw Error(Error::Code::NotInvertible, "x-block is not invertible");
  const std::size_t X = std::size_t{1} << n, d = H.dim;
  auto x_index = [&](int i) { return std::size_t{1} << (n - 1 - i); };
  Matrix m(F, d, d);
  for (std::size_t idx = 0; idx < d; ++idx) {
    std::size_t a = idx / X, bits = idx % X;
    Vector v = unit_vector(F, d, a * X);
    for (int i = 0; i < n; ++i)
      if (bits & x_index(i)) {
        Vector img(d, F.zero());
        for (int j = 0; j < n; ++j) img[x_index(j)] = A.at(j, i);
        v = H.product(v, img);
      }
    m.set_column(idx, v);
  }
  return m;
}

Report braided_aut_check(const BraidedHopf& B, const Matrix& alpha) {
  Report r = hopf_morphism_check(alpha, B.alg, B.alg);
  Check bij("bijective");
  bij.pass = alpha.is_square() && rank(alpha) == alpha.rows();
  r.add(bij);
  Check lin("linear");
  lin.pass = is_linear(alpha, B.obj, B.obj);
  r.add(lin);
  Check col("colinear");
  col.pass = is_colinear(alpha, B.obj, B.obj);
  r.add(col);
  return r;
}

}  // namespace hk
