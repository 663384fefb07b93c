#pragma once

// Small algebras, modules and oracles shared by the unit tests and the
// acceptance run.

#include <algorithm>
#include <functional>

#include "hopfkit/constructors.hpp"

namespace hk::corpus {

inline std::vector<Vector> brute_characters(const Algebra& A) {
  const Field& F = A.field;
  auto els = F.elements();
  std::vector<Vector> out;
  Vector v(A.dim, F.zero());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == A.dim) {
      Scalar u = F.zero();
      for (std::size_t k = 0; k < A.dim; ++k) u = F.fma(u, v[k], A.unit[k]);
      if (u != F.one()) return;
      for (std::size_t a = 0; a < A.dim; ++a)
        for (std::size_t b = 0; b < A.dim; ++b) {
          Scalar s = F.zero();
          for (std::size_t k = 0; k < A.dim; ++k) s = F.fma(s, v[k], A.mult_coeff(a, b, k));
          if (s != F.mul(v[a], v[b])) return;
        }
      out.push_back(v);
      return;
    }
    for (auto e : els) {
      v[i] = e;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

inline Algebra truncated(const Field& F, std::size_t n) {
  LinMap m(n * n, n);
  std::vector<std::string> basis;
  for (std::size_t i = 0; i < n; ++i) {
    basis.push_back(i == 0 ? "1" : "x^" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) m.col(i * n + j).push_back({i + j, F.one()});
  }
  return make_algebra(F, basis, m, unit_vector(F, n, 0));
}

// Upper triangular 2×2 matrices, basis e11, e12, e22.
inline Algebra upper_triangular(const Field& F) {
  LinMap m(9, 3);
  m.col(0 * 3 + 0).push_back({0, F.one()});
  m.col(0 * 3 + 1).push_back({1, F.one()});
  m.col(1 * 3 + 2).push_back({1, F.one()});
  m.col(2 * 3 + 2).push_back({2, F.one()});
  Vector u = {F.one(), F.zero(), F.one()};
  return make_algebra(F, {"e11", "e12", "e22"}, m, u);
}

inline Vector gpow(const HopfData& H, int k) {
  Vector g = unit_vector(H.field, H.dim, H.index_of("g")), r = H.unit;
  int order = 0;
  for (Vector p = g; p != H.unit; p = H.product(p, g)) ++order;
  ++order;
  k = ((k % order) + order) % order;
  for (int i = 0; i < k; ++i) r = H.product(r, g);
  return r;
}

// H-modules with the coaction induced by the R-matrix of the exterior factor.
inline std::vector<YDModule> r_modules(const ExteriorFactor& E) {
  const HopfData& H = *E.H;
  std::vector<YDModule> out;
  out.push_back(induced_coaction(E.H, H.mult, H.dim, E.R));
  LinMap triv(H.dim, 1);
  for (std::size_t a = 0; a < H.dim; ++a)
    if (!H.counit[a].is_zero()) triv.col(a).push_back({0, H.counit[a]});
  out.push_back(induced_coaction(E.H, triv, 1, E.R));
  out.push_back(dual_module(out[0]));
  out.push_back(tensor_module(out[0], out[0]));
  out.push_back(E.B.obj);
  out.push_back(dual_module(E.B.obj));
  out.push_back(tensor_module(E.B.obj, out[0]));
  return out;
}

// Every algebra of dimension ≤ 3 used for the character oracle.
inline std::vector<Algebra> small_algebras(const Field& F) {
  return {group_algebra(2, F), group_algebra(3, F), dual_hopf(group_algebra(2, F)), dual_hopf(group_algebra(3, F)),
          truncated(F, 2),     truncated(F, 3),     upper_triangular(F)};
}

}  // namespace hk::corpus
