#include "hopfkit/grouplike.hpp"
#include "pipe.hpp"

namespace hk {

using detail::Pipe;

namespace {

bool same(const LinMap& a, const LinMap& b) {
  if (a.in_dim() != b.in_dim() || a.out_dim() != b.out_dim()) return false;
  for (std::size_t c = 0; c < a.in_dim(); ++c)
    if (!(a.col(c) == b.col(c))) return false;
  return true;
}

}  // namespace

// M is strongly inner when some D(B)-module structure on M induces the given
// YD structure on End(M). The candidates are the twists of M by the
// characters (λ, g*) of D(B) that lie in C: b·'m = λ(b_2) b_1·m and
// f·'m = f_2(g) f_1·m.
SolverResult strongly_inner_solver(const DoubleData& D, HopfPtr L, const BModule& M) {
  const Field& F = D.B.field();
  const std::size_t d = D.B.dim(), n = M.dim();
  SolverResult res;
  std::vector<Vector> chars = characters_in_C(D.B), gls = grouplikes_in_C(D.B);
  res.search_size = chars.size() * gls.size();
  YDAlgebra target = end_algebra(yd_transport(D.B, L, M));
  DModule base = yd_to_dmodule(D, M);
  for (auto& lambda : chars)
    for (auto& g : gls) {
      ++res.tried;
      LinMap lam = dense_map(transpose(Matrix::from_columns(F, d, {lambda})));
      LinMap gev = dense_map(transpose(Matrix::from_columns(F, d, {g})));
      DModule T = base;
      T.bact = eval_map(F, {d, n}, n, [&](Tensor& t) {
        Pipe{F, t}.map(0, 1, D.B.alg.comult, {d, d}).map(1, 1, lam, {}).map(0, 2, base.bact, {n});
      });
      T.fact = eval_map(F, {d, n}, n, [&](Tensor& t) {
        Pipe{F, t}.map(0, 1, D.Bstar.alg.comult, {d, d}).map(1, 1, gev, {}).map(0, 2, base.fact, {n});
      });
      if (!dmodule_check(D, T).ok()) continue;
      YDAlgebra E = end_algebra(yd_transport(D.B, L, dmodule_to_yd(D, T)));
      if (!same(E.obj.act, target.obj.act) || !same(E.obj.coact, target.obj.coact)) continue;
      res.found = true;
      res.lambda = lambda;
      res.g = g;
      res.theta = Matrix(F, n * n, d * d);
      for (std::size_t x = 0; x < d * d; ++x) {
        Matrix rx = d_action(D, T, unit_vector(F, d * d, x));  // small: once per success
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) res.theta.at(i * n + j, x) = rx.at(i, j);
      }
      return res;
    }
  return res;
}

}  // namespace hk
