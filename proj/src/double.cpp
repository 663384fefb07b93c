#include "hopfkit/double.hpp"

#include "pipe.hpp"

namespace hk {

using detail::Pipe;

namespace {

// e^f⊗e_b ↦ δ_{fb}
LinMap ev_map(const Field& F, std::size_t d) {
  LinMap e(d * d, 1);
  for (std::size_t i = 0; i < d; ++i) e.col(i * d + i).push_back({0, F.one()});
  return e;
}

Matrix rho_of(const Field& F, const LinMap& act, std::size_t a, std::size_t n) {
  Matrix m(F, n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (auto& t : act.col(a * n + j)) m.at(t.idx, j) = t.c;
  return m;
}

Matrix rho_of(const Field& F, const LinMap& act, const Vector& x, std::size_t n) {
  Matrix m(F, n, n);
  for (std::size_t a = 0; a < x.size(); ++a)
    if (!x[a].is_zero())
      for (std::size_t j = 0; j < n; ++j)
        for (auto& t : act.col(a * n + j)) m.at(t.idx, j) = F.fma(m.at(t.idx, j), x[a], t.c);
  return m;
}

Check module_check(const std::string& name, const Algebra& A, const LinMap& act, std::size_t n) {
  const Field& F = A.field;
  Check c(name);
  if (!rho_of(F, act, A.unit, n).is_identity()) {
    c.pass = false;
    c.detail = "unit";
    return c;
  }
  std::vector<Matrix> rho;
  for (std::size_t a = 0; a < A.dim; ++a) rho.push_back(rho_of(F, act, a, n));
  for (std::size_t a = 0; a < A.dim && c.pass; ++a)
    for (std::size_t b = 0; b < A.dim && c.pass; ++b) {
      Vector ab = A.product(unit_vector(F, A.dim, a), unit_vector(F, A.dim, b));
      if (!(rho[a] * rho[b] == rho_of(F, act, ab, n))) {
        c.pass = false;
        c.witness = {a, b};
      }
    }
  return c;
}

}  // namespace

SymmReport check_symm_conds(const BraidedHopf& B) {
  YDModule Bs = dual_module(B.obj);
  SymmReport r;
  r.BB = is_symmetric_pair(B.obj, B.obj);
  r.SS = is_symmetric_pair(Bs, Bs);
  r.BS = is_symmetric_pair(B.obj, Bs);
  return r;
}

BraidedHopf dual_leg(const BraidedHopf& B) {
  BraidedHopf S;
  S.alg = dual_hopf(opposite(B.alg));
  S.obj = dual_module(B.obj);
  return S;
}

DoubleData drinfeld_double(const BraidedHopf& B) {
  if (!is_symmetric_pair(B.obj, B.obj))
    throw Error(Error::Code::SymmetricityViolated, "D(B) requires Φ_{B,B} symmetric");
  const Field& F = B.field();
  const std::size_t d = B.dim();
  DoubleData out;
  out.B = B;
  out.Bstar = dual_leg(B);
  const HopfData& A = B.alg;
  const HopfData& As = out.Bstar.alg;
  LinMap phiBB = dense_map(braiding(B.obj, B.obj));
  LinMap phiBS = dense_map(braiding(B.obj, out.Bstar.obj));
  LinMap phiSB = dense_map(braiding(out.Bstar.obj, B.obj));
  LinMap cBB = dense_map(braiding_inv(B.obj, B.obj));
  LinMap Sinv = dense_map(A.s_inv());
  LinMap ev = ev_map(F, d);
  LinMap evbar = compose(F, ev, phiBS);

  out.pairing = evbar.to_matrix(F);  // 1 × d², index j*d + k
  Matrix P(F, d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) P.at(j, k) = out.pairing.at(0, j * d + k);
  Matrix Pinv = inverse(P);

  // ēv(b'⊗a▷f) = ēv(∇Φ(b'a_1⊗S^{-1}a_2)⊗f)
  LinMap v = eval_map(F, {d, d, d}, 1, [&](Tensor& t) {
    Pipe{F, t}
        .map(1, 1, A.comult, {d, d})
        .map(2, 1, Sinv, {d})
        .map(0, 2, A.mult, {d})
        .map(0, 2, phiBB, {d, d})
        .map(0, 2, A.mult, {d})
        .map(0, 2, evbar, {});
  });
  out.left_act = Matrix(F, d, d * d);
  for (std::size_t af = 0; af < d * d; ++af) {
    Vector rhs(d, F.zero());
    for (std::size_t bp = 0; bp < d; ++bp) rhs[bp] = v.entry(0, bp * d * d + af);
    out.left_act.set_column(af, hk::apply(Pinv, rhs));
  }
  // a◁f = a_12' ēv(S^{-1}(a_2)' a_11' ⊗ f), the primes from Φ^{-1} then Φ
  out.right_act = eval_matrix(F, {d, d}, d, [&](Tensor& t) {
    Pipe{F, t}
        .map(0, 1, A.comult, {d, d})
        .map(0, 1, A.comult, {d, d})
        .map(2, 1, Sinv, {d})
        .map(0, 2, cBB, {d, d})
        .map(1, 2, phiBB, {d, d})
        .map(1, 2, A.mult, {d})
        .map(1, 2, evbar, {});
  });
  LinMap lact = dense_map(out.left_act), ract = dense_map(out.right_act);

  HopfData D;
  D.field = F;
  D.dim = d * d;
  for (auto& f : As.basis)
    for (auto& b : A.basis) D.basis.push_back(f + "⊗" + b);
  D.mult = eval_map(F, {d, d, d, d}, d * d, [&](Tensor& t) {
    Pipe{F, t}
        .map(1, 1, A.comult, {d, d})
        .map(3, 1, As.comult, {d, d})
        .map(2, 2, phiBS, {d, d})
        .map(1, 2, lact, {d})
        .map(2, 2, ract, {d})
        .map(0, 2, As.mult, {d})
        .map(1, 2, A.mult, {d});
  });
  D.unit.assign(d * d, F.zero());
  D.counit.assign(d * d, F.zero());
  for (std::size_t f = 0; f < d; ++f)
    for (std::size_t b = 0; b < d; ++b) {
      D.unit[f * d + b] = F.mul(As.unit[f], A.unit[b]);
      D.counit[f * d + b] = F.mul(As.counit[f], A.counit[b]);
    }
  D.comult = eval_map(F, {d, d}, d * d * d * d, [&](Tensor& t) {
    Pipe{F, t}.map(0, 1, As.comult, {d, d}).map(2, 1, A.comult, {d, d}).map(1, 2, phiSB, {d, d});
  });
  LinMap SB = dense_map(A.antipode), SS = dense_map(As.antipode);
  // (1⊗S b')(S f'⊗1) with b'⊗f' = Φ(f⊗b)
  D.antipode = eval_matrix(F, {d, d}, d * d, [&](Tensor& t) {
    Pipe{F, t}
        .map(0, 2, phiSB, {d, d})
        .map(0, 1, SB, {d})
        .map(1, 1, SS, {d})
        .map(0, 1, A.comult, {d, d})
        .map(2, 1, As.comult, {d, d})
        .map(1, 2, phiBS, {d, d})
        .map(0, 2, lact, {d})
        .map(1, 2, ract, {d});
  });
  D.antipode_inv = inverse(D.antipode);

  out.D.alg = std::move(D);
  out.D.obj = tensor_module(out.Bstar.obj, B.obj);
  return out;
}

Report verify_double(const DoubleData& D) {
  Report r = verify_braided_hopf(D.D);
  const Field& F = D.B.field();
  const std::size_t d = D.B.dim();
  const Vector& eps = D.Bstar.alg.unit;
  Check one_s("1S");
  for (std::size_t b = 0; b < d && one_s.pass; ++b) {
    Vector x(d * d, F.zero()), want(d * d, F.zero());
    Vector sb = D.B.alg.antipode.column(b);
    for (std::size_t f = 0; f < d; ++f) {
      x[f * d + b] = eps[f];
      for (std::size_t c = 0; c < d; ++c) want[f * d + c] = F.mul(eps[f], sb[c]);
    }
    if (hk::apply(D.D.alg.antipode, x) != want) {
      one_s.pass = false;
      one_s.witness = {b};
    }
  }
  r.add(one_s);
  return r;
}

DModule yd_to_dmodule(const DoubleData& D, const BModule& N) {
  const Field& F = D.B.field();
  const std::size_t d = D.B.dim(), n = N.dim();
  Matrix Si = D.B.alg.s_inv();
  DModule M;
  M.obj = N.obj;
  M.bact = N.act;
  M.fact = LinMap(d * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (auto& t : N.coact.col(i)) {
      std::size_t a = t.idx / n, j = t.idx % n;
      for (std::size_t f = 0; f < d; ++f)
        if (!Si.at(f, a).is_zero()) M.fact.col(f * n + i).push_back({j, F.mul(t.c, Si.at(f, a))});
    }
  for (std::size_t c = 0; c < d * n; ++c) normalize(F, M.fact.col(c));
  return M;
}

BModule dmodule_to_yd(const DoubleData& D, const DModule& M) {
  const Field& F = D.B.field();
  const std::size_t d = D.B.dim(), n = M.dim();
  const Matrix& S = D.B.alg.antipode;
  BModule N;
  N.obj = M.obj;
  N.act = M.bact;
  N.coact = LinMap(n, d * n);
  for (std::size_t m = 0; m < n; ++m) {
    SparseVec v;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k)
        if (!S.at(i, k).is_zero())
          for (auto& t : M.fact.col(k * n + m)) v.push_back({i * n + t.idx, F.mul(S.at(i, k), t.c)});
    normalize(F, v);
    N.coact.col(m) = std::move(v);
  }
  return N;
}

namespace {

// Action matrices of every basis element f⊗b of D, computed once.
struct DActions {
  const Field& F;
  std::size_t n;
  std::vector<Matrix> basis;
  DActions(const DoubleData& D, const DModule& M) : F(D.B.field()), n(M.dim()) {
    const std::size_t d = D.B.dim();
    std::vector<Matrix> rf, rb;
    for (std::size_t i = 0; i < d; ++i) {
      rf.push_back(rho_of(F, M.fact, i, n));
      rb.push_back(rho_of(F, M.bact, i, n));
    }
    for (std::size_t f = 0; f < d; ++f)
      for (std::size_t b = 0; b < d; ++b) basis.push_back(rf[f] * rb[b]);
  }
  Matrix operator()(const Vector& x) const {
    Matrix out(F, n, n);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!x[i].is_zero())
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) out.at(r, c) = F.fma(out.at(r, c), x[i], basis[i].at(r, c));
    return out;
  }
};

}  // namespace

Matrix d_action(const DoubleData& D, const DModule& M, const Vector& x) { return DActions(D, M)(x); }

Report dmodule_check(const DoubleData& D, const DModule& M) {
  const Field& F = D.B.field();
  const std::size_t d = D.B.dim(), n = M.dim();
  const HopfData& DD = D.D.alg;
  Report r;
  r.add(module_check("b_module", D.B.alg, M.bact, n));
  r.add(module_check("bstar_module", D.Bstar.alg, M.fact, n));
  DActions act(D, M);
  Check compat("compat");
  const Vector& eps = D.Bstar.alg.unit;
  const Vector& one = D.B.alg.unit;
  for (std::size_t a = 0; a < d && compat.pass; ++a)
    for (std::size_t f = 0; f < d && compat.pass; ++f) {
      Vector x(d * d, F.zero()), y(d * d, F.zero());
      for (std::size_t i = 0; i < d; ++i) {
        x[i * d + a] = eps[i];
        y[f * d + i] = one[i];
      }
      Matrix lhs = rho_of(F, M.bact, a, n) * rho_of(F, M.fact, f, n);
      if (!(lhs == act(DD.product(x, y)))) {
        compat.pass = false;
        compat.witness = {a, f};
      }
    }
  r.add(compat);
  Check dm("d_module");
  dm.pass = act(DD.unit).is_identity();
  for (std::size_t x : algebra_generators(DD)) {
    for (std::size_t y = 0; y < DD.dim && dm.pass; ++y) {
      Vector xy = DD.product(unit_vector(F, DD.dim, x), unit_vector(F, DD.dim, y));
      if (!(act.basis[x] * act.basis[y] == act(xy))) {
        dm.pass = false;
        dm.witness = {x, y};
      }
    }
    if (!dm.pass) break;
  }
  r.add(dm);
  return r;
}

YDModule yd_transport(const BraidedHopf& B, HopfPtr L, const BModule& X) {
  const Field& F = B.field();
  const std::size_t b = B.dim(), h = X.obj.hdim(), n = X.dim();
  if (L->dim != b * h) throw Error(Error::Code::DimensionMismatch, "L is not B⋊H");
  YDModule Y;
  Y.base = std::move(L);
  Y.dim = n;
  Y.act = eval_map(F, {b, h, n}, n, [&](Tensor& t) {
    Pipe{F, t}.map(1, 2, X.obj.act, {n}).map(0, 2, X.act, {n});
  });
  Y.coact = eval_map(F, {n}, b * h * n, [&](Tensor& t) {
    Pipe{F, t}.map(0, 1, X.coact, {b, n}).map(1, 1, X.obj.coact, {h, n});
  });
  return Y;
}

BModule yd_untransport(const BraidedHopf& B, const YDModule& Y) {
  const Field& F = B.field();
  const HopfData& H = *B.obj.base;
  const std::size_t b = B.dim(), h = H.dim, n = Y.dim;
  const Vector& oneB = B.alg.unit;
  const Vector& oneH = H.unit;
  LinMap epsB = dense_map(B.alg.counit_matrix()), epsH = dense_map(H.counit_matrix());
  BModule X;
  X.obj.base = B.obj.base;
  X.obj.dim = n;
  X.obj.act = LinMap(h * n, n);
  X.act = LinMap(b * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < h; ++k) {
      SparseVec v;
      for (std::size_t i = 0; i < b; ++i)
        if (!oneB[i].is_zero())
          for (auto& t : Y.act.col((i * h + k) * n + j)) v.push_back({t.idx, F.mul(oneB[i], t.c)});
      normalize(F, v);
      X.obj.act.col(k * n + j) = std::move(v);
    }
    for (std::size_t i = 0; i < b; ++i) {
      SparseVec v;
      for (std::size_t k = 0; k < h; ++k)
        if (!oneH[k].is_zero())
          for (auto& t : Y.act.col((i * h + k) * n + j)) v.push_back({t.idx, F.mul(oneH[k], t.c)});
      normalize(F, v);
      X.act.col(i * n + j) = std::move(v);
    }
  }
  X.obj.coact = eval_map(F, {n}, h * n, [&](Tensor& t) {
    Pipe{F, t}.map(0, 1, Y.coact, {b, h, n}).map(0, 1, epsB, {});
  });
  X.coact = eval_map(F, {n}, b * n, [&](Tensor& t) {
    Pipe{F, t}.map(0, 1, Y.coact, {b, h, n}).map(1, 1, epsH, {});
  });
  return X;
}

Report verify_b_yd(const BraidedHopf& B, HopfPtr L, const BModule& X) {
  return verify_yd(yd_transport(B, std::move(L), X));
}

}  // namespace hk
