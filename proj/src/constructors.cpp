#include "hopfkit/constructors.hpp"

#include <string>

namespace hk {

namespace {

int mod(long long a, long long n) { return static_cast<int>(((a % n) + n) % n); }

// Primitive n-th root of unity inside F.
Scalar root_of_unity(const Field& F, int n) {
  if (F.root_order() % n != 0)
    throw Error(Error::Code::RootOrderUnavailable,
                "field " + F.describe() + " lacks a primitive " + std::to_string(n) + "-th root of unity");
  return F.omega_pow(F.root_order() / n);
}

std::string power(const std::string& x, int e) {
  if (e == 0) return "";
  return e == 1 ? x : x + "^" + std::to_string(e);
}

// Fills comult, counit and antipode from images of generators, writing each
// basis element as a word in the generators (Δ multiplicative, S anti-).
struct Presentation {
  const Field& F;
  std::size_t dim;
  std::vector<std::vector<int>> words;
  std::vector<SparseVec> gen_delta, gen_S;
  std::vector<Scalar> gen_eps;

  void finish(HopfData& H) const {
    H.comult = LinMap(dim, dim * dim);
    H.counit.assign(dim, F.zero());
    H.antipode = Matrix(F, dim, dim);
    SparseVec one;
    for (std::size_t i = 0; i < dim; ++i)
      if (!H.unit[i].is_zero()) one.push_back({i, H.unit[i]});
    SparseVec oneone;
    for (auto& a : one)
      for (auto& b : one) oneone.push_back({a.idx * dim + b.idx, F.mul(a.c, b.c)});
    for (std::size_t e = 0; e < dim; ++e) {
      SparseVec delta = oneone, s = one;
      Scalar eps = F.one();
      for (int g : words[e]) {
        delta = tensor_square_product(H, delta, gen_delta[g]);
        s = H.product(gen_S[g], s);
        eps = F.mul(eps, gen_eps[g]);
      }
      H.comult.col(e) = delta;
      H.counit[e] = eps;
      for (auto& t : s) H.antipode.at(t.idx, e) = t.c;
    }
    H.antipode_inv = inverse(H.antipode);
  }
};

SparseVec unit_term(std::size_t i, Scalar c) { return SparseVec{{i, c}}; }

SparseVec sum(const Field& F, SparseVec a, const SparseVec& b) {
  a.insert(a.end(), b.begin(), b.end());
  normalize(F, a);
  return a;
}

}  // namespace

HopfData group_algebra(int r, const Field& F) {
  HopfData H;
  H.field = F;
  H.dim = r;
  for (int a = 0; a < r; ++a) H.basis.push_back(a == 0 ? "1" : power("g", a));
  H.mult = LinMap(r * r, r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) H.mult.col(a * r + b).push_back({static_cast<std::uint64_t>((a + b) % r), F.one()});
  H.unit = unit_vector(F, r, 0);
  H.comult = LinMap(r, r * r);
  H.counit.assign(r, F.one());
  H.antipode = Matrix(F, r, r);
  for (int a = 0; a < r; ++a) {
    H.comult.col(a).push_back({static_cast<std::uint64_t>(a * r + a), F.one()});
    H.antipode.at((r - a) % r, a) = F.one();
  }
  H.antipode_inv = H.antipode;
  return H;
}

HopfData taft(int n, const Field& F) {
  if (n < 2) throw Error(Error::Code::RootOrderUnavailable, "Taft algebras need n ≥ 2");
  Scalar w = root_of_unity(F, n);
  const std::size_t d = n * n;
  HopfData H;
  H.field = F;
  H.dim = d;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::string s = power("g", a) + power("x", b);
      H.basis.push_back(s.empty() ? "1" : s);
    }
  H.mult = LinMap(d * d, d);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int e = 0; b + e < n && e < n; ++e)
          H.mult.col((a * n + b) * d + c * n + e).push_back({static_cast<std::uint64_t>(((a + c) % n) * n + b + e), F.pow(w, b * c)});
  H.unit = unit_vector(F, d, 0);
  auto idx = [n](int a, int b) { return static_cast<std::uint64_t>(mod(a, n) * n + b); };
  Presentation P{F, d, {}, {}, {}, {}};
  P.words.resize(d);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto& w = P.words[a * n + b];
      w.assign(a, 0);
      w.insert(w.end(), b, 1);
    }
  P.gen_delta = {unit_term(idx(1, 0) * d + idx(1, 0), F.one()),
                 sum(F, unit_term(idx(0, 0) * d + idx(0, 1), F.one()), unit_term(idx(0, 1) * d + idx(1, 0), F.one()))};
  // S(g) = g^{-1}; S(x) = -x g^{-1} = -ω^{-1} g^{-1} x
  P.gen_S = {unit_term(idx(-1, 0), F.one()), unit_term(idx(-1, 1), F.neg(F.inv(w)))};
  P.gen_eps = {F.one(), F.zero()};
  P.finish(H);
  return H;
}

FamilyParams family_params(int m, std::vector<int> d, const Field& F) {
  FamilyParams P;
  P.m = m;
  P.n = static_cast<int>(d.size());
  P.d = std::move(d);
  P.field = F;
  for (int di : P.d)
    if (di % 2 == 0 || di < 1 || di >= 2 * m)
      throw Error(Error::Code::Parse, "family parameters need odd d_i in [1, 2m)");
  root_of_unity(F, 2 * m);
  return P;
}

std::vector<std::vector<int>> all_d(int m, int n) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> next;
    for (auto& v : out)
      for (int di = 1; di < 2 * m; di += 2) {
        auto w = v;
        w.push_back(di);
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

HopfData family_hopf(const FamilyParams& P) {
  const Field& F = P.field;
  const int m = P.m, n = P.n, G = 2 * m, X = 1 << n;
  Scalar w = root_of_unity(F, G);
  const std::size_t d = static_cast<std::size_t>(G) * X;
  auto bit = [n](int eps, int i) { return (eps >> (n - 1 - i)) & 1; };  // i is 0-based
  HopfData H;
  H.field = F;
  H.dim = d;
  for (int a = 0; a < G; ++a)
    for (int e = 0; e < X; ++e) {
      std::string s = power("g", a);
      for (int i = 0; i < n; ++i)
        if (bit(e, i)) s += "x" + std::to_string(i + 1);
      H.basis.push_back(s.empty() ? "1" : s);
    }
  H.mult = LinMap(d * d, d);
  for (int a = 0; a < G; ++a)
    for (int e = 0; e < X; ++e)
      for (int b = 0; b < G; ++b)
        for (int f = 0; f < X; ++f) {
          if (e & f) continue;
          long long wexp = 0;
          int sign = 0;
          for (int i = 0; i < n; ++i)
            if (bit(e, i)) {
              wexp -= static_cast<long long>(b) * P.d[i];
              for (int j = 0; j < i; ++j) sign += bit(f, j);
            }
          Scalar c = F.pow(w, mod(wexp, G));
          if (sign % 2) c = F.neg(c);
          H.mult.col((a * X + e) * d + b * X + f).push_back({static_cast<std::uint64_t>(((a + b) % G) * X + (e | f)), c});
        }
  H.unit = unit_vector(F, d, 0);
  auto idx = [&](int a, int e) { return static_cast<std::uint64_t>(mod(a, G) * X + e); };
  Presentation Pr{F, d, {}, {}, {}, {}};
  Pr.words.resize(d);
  for (int a = 0; a < G; ++a)
    for (int e = 0; e < X; ++e) {
      auto& wd = Pr.words[a * X + e];
      wd.assign(a, 0);
      for (int i = 0; i < n; ++i)
        if (bit(e, i)) wd.push_back(1 + i);
    }
  Pr.gen_delta.push_back(unit_term(idx(1, 0) * d + idx(1, 0), F.one()));
  Pr.gen_S.push_back(unit_term(idx(-1, 0), F.one()));
  Pr.gen_eps.push_back(F.one());
  for (int i = 0; i < n; ++i) {
    int xi = 1 << (n - 1 - i);
    Pr.gen_delta.push_back(
        sum(F, unit_term(idx(0, 0) * d + idx(0, xi), F.one()), unit_term(idx(0, xi) * d + idx(m, 0), F.one())));
    // S(x_i) = -x_i g^m = -ω^{-m d_i} g^m x_i
    Pr.gen_S.push_back(unit_term(idx(m, xi), F.neg(F.pow(w, mod(-static_cast<long long>(m) * P.d[i], G)))));
    Pr.gen_eps.push_back(F.zero());
  }
  Pr.finish(H);
  return H;
}

HopfData sweedler(const Field& F) { return family_hopf(family_params(1, {1}, F)); }
HopfData nichols(int n, const Field& F) { return family_hopf(family_params(1, std::vector<int>(n, 1), F)); }
HopfData radford(int m, const Field& F) { return family_hopf(family_params(m, {1}, F)); }

std::vector<int> admissible_s(const FamilyParams& P) {
  std::vector<int> out;
  for (int s = 0; s < 2 * P.m; ++s) {
    bool ok = true;
    for (int di : P.d) ok = ok && (s * di) % (2 * P.m) == P.m % (2 * P.m);
    if (ok) out.push_back(s);
  }
  return out;
}

RMatrix r_matrix(const FamilyParams& P, int s) {
  const Field& F = P.field;
  const int G = 2 * P.m, X = 1 << P.n;
  if (s < 0 || s >= G) throw Error(Error::Code::InadmissibleS, "s out of range");
  for (int di : P.d)
    if ((s * di) % G != P.m)
      throw Error(Error::Code::InadmissibleS, "s·d_i ≢ m (mod 2m) for s = " + std::to_string(s));
  Scalar w = root_of_unity(F, G);
  const std::size_t d = static_cast<std::size_t>(G) * X;
  RMatrix R;
  R.m = P.m;
  R.n = P.n;
  R.s = s;
  R.r.assign(d * d, F.zero());
  Scalar inv2m = F.inv(F.from_int(G));
  for (int j = 0; j < G; ++j)
    for (int t = 0; t < G; ++t) {
      std::size_t a = static_cast<std::size_t>(j) * X, b = static_cast<std::size_t>((s * t) % G) * X;
      R.r[a * d + b] = F.fma(R.r[a * d + b], inv2m, F.pow(w, mod(-static_cast<long long>(j) * t, G)));
    }
  return R;
}

ExteriorFactor exterior_factor(const FamilyParams& P) {
  if (P.n < 1) throw Error(Error::Code::DimensionMismatch, "exterior factor needs n ≥ 1");
  const Field& F = P.field;
  auto ss = admissible_s(P);
  if (ss.empty()) throw Error(Error::Code::NoAdmissibleS, "no s with s·d_i ≡ m (mod 2m) for all i");
  ExteriorFactor E;
  E.base_params = P;
  E.base_params.n = P.n - 1;
  E.base_params.d.pop_back();
  E.H = share(family_hopf(E.base_params));
  E.s = ss.front();
  E.R = r_matrix(E.base_params, E.s);
  const int G = 2 * P.m, X = 1 << (P.n - 1);
  Scalar w = root_of_unity(F, G);
  const std::size_t hd = E.H->dim;
  LinMap act(hd * 2, 2);
  for (int a = 0; a < G; ++a) {
    std::size_t h = static_cast<std::size_t>(a) * X;  // g^a; all x-monomials act by zero
    act.col(h * 2 + 0).push_back({0, F.one()});
    act.col(h * 2 + 1).push_back({1, F.pow(w, mod(static_cast<long long>(a) * P.d.back(), G))});
  }
  E.B.obj = induced_coaction(E.H, act, 2, E.R);
  HopfData& B = E.B.alg;
  B.field = F;
  B.dim = 2;
  B.basis = {"1", "x"};
  B.mult = LinMap(4, 2);
  B.mult.col(0).push_back({0, F.one()});
  B.mult.col(1).push_back({1, F.one()});
  B.mult.col(2).push_back({1, F.one()});
  B.unit = {F.one(), F.zero()};
  B.comult = LinMap(2, 4);
  B.comult.col(0).push_back({0, F.one()});
  B.comult.col(1) = {{1, F.one()}, {2, F.one()}};
  B.counit = {F.one(), F.zero()};
  B.antipode = Matrix::from_rows(F, {{1, 0}, {0, -1}});
  B.antipode_inv = B.antipode;
  return E;
}

BraidedHopf taft_braided_factor(int n, const Field& F) {
  Scalar w = root_of_unity(F, n);
  HopfPtr H = share(group_algebra(n, F));
  const std::size_t d = n;
  BraidedHopf B;
  B.obj.base = H;
  B.obj.dim = d;
  B.obj.act = LinMap(d * d, d);
  B.obj.coact = LinMap(d, d * d);
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < n; ++k)
      B.obj.act.col(a * d + k).push_back({static_cast<std::uint64_t>(k), F.pow(w, mod(-static_cast<long long>(a) * k, n))});
  for (int k = 0; k < n; ++k)
    B.obj.coact.col(k).push_back({static_cast<std::uint64_t>(mod(-k, n) * d + k), F.one()});
  HopfData& A = B.alg;
  A.field = F;
  A.dim = d;
  for (int k = 0; k < n; ++k) A.basis.push_back(k == 0 ? "1" : power("x", k));
  A.mult = LinMap(d * d, d);
  for (int a = 0; a < n; ++a)
    for (int b = 0; a + b < n; ++b) A.mult.col(a * d + b).push_back({static_cast<std::uint64_t>(a + b), F.one()});
  A.unit = unit_vector(F, d, 0);
  A.counit = unit_vector(F, d, 0);
  // Δ(x^k) = Δ(x^{k-1})Δ(x) in the braided tensor square.
  LinMap c = c_braiding(B.obj);
  auto bprod = [&](const SparseVec& u, const SparseVec& v) {
    SparseVec out;
    for (auto& p : u)
      for (auto& q : v) {
        std::uint64_t a1 = p.idx / d, a2 = p.idx % d, b1 = q.idx / d, b2 = q.idx % d;
        for (auto& xy : c.col(a2 * d + b1))
          for (auto& l : A.mult.col(a1 * d + xy.idx / d))
            for (auto& r : A.mult.col((xy.idx % d) * d + b2))
              out.push_back({l.idx * d + r.idx, F.mul(F.mul(p.c, q.c), F.mul(xy.c, F.mul(l.c, r.c)))});
      }
    normalize(F, out);
    return out;
  };
  A.comult = LinMap(d, d * d);
  A.comult.col(0).push_back({0, F.one()});
  SparseVec dx{{1, F.one()}, {d, F.one()}};
  for (std::size_t k = 1; k < d; ++k) A.comult.col(k) = bprod(A.comult.col(k - 1), dx);
  A.antipode = Matrix::identity(F, d);
  A.antipode = convolution_inverse(A, Matrix::identity(F, d));
  A.antipode_inv = inverse(A.antipode);
  return B;
}

HopfData biproduct(const BraidedHopf& B) {
  const Field& F = B.field();
  const HopfData& H = *B.obj.base;
  const std::size_t b = B.dim(), h = H.dim, n = b * h;
  LinMap swbh = swap_map(F, b, h), swhb = swap_map(F, h, b);
  HopfData L;
  L.field = F;
  L.dim = n;
  for (auto& x : B.alg.basis)
    for (auto& y : H.basis) L.basis.push_back(x + "⋊" + y);
  L.mult = eval_map(F, {b, h, b, h}, n, [&](Tensor& t) {
    t.apply(F, 1, 1, H.comult, {h, h})
        .apply(F, 2, 2, swhb, {b, h})
        .apply(F, 1, 2, B.obj.act, {b})
        .apply(F, 0, 2, B.alg.mult, {b})
        .apply(F, 1, 2, H.mult, {h});
  });
  L.unit.assign(n, F.zero());
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < h; ++j) L.unit[i * h + j] = F.mul(B.alg.unit[i], H.unit[j]);
  L.comult = eval_map(F, {b, h}, n * n, [&](Tensor& t) {
    t.apply(F, 0, 1, B.alg.comult, {b, b})
        .apply(F, 1, 1, B.obj.coact, {h, b})
        .apply(F, 3, 1, H.comult, {h, h})
        .apply(F, 2, 2, swbh, {h, b})
        .apply(F, 1, 2, H.mult, {h});
  });
  L.counit.assign(n, F.zero());
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < h; ++j) L.counit[i * h + j] = F.mul(B.alg.counit[i], H.counit[j]);
  LinMap SB = dense_map(B.alg.antipode), SH = dense_map(H.antipode);
  L.antipode = eval_matrix(F, {b, h}, n, [&](Tensor& t) {
    t.apply(F, 0, 1, B.obj.coact, {h, b})
        .apply(F, 1, 2, swbh, {h, b})
        .apply(F, 0, 2, H.mult, {h})
        .apply(F, 0, 1, SH, {h})
        .apply(F, 1, 1, SB, {b})
        // (1⋊y)(z⋊1) = y_(1)·z ⋊ y_(2)
        .apply(F, 0, 1, H.comult, {h, h})
        .apply(F, 1, 2, swhb, {b, h})
        .apply(F, 0, 2, B.obj.act, {b});
  });
  L.antipode_inv = inverse(L.antipode);
  return L;
}

DecompositionResult decomposition_iso(const FamilyParams& P) {
  const Field& F = P.field;
  ExteriorFactor E = exterior_factor(P);
  DecompositionResult res;
  res.family = family_hopf(P);
  res.product = biproduct(E.B);
  const HopfData& L = res.product;
  const std::size_t hd = E.H->dim, d = res.family.dim;
  const int n = P.n, X = 1 << n, Xp = 1 << (n - 1);
  // images of G, X_1..X_n in B⋊H'
  std::vector<SparseVec> img;
  img.push_back({{static_cast<std::uint64_t>(Xp), F.one()}});
  for (int i = 0; i + 1 < n; ++i) img.push_back({{static_cast<std::uint64_t>(1 << (n - 2 - i)), F.one()}});
  img.push_back({{static_cast<std::uint64_t>(hd + static_cast<std::size_t>(P.m) * Xp), F.one()}});
  res.map = Matrix(F, L.dim, d);
  SparseVec one;
  for (std::size_t i = 0; i < L.dim; ++i)
    if (!L.unit[i].is_zero()) one.push_back({i, L.unit[i]});
  for (int a = 0; a < 2 * P.m; ++a)
    for (int e = 0; e < X; ++e) {
      SparseVec v = one;
      for (int k = 0; k < a; ++k) v = L.product(v, img[0]);
      for (int i = 0; i < n; ++i)
        if ((e >> (n - 1 - i)) & 1) v = L.product(v, img[1 + i]);
      for (auto& t : v) res.map.at(t.idx, a * X + e) = t.c;
    }
  res.report = hopf_morphism_check(res.map, res.family, L);
  Check bij("bijective");
  bij.pass = res.map.is_square() && rank(res.map) == d;
  res.report.add(bij);
  return res;
}

}  // namespace hk
