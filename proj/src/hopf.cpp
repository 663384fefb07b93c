#include "hopfkit/hopf.hpp"

#include <algorithm>
#include <sstream>

namespace hk {

bool Report::ok() const {
  for (auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const Check* Report::find(const std::string& name) const {
  for (auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool Report::passed(const std::string& name) const {
  auto* c = find(name);
  return c != nullptr && c->pass;
}

Report& Report::add(Check c) {
  checks.push_back(std::move(c));
  return *this;
}

Report& Report::merge(const Report& r, const std::string& prefix) {
  for (auto c : r.checks) {
    c.name = prefix + c.name;
    checks.push_back(std::move(c));
  }
  return *this;
}

std::string Report::summary() const {
  std::ostringstream os;
  for (auto& c : checks) {
    os << c.name << ": " << (c.pass ? "pass" : "FAIL");
    if (!c.pass && !c.witness.empty()) {
      os << " at (";
      for (std::size_t i = 0; i < c.witness.size(); ++i) os << (i ? "," : "") << c.witness[i];
      os << ")";
    }
    if (!c.detail.empty()) os << " [" << c.detail << "]";
    os << "\n";
  }
  return os.str();
}

namespace {

// Dense scratch buffer with a touched list, reused across contractions.
class Accum {
 public:
  Accum(const Field& F, std::size_t n) : F_(F), buf_(n, F.zero()), mark_(n, 0) {}
  void add(std::uint64_t i, Scalar c) {
    if (!mark_[i]) {
      mark_[i] = 1;
      touched_.push_back(i);
    }
    buf_[i] = F_.add(buf_[i], c);
  }
  void sub(std::uint64_t i, Scalar c) { add(i, F_.neg(c)); }
  // Smallest index holding a nonzero value, or -1; clears the buffer.
  long long first_nonzero_and_clear() {
    long long best = -1;
    for (auto i : touched_) {
      if (!buf_[i].is_zero() && (best < 0 || static_cast<long long>(i) < best))
        best = static_cast<long long>(i);
      buf_[i] = F_.zero();
      mark_[i] = 0;
    }
    touched_.clear();
    return best;
  }
  SparseVec take() {
    SparseVec v;
    for (auto i : touched_) {
      if (!buf_[i].is_zero()) v.push_back({i, buf_[i]});
      buf_[i] = F_.zero();
      mark_[i] = 0;
    }
    touched_.clear();
    std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.idx < b.idx; });
    return v;
  }

 private:
  const Field& F_;
  std::vector<Scalar> buf_;
  std::vector<char> mark_;
  std::vector<std::uint64_t> touched_;
};

SparseVec sparse_of(const Vector& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.push_back({i, v[i]});
  return s;
}

Vector dense_of(const Field& F, std::size_t n, const SparseVec& s) {
  Vector v(n, F.zero());
  for (auto& t : s) v[t.idx] = t.c;
  return v;
}

}  // namespace

Vector Algebra::product(const Vector& a, const Vector& b) const {
  return dense_of(field, dim, product(sparse_of(a), sparse_of(b)));
}

SparseVec Algebra::product(const SparseVec& a, const SparseVec& b) const {
  SparseVec out;
  for (auto& x : a)
    for (auto& y : b)
      for (auto& t : mult.col(x.idx * dim + y.idx))
        out.push_back({t.idx, field.mul(field.mul(x.c, y.c), t.c)});
  normalize(field, out);
  return out;
}

Matrix Algebra::left_mult(const Vector& a) const {
  Matrix m(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) m.set_column(j, product(a, unit_vector(field, dim, j)));
  return m;
}

Matrix Algebra::right_mult(const Vector& a) const {
  Matrix m(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) m.set_column(j, product(unit_vector(field, dim, j), a));
  return m;
}

SparseVec HopfData::coproduct(const SparseVec& a) const {
  SparseVec out;
  for (auto& x : a)
    for (auto& t : comult.col(x.idx)) out.push_back({t.idx, field.mul(x.c, t.c)});
  normalize(field, out);
  return out;
}

Matrix HopfData::counit_matrix() const {
  Matrix m(field, 1, dim);
  for (std::size_t j = 0; j < dim; ++j) m.at(0, j) = counit[j];
  return m;
}

Matrix HopfData::unit_matrix() const {
  Matrix m(field, dim, 1);
  m.set_column(0, unit);
  return m;
}

Matrix HopfData::s_inv() const {
  if (antipode_inv) return *antipode_inv;
  try {
    return inverse(antipode);
  } catch (const Error&) {
    throw Error(Error::Code::AntipodeNotInvertible, "antipode is not bijective");
  }
}

std::size_t HopfData::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == label) return i;
  throw Error(Error::Code::Parse, "no basis element '" + label + "'");
}

Algebra make_algebra(const Field& F, std::vector<std::string> basis, LinMap mult, Vector unit) {
  Algebra A;
  A.field = F;
  A.dim = unit.size();
  A.basis = std::move(basis);
  A.mult = std::move(mult);
  A.unit = std::move(unit);
  return A;
}

SparseVec tensor_square_product(const Algebra& A, const SparseVec& x, const SparseVec& y) {
  const Field& F = A.field;
  const std::size_t d = A.dim;
  SparseVec out;
  for (auto& a : x)
    for (auto& b : y) {
      Scalar c = F.mul(a.c, b.c);
      const auto& l = A.mult.col((a.idx / d) * d + b.idx / d);
      const auto& r = A.mult.col((a.idx % d) * d + b.idx % d);
      for (auto& u : l)
        for (auto& v : r) out.push_back({u.idx * d + v.idx, F.mul(c, F.mul(u.c, v.c))});
    }
  normalize(F, out);
  return out;
}

namespace {

Check associativity(const Algebra& A, const std::vector<std::size_t>& lefts) {
  const Field& F = A.field;
  const std::size_t d = A.dim;
  Check c{"associativity"};
  Accum acc(F, d);
  for (std::size_t i : lefts)
    for (std::size_t j = 0; j < d; ++j) {
      const auto& ij = A.mult.col(i * d + j);
      for (std::size_t l = 0; l < d; ++l) {
        for (auto& t : ij)
          for (auto& u : A.mult.col(t.idx * d + l)) acc.add(u.idx, F.mul(t.c, u.c));
        for (auto& t : A.mult.col(j * d + l))
          for (auto& u : A.mult.col(i * d + t.idx)) acc.sub(u.idx, F.mul(t.c, u.c));
        if (acc.first_nonzero_and_clear() >= 0) {
          c.pass = false;
          c.witness = {i, j, l};
          c.detail = "(e_i e_j) e_l != e_i (e_j e_l)";
          return c;
        }
      }
    }
  return c;
}

Check unitality(const Algebra& A) {
  Check c{"unit"};
  const Field& F = A.field;
  for (std::size_t i = 0; i < A.dim; ++i) {
    Vector e = unit_vector(F, A.dim, i);
    if (A.product(A.unit, e) != e || A.product(e, A.unit) != e) {
      c.pass = false;
      c.witness = {i};
      c.detail = "1·e_i != e_i or e_i·1 != e_i";
      return c;
    }
  }
  return c;
}

std::vector<std::size_t> all_indices(std::size_t d) {
  std::vector<std::size_t> v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = i;
  return v;
}

// Left factors for the associativity and bialgebra checks. The set of a with
// (ab)c = a(bc) for all b, c is closed under products, and so (given
// associativity) is the set of a with Δ(ab) = Δ(a)Δ(b); checking left
// generators therefore suffices. Small algebras are checked exhaustively.
std::vector<std::size_t> check_lefts(const Algebra& A) {
  if (A.dim <= 64) return all_indices(A.dim);
  auto g = algebra_generators(A);
  return g.size() < A.dim ? g : all_indices(A.dim);
}

}  // namespace

std::vector<std::size_t> algebra_generators(const Algebra& A) {
  const Field& F = A.field;
  const std::size_t d = A.dim;
  // echelon rows keyed by pivot, kept reduced against each other lazily
  std::vector<Vector> rows;
  std::vector<std::size_t> piv;
  auto reduce = [&](Vector v) {
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (!v[piv[r]].is_zero()) {
        Scalar c = v[piv[r]];
        for (std::size_t k = 0; k < d; ++k)
          if (!rows[r][k].is_zero()) v[k] = F.sub(v[k], F.mul(c, rows[r][k]));
      }
    return v;
  };
  auto insert = [&](const Vector& v0) -> bool {
    Vector v = reduce(v0);
    std::size_t p = 0;
    while (p < d && v[p].is_zero()) ++p;
    if (p == d) return false;
    v = vscale(F, v, F.inv(v[p]));
    for (auto& row : rows)
      if (!row[p].is_zero()) row = vsub(F, row, vscale(F, v, row[p]));
    rows.push_back(v);
    piv.push_back(p);
    return true;
  };
  std::vector<std::size_t> gens;
  std::vector<SparseVec> span;  // original (unreduced) words
  std::size_t done = 0;         // words already multiplied by gens[0..]
  auto close = [&](std::size_t first_new_gen) {
    // new generators act on all old words; all generators act on new words
    for (std::size_t w = 0; w < done; ++w)
      for (std::size_t g = first_new_gen; g < gens.size(); ++g) {
        SparseVec p = A.product(SparseVec{{gens[g], F.one()}}, span[w]);
        if (insert(dense_of(F, d, p))) span.push_back(p);
      }
    for (; done < span.size(); ++done)
      for (std::size_t g = 0; g < gens.size(); ++g) {
        SparseVec p = A.product(SparseVec{{gens[g], F.one()}}, span[done]);
        if (insert(dense_of(F, d, p))) span.push_back(p);
      }
  };
  if (insert(A.unit)) span.push_back(sparse_of(A.unit));
  for (std::size_t i = 0; i < d && span.size() < d; ++i) {
    if (is_zero(reduce(unit_vector(F, d, i)))) continue;
    gens.push_back(i);
    close(gens.size() - 1);
  }
  return gens;
}

Report verify_algebra(const Algebra& A) {
  Report r;
  r.add(associativity(A, check_lefts(A)));
  r.add(unitality(A));
  return r;
}

Report verify_hopf_axioms(const HopfData& H, const LinMap* braiding) {
  const Field& F = H.field;
  const std::size_t d = H.dim;
  Report r;

  Check alg{"algebra"};
  for (auto& c : verify_algebra(H).checks)
    if (!c.pass && alg.pass) {
      alg.pass = false;
      alg.witness = c.witness;
      alg.detail = c.name + ": " + c.detail;
    }
  r.add(alg);

  Check coalg{"coalgebra"};
  {
    // (Δ⊗id)Δ = (id⊗Δ)Δ and counit laws
    for (std::size_t i = 0; i < d && coalg.pass; ++i) {
      SparseVec lhs, rhs;
      for (auto& t : H.comult.col(i)) {
        std::uint64_t a = t.idx / d, b = t.idx % d;
        for (auto& u : H.comult.col(a)) lhs.push_back({u.idx * d + b, F.mul(t.c, u.c)});
        for (auto& u : H.comult.col(b)) rhs.push_back({a * d * d + u.idx, F.mul(t.c, u.c)});
      }
      normalize(F, lhs);
      normalize(F, rhs);
      if (lhs != rhs) {
        coalg.pass = false;
        coalg.witness = {i};
        coalg.detail = "coassociativity";
        break;
      }
      Vector left(d, F.zero()), right(d, F.zero());
      for (auto& t : H.comult.col(i)) {
        std::uint64_t a = t.idx / d, b = t.idx % d;
        left[b] = F.fma(left[b], H.counit[a], t.c);
        right[a] = F.fma(right[a], H.counit[b], t.c);
      }
      Vector e = unit_vector(F, d, i);
      if (left != e || right != e) {
        coalg.pass = false;
        coalg.witness = {i};
        coalg.detail = "counit";
      }
    }
  }
  r.add(coalg);

  Check bialg{"bialgebra"};
  {
    const auto lefts = alg.pass ? check_lefts(H) : all_indices(d);
    Accum acc(F, d * d);
    // Δ(1) = 1⊗1, ε(1) = 1
    SparseVec one = sparse_of(H.unit);
    SparseVec d1 = H.coproduct(one);
    SparseVec oo;
    for (auto& a : one)
      for (auto& b : one) oo.push_back({a.idx * d + b.idx, F.mul(a.c, b.c)});
    normalize(F, oo);
    Scalar e1 = F.zero();
    for (auto& a : one) e1 = F.fma(e1, a.c, H.counit[a.idx]);
    bool unit_ok = e1 == F.one() && d1 == oo;
    if (!unit_ok) {
      bialg.pass = false;
      bialg.detail = "unit is not group-like";
    }
    for (std::size_t i : lefts)
      for (std::size_t j = 0; j < d && bialg.pass; ++j) {
        Scalar eps = F.zero();
        for (auto& t : H.mult.col(i * d + j)) {
          eps = F.fma(eps, t.c, H.counit[t.idx]);
          for (auto& u : H.comult.col(t.idx)) acc.add(u.idx, F.mul(t.c, u.c));
        }
        for (auto& a : H.comult.col(i))
          for (auto& b : H.comult.col(j)) {
            Scalar c = F.mul(a.c, b.c);
            const std::uint64_t a1 = a.idx / d, a2 = a.idx % d, b1 = b.idx / d, b2 = b.idx % d;
            if (!braiding) {
              const auto& l = H.mult.col(a1 * d + b1);
              if (l.empty()) continue;
              const auto& rr = H.mult.col(a2 * d + b2);
              for (auto& u : l) {
                Scalar cu = F.mul(c, u.c);
                for (auto& v : rr) acc.sub(u.idx * d + v.idx, F.mul(cu, v.c));
              }
              continue;
            }
            // a1 x ⊗ y b2 with x⊗y = c(a2⊗b1)
            for (auto& xy : braiding->col(a2 * d + b1)) {
              Scalar cx = F.mul(c, xy.c);
              const auto& l = H.mult.col(a1 * d + xy.idx / d);
              const auto& rr = H.mult.col((xy.idx % d) * d + b2);
              for (auto& u : l) {
                Scalar cu = F.mul(cx, u.c);
                for (auto& v : rr) acc.sub(u.idx * d + v.idx, F.mul(cu, v.c));
              }
            }
          }
        long long bad = acc.first_nonzero_and_clear();
        if (bad >= 0) {
          bialg.pass = false;
          bialg.witness = {i, j, static_cast<std::size_t>(bad)};
          bialg.detail = "Δ(e_i e_j) != Δ(e_i)Δ(e_j)";
        } else if (eps != F.mul(H.counit[i], H.counit[j])) {
          bialg.pass = false;
          bialg.witness = {i, j};
          bialg.detail = "counit not multiplicative";
        }
      }
  }
  r.add(bialg);

  Check anti{"antipode"};
  {
    LinMap S = LinMap::from_matrix(H.antipode);
    for (std::size_t i = 0; i < d && anti.pass; ++i) {
      Vector l(d, F.zero()), rr(d, F.zero());
      for (auto& t : H.comult.col(i)) {
        std::uint64_t a = t.idx / d, b = t.idx % d;
        for (auto& s : S.col(a))
          for (auto& u : H.mult.col(s.idx * d + b)) l[u.idx] = F.fma(l[u.idx], F.mul(t.c, s.c), u.c);
        for (auto& s : S.col(b))
          for (auto& u : H.mult.col(a * d + s.idx)) rr[u.idx] = F.fma(rr[u.idx], F.mul(t.c, s.c), u.c);
      }
      Vector ue = vscale(F, H.unit, H.counit[i]);
      if (l != ue || rr != ue) {
        anti.pass = false;
        anti.witness = {i};
        anti.detail = l != ue ? "S*id != uε" : "id*S != uε";
      }
    }
  }
  r.add(anti);

  if (H.antipode_inv) {
    Check inv{"antipode_inverse"};
    if (!(H.antipode * *H.antipode_inv).is_identity() || !(*H.antipode_inv * H.antipode).is_identity()) {
      inv.pass = false;
      inv.detail = "stored S^{-1} does not invert S";
    }
    r.add(inv);
  }
  return r;
}

Matrix convolution(const HopfData& C, const Algebra& A, const Matrix& f, const Matrix& g) {
  if (f.cols() != C.dim || g.cols() != C.dim || f.rows() != A.dim || g.rows() != A.dim)
    throw Error(Error::Code::DimensionMismatch, "convolution shapes");
  const Field& F = C.field;
  Matrix out(F, A.dim, C.dim);
  for (std::size_t i = 0; i < C.dim; ++i) {
    SparseVec acc;
    for (auto& t : C.comult.col(i)) {
      std::uint64_t a = t.idx / C.dim, b = t.idx % C.dim;
      SparseVec fa, gb;
      for (std::size_t r = 0; r < A.dim; ++r) {
        if (!f.at(r, a).is_zero()) fa.push_back({r, f.at(r, a)});
        if (!g.at(r, b).is_zero()) gb.push_back({r, g.at(r, b)});
      }
      for (auto& x : A.product(fa, gb)) acc.push_back({x.idx, F.mul(x.c, t.c)});
    }
    normalize(F, acc);
    for (auto& x : acc) out.at(x.idx, i) = x.c;
  }
  return out;
}

Matrix convolution(const HopfData& H, const Matrix& f, const Matrix& g) { return convolution(H, H, f, g); }

Matrix convolution_unit(const HopfData& C, const Algebra& A) {
  Matrix u(C.field, A.dim, 1);
  u.set_column(0, A.unit);
  return u * C.counit_matrix();
}

Matrix convolution_inverse(const HopfData& C, const Algebra& A, const Matrix& f) {
  const Field& F = C.field;
  const std::size_t n = A.dim * C.dim;
  // unknown g as vec(g)[r*C.dim + c]; (f*g)(e_i) is linear in g
  Matrix sys(F, n, n);
  for (std::size_t i = 0; i < C.dim; ++i)
    for (auto& t : C.comult.col(i)) {
      std::uint64_t a = t.idx / C.dim, b = t.idx % C.dim;
      for (std::size_t r = 0; r < A.dim; ++r) {
        if (f.at(r, a).is_zero()) continue;
        for (std::size_t q = 0; q < A.dim; ++q)
          for (auto& u : A.mult.col(r * A.dim + q)) {
            Scalar c = F.mul(F.mul(t.c, f.at(r, a)), u.c);
            sys.at(u.idx * C.dim + i, q * C.dim + b) = F.add(sys.at(u.idx * C.dim + i, q * C.dim + b), c);
          }
      }
    }
  Matrix ue = convolution_unit(C, A);
  Vector rhs(n);
  for (std::size_t r = 0; r < A.dim; ++r)
    for (std::size_t c = 0; c < C.dim; ++c) rhs[r * C.dim + c] = ue.at(r, c);
  Vector x;
  try {
    x = solve(sys, rhs);
  } catch (const Error&) {
    throw Error(Error::Code::NotConvolutionInvertible, "map has no convolution inverse");
  }
  Matrix g(F, A.dim, C.dim);
  for (std::size_t r = 0; r < A.dim; ++r)
    for (std::size_t c = 0; c < C.dim; ++c) g.at(r, c) = x[r * C.dim + c];
  if (!(convolution(C, A, g, f) == ue) || !(convolution(C, A, f, g) == ue))
    throw Error(Error::Code::NotConvolutionInvertible, "one-sided convolution inverse only");
  return g;
}

Matrix convolution_inverse(const HopfData& H, const Matrix& f) { return convolution_inverse(H, H, f); }

HopfData dual_hopf(const HopfData& H) {
  const Field& F = H.field;
  const std::size_t d = H.dim;
  HopfData D;
  D.field = F;
  D.dim = d;
  for (auto& b : H.basis) D.basis.push_back(b + "*");
  D.mult = LinMap(d * d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (auto& t : H.comult.col(k)) D.mult.col(t.idx).push_back({k, t.c});
  D.comult = LinMap(d, d * d);
  for (std::size_t ij = 0; ij < d * d; ++ij)
    for (auto& t : H.mult.col(ij)) D.comult.col(t.idx).push_back({ij, t.c});
  for (std::size_t k = 0; k < d; ++k) normalize(F, D.comult.col(k));
  D.unit = H.counit;
  D.counit = H.unit;
  D.antipode = transpose(H.antipode);
  D.antipode_inv = transpose(H.s_inv());
  return D;
}

HopfData opposite(const HopfData& H) {
  const std::size_t d = H.dim;
  HopfData O = H;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) O.mult.col(i * d + j) = H.mult.col(j * d + i);
  O.antipode = H.s_inv();
  O.antipode_inv = H.antipode;
  return O;
}

HopfData coopposite(const HopfData& H) {
  const Field& F = H.field;
  const std::size_t d = H.dim;
  HopfData O = H;
  for (std::size_t i = 0; i < d; ++i) {
    SparseVec v;
    for (auto& t : H.comult.col(i)) v.push_back({(t.idx % d) * d + t.idx / d, t.c});
    normalize(F, v);
    O.comult.col(i) = v;
  }
  O.antipode = H.s_inv();
  O.antipode_inv = H.antipode;
  return O;
}

Report hopf_morphism_check(const LinMap& f, const HopfData& L, const HopfData& Lp) {
  const Field& F = L.field;
  if (f.in_dim() != L.dim || f.out_dim() != Lp.dim)
    throw Error(Error::Code::DimensionMismatch, "morphism shape");
  Report r;
  Check mult{"multiplicative"};
  for (std::size_t i = 0; i < L.dim && mult.pass; ++i)
    for (std::size_t j = 0; j < L.dim && mult.pass; ++j) {
      SparseVec lhs = hk::apply(F, f, L.mult.col(i * L.dim + j));
      SparseVec rhs = Lp.product(f.col(i), f.col(j));
      if (lhs != rhs) {
        mult.pass = false;
        mult.witness = {i, j};
      }
    }
  r.add(mult);
  Check unit{"unital"};
  unit.pass = hk::apply(F, f, sparse_of(L.unit)) == sparse_of(Lp.unit);
  r.add(unit);
  Check co{"comultiplicative"};
  LinMap ff = kron(F, f, f);
  for (std::size_t i = 0; i < L.dim && co.pass; ++i) {
    SparseVec lhs = Lp.coproduct(f.col(i));
    SparseVec rhs = hk::apply(F, ff, L.comult.col(i));
    if (lhs != rhs) {
      co.pass = false;
      co.witness = {i};
    }
  }
  r.add(co);
  Check cu{"counital"};
  for (std::size_t i = 0; i < L.dim && cu.pass; ++i) {
    Scalar e = F.zero();
    for (auto& t : f.col(i)) e = F.fma(e, t.c, Lp.counit[t.idx]);
    if (e != L.counit[i]) {
      cu.pass = false;
      cu.witness = {i};
    }
  }
  r.add(cu);
  return r;
}

Report hopf_morphism_check(const Matrix& f, const HopfData& L, const HopfData& Lp) {
  return hopf_morphism_check(LinMap::from_matrix(f), L, Lp);
}

Report algebra_morphism_check(const Matrix& f, const Algebra& A, const Algebra& Ap) {
  const Field& F = A.field;
  Report r;
  Check mult{"multiplicative"};
  for (std::size_t i = 0; i < A.dim && mult.pass; ++i)
    for (std::size_t j = 0; j < A.dim && mult.pass; ++j) {
      Vector lhs = hk::apply(f, A.product(unit_vector(F, A.dim, i), unit_vector(F, A.dim, j)));
      Vector rhs = Ap.product(f.column(i), f.column(j));
      if (lhs != rhs) {
        mult.pass = false;
        mult.witness = {i, j};
      }
    }
  r.add(mult);
  Check unit{"unital"};
  unit.pass = hk::apply(f, A.unit) == Ap.unit;
  r.add(unit);
  return r;
}

std::vector<Vector> center(const Algebra& A, Side side, const Matrix* braiding) {
  const Field& F = A.field;
  const std::size_t d = A.dim;
  Matrix mu = A.mult_matrix();
  Matrix phi = braiding ? *braiding : swap_matrix(F, d, d);
  Matrix diff = mu - mu * phi;  // on A⊗A
  // condition for every basis a: diff(z⊗a) = 0 (right) or diff(a⊗z) = 0 (left)
  Matrix sys(F, d * d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t z = 0; z < d; ++z) {
      std::size_t col = side == Side::right ? z * d + a : a * d + z;
      for (std::size_t k = 0; k < d; ++k) sys.at(a * d + k, z) = diff.at(k, col);
    }
  return kernel_basis(sys);
}

}  // namespace hk
