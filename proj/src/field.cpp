#include "hopfkit/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>

namespace hk {

const char* Error::name(Code c) {
  switch (c) {
    case Code::NotPrime: return "NotPrime";
    case Code::RootOrderUnavailable: return "RootOrderUnavailable";
    case Code::DivisionByZero: return "DivisionByZero";
    case Code::ZeroPolynomial: return "ZeroPolynomial";
    case Code::Overflow: return "Overflow";
    case Code::DimensionMismatch: return "DimensionMismatch";
    case Code::Singular: return "Singular";
    case Code::NoSolution: return "NoSolution";
    case Code::NotConvolutionInvertible: return "NotConvolutionInvertible";
    case Code::AntipodeNotInvertible: return "AntipodeNotInvertible";
    case Code::InadmissibleS: return "InadmissibleS";
    case Code::NoAdmissibleS: return "NoAdmissibleS";
    case Code::AxiomFailure: return "AxiomFailure";
    case Code::SymmetricityViolated: return "SymmetricityViolated";
    case Code::HypothesisViolated: return "HypothesisViolated";
    case Code::NotInvertible: return "NotInvertible";
    case Code::Parse: return "Parse";
  }
  return "Unknown";
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < -INT64_MAX)
    throw Error(Error::Code::Overflow, "rational arithmetic overflowed 64 bits");
  return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Scalar reduce(i128 n, i128 d) {
  if (d == 0) throw Error(Error::Code::DivisionByZero, "zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return {0, 1};
  i128 g = gcd128(n, d);
  return {narrow(n / g), narrow(d / g)};
}

std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t p) {
  i128 r = 1, b = a % p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::int64_t>(r);
}

}  // namespace

Field Field::make(std::int64_t p, int root_order) {
  if (root_order < 1)
    throw Error(Error::Code::RootOrderUnavailable, "root order must be positive");
  Field F;
  F.root_order_ = root_order;
  if (p == 0) {
    if (root_order > 2)
      throw Error(Error::Code::RootOrderUnavailable,
                  "rationals only carry roots of unity of order 1 or 2");
    F.kind_ = Kind::rational;
    F.p_ = 0;
    F.omega_ = root_order == 1 ? Scalar{1, 1} : Scalar{-1, 1};
    return F;
  }
  if (!hk::is_prime(p)) throw Error(Error::Code::NotPrime, std::to_string(p) + " is not prime");
  if (p >= (std::int64_t{1} << 31))
    throw Error(Error::Code::Overflow, "prime must stay below 2^31");
  if ((p - 1) % root_order != 0)
    throw Error(Error::Code::RootOrderUnavailable,
                "root order " + std::to_string(root_order) + " does not divide " +
                    std::to_string(p - 1));
  F.kind_ = Kind::prime;
  F.p_ = p;
  for (std::int64_t w = 1; w < p; ++w) {
    if (mod_pow(w, root_order, p) != 1) continue;
    bool primitive = true;
    for (int s = 1; s < root_order && primitive; ++s)
      if (root_order % s == 0 && mod_pow(w, s, p) == 1) primitive = false;
    if (primitive) {
      F.omega_ = {w, 1};
      return F;
    }
  }
  throw Error(Error::Code::RootOrderUnavailable, "no primitive root found");
}

Scalar Field::from_int(long long v) const {
  if (is_prime()) {
    long long r = v % p_;
    if (r < 0) r += p_;
    return {r, 1};
  }
  return {v, 1};
}

Scalar Field::frac(long long n, long long d) const { return div(from_int(n), from_int(d)); }

Scalar Field::add(Scalar a, Scalar b) const {
  if (is_prime()) {
    std::int64_t s = a.num + b.num;
    if (s >= p_) s -= p_;
    return {s, 1};
  }
  return reduce(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den);
}

Scalar Field::neg(Scalar a) const {
  if (is_prime()) return {a.num == 0 ? 0 : p_ - a.num, 1};
  return {-a.num, a.den};
}

Scalar Field::sub(Scalar a, Scalar b) const { return add(a, neg(b)); }

Scalar Field::mul(Scalar a, Scalar b) const {
  if (is_prime()) return {a.num * b.num % p_, 1};
  return reduce(i128(a.num) * b.num, i128(a.den) * b.den);
}

Scalar Field::fma(Scalar a, Scalar b, Scalar c) const {
  if (is_prime()) return {(a.num + b.num * c.num) % p_, 1};
  return add(a, mul(b, c));
}

Scalar Field::inv(Scalar a) const {
  if (a.num == 0) throw Error(Error::Code::DivisionByZero, "inverse of zero");
  if (is_prime()) return {mod_pow(a.num, p_ - 2, p_), 1};
  return reduce(a.den, a.num);
}

Scalar Field::pow(Scalar a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Scalar r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Scalar Field::omega_pow(long long k) const {
  long long r = root_order_;
  k %= r;
  if (k < 0) k += r;
  return pow(omega_, k);
}

std::string Field::str(Scalar a) const {
  if (is_prime() || a.den == 1) return std::to_string(a.num);
  return std::to_string(a.num) + "/" + std::to_string(a.den);
}

Scalar Field::parse(std::string_view s) const {
  auto to_ll = [&](std::string_view t) -> long long {
    std::string buf(t);
    char* end = nullptr;
    long long v = std::strtoll(buf.c_str(), &end, 10);
    if (buf.empty() || *end != '\0')
      throw Error(Error::Code::Parse, "bad scalar '" + std::string(s) + "'");
    return v;
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return from_int(to_ll(s));
  return frac(to_ll(s.substr(0, slash)), to_ll(s.substr(slash + 1)));
}

std::string Field::describe() const {
  std::ostringstream os;
  if (is_prime())
    os << "F_" << p_;
  else
    os << "Q";
  os << " (root order " << root_order_ << ", omega=" << str(omega_) << ")";
  return os.str();
}

std::vector<Scalar> Field::elements() const {
  if (!is_prime()) throw Error(Error::Code::DimensionMismatch, "Q is infinite");
  std::vector<Scalar> out;
  for (std::int64_t v = 0; v < p_; ++v) out.push_back({v, 1});
  return out;
}

// ---------------------------------------------------------------- polynomials

void poly_trim(Poly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

int poly_degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  poly_trim(r);
  return r;
}

Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
  Poly nb(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) nb[i] = F.neg(b[i]);
  return poly_add(F, a, nb);
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.fma(r[i + j], a[i], b[j]);
  poly_trim(r);
  return r;
}

std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b) {
  if (b.empty()) throw Error(Error::Code::DivisionByZero, "polynomial division by zero");
  Poly r = a;
  poly_trim(r);
  if (r.size() < b.size()) return {{}, r};
  Poly q(r.size() - b.size() + 1, F.zero());
  Scalar lead_inv = F.inv(b.back());
  for (int i = poly_degree(r); i >= poly_degree(b); --i) {
    Scalar c = F.mul(r[i], lead_inv);
    if (c.is_zero()) continue;
    std::size_t shift = i - poly_degree(b);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = F.sub(r[shift + j], F.mul(c, b[j]));
  }
  poly_trim(q);
  poly_trim(r);
  return {q, r};
}

Poly poly_monic(const Field& F, const Poly& a) {
  if (a.empty()) return a;
  Scalar li = F.inv(a.back());
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], li);
  return r;
}

Poly poly_gcd(const Field& F, Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_divmod(F, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(F, a);
}

Poly poly_derivative(const Field& F, const Poly& a) {
  Poly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(F.mul(F.from_int(static_cast<long long>(i)), a[i]));
  poly_trim(r);
  return r;
}

Poly poly_powmod(const Field& F, Poly base, std::uint64_t e, const Poly& mod) {
  Poly r{F.one()};
  base = poly_divmod(F, base, mod).second;
  while (e > 0) {
    if (e & 1) r = poly_divmod(F, poly_mul(F, r, base), mod).second;
    base = poly_divmod(F, poly_mul(F, base, base), mod).second;
    e >>= 1;
  }
  return poly_divmod(F, r, mod).second;
}

Scalar poly_eval(const Field& F, const Poly& f, Scalar x) {
  Scalar r = F.zero();
  for (auto it = f.rbegin(); it != f.rend(); ++it) r = F.add(F.mul(r, x), *it);
  return r;
}

std::string poly_str(const Field& F, const Poly& f) {
  if (f.empty()) return "0";
  std::string s;
  for (int i = poly_degree(f); i >= 0; --i) {
    if (f[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    bool unit = f[i] == F.one();
    if (!unit || i == 0) s += F.str(f[i]);
    if (i >= 1) s += (unit ? "" : "*") + std::string("x");
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

namespace {

bool is_one(const Poly& f) { return f.size() == 1 && f[0].num == 1 && f[0].den == 1; }

// Square-free decomposition over F_p: pairs (square-free part, multiplicity).
std::vector<std::pair<Poly, int>> square_free(const Field& F, const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  Poly c = poly_gcd(F, f, poly_derivative(F, f));
  Poly w = poly_divmod(F, poly_monic(F, f), c).first;
  int i = 1;
  while (!is_one(w) && !w.empty()) {
    Poly y = poly_gcd(F, w, c);
    Poly fac = poly_divmod(F, w, y).first;
    if (poly_degree(fac) > 0) out.emplace_back(poly_monic(F, fac), i);
    w = y;
    c = poly_divmod(F, c, y).first;
    ++i;
  }
  if (poly_degree(c) > 0) {
    // c is a p-th power; coefficients of F_p are fixed by Frobenius.
    const auto p = static_cast<std::size_t>(F.p());
    Poly root;
    for (std::size_t k = 0; k * p < c.size(); ++k) root.push_back(c[k * p]);
    for (auto& [g, j] : square_free(F, root)) out.emplace_back(g, j * static_cast<int>(p));
  }
  return out;
}

// Distinct-degree factorization of a monic square-free polynomial.
std::vector<std::pair<Poly, int>> distinct_degree(const Field& F, Poly f) {
  std::vector<std::pair<Poly, int>> out;
  const Poly x{F.zero(), F.one()};
  Poly h = x;
  for (int d = 1; 2 * d <= poly_degree(f); ++d) {
    h = poly_powmod(F, h, static_cast<std::uint64_t>(F.p()), f);
    Poly g = poly_gcd(F, poly_sub(F, h, x), f);
    if (!is_one(g)) {
      out.emplace_back(g, d);
      f = poly_divmod(F, f, g).first;
      h = poly_divmod(F, h, f).second;
    }
  }
  if (poly_degree(f) > 0) out.emplace_back(poly_monic(F, f), poly_degree(f));
  return out;
}

// Cantor-Zassenhaus splitting of a product of irreducibles of degree d.
void equal_degree(const Field& F, const Poly& f, int d, std::mt19937_64& rng,
                  std::vector<Poly>& out) {
  const int n = poly_degree(f);
  if (n == d) {
    out.push_back(poly_monic(F, f));
    return;
  }
  std::uniform_int_distribution<std::int64_t> coef(0, F.p() - 1);
  for (;;) {
    Poly a;
    for (int i = 0; i < n; ++i) a.push_back({coef(rng), 1});
    poly_trim(a);
    if (poly_degree(a) < 1) continue;
    Poly t;
    if (F.p() == 2) {
      // trace map a + a^2 + ... + a^(2^(d-1))
      Poly cur = poly_divmod(F, a, f).second;
      t = cur;
      for (int i = 1; i < d; ++i) {
        cur = poly_divmod(F, poly_mul(F, cur, cur), f).second;
        t = poly_add(F, t, cur);
      }
    } else {
      // a^((p^d - 1)/2) = prod_i (a^((p-1)/2))^(p^i)
      Poly c = poly_powmod(F, a, static_cast<std::uint64_t>((F.p() - 1) / 2), f);
      t = Poly{F.one()};
      Poly ci = c;
      for (int i = 0; i < d; ++i) {
        t = poly_divmod(F, poly_mul(F, t, ci), f).second;
        if (i + 1 < d) ci = poly_powmod(F, ci, static_cast<std::uint64_t>(F.p()), f);
      }
      t = poly_sub(F, t, Poly{F.one()});
    }
    Poly g = poly_gcd(F, t, f);
    if (poly_degree(g) > 0 && poly_degree(g) < n) {
      equal_degree(F, g, d, rng, out);
      equal_degree(F, poly_divmod(F, f, g).first, d, rng, out);
      return;
    }
  }
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

std::vector<std::pair<Poly, int>> factor_poly(const Field& F, const Poly& f_in) {
  Poly f = f_in;
  poly_trim(f);
  if (f.empty()) throw Error(Error::Code::ZeroPolynomial, "factor_poly of zero");
  if (!F.is_prime())
    throw Error(Error::Code::DimensionMismatch, "factor_poly needs a prime field");
  std::vector<std::pair<Poly, int>> out;
  if (poly_degree(f) == 0) return out;
  std::mt19937_64 rng(0x5eed);
  for (auto& [part, mult] : square_free(F, f)) {
    for (auto& [block, d] : distinct_degree(F, part)) {
      std::vector<Poly> irr;
      equal_degree(F, block, d, rng, irr);
      for (auto& g : irr) out.emplace_back(g, mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (poly_less(a.first, b.first)) return true;
    if (poly_less(b.first, a.first)) return false;
    return a.second < b.second;
  });
  return out;
}

namespace {

std::vector<long long> divisors(long long n) {
  n = std::llabs(n);
  std::vector<long long> d;
  for (long long i = 1; i * i <= n; ++i)
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  return d;
}

}  // namespace

std::vector<Scalar> poly_roots(const Field& F, const Poly& f_in) {
  Poly f = f_in;
  poly_trim(f);
  if (f.empty()) throw Error(Error::Code::ZeroPolynomial, "roots of zero");
  std::vector<Scalar> roots;
  if (F.is_prime()) {
    for (auto& [g, m] : factor_poly(F, f))
      if (poly_degree(g) == 1) roots.push_back(F.neg(g[0]));
  } else {
    // clear denominators, strip x^k, then test +-p/q
    i128 l = 1;
    for (auto& c : f) l = l / gcd128(l, c.den) * c.den;
    std::vector<long long> ints;
    for (auto& c : f) ints.push_back(narrow(i128(c.num) * (l / c.den)));
    std::size_t low = 0;
    while (ints[low] == 0) ++low;
    if (low > 0) roots.push_back(F.zero());
    if (low + 1 < ints.size()) {
      for (long long p : divisors(ints[low]))
        for (long long q : divisors(ints.back()))
          for (long long sgn : {1LL, -1LL}) {
            Scalar r = F.frac(sgn * p, q);
            if (poly_eval(F, f, r).is_zero()) roots.push_back(r);
          }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace hk
