#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hk {

class Error : public std::runtime_error {
 public:
  enum class Code {
    NotPrime,
    RootOrderUnavailable,
    DivisionByZero,
    ZeroPolynomial,
    Overflow,
    DimensionMismatch,
    Singular,
    NoSolution,
    NotConvolutionInvertible,
    AntipodeNotInvertible,
    InadmissibleS,
    NoAdmissibleS,
    AxiomFailure,
    SymmetricityViolated,
    HypothesisViolated,
    NotInvertible,
    Parse,
  };
  Error(Code c, const std::string& what) : std::runtime_error(what), code_(c) {}
  Code code() const { return code_; }
  static const char* name(Code c);

 private:
  Code code_;
};

// Canonical form: prime fields keep num in [0,p) with den = 1; rationals are
// reduced with den > 0. Equality is therefore representation equality.
struct Scalar {
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool is_zero() const { return num == 0; }
  friend bool operator==(const Scalar&, const Scalar&) = default;
  friend auto operator<=>(const Scalar&, const Scalar&) = default;
};

class Field {
 public:
  enum class Kind { prime, rational };

  // p == 0 selects the rationals.
  static Field make(std::int64_t p, int root_order);

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::prime; }
  std::int64_t p() const { return p_; }
  int root_order() const { return root_order_; }
  Scalar omega() const { return omega_; }

  Scalar zero() const { return {0, 1}; }
  Scalar one() const { return {1, 1}; }
  Scalar from_int(long long v) const;
  Scalar frac(long long n, long long d) const;

  Scalar add(Scalar a, Scalar b) const;
  Scalar sub(Scalar a, Scalar b) const;
  Scalar neg(Scalar a) const;
  Scalar mul(Scalar a, Scalar b) const;
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  Scalar pow(Scalar a, long long e) const;
  // a + b*c, the inner step of every contraction.
  Scalar fma(Scalar a, Scalar b, Scalar c) const;
  // omega^k for any integer k.
  Scalar omega_pow(long long k) const;

  std::string str(Scalar a) const;
  Scalar parse(std::string_view s) const;
  std::string describe() const;
  // Every element for prime fields (ascending residues); throws for Q.
  std::vector<Scalar> elements() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_ && a.root_order_ == b.root_order_;
  }

 private:
  Kind kind_ = Kind::prime;
  std::int64_t p_ = 2;
  int root_order_ = 1;
  Scalar omega_{1, 1};
};

inline Field make_field(std::int64_t p, int root_order) { return Field::make(p, root_order); }

bool is_prime(std::int64_t n);

// Univariate polynomials: coefficients from degree 0 upwards, no trailing zeros.
using Poly = std::vector<Scalar>;

void poly_trim(Poly& f);
int poly_degree(const Poly& f);  // -1 for the zero polynomial
Poly poly_add(const Field& F, const Poly& a, const Poly& b);
Poly poly_sub(const Field& F, const Poly& a, const Poly& b);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);
std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b);
Poly poly_gcd(const Field& F, Poly a, Poly b);  // monic
Poly poly_monic(const Field& F, const Poly& a);
Poly poly_derivative(const Field& F, const Poly& a);
Poly poly_powmod(const Field& F, Poly base, std::uint64_t e, const Poly& mod);
Scalar poly_eval(const Field& F, const Poly& f, Scalar x);
std::string poly_str(const Field& F, const Poly& f);

// Square-free, then distinct-degree, then equal-degree splitting. Factors are
// monic, sorted by (degree, coefficients); prime fields only.
std::vector<std::pair<Poly, int>> factor_poly(const Field& F, const Poly& f);

// Distinct roots in the field, ascending. Uses factor_poly over F_p and the
// rational root theorem over Q.
std::vector<Scalar> poly_roots(const Field& F, const Poly& f);

}  // namespace hk
