#pragma once

// Closed-form Hopf algebras: group algebras, Taft algebras, the pointed family
// H(m,n,d), its exterior braided factor, the R-matrices R_s, Radford
// biproducts and the biproduct decomposition of the family.

#include "hopfkit/yd.hpp"

namespace hk {

HopfData group_algebra(int r, const Field& F);

// T_n: g^n = 1, x^n = 0, xg = ω gx (so gx = ω^{-1} xg), Δ(x) = 1⊗x + x⊗g,
// S(x) = -x g^{-1}. Basis g^a x^b at index a*n + b. Requires n | root order.
HopfData taft(int n, const Field& F);

struct FamilyParams {
  int m = 1, n = 1;
  std::vector<int> d;  // odd, 1 ≤ d_i < 2m
  Field field;
};

FamilyParams family_params(int m, std::vector<int> d, const Field& F);
// Every admissible d (odd entries in [1, 2m)) for given m, n.
std::vector<std::vector<int>> all_d(int m, int n);

// g^{2m} = 1, x_i² = 0, g x_i = ω^{d_i} x_i g, x_i x_j = -x_j x_i,
// Δ(x_i) = 1⊗x_i + x_i⊗g^m, S(x_i) = -x_i g^m. Basis g^a x^ε at index
// a*2^n + Σ ε_i 2^{n-i}. n = 0 gives kZ_{2m}.
HopfData family_hopf(const FamilyParams& P);

HopfData sweedler(const Field& F);          // H(1,1)
HopfData nichols(int n, const Field& F);    // E(n) = H(1,n)
HopfData radford(int m, const Field& F);    // H(m,1,(1))

// s with s·d_i ≡ m (mod 2m) for all i, ascending.
std::vector<int> admissible_s(const FamilyParams& P);
// R_s = (1/2m) Σ_{j,t} ω^{-jt} g^j ⊗ g^{st} in H(m,n,d)⊗H(m,n,d).
RMatrix r_matrix(const FamilyParams& P, int s);

struct ExteriorFactor {
  FamilyParams base_params;  // (m, n-1, d_{<n})
  HopfPtr H;                 // H(m, n-1, d_{<n})
  int s = 0;                 // smallest s admissible for all of d
  RMatrix R;                 // R_s on H
  BraidedHopf B;             // k[x]/(x²), g·x = ω^{d_n}x, λ(x) = g^m⊗x
};
ExteriorFactor exterior_factor(const FamilyParams& P);

// k[x]/(x^n) over kZ_n with g·x = ω^{-1}x, λ(x) = g^{-1}⊗x and x primitive;
// its biproduct is T_n. Not symmetric for n > 2.
BraidedHopf taft_braided_factor(int n, const Field& F);

// B⋊H, basis b⋊h at index b*dim H + h.
HopfData biproduct(const BraidedHopf& B);

struct DecompositionResult {
  HopfData family, product;
  Matrix map;  // family -> product
  Report report;
  bool ok() const { return report.ok(); }
};
// G ↦ 1⋊g, X_i ↦ 1⋊x_i (i < n), X_n ↦ x⋊g^m, extended multiplicatively.
DecompositionResult decomposition_iso(const FamilyParams& P);

}  // namespace hk
