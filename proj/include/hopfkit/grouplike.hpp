#pragma once

// Characters and group-likes, inner and co-inner automorphisms, the maps Γ and
// Θ, the subgroup S(B), and the parametrized automorphism families.

#include "hopfkit/double.hpp"

namespace hk {

// All k-valued algebra maps A -> k as value vectors χ(e_i), in lexicographic
// order. Common eigenvectors of the transposed left multiplications by a
// generating set; each output is checked against the character identities.
std::vector<Vector> characters(const Algebra& A);
bool is_character(const Algebra& A, const Vector& chi);

// Group-likes of L as coordinate vectors, via characters of L*.
std::vector<Vector> grouplikes(const HopfData& L);
bool is_grouplike(const HopfData& L, const Vector& g);

// Versions restricted to morphisms in C (H-linear and H-colinear).
std::vector<Vector> characters_in_C(const BraidedHopf& B);
std::vector<Vector> grouplikes_in_C(const BraidedHopf& B);

Matrix inner_auto(const HopfData& H, const Vector& g);      // b ↦ g b g^{-1}
Matrix coinner_auto(const HopfData& H, const Vector& chi);  // b ↦ χ(b_1) b_2 χ^{-1}(b_3)
Vector character_inverse(const HopfData& H, const Vector& chi);  // χ∘S
Vector character_product(const HopfData& H, const Vector& a, const Vector& b);  // convolution

struct GammaReport {
  std::size_t g_bstar = 0, g_b = 0, g_d = 0;
  bool lands = false, injective = false, surjective = false, multiplicative = false, actions_trivial = false;
  bool ok() const { return lands && injective && surjective && multiplicative && actions_trivial; }
};
// Γ(λ, g) = λ⊗g: G(B*)×G(B) -> G(D(B)).
GammaReport gamma_iso(const DoubleData& D);

struct Pair {
  Vector lambda;  // character of B
  Vector g;       // group-like of B
};
// {(λ, g) : ḡ = λ̄}
std::vector<Pair> s_group(const BraidedHopf& B);
// Functional f⊗b ↦ f(g)·λ(b) on D(B).
Vector pair_functional(const DoubleData& D, const Pair& p);

struct EquivReport {
  bool character_of_D = false;  // (i): the pair functional is a character of D(B)
  bool twisted_commute = false;  // (iii): λ(b_1) b_2 g = g b_1 λ(b_2)
  bool inner_equal = false;      // (iv): ḡ = λ̄
  bool agree() const { return character_of_D == twisted_commute && twisted_commute == inner_equal; }
};
EquivReport equiv_cond_check(const DoubleData& D, const Pair& p);

Matrix theta_map(const HopfData& H, const Pair& p);  // ḡ∘λ̄

// x-degree scaling b ↦ ξ^{deg b} b for truncated-polynomial braided factors
// (basis x^i) and for Taft algebras (basis g^a x^b).
Matrix scaling_automorphism(const BraidedHopf& B, Scalar xi);
Matrix taft_scaling(int n, const Field& F, Scalar xi);
// g ↦ g, x_i ↦ Σ_j A[j][i] x_j on H(m,n,d), extended multiplicatively.
Matrix gl_automorphism(const HopfData& H, int n, const Matrix& A);
// Bijective Hopf morphism B -> B that is also H-linear and H-colinear.
Report braided_aut_check(const BraidedHopf& B, const Matrix& alpha);

}  // namespace hk
