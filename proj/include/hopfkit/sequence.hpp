#pragma once

// The exact sequence 1 → G(D(B)*) → G(D(B)) → Aut(C;B) → BQ(C;B) at desk
// scale: twisted modules B_α, E_α = End(B_α), the K/L objects, A(α), the
// inner-action isomorphism and the subgroup condition for the family.
// B-YD modules in C are handled through their transport to L = B⋊H.

#include "hopfkit/grouplike.hpp"

namespace hk {

struct TwistedModule {
  Matrix alpha;
  BModule M;      // B_α
  Report alfa_yd;  // λ(b·m) = b_1 m_[-1] S(α(b_3)) ⊗ b_2·m_[0], braided
  bool yd = false;  // full YD compatibility over B (fails for α ≠ id in general)
};

// b·m = ∇Φ(S^{-1}(b_1)⊗α(b_2)m), λ = (S⊗id)Φ^{-1}Δ.
BModule twisted_bmodule(const BraidedHopf& B, const Matrix& alpha);
TwistedModule twisted_module(const BraidedHopf& B, HopfPtr L, const Matrix& alpha);
// The dual of B_α as a B-module and B-comodule.
BModule twisted_dual(const BraidedHopf& B, HopfPtr L, const BModule& M);
// λ(b·f) = α(b_1) f_[-1] S(b_3) ⊗ b_2·f_[0] for f ∈ B_α*.
bool alfa_dual_yd(const BraidedHopf& B, const Matrix& alpha, const BModule& Mstar);
// The twisted compatibility with τ in place of α (τ = id is the YD condition).
bool twisted_yd(const BraidedHopf& B, const Matrix& tau, const BModule& M);

struct EAlpha {
  YDAlgebra E;  // over L
  Report yd;
  AzumayaReport azumaya;
  std::size_t left_center = 0, right_center = 0;
};
EAlpha e_alpha(const BraidedHopf& B, HopfPtr L, const Matrix& alpha);

// b·(m⊗n) = b_1·m' ⊗ τ(b_2')·n with Φ(b_2⊗m) = m'⊗b_2', codiagonal coaction.
BModule twisted_tensor(const BraidedHopf& B, const BModule& M, const BModule& N, const Matrix& tau);

struct KLReport {
  bool K_twisted_yd = false;  // K = B_α⊗B_β satisfies the βα-twisted identity
  bool L_yd = false;          // L = K⊗B_γ, γ = (βα)^{-1}
  bool inverse_pair_yd = false;  // B_α⊗B_{α^{-1}}
  bool ok() const { return K_twisted_yd && L_yd && inverse_pair_yd; }
};
KLReport k_and_l_objects(const BraidedHopf& B, HopfPtr L, const Matrix& alpha, const Matrix& beta);

// E_α ⊗̄ E_β -> End(K) via ω: algebra isomorphism and B-colinear, with K
// satisfying the βα-twisted identity.
Report pi_class_relation_check(const BraidedHopf& B, HopfPtr L, const Matrix& alpha, const Matrix& beta);

// α ⊗ id_H on L = B⋊H.
Matrix lift_to_biproduct(const BraidedHopf& B, const Matrix& alpha);
// A(α): b·a = α(b)·a, λ = (α^{-1}⊗id)λ; A is an algebra over L.
YDAlgebra a_alpha(const BraidedHopf& B, const YDAlgebra& A, const Matrix& alpha);
// Fi: A ⊗̄ E_α -> E_α ⊗̄ A(α^{-1}) is a unital algebra isomorphism, linear and colinear.
Report inner_action_iso_check(const BraidedHopf& B, HopfPtr L, const YDAlgebra& A, const Matrix& alpha);

struct SampleVerdict {
  Matrix alpha;
  std::string label;
  bool in_image = false;
  bool strongly_inner = false;
  bool azumaya = false;  // false when not computed
};
struct SequenceReport {
  std::size_t g_dstar_size = 0, g_d_size = 0, g_bstar_size = 0, g_b_size = 0;
  std::size_t s_group_size = 0, theta_kernel = 0, image_size = 0;
  bool kernel_matches_s = false;  // ker Θ = {(λ^{-1}, g) : (λ, g) ∈ S(B)}
  bool gamma_ok = false;
  std::vector<SampleVerdict> samples;
  bool exact_at_aut() const;
  bool ok() const { return kernel_matches_s && gamma_ok && theta_kernel == g_dstar_size && exact_at_aut(); }
};
// Samples are checked together with every element of image(Θ). The Azumaya
// verdict builds a dense (dim B)^4 square matrix; it can be switched off.
SequenceReport exactness_report(const BraidedHopf& B, const std::vector<std::pair<std::string, Matrix>>& samples,
                                bool with_azumaya = true);

// Σ_{j,t} ω^{-jt} α^{-1}(g^{st}) ⊗ g^j·a = Σ_{j,t} ω^{-jt} g^{st} ⊗ α(g^j)·a for all basis a,
// with g^j given as elements of L (the image of the group-like of H).
bool cond_bq_subgr_check(const HopfData& L, const std::vector<Vector>& gpow, const Matrix& alpha, const YDModule& A,
                         int s);

}  // namespace hk
