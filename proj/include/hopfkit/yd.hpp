#pragma once

// The category C of left-left Yetter-Drinfel'd modules over a base Hopf
// algebra H. Conventions:
//   Φ_{M,N}(m⊗n)      = n_[0] ⊗ S^{-1}(n_[-1])·m
//   Φ_{M,N}^{-1}(n⊗m) = n_[-1]·m ⊗ n_[0]
// Tensor products carry the diagonal action and codiagonal coaction.

#include <memory>

#include "hopfkit/hopf.hpp"

namespace hk {

using HopfPtr = std::shared_ptr<const HopfData>;

struct YDModule {
  HopfPtr base;
  std::size_t dim = 0;
  LinMap act;    // H⊗M -> M, input index a*dim + j
  LinMap coact;  // M -> H⊗M, output index a*dim + j

  const Field& field() const { return base->field; }
  std::size_t hdim() const { return base->dim; }
  Matrix rho(const Vector& h) const;  // action of h as a dim×dim matrix
  Matrix rho(std::size_t a) const;
};

// The one-dimensional base field k over H.
HopfPtr trivial_hopf(const Field& F);
HopfPtr share(HopfData H);

YDModule make_module(HopfPtr H, const Matrix& action, const Matrix& coaction);
YDModule trivial_module(HopfPtr H, std::size_t dim = 1);
// H with the adjoint action and Δ as coaction.
YDModule regular_module(HopfPtr H);
YDModule tensor_module(const YDModule& M, const YDModule& N);
// Left dual: (h·f)(m) = f(S(h)m), λ(f)(m) = S^{-1}(m_[-1]) f(m_[0]).
YDModule dual_module(const YDModule& M);
// Evaluation M*⊗M -> k and coevaluation k -> M⊗M* of the left dual.
Matrix evaluation(const YDModule& M);
Matrix coevaluation(const YDModule& M);

Report check_module(const YDModule& M);
Report check_comodule(const YDModule& M);
// "ydll1": h_(1)m_[-1] ⊗ h_(2)m_[0] = (h_(1)m)_[-1]h_(2) ⊗ (h_(1)m)_[0]
// "ydll2": λ(hm) = h_(1)m_[-1]S(h_(3)) ⊗ h_(2)m_[0]
Report check_yd_compat(const YDModule& M);
Report verify_yd(const YDModule& M);

Matrix braiding(const YDModule& M, const YDModule& N);      // M⊗N -> N⊗M
Matrix braiding_inv(const YDModule& M, const YDModule& N);  // N⊗M -> M⊗N
LinMap braiding_map(const YDModule& M, const YDModule& N);
LinMap braiding_inv_map(const YDModule& M, const YDModule& N);
bool is_symmetric_pair(const YDModule& B, const YDModule& M);

// f: M -> N is H-linear / H-colinear.
bool is_linear(const Matrix& f, const YDModule& M, const YDModule& N);
bool is_colinear(const Matrix& f, const YDModule& M, const YDModule& N);

struct YDAlgebra {
  YDModule obj;
  Algebra alg;
};

Report verify_yd_algebra(const YDAlgebra& A);
// (a⊗b)(a'⊗b') = a a'_[0] ⊗ (S^{-1}(a'_[-1])·b) b'
YDAlgebra tensor_algebra_in_C(const YDAlgebra& A, const YDAlgebra& B);
// ∇_op = ∇∘Φ_{A,A}
YDAlgebra opposite_in_C(const YDAlgebra& A);
// End(M) ≅ M⊗M*, basis E_ij (e_j ↦ e_i) at index i*dim + j, composition product.
YDAlgebra end_algebra(const YDModule& M);
YDAlgebra end_op(const YDModule& M);
YDAlgebra trivial_algebra(HopfPtr H);
// Algebra with trivial YD structure.
YDAlgebra plain_algebra(HopfPtr H, const Algebra& A);

struct AzumayaReport {
  bool F_bijective = false, G_bijective = false;
  std::size_t F_rank = 0, G_rank = 0, size = 0;
  bool ok() const { return F_bijective && G_bijective; }
};
// F(a⊗b)(c) = a c_[0] (S^{-1}(c_[-1])·b),  G(a⊗b)(c) = a_[0] (S^{-1}(a_[-1])·c) b
Matrix azumaya_F(const YDAlgebra& A);
Matrix azumaya_G(const YDAlgebra& A);
AzumayaReport azumaya_check(const YDAlgebra& A);
// Braided centers (Φ_{A,A} from C).
std::vector<Vector> center_in_C(const YDAlgebra& A, Side side);

struct RMatrix {
  Vector r;  // element of H⊗H
  int m = 0, n = 0, s = 0;
};

Report check_quasitriangular(const HopfData& H, const RMatrix& R);
bool is_triangular(const HopfData& H, const RMatrix& R);
// λ(m) = R^(2) ⊗ R^(1)·m for an H-module given by its action H⊗M -> M.
YDModule induced_coaction(HopfPtr H, const LinMap& action, std::size_t dim, const RMatrix& R);
// Φ_R(m⊗n) = R^(1)·n ⊗ S^{-1}(R^(2))·m on plain H-modules.
Matrix braiding_R(const HopfData& H, const RMatrix& R, const YDModule& M, const YDModule& N);

// ω: End(M)⊗End(N) -> End(M⊗N) with ev(ω(f⊗g)⊗m⊗n) = (ev⊗ev)(f⊗Φ_{[N,N],M}(g⊗m)⊗n).
Matrix end_tensor_map(const YDModule& M, const YDModule& N);
// ω is a YD algebra isomorphism from End(M)⊗End(N) (product in C) to End(M⊗N).
Report end_tensor_iso_check(const YDModule& M, const YDModule& N);

// A Hopf algebra in C: structure constants plus the YD structure of the
// underlying object. Base-level Hopf algebras live over the trivial H = k.
struct BraidedHopf {
  YDModule obj;
  HopfData alg;
  const Field& field() const { return alg.field; }
  std::size_t dim() const { return alg.dim; }
};

BraidedHopf base_level(const HopfData& H);
// Bialgebra compatibility uses c = Φ^{-1}_{B,B}: Δ(ab) = a_1 (a_2[-1]·b_1) ⊗ a_2[0] b_2.
// Also checks that every structure map is a morphism in C.
Report verify_braided_hopf(const BraidedHopf& B);
LinMap c_braiding(const YDModule& B);  // (x⊗y) ↦ x_[-1]·y ⊗ x_[0] on B⊗B

// Shared contraction helpers.
LinMap swap_map(const Field& F, std::size_t a, std::size_t b);  // A⊗B -> B⊗A
LinMap identity_map(const Field& F, std::size_t n);
LinMap dense_map(const Matrix& m);

}  // namespace hk
