#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfkit/linalg.hpp"
#include "hopfkit/tensor.hpp"

namespace hk {

struct Check {
  Check() = default;
  explicit Check(std::string n) : name(std::move(n)) {}
  std::string name;
  bool pass = true;
  std::vector<std::size_t> witness;  // first failing index tuple
  std::string detail;
};

struct Report {
  std::vector<Check> checks;
  bool ok() const;
  const Check* find(const std::string& name) const;
  bool passed(const std::string& name) const;
  Report& add(Check c);
  Report& merge(const Report& r, const std::string& prefix = "");
  std::string summary() const;
};

// Associative unital algebra by structure constants.
struct Algebra {
  Field field;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  LinMap mult;  // e_i⊗e_j (index i*dim+j) -> e_i·e_j
  Vector unit;

  Scalar mult_coeff(std::size_t i, std::size_t j, std::size_t k) const {
    return mult.entry(k, i * dim + j);
  }
  Vector product(const Vector& a, const Vector& b) const;
  SparseVec product(const SparseVec& a, const SparseVec& b) const;
  Matrix left_mult(const Vector& a) const;   // x ↦ a·x
  Matrix right_mult(const Vector& a) const;  // x ↦ x·a
  Matrix mult_matrix() const { return mult.to_matrix(field); }
};

struct HopfData : Algebra {
  LinMap comult;  // e_i -> Σ Δ[i][j][k] e_j⊗e_k (index j*dim+k)
  Vector counit;
  Matrix antipode;
  std::optional<Matrix> antipode_inv;

  Scalar comult_coeff(std::size_t i, std::size_t j, std::size_t k) const {
    return comult.entry(j * dim + k, i);
  }
  SparseVec coproduct(const SparseVec& a) const;
  Matrix comult_matrix() const { return comult.to_matrix(field); }
  Matrix counit_matrix() const;  // 1×dim
  Matrix unit_matrix() const;    // dim×1
  // Stored S^{-1}, or computed on demand.
  Matrix s_inv() const;
  std::size_t index_of(const std::string& label) const;
};

Algebra make_algebra(const Field& F, std::vector<std::string> basis, LinMap mult, Vector unit);

// Basis indices generating A under left multiplication, chosen greedily.
std::vector<std::size_t> algebra_generators(const Algebra& A);

Report verify_algebra(const Algebra& A);
// With `braiding` (c: H⊗H -> H⊗H) the bialgebra condition reads
// Δ(ab) = (∇⊗∇)(id⊗c⊗id)(Δa⊗Δb); the plain swap is the default.
Report verify_hopf_axioms(const HopfData& H, const LinMap* braiding = nullptr);

Matrix convolution(const HopfData& C, const Algebra& A, const Matrix& f, const Matrix& g);
Matrix convolution(const HopfData& H, const Matrix& f, const Matrix& g);
Matrix convolution_unit(const HopfData& C, const Algebra& A);  // u∘ε
Matrix convolution_inverse(const HopfData& C, const Algebra& A, const Matrix& f);
Matrix convolution_inverse(const HopfData& H, const Matrix& f);

HopfData dual_hopf(const HopfData& H);
HopfData opposite(const HopfData& H);
HopfData coopposite(const HopfData& H);

// f: L -> L' as a matrix (dim L' × dim L).
Report hopf_morphism_check(const LinMap& f, const HopfData& L, const HopfData& Lp);
Report hopf_morphism_check(const Matrix& f, const HopfData& L, const HopfData& Lp);
Report algebra_morphism_check(const Matrix& f, const Algebra& A, const Algebra& Ap);

enum class Side { left, right };
// Right center: z·a = ∇Φ(z⊗a); left center: a·z = ∇Φ(a⊗z). Φ defaults to the swap.
std::vector<Vector> center(const Algebra& A, Side side, const Matrix* braiding = nullptr);

// Product of two sparse elements in A⊗A (componentwise multiplication).
SparseVec tensor_square_product(const Algebra& A, const SparseVec& x, const SparseVec& y);

}  // namespace hk
