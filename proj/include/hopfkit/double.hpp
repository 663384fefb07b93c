#pragma once

// The Drinfel'd double D(B) = (B^op)*⋈B of a Hopf algebra B in C, its modules,
// and the passage between B-YD modules in C, D(B)-modules and (B⋊H)-YD modules.
// Everything here assumes Φ_{B,B} symmetric.

#include <optional>

#include "hopfkit/yd.hpp"

namespace hk {

struct SymmReport {
  bool BB = false, SS = false, BS = false;  // Φ_{B,B}, Φ_{B*,B*}, Φ_{B,B*}
  bool all() const { return BB && SS && BS; }
  bool consistent() const { return BB == SS && SS == BS; }
};
SymmReport check_symm_conds(const BraidedHopf& B);

// (B^op)*: algebra dual to Δ_B, Δ(f)(u⊗v) = f(vu), antipode (S^{-1})*; object B*.
BraidedHopf dual_leg(const BraidedHopf& B);

struct DoubleData {
  BraidedHopf B, Bstar, D;  // D basis f⊗b at index f*dim B + b
  Matrix pairing;           // ēv(e_j⊗e^k) = ev∘Φ_{B,B*}
  Matrix left_act;          // ▷: B⊗B* -> B*, column a*d + f
  Matrix right_act;         // ◁: B⊗B* -> B
  std::size_t dim() const { return D.dim(); }
};

// Throws SymmetricityViolated unless Φ_{B,B} is symmetric.
DoubleData drinfeld_double(const BraidedHopf& B);
// Braided Hopf axioms of D plus "1S": S_D(ε⊗b) = ε⊗S_B(b).
Report verify_double(const DoubleData& D);

// An object of C with a B-action and a B-coaction that are morphisms in C.
struct BModule {
  YDModule obj;
  LinMap act;    // B⊗M -> M
  LinMap coact;  // M -> B⊗M
  std::size_t dim() const { return obj.dim; }
};

// An object of C with B- and B*-actions.
struct DModule {
  YDModule obj;
  LinMap bact;  // B⊗M -> M
  LinMap fact;  // B*⊗M -> M
  std::size_t dim() const { return obj.dim; }
};

// f·n = ⟨f, S^{-1}(n_[-1])⟩ n_[0]
DModule yd_to_dmodule(const DoubleData& D, const BModule& N);
// λ(m) = Σ e_i ⊗ (e^i∘S)·m
BModule dmodule_to_yd(const DoubleData& D, const DModule& M);
// "b_module", "bstar_module", "compat" (b·(f·m) against the crossed form) and
// "d_module" (the combined action (f⊗b)·m = f·(b·m) against the product of D).
Report dmodule_check(const DoubleData& D, const DModule& M);
// Action matrix of x ∈ D on M under (f⊗b)·m = f·(b·m).
Matrix d_action(const DoubleData& D, const DModule& M, const Vector& x);

// (b⋊h)·m = b·(h·m), λ(m) = m_[-1]B ⊗ (m_[0]B)_[-1]H ⊗ (m_[0]B)_[0]H over L = B⋊H.
YDModule yd_transport(const BraidedHopf& B, HopfPtr L, const BModule& X);
BModule yd_untransport(const BraidedHopf& B, const YDModule& Y);
// Module, comodule and YD axioms for X viewed over B⋊H.
Report verify_b_yd(const BraidedHopf& B, HopfPtr L, const BModule& X);

struct SolverResult {
  bool found = false;
  std::size_t search_size = 0, tried = 0;
  Vector lambda;  // character of B
  Vector g;       // group-like of B (a character of B*)
  Matrix theta;   // D -> End(M), column x gives θ(x) in the E_ij basis
};
// Searches character pairs (λ, g*) in lexicographic order for a twist of M
// that is a D(B)-module inducing the given structure on End(M).
SolverResult strongly_inner_solver(const DoubleData& D, HopfPtr L, const BModule& M);

}  // namespace hk
