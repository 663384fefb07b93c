#include <algorithm>

#include "doctest.h"
#include "hopfkit/constructors.hpp"
#include "hopfkit/grouplike.hpp"
#include "corpus.hpp"

using namespace hk;
using namespace hk::corpus;

TEST_CASE("characters agree with exhaustive search in small dimension") {
  for (auto F : {make_field(3, 2), make_field(5, 4)}) {
    for (auto& A : small_algebras(F)) {
      auto c = characters(A);
      CHECK(c == brute_characters(A));
      for (auto& chi : c) CHECK(is_character(A, chi));
    }
  }
}

TEST_CASE("group-likes of Taft algebras and their doubles") {
  auto F7 = make_field(7, 3);
  auto T3 = taft(3, F7);
  auto G = grouplikes(T3);
  CHECK(G.size() == 3);
  for (auto& g : G) CHECK(is_grouplike(T3, g));
  auto X = characters(T3);
  CHECK(X.size() == 3);
  auto B = base_level(T3);
  auto D = drinfeld_double(B);
  CHECK(grouplikes(D.D.alg).size() == 9);
  CHECK(characters(D.D.alg).size() == 3);
  auto S = s_group(B);
  CHECK(S.size() == 3);
  // ḡ^i = λ̄_i with λ_i(g) = ω^i
  std::size_t gi = T3.index_of("g");
  for (int i = 0; i < 3; ++i) {
    Vector gp = T3.unit;
    for (int k = 0; k < i; ++k) gp = T3.product(gp, unit_vector(F7, 9, gi));
    auto it = std::find_if(X.begin(), X.end(), [&](const Vector& l) { return l[gi] == F7.omega_pow(i); });
    REQUIRE(it != X.end());
    CHECK(inner_auto(T3, gp) == coinner_auto(T3, *it));
  }
}

TEST_CASE("group-likes of D(H_4) and its dual") {
  auto F5 = make_field(5, 4);
  auto D = drinfeld_double(base_level(sweedler(F5)));
  CHECK(grouplikes(D.D.alg).size() == 4);
  CHECK(characters(D.D.alg).size() == 2);
  auto g = gamma_iso(D);
  CHECK(g.ok());
  CHECK(g.g_bstar == 2);
  CHECK(g.g_b == 2);
}

TEST_CASE("equivalent conditions for (λ, g) agree") {
  auto F7 = make_field(7, 3);
  auto B = base_level(taft(3, F7));
  auto D = drinfeld_double(B);
  int inner = 0;
  for (auto& l : characters(B.alg))
    for (auto& g : grouplikes(B.alg)) {
      auto r = equiv_cond_check(D, {l, g});
      CHECK(r.agree());
      inner += r.inner_equal;
    }
  CHECK(inner == 3);
}

TEST_CASE("exterior factor: only trivial group-likes in C") {
  auto F5 = make_field(5, 4);
  auto E = exterior_factor(family_params(1, {1}, F5));
  auto D = drinfeld_double(E.B);
  CHECK(characters_in_C(E.B).size() == 1);
  CHECK(grouplikes_in_C(E.B).size() == 1);
  CHECK(grouplikes_in_C(D.D).size() == 1);
  CHECK(gamma_iso(D).ok());
}

TEST_CASE("automorphisms") {
  auto F5 = make_field(5, 4);
  auto E = exterior_factor(family_params(1, {1}, F5));
  for (long long xi = 1; xi < 5; ++xi) CHECK(braided_aut_check(E.B, scaling_automorphism(E.B, F5.from_int(xi))).ok());
  auto H = nichols(2, F5);
  auto a = gl_automorphism(H, 2, Matrix::from_rows(F5, {{1, 2}, {3, 4}}));
  CHECK(hopf_morphism_check(a, H, H).ok());
  CHECK_THROWS_AS(gl_automorphism(H, 2, Matrix::from_rows(F5, {{1, 2}, {2, 4}})), Error);
  auto F7 = make_field(7, 3);
  auto T3 = taft(3, F7);
  CHECK(hopf_morphism_check(taft_scaling(3, F7, F7.from_int(3)), T3, T3).ok());
  // inner automorphisms of T_3 are scalings by cube roots of unity
  auto g = unit_vector(F7, 9, T3.index_of("g"));
  auto ig = inner_auto(T3, g);
  CHECK((ig == taft_scaling(3, F7, F7.omega_pow(-1)) || ig == taft_scaling(3, F7, F7.omega())));
}
