#include "doctest.h"
#include "hopfkit/constructors.hpp"

using namespace hk;

TEST_CASE("group algebras and Taft algebras") {
  auto F = make_field(5, 4);
  auto Z2 = group_algebra(2, F);
  CHECK(Z2.dim == 2);
  CHECK(verify_hopf_axioms(Z2).ok());
  auto F7 = make_field(7, 3);
  auto T3 = taft(3, F7);
  CHECK(T3.dim == 9);
  // x g = ω g x, i.e. g x = ω^{-1} x g
  std::size_t g = T3.index_of("g"), x = T3.index_of("x"), gx = T3.index_of("gx");
  CHECK(T3.mult_coeff(x, g, gx) == F7.omega());
  CHECK(T3.mult_coeff(g, x, gx) == F7.one());
  // S(x) = -x g^{-1}
  auto S = T3.antipode;
  Vector xg2 = T3.product(unit_vector(F7, 9, x), unit_vector(F7, 9, T3.index_of("g^2")));
  CHECK(S.column(x) == vscale(F7, xg2, F7.from_int(-1)));
  CHECK_THROWS_AS(taft(3, make_field(7, 2)), Error);
}

TEST_CASE("Sweedler: taft(2) equals H(1,1) under the identity relabeling") {
  auto F = make_field(5, 4);
  auto T2 = taft(2, F), H4 = sweedler(F);
  CHECK(hopf_morphism_check(Matrix::identity(F, 4), T2, H4).ok());
  // S has order 4 on x: S²(x) = g x g^{-1} = -x
  auto S = T2.antipode;
  std::size_t x = T2.index_of("x");
  CHECK((S * S).column(x) == vscale(F, unit_vector(F, 4, x), F.from_int(-1)));
  CHECK((S * S * S * S).is_identity());
  auto Q = make_field(0, 2);
  CHECK(verify_hopf_axioms(sweedler(Q)).ok());
  CHECK(verify_hopf_axioms(taft(2, Q)).ok());
}

TEST_CASE("family dimensions and axioms") {
  auto F5 = make_field(5, 4);
  CHECK(family_hopf(family_params(2, {1, 3}, F5)).dim == 16);
  CHECK(nichols(3, make_field(3, 2)).dim == 16);
  for (auto& d : all_d(2, 2)) CHECK(verify_hopf_axioms(family_hopf(family_params(2, d, F5))).ok());
  auto F7 = make_field(7, 6);
  for (auto& d : all_d(3, 1)) CHECK(verify_hopf_axioms(family_hopf(family_params(3, d, F7))).ok());
  CHECK_THROWS_AS(family_params(2, {2}, F5), Error);
  CHECK_THROWS_AS(family_params(3, {1}, F5), Error);
}

TEST_CASE("R-matrices") {
  auto F = make_field(5, 4);
  auto P0 = family_params(1, {}, F);
  auto R = r_matrix(P0, 1);
  Scalar h = F.inv(F.from_int(2));
  CHECK(R.r == Vector{h, h, h, F.neg(h)});
  auto H4p = family_params(1, {1}, F);
  auto H4 = family_hopf(H4p);
  auto R1 = r_matrix(H4p, 1);
  CHECK(check_quasitriangular(H4, R1).ok());
  CHECK(is_triangular(H4, R1));
  auto P = family_params(2, {1}, F);
  CHECK(admissible_s(P) == std::vector<int>{2});
  auto H = family_hopf(P);
  CHECK(check_quasitriangular(H, r_matrix(P, 2)).ok());
  CHECK(is_triangular(H, r_matrix(P, 2)));
  CHECK_THROWS_AS(r_matrix(P, 1), Error);
  // kZ_4: every s is admissible; R_s R_s^{21} = 1 iff 2s ≡ 0 (mod 4)
  auto Z = family_params(2, {}, F);
  auto HZ = family_hopf(Z);
  for (int s = 0; s < 4; ++s) {
    auto Rs = r_matrix(Z, s);
    CHECK(check_quasitriangular(HZ, Rs).ok());
    CHECK(is_triangular(HZ, Rs) == (s % 2 == 0));
  }
  // admissible set equals the exhaustive scan
  auto P13 = family_params(2, {1, 3}, F);
  for (int s = 0; s < 4; ++s) {
    bool ok = (s * 1) % 4 == 2 && (s * 3) % 4 == 2;
    bool listed = false;
    for (int t : admissible_s(P13)) listed = listed || t == s;
    CHECK(ok == listed);
  }
}

TEST_CASE("exterior factor and biproduct") {
  auto F = make_field(5, 4);
  auto E = exterior_factor(family_params(1, {1}, F));
  CHECK(E.H->dim == 2);
  CHECK(E.B.dim() == 2);
  // g·x = -x
  CHECK(E.B.obj.rho(1).at(1, 1) == F.from_int(-1));
  auto r = verify_braided_hopf(E.B);
  CHECK_MESSAGE(r.ok(), r.summary());
  CHECK(is_symmetric_pair(E.B.obj, E.B.obj));
  auto L = biproduct(E.B);
  CHECK(L.dim == 4);
  CHECK(verify_hopf_axioms(L).ok());
  // s = m is always admissible; the smallest one is used
  CHECK(exterior_factor(family_params(3, {1, 3}, make_field(7, 6))).s == 3);
  CHECK(exterior_factor(family_params(3, {1, 1}, make_field(7, 6))).s == 3);
}

TEST_CASE("decomposition isomorphisms") {
  auto F5 = make_field(5, 4);
  for (auto P : {family_params(1, {1}, F5), family_params(1, {1, 1}, F5), family_params(2, {1}, F5),
                 family_params(2, {1, 1}, F5), family_params(2, {3, 3}, F5)}) {
    auto D = decomposition_iso(P);
    CHECK_MESSAGE(D.ok(), D.report.summary());
  }
}

TEST_CASE("Taft braided factor") {
  auto F = make_field(7, 3);
  auto B = taft_braided_factor(3, F);
  auto r = verify_braided_hopf(B);
  CHECK_MESSAGE(r.ok(), r.summary());
  CHECK_FALSE(is_symmetric_pair(B.obj, B.obj));
  auto L = biproduct(B);
  CHECK(verify_hopf_axioms(L).ok());
}
