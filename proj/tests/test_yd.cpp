#include "doctest.h"
#include "corpus.hpp"
#include "hopfkit/constructors.hpp"

using namespace hk;
using namespace hk::corpus;

TEST_CASE("regular, dual and tensor modules are YD") {
  auto F = make_field(5, 4);
  auto H = share(sweedler(F));
  auto R = regular_module(H);
  CHECK(verify_yd(R).ok());
  auto D = dual_module(R);
  CHECK(verify_yd(D).ok());
  CHECK(verify_yd(tensor_module(R, D)).ok());
  auto one = trivial_module(H);
  CHECK(is_linear(evaluation(R), tensor_module(D, R), one));
  CHECK(is_colinear(evaluation(R), tensor_module(D, R), one));
  CHECK(is_linear(coevaluation(R), one, tensor_module(R, D)));
  CHECK(is_colinear(coevaluation(R), one, tensor_module(R, D)));
}

TEST_CASE("braiding and its inverse") {
  auto F = make_field(7, 3);
  auto H = share(taft(3, F));
  auto R = regular_module(H), D = dual_module(R);
  CHECK((braiding_inv(R, D) * braiding(R, D)).is_identity());
  CHECK((braiding(R, D) * braiding_inv(R, D)).is_identity());
  // Φ is H-linear and H-colinear
  CHECK(is_linear(braiding(R, D), tensor_module(R, D), tensor_module(D, R)));
  CHECK(is_colinear(braiding(R, D), tensor_module(R, D), tensor_module(D, R)));
  CHECK_FALSE(is_symmetric_pair(R, R));
}

TEST_CASE("R-matrix braidings on the exterior factor") {
  auto F5 = make_field(5, 4);
  auto F7 = make_field(7, 6);
  int count = 0;
  for (auto P : {family_params(1, {1}, F5), family_params(1, {1, 1}, F5), family_params(2, {1}, F5),
                 family_params(2, {3, 1}, F5), family_params(3, {5}, F7)}) {
    auto E = exterior_factor(P);
    const HopfData& H = *E.H;
    int sd = E.s * P.d.back();
    for (auto& M : r_modules(E)) {
      REQUIRE(verify_yd(M).ok());
      CHECK(is_symmetric_pair(E.B.obj, M));
      ++count;
      // Φ(x⊗m) = g^{-s d_n}m ⊗ x and Φ^{-1}(x⊗m) = g^{s d_n}m ⊗ x
      Matrix phi = braiding(E.B.obj, M), phinv = braiding_inv(M, E.B.obj);
      Matrix gm = M.rho(gpow(H, -sd)), gp = M.rho(gpow(H, sd));
      for (std::size_t j = 0; j < M.dim; ++j)
        for (std::size_t i = 0; i < M.dim; ++i) {
          CHECK(phi.at(i * 2 + 1, 1 * M.dim + j) == gm.at(i, j));
          CHECK(phinv.at(i * 2 + 1, 1 * M.dim + j) == gp.at(i, j));
        }
    }
  }
  CHECK(count >= 5);
}

TEST_CASE("YD algebras: End, tensor product in C, opposite") {
  auto F = make_field(5, 4);
  auto H = share(sweedler(F));
  auto R = regular_module(H);
  auto E = end_algebra(R);
  CHECK(verify_yd_algebra(E).ok());
  CHECK(verify_yd_algebra(opposite_in_C(E)).ok());
  auto E2 = end_algebra(trivial_module(H, 2));
  CHECK(verify_yd_algebra(tensor_algebra_in_C(E2, E)).ok());
  auto r = end_tensor_iso_check(trivial_module(H, 2), R);
  CHECK_MESSAGE(r.ok(), r.summary());
}

TEST_CASE("Azumaya: End(M) passes, k[x]/(x²) fails") {
  auto F5 = make_field(5, 4);
  auto H4 = share(sweedler(F5));
  auto Z3 = share(group_algebra(3, F5));
  auto E = exterior_factor(family_params(1, {1}, F5));
  std::vector<YDModule> mods = {trivial_module(H4, 2), regular_module(H4), dual_module(regular_module(H4)),
                                regular_module(Z3), E.B.obj, r_modules(E)[0]};
  for (auto& M : mods) {
    auto A = end_algebra(M);
    auto az = azumaya_check(A);
    CHECK(az.ok());
    CHECK(center_in_C(A, Side::left).size() == 1);
    CHECK(center_in_C(A, Side::right).size() == 1);
  }
  auto bad = plain_algebra(trivial_hopf(F5), E.B.alg);
  auto az = azumaya_check(bad);
  CHECK_FALSE(az.ok());
  CHECK(az.F_rank < az.size);
}
