#include <random>

#include "doctest.h"
#include "hopfkit/constructors.hpp"

using namespace hk;

namespace {
Matrix random_map(const Field& F, std::mt19937_64& rng, std::size_t r, std::size_t c) {
  Matrix m(F, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = F.from_int(rng() % F.p());
  return m;
}
}  // namespace

TEST_CASE("axiom examples") {
  auto F5 = make_field(5, 4), F7 = make_field(7, 3);
  CHECK(verify_hopf_axioms(group_algebra(2, F5)).ok());
  auto T3 = taft(3, F7);
  auto r = verify_hopf_axioms(T3);
  CHECK_MESSAGE(r.ok(), r.summary());
  auto broken = group_algebra(2, F5);
  broken.antipode = Matrix(F5, 2, 2);
  broken.antipode_inv.reset();
  auto rb = verify_hopf_axioms(broken);
  CHECK_FALSE(rb.passed("antipode"));
  CHECK(rb.passed("algebra"));
  CHECK(rb.passed("bialgebra"));
}

TEST_CASE("first failure is reported with its index") {
  auto F5 = make_field(5, 4);
  auto H = sweedler(F5);
  H.mult.col(1 * 4 + 2) = {{3, F5.from_int(2)}};  // corrupt x·g
  auto r = verify_hopf_axioms(H);
  CHECK_FALSE(r.passed("algebra"));
  REQUIRE(r.find("algebra")->witness.size() == 3);
}

TEST_CASE("convolution") {
  auto F = make_field(5, 4);
  for (int n : {2, 4}) {
    auto H = group_algebra(n, F);
    auto ue = convolution_unit(H, H);
    CHECK(convolution(H, H.antipode, Matrix::identity(F, n)) == ue);
    CHECK(convolution_inverse(H, Matrix::identity(F, n)) == H.antipode);
  }
  auto Z2 = group_algebra(2, F);
  // id*id: g ↦ g² = 1
  CHECK(convolution(Z2, Matrix::identity(F, 2), Matrix::identity(F, 2)) == Matrix::from_rows(F, {{1, 1}, {0, 0}}));
  auto T2 = taft(2, F);
  CHECK(convolution_inverse(T2, Matrix::identity(F, 4)) == T2.antipode);
  CHECK_THROWS_AS(convolution_inverse(T2, Matrix(F, 4, 4)), Error);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 5; ++t) {
    Matrix a = random_map(F, rng, 4, 4), b = random_map(F, rng, 4, 4), c = random_map(F, rng, 4, 4);
    CHECK(convolution(T2, convolution(T2, a, b), c) == convolution(T2, a, convolution(T2, b, c)));
    CHECK(convolution(T2, convolution_unit(T2, T2), a) == a);
  }
}

TEST_CASE("duals and opposites") {
  auto F = make_field(5, 4);
  auto Z2 = group_algebra(2, F);
  auto D = dual_hopf(Z2);
  CHECK(verify_hopf_axioms(D).ok());
  CHECK(D.counit == Z2.unit);
  // function algebra: dual basis elements are orthogonal idempotents
  CHECK(D.product(unit_vector(F, 2, 0), unit_vector(F, 2, 1)) == zero_vector(F, 2));
  CHECK(D.product(unit_vector(F, 2, 0), unit_vector(F, 2, 0)) == unit_vector(F, 2, 0));
  auto T2 = taft(2, F);
  auto DD = dual_hopf(dual_hopf(T2));
  CHECK(hopf_morphism_check(Matrix::identity(F, 4), T2, DD).ok());
  CHECK(opposite(Z2).mult_matrix() == Z2.mult_matrix());
  CHECK(coopposite(Z2).comult_matrix() == Z2.comult_matrix());
  auto O = opposite(T2);
  CHECK(O.mult_coeff(1, 2, 3) == T2.mult_coeff(2, 1, 3));
  CHECK(verify_hopf_axioms(O).ok());
  CHECK(verify_hopf_axioms(coopposite(T2)).ok());
}

TEST_CASE("morphism checks") {
  auto F = make_field(7, 3);
  auto T3 = taft(3, F);
  CHECK(hopf_morphism_check(Matrix::identity(F, 9), T3, T3).ok());
  for (int xi = 1; xi < 7; ++xi) {
    Matrix f(F, 9, 9);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) f.at(a * 3 + b, a * 3 + b) = F.pow(F.from_int(xi), b);
    CHECK(hopf_morphism_check(f, T3, T3).ok());
  }
  auto Z2 = group_algebra(2, make_field(5, 1));
  auto bad = Matrix::from_rows(make_field(5, 1), {{1, 0}, {0, 0}});
  CHECK_FALSE(hopf_morphism_check(bad, Z2, Z2).ok());
}

TEST_CASE("centers") {
  auto F = make_field(5, 1);
  auto Z2 = group_algebra(2, F);
  CHECK(center(Z2, Side::left).size() == 2);
  // M_2(k) as End(k²)
  Algebra M;
  M.field = F;
  M.dim = 4;
  M.mult = LinMap(16, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l) M.mult.col((i * 2 + j) * 4 + j * 2 + l).push_back({static_cast<std::uint64_t>(i * 2 + l), F.one()});
  M.unit = {F.one(), F.zero(), F.zero(), F.one()};
  auto z = center(M, Side::right);
  REQUIRE(z.size() == 1);
  CHECK(z[0] == M.unit);
}

TEST_CASE("antipode anti-homomorphism on constructor outputs") {
  auto F = make_field(5, 4);
  for (auto H : {taft(2, F), nichols(2, F), family_hopf(family_params(2, {1, 3}, F))}) {
    auto S = H.antipode;
    // S(ab) = S(b)S(a)
    for (std::size_t a = 0; a < H.dim; ++a)
      for (std::size_t b = 0; b < H.dim; ++b) {
        auto ea = unit_vector(F, H.dim, a), eb = unit_vector(F, H.dim, b);
        CHECK(hk::apply(S, H.product(ea, eb)) == H.product(hk::apply(S, eb), hk::apply(S, ea)));
      }
    // Δ∘S = (S⊗S)∘Δ^cop
    CHECK(H.comult_matrix() * S == kron(S, S) * coopposite(H).comult_matrix());
    CHECK(convolution_inverse(H, Matrix::identity(F, H.dim)) == S);
  }
}
