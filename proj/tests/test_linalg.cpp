#include <random>

#include "doctest.h"
#include "hopfkit/linalg.hpp"

using namespace hk;

namespace {
Matrix random_matrix(const Field& F, std::mt19937_64& rng, std::size_t r, std::size_t c) {
  Matrix m(F, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = F.from_int(rng() % F.p());
  return m;
}
}  // namespace

TEST_CASE("rank, kernel, inverse examples") {
  auto F = make_field(5, 1);
  CHECK(rank(Matrix::identity(F, 4)) == 4);
  auto k = kernel_basis(Matrix(F, 3, 3));
  REQUIRE(k.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(k[i] == unit_vector(F, 3, i));
  CHECK(inverse(Matrix::from_rows(F, {{1, 1}, {0, 1}})) == Matrix::from_rows(F, {{1, 4}, {0, 1}}));
  CHECK_THROWS_AS(inverse(Matrix::from_rows(F, {{1, 2}, {2, 4}})), Error);
  CHECK_THROWS_AS(solve(Matrix::from_rows(F, {{1, 2}, {2, 4}}), Vector{F.one(), F.zero()}), Error);
}

TEST_CASE("kronecker examples") {
  auto F = make_field(5, 1);
  CHECK(kron(Matrix::identity(F, 2), Matrix::identity(F, 2)) == Matrix::identity(F, 4));
  auto d = Matrix::from_rows(F, {{1, 0}, {0, 2}});
  CHECK(kron(d, Matrix::identity(F, 1)) == d);
  auto e = Matrix::from_rows(F, {{1, 0}, {0, 0}});
  Matrix e4(F, 4, 4);
  e4.at(0, 0) = F.one();
  CHECK(kron(e, e) == e4);
}

TEST_CASE("char_poly and eigenspaces") {
  auto F = make_field(5, 1);
  auto d = Matrix::from_rows(F, {{1, 0}, {0, 2}});
  CHECK(char_poly(d) == Poly{F.from_int(2), F.from_int(-3), F.one()});
  CHECK(eigenspace(Matrix::identity(F, 3), F.one()).size() == 3);
  CHECK(eigenspace(d, F.from_int(3)).empty());
}

TEST_CASE("random properties") {
  std::mt19937_64 rng(3);
  auto F = make_field(7, 1);
  for (int t = 0; t < 50; ++t) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    Matrix a = random_matrix(F, rng, r, c);
    auto ker = kernel_basis(a);
    CHECK(rank(a) + ker.size() == c);
    for (auto& v : ker) CHECK(is_zero(apply(a, v)));
    Matrix s = random_matrix(F, rng, 4, 4);
    if (rank(s) == 4) CHECK((inverse(s) * s).is_identity());
    Matrix A = random_matrix(F, rng, 2, 3), B = random_matrix(F, rng, 3, 2);
    Matrix C = random_matrix(F, rng, 3, 2), D = random_matrix(F, rng, 2, 3);
    CHECK(kron(A, B) * kron(C, D) == kron(A * C, B * D));
    // char_poly annihilates (Cayley-Hamilton)
    Poly p = char_poly(s);
    Matrix acc(F, 4, 4), pw = Matrix::identity(F, 4);
    for (auto& coef : p) {
      acc = acc + scale(pw, coef);
      pw = pw * s;
    }
    CHECK(acc.is_zero());
  }
}
