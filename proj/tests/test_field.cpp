#include <random>

#include "doctest.h"
#include "hopfkit/field.hpp"

using namespace hk;

namespace {
Poly P(const Field& F, std::initializer_list<long long> cs) {
  Poly f;
  for (auto c : cs) f.push_back(F.from_int(c));
  poly_trim(f);
  return f;
}
}  // namespace

TEST_CASE("primitive root selection") {
  CHECK(make_field(5, 4).omega() == Scalar{2, 1});
  CHECK(make_field(7, 1).omega() == Scalar{1, 1});
  auto Q = make_field(0, 2);
  CHECK(Q.str(Q.omega()) == "-1");
  CHECK(make_field(7, 6).omega() == Scalar{3, 1});
  CHECK(make_field(5, 4).omega() == make_field(5, 4).omega());
  CHECK_THROWS_AS(make_field(6, 1), Error);
  try {
    make_field(7, 4);
    FAIL("expected RootOrderUnavailable");
  } catch (const Error& e) {
    CHECK(e.code() == Error::Code::RootOrderUnavailable);
  }
  CHECK_THROWS_AS(make_field(0, 3), Error);
}

TEST_CASE("scalar arithmetic") {
  auto F5 = make_field(5, 4);
  CHECK(F5.inv(F5.from_int(2)) == F5.from_int(3));
  for (int r : {1, 2, 4}) {
    auto F = make_field(5, r);
    CHECK(F.pow(F.omega(), r) == F.one());
  }
  auto Q = make_field(0, 1);
  CHECK(Q.str(Q.add(Q.frac(1, 2), Q.frac(1, 3))) == "5/6");
  CHECK_THROWS_AS(F5.inv(F5.zero()), Error);
  CHECK(F5.parse("-1") == F5.from_int(4));
  CHECK(Q.parse("-3/6") == Q.frac(-1, 2));
}

TEST_CASE("field laws on random triples") {
  std::mt19937_64 rng(7);
  for (long long p : {3, 5, 7, 101}) {
    auto F = make_field(p, 1);
    for (int t = 0; t < 200; ++t) {
      Scalar a = F.from_int(rng() % p), b = F.from_int(rng() % p), c = F.from_int(rng() % p);
      CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      if (!a.is_zero()) CHECK(F.mul(a, F.inv(a)) == F.one());
    }
  }
  auto Q = make_field(0, 2);
  for (int t = 0; t < 200; ++t) {
    Scalar a = Q.frac(int(rng() % 19) - 9, 1 + rng() % 7), b = Q.frac(int(rng() % 19) - 9, 1 + rng() % 7);
    CHECK(Q.sub(Q.add(a, b), b) == a);
    if (!a.is_zero()) CHECK(Q.mul(a, Q.inv(a)) == Q.one());
  }
}

TEST_CASE("factor_poly examples") {
  auto F3 = make_field(3, 2), F5 = make_field(5, 4);
  auto f1 = factor_poly(F3, P(F3, {-1, 0, 1}));
  REQUIRE(f1.size() == 2);
  CHECK(f1[0].first == P(F3, {1, 1}));  // x+1
  CHECK(f1[1].first == P(F3, {-1, 1}));  // x-1
  auto f2 = factor_poly(F5, P(F5, {1, 0, 1}));
  REQUIRE(f2.size() == 2);
  CHECK(f2[0].first == P(F5, {-3, 1}));  // x+2 sorts first
  CHECK(f2[1].first == P(F5, {-2, 1}));
  auto f3 = factor_poly(F3, P(F3, {1, 0, 1}));
  REQUIRE(f3.size() == 1);
  CHECK(f3[0].second == 1);
  CHECK(poly_degree(f3[0].first) == 2);
  CHECK_THROWS_AS(factor_poly(F3, Poly{}), Error);
}

TEST_CASE("factor_poly repeated factors in characteristic p") {
  auto F3 = make_field(3, 1);
  // (x^3 - x)^3 (x^2+1)^2
  Poly f = poly_mul(F3, P(F3, {0, -1, 0, 1}), P(F3, {0, -1, 0, 1}));
  f = poly_mul(F3, f, P(F3, {0, -1, 0, 1}));
  f = poly_mul(F3, f, poly_mul(F3, P(F3, {1, 0, 1}), P(F3, {1, 0, 1})));
  auto fs = factor_poly(F3, f);
  REQUIRE(fs.size() == 4);
  CHECK(fs[3].second == 2);
  for (int i = 0; i < 3; ++i) CHECK(fs[i].second == 3);
}

TEST_CASE("factor_poly re-multiplies to the input") {
  std::mt19937_64 rng(11);
  for (long long p : {2, 3, 5, 7, 13}) {
    auto F = make_field(p, 1);
    for (int t = 0; t < 100; ++t) {
      int deg = 1 + rng() % 6;
      Poly f(deg + 1);
      for (auto& c : f) c = F.from_int(rng() % p);
      f[deg] = F.from_int(1 + rng() % (p - 1));
      auto fs = factor_poly(F, f);
      Poly g{F.from_int(f[deg].num)};
      for (auto& [q, e] : fs) {
        CHECK(q.back() == F.one());
        auto qf = factor_poly(F, q);
        CHECK(qf.size() == 1);
        CHECK(qf[0].second == 1);
        for (int i = 0; i < e; ++i) g = poly_mul(F, g, q);
      }
      CHECK(g == f);
    }
  }
}

TEST_CASE("roots") {
  auto F7 = make_field(7, 3);
  auto r = poly_roots(F7, P(F7, {-1, 0, 0, 1}));
  CHECK(r == std::vector<Scalar>{F7.from_int(1), F7.from_int(2), F7.from_int(4)});
  auto Q = make_field(0, 2);
  auto rq = poly_roots(Q, Poly{Q.frac(-1, 4), Q.zero(), Q.one()});
  CHECK(rq == std::vector<Scalar>{Q.frac(-1, 2), Q.frac(1, 2)});
}
