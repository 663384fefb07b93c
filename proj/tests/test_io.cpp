#include "doctest.h"
#include "hopfkit/io.hpp"

using namespace hk;

TEST_CASE("field and algebra specs") {
  auto F = parse_field_spec("p=7,root=6");
  CHECK(F.p() == 7);
  CHECK(F.root_order() == 6);
  CHECK_FALSE(parse_field_spec("p=Q,root=2").is_prime());
  CHECK_THROWS_AS(parse_field_spec("p=7,r=6"), Error);
  CHECK_THROWS_AS(parse_field_spec("p=9,root=2"), Error);
  auto a = parse_algebra_spec("family:m=2,n=2,d=1,3");
  CHECK(a.name == "family");
  CHECK(a.params.at("d") == "1,3");
  CHECK(parse_algebra_spec("double:taft:n=3").inner == "taft:n=3");
  CHECK_THROWS_AS(parse_algebra_spec("taft:n=3,q=1"), Error);
  CHECK_THROWS_AS(parse_algebra_spec("taft"), Error);
  CHECK_THROWS_AS(parse_algebra_spec("taft:n=x"), Error);
  CHECK_THROWS_AS(parse_algebra_spec("klein"), Error);
  auto b = build_algebra(parse_algebra_spec("family:m=2,n=2,d=1,3"), make_field(5, 4));
  CHECK(b.H.dim == 16);
  CHECK_THROWS_AS(build_algebra(parse_algebra_spec("family:m=2,n=2,d=1"), make_field(5, 4)), Error);
  CHECK(build_algebra(parse_algebra_spec("radford:m=3"), make_field(7, 6), true).ext->B.dim() == 2);
}

TEST_CASE("JSON round trips") {
  auto F = make_field(5, 4);
  auto H = family_hopf(family_params(2, {1, 3}, F));
  auto j = hopf_to_json(H);
  auto H2 = hopf_from_json(json::parse(j.dump()));
  CHECK(hopf_to_json(H2) == j);
  CHECK(hopf_morphism_check(Matrix::identity(F, H.dim), H, H2).ok());
  auto E = exterior_factor(family_params(1, {1}, F));
  auto bj = braided_to_json(E.B);
  auto B2 = braided_from_json(json::parse(bj.dump()));
  CHECK(braided_to_json(B2) == bj);
  CHECK(verify_braided_hopf(B2).ok());
  auto Q = make_field(0, 2);
  auto S = sweedler(Q);
  CHECK(hopf_to_json(hopf_from_json(hopf_to_json(S))) == hopf_to_json(S));
  json bad = j;
  bad["extra"] = 1;
  CHECK_THROWS_AS(hopf_from_json(bad), Error);
  bad = j;
  bad["mult"].push_back({99, 0, 0, "1"});
  CHECK_THROWS_AS(hopf_from_json(bad), Error);
}
