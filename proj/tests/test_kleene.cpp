#include "doctest.h"
#include "natdual/duality.hpp"
#include "natdual/hom.hpp"
#include "natdual/kleene.hpp"

using namespace natdual;

namespace {

MultisortedStructure kleene_power(int s) {
  return structure_power(build_alter_ego({SpecKind::kleene_alg, 2}).structure(), s);
}

}  // namespace

TEST_CASE("union preorder on the alter ego") {
  auto x = kleene_power(1);
  auto p = union_preorder(x);
  REQUIRE(p.size == 6);
  for (std::size_t i = 0; i < p.size; ++i) CHECK(p.related(i, i));
  // sort 3- occupies 0..2, 3+ occupies 3..5, element order 0 < a < 1
  CHECK(p.related(0, 3));
  CHECK(p.related(3, 0));
  CHECK(p.related(2, 5));
  CHECK(p.related(5, 2));
  CHECK_FALSE(p.related(1, 4));
}

TEST_CASE("quotient of the alter ego is 2^2") {
  std::vector<int> cls;
  auto k = quotient_to_kleene_space(kleene_power(1), &cls);
  REQUIRE(k.size() == 4);
  std::string why;
  CHECK_MESSAGE(k.valid(&why), why);
  CHECK(cls[0] == cls[3]);
  CHECK(cls[2] == cls[5]);
  // the pair classes are fixed, the a-classes swap
  CHECK(k.g[static_cast<std::size_t>(cls[0])] == cls[0]);
  CHECK(k.g[static_cast<std::size_t>(cls[2])] == cls[2]);
  CHECK(k.g[static_cast<std::size_t>(cls[1])] == cls[4]);
  // y >= g(y) exactly on the image of the minus sort
  for (std::size_t i = 0; i < 6; ++i) {
    int const c = cls[i];
    CHECK(k.leq(k.g[static_cast<std::size_t>(c)], c) == (i < 3 || cls[i] == cls[i - 3]));
  }
}

TEST_CASE("cornish-fowler oracle") {
  auto three = cornish_fowler_oracle(make_kleene_algebra());
  CHECK(three.size() == 2);
  CHECK(three.g[0] == 1);
  CHECK(three.valid());

  auto two = induced_subalgebra(make_kleene_algebra(), std::vector<Elem>{0, 2}, "2");
  auto b = cornish_fowler_oracle(two);
  CHECK(b.size() == 1);
  CHECK(b.g[0] == 0);
}

TEST_CASE("both pipelines agree") {
  auto ego = build_alter_ego({SpecKind::kleene_alg, 2});
  std::vector<std::size_t> sizes{1, 4, 14};
  for (int s = 0; s <= 2; ++s) {
    auto q = quotient_to_kleene_space(kleene_power(s));
    auto o = cornish_fowler_oracle(free_algebra_oracle(ego.sorts.algebras(), s));
    CHECK(q.valid());
    CHECK(o.valid());
    CHECK(q.size() == sizes[static_cast<std::size_t>(s)]);
    CHECK(isomorphic(q, o));
  }
}

TEST_CASE("kleene space isomorphism respects g") {
  KleeneSpace a{"a", {"x", "y"}, {1, 1, 0, 1}, {1, 0}};
  KleeneSpace b{"b", {"x", "y"}, {1, 0, 1, 1}, {1, 0}};
  CHECK(isomorphic(a, b));
  KleeneSpace c{"c", {"x", "y"}, {1, 0, 0, 1}, {0, 1}};
  CHECK_FALSE(isomorphic(a, c));
  CHECK_FALSE(c.valid() == false);
  KleeneSpace bad{"bad", {"x", "y"}, {1, 0, 0, 1}, {1, 0}};
  CHECK_FALSE(bad.valid());
}

TEST_CASE("dot export of a kleene space") {
  auto k = quotient_to_kleene_space(kleene_power(1));
  auto dot = to_dot(k);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.find("digraph") == 0);
}
