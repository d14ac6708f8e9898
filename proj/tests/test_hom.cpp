#include "doctest.h"
#include "natdual/hom.hpp"

#include <algorithm>

using namespace natdual;

namespace {

std::vector<int> labels_of(FiniteAlgebra const& a, std::vector<Elem> const& s) {
  std::vector<int> out;
  for (Elem e : s) out.push_back(a.label(e));
  std::ranges::sort(out);
  return out;
}

PartialMap map_by_labels(FiniteAlgebra const& a, FiniteAlgebra const& b,
                         std::vector<std::pair<int, int>> const& pairs) {
  std::vector<Elem> v(a.size(), kUndefined);
  for (auto [x, y] : pairs) v[static_cast<std::size_t>(a.at(x))] = b.at(y);
  return {a.id(), b.id(), v};
}

}  // namespace

TEST_CASE("subuniverse closure") {
  auto z3 = make_sugihara_algebra(3);
  Elem one = z3.at(1);
  CHECK(labels_of(z3, subuniverse_closure(z3, std::span<Elem const>(&one, 1))) == std::vector<int>{-1, 1});
  auto k = make_kleene_algebra();
  CHECK(labels_of(k, subuniverse_closure(k, {})) == std::vector<int>{-1, 1});
  CHECK_THROWS_AS(subuniverse_closure(z3, {}), Error);
  auto z5 = make_sugihara_algebra(5);
  Elem zero = z5.at(0);
  CHECK(subuniverse_closure(z5, std::span<Elem const>(&zero, 1)).size() == 1);
}

TEST_CASE("all subuniverses") {
  auto z3 = make_sugihara_algebra(3);
  auto subs = all_subuniverses(z3);
  REQUIRE(subs.size() == 3);
  CHECK(labels_of(z3, subs[0]) == std::vector<int>{0});
  CHECK(labels_of(z3, subs[1]) == std::vector<int>{-1, 1});
  CHECK(subs[2].size() == 3);
  CHECK(all_subuniverses(power(make_kleene_algebra(), 2)).size() == 11);
  for (auto const& s : all_subuniverses(make_sugihara_algebra(4))) CHECK(s.size() % 2 == 0);
}

// counts frozen from tests/oracle/brute.py
TEST_CASE("partial endomorphism counts match the brute-force oracle") {
  int const pe_z[] = {0, 0, 1, 5, 5, 21, 19, 83, 69};
  int const end_z[] = {0, 0, 1, 2, 1, 4, 1, 8, 1};
  int const pe_w[] = {0, 0, 1, 3, 2, 11, 6, 42, 20};
  for (int k = 2; k <= 8; ++k) {
    CAPTURE(k);
    auto z = make_sugihara_algebra(k);
    auto w = make_sugihara_monoid(k);
    auto pz = partial_homs(z, z);
    CHECK(pz.size() == static_cast<std::size_t>(pe_z[k]));
    CHECK(homs(z, z).size() == static_cast<std::size_t>(end_z[k]));
    CHECK(partial_homs(w, w).size() == static_cast<std::size_t>(pe_w[k]));
    CHECK(homs(w, w).size() == static_cast<std::size_t>(end_z[k]));
    for (auto const& h : pz) CHECK(is_homomorphism(z, z, h));
  }
  CHECK(partial_homs(make_sugihara_algebra(4), make_sugihara_algebra(3)).size() == 6);
  CHECK(partial_homs(make_sugihara_algebra(3), make_sugihara_algebra(4)).size() == 2);
  CHECK(partial_homs(make_sugihara_algebra(6), make_sugihara_algebra(5)).size() == 25);
  CHECK(partial_homs(make_sugihara_algebra(5), make_sugihara_algebra(6)).size() == 9);
}

TEST_CASE("homs from a point") {
  auto one = make_sugihara_algebra(1);
  CHECK(homs(one, make_sugihara_algebra(3)).size() == 1);
  CHECK(homs(one, make_sugihara_algebra(4)).empty());
  CHECK(homs(make_sugihara_algebra(3), make_sugihara_algebra(4)).empty());
  CHECK(homs(make_sugihara_monoid(3), make_sugihara_monoid(4)).empty());
  CHECK_THROWS_AS(homs(make_sugihara_algebra(3), make_sugihara_monoid(3)), Error);
}

TEST_CASE("composition") {
  auto z5 = make_sugihara_algebra(5);
  auto f0 = map_by_labels(z5, z5, {{-2, -2}, {-1, -1}, {1, 1}, {2, 2}});
  auto g = map_by_labels(z5, z5, {{2, 1}, {1, 0}, {0, 0}, {-1, 0}, {-2, -1}});
  CHECK(is_homomorphism(z5, z5, f0));
  CHECK(is_homomorphism(z5, z5, g));
  CHECK(compose(f0, g) == map_by_labels(z5, z5, {{2, 1}, {-2, -1}}));
  auto z3 = make_sugihara_algebra(3);
  CHECK_THROWS_AS(compose(f0, identity_map(z3)), Error);
}

TEST_CASE("closure under composition") {
  auto z3 = make_sugihara_algebra(3);
  AlgebraFamily fam({z3});
  CHECK(closure_under_composition(fam, {}, false).size() == 1);
  auto f0 = map_by_labels(z3, z3, {{-1, -1}, {1, 1}});
  auto f1 = map_by_labels(z3, z3, {{0, 0}});
  auto g = map_by_labels(z3, z3, {{1, 0}, {0, 0}, {-1, 0}});
  auto closed = closure_under_composition(fam, {f0, f1, g}, false);
  CHECK(closed == partial_homs(z3, z3));
}

TEST_CASE("congruences and quotients") {
  auto z5 = make_sugihara_algebra(5);
  auto c5 = congruences(z5);
  REQUIRE(c5.size() == 3);
  CHECK(c5[0].block_count() == 5);
  CHECK(c5[1].block_count() == 3);
  CHECK(c5[2].block_count() == 1);
  auto z4 = make_sugihara_algebra(4);
  auto c4 = congruences(z4);
  REQUIRE(c4.size() == 3);
  Congruence theta = c4[1];
  CHECK(theta.related(z4.at(-1), z4.at(1)));
  auto q = quotient(z4, theta);
  CHECK(isomorphic(q.algebra, make_sugihara_algebra(3)));
  CHECK(kernel(q.projection) == theta);
  CHECK(is_homomorphism(z4, q.algebra, q.projection));
  CHECK(isomorphic(quotient(z5, c5[0]).algebra, z5));
  CHECK_THROWS_AS(quotient(z5, Congruence(z5.id(), {0, 0, 1, 1, 1})), Error);
}

TEST_CASE("separation") {
  auto r = separates(make_sugihara_algebra(3), make_sugihara_algebra(4));
  CHECK_FALSE(r.separates);
  CHECK(r.reason == "empty-hom-set");
  CHECK(separates(make_sugihara_algebra(3), make_sugihara_algebra(3)).separates);
  auto z3 = make_sugihara_algebra(3);
  CHECK(separates(product(z3, z3), z3).separates);
  CHECK_FALSE(isomorphic(make_sugihara_algebra(5), make_sugihara_algebra(4)));
}
