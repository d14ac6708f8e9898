#include "doctest.h"
#include "natdual/duality.hpp"
#include "natdual/hom.hpp"

using namespace natdual;

namespace {

// label -> label pairs of a map, undefined points left out
std::vector<std::pair<int, int>> pairs_of(PartialMap const& p, FiniteAlgebra const& a, FiniteAlgebra const& b) {
  std::vector<std::pair<int, int>> out;
  for (Elem x = 0; x < static_cast<Elem>(p.source_size()); ++x)
    if (p.defined(x)) out.emplace_back(a.label(x), b.label(p(x)));
  return out;
}

using Pairs = std::vector<std::pair<int, int>>;

}  // namespace

TEST_CASE("g, f_i on Z_5") {
  auto z5 = make_sugihara_algebra(5);
  CHECK(pairs_of(gen_g(z5), z5, z5) == Pairs{{-2, -1}, {-1, 0}, {0, 0}, {1, 0}, {2, 1}});
  CHECK(pairs_of(gen_f(z5, 0), z5, z5) == Pairs{{-2, -2}, {-1, -1}, {1, 1}, {2, 2}});
  CHECK(pairs_of(gen_f(z5, 1), z5, z5) == Pairs{{-2, -2}, {0, 0}, {2, 2}});
  CHECK(pairs_of(gen_f(z5, 2), z5, z5) == Pairs{{-1, -2}, {0, 0}, {1, 2}});
  CHECK_THROWS_AS(gen_f(z5, 3), Error);
  CHECK_THROWS_AS(gen_g(make_sugihara_algebra(4)), Error);
}

TEST_CASE("f_0 is no monoid map") {
  auto w5 = make_sugihara_monoid(5);
  CHECK_THROWS_AS(gen_f(w5, 0), Error);
  CHECK_NOTHROW(gen_f(w5, 1));
}

TEST_CASE("even maps") {
  auto z4 = make_sugihara_algebra(4);
  auto z3 = make_sugihara_algebra(3);
  CHECK(pairs_of(gen_u(z4, z3), z4, z3) == Pairs{{-2, -1}, {-1, 0}, {1, 0}, {2, 1}});
  CHECK(pairs_of(gen_v(z3, z4), z3, z4) == Pairs{{-1, -2}, {1, 2}});
  CHECK(pairs_of(gen_h(z4, 2), z4, z4) == Pairs{{-1, -2}, {1, 2}});
  CHECK(pairs_of(gen_j(z4), z4, z4) == Pairs{{-2, -1}, {2, 1}});
  CHECK_THROWS_AS(gen_h(z4, 3), Error);
}

TEST_CASE("kappa lift and bar(j) at m = 2") {
  auto z2 = make_sugihara_algebra(2);
  auto w4 = make_sugihara_monoid(4);
  auto bj = kappa_lift(gen_j(make_sugihara_algebra(2)), z2, w4);
  // j on Z_2 is empty, so its lift is the identity on {-1, 1}
  CHECK(pairs_of(bj, w4, w4) == Pairs{{-1, -1}, {1, 1}});
  CHECK(named_generator("bar(j)", {SpecKind::even_mon, 2}).values() == bj.values());
  auto z4 = make_sugihara_algebra(4);
  auto w6 = make_sugihara_monoid(6);
  auto lift = kappa_lift(gen_h(z4, 2), z4, w6);
  CHECK(pairs_of(lift, w6, w6) == Pairs{{-2, -3}, {-1, -1}, {1, 1}, {2, 3}});
}

TEST_CASE("named generators are typed by sort") {
  DualitySpec even{SpecKind::even_alg, 3};
  auto u = named_generator("u", even);
  CHECK(u.src() == "Q");
  CHECK(u.dst() == "P-");
  auto v = named_generator("v", even);
  CHECK(v.src() == "P-");
  CHECK(v.dst() == "Q");
  CHECK(named_generator("id_-+", even).dst() == "P+");
  CHECK_THROWS_AS(named_generator("v", {SpecKind::even_mon, 3}), Error);
  CHECK_THROWS_AS(named_generator("q", even), Error);
  CHECK_THROWS_AS(named_generator("h_9", even), Error);
}

TEST_CASE("spec names") {
  CHECK(spec_kind_from_string("even-mon") == SpecKind::even_mon);
  CHECK(spec_kind_from_string("kleene-alg") == SpecKind::kleene_alg);
  CHECK_THROWS_AS(spec_kind_from_string("nope"), Error);
  CHECK_THROWS_AS(validate({SpecKind::odd_alg, 1}), Error);
  CHECK(sort_names({SpecKind::even_mon, 2}) == std::vector<std::string>{"S-", "T", "S+"});
  CHECK(sort_algebra({SpecKind::even_alg, 2}, "Q").size() == 4);
}

TEST_CASE("resolved f bounds") {
  for (int m = 2; m <= 4; ++m) {
    CHECK(resolved_f_bound({SpecKind::odd_alg, m}) == m - 1);
    CHECK(resolved_f_bound({SpecKind::odd_mon, m}) == m - 1);
    CHECK(resolved_f_bound({SpecKind::even_alg, m}) == (m == 2 ? 0 : m - 1));
    CHECK(resolved_f_bound({SpecKind::even_mon, m}) == (m == 2 ? 0 : m - 1));
  }
}
