#include "doctest.h"
#include "natdual/algebra.hpp"

using namespace natdual;

TEST_CASE("sugihara chain carriers and arrow") {
  auto z3 = make_sugihara_algebra(3);
  CHECK(z3.labels() == std::vector<int>{-1, 0, 1});
  CHECK(z3.label(z3.arrow(z3.at(1), z3.at(1))) == 1);
  CHECK(z3.label(z3.arrow(z3.at(1), z3.at(-1))) == -1);

  auto z4 = make_sugihara_algebra(4);
  CHECK(z4.labels() == std::vector<int>{-2, -1, 1, 2});
  CHECK(z4.label(z4.arrow(z4.at(-1), z4.at(2))) == 2);

  auto z1 = make_sugihara_algebra(1);
  CHECK(z1.size() == 1);
  CHECK_THROWS_AS(make_sugihara_algebra(0), Error);
}

TEST_CASE("laws hold for every chain up to 15") {
  for (int k = 1; k <= 15; ++k) {
    CAPTURE(k);
    auto a = make_sugihara_algebra(k);
    CHECK(a.size() == static_cast<std::size_t>(k));
    CHECK(check_algebra_laws(a).ok);
    CHECK(check_algebra_laws(make_sugihara_monoid(k)).ok);
  }
}

TEST_CASE("monoid truth constants") {
  auto w4 = make_sugihara_monoid(4);
  CHECK(w4.label(w4.constant(OpSymbol::truth)) == 1);
  CHECK(w4.label(w4.fusion(w4.at(1), w4.at(2))) == 2);
  auto w3 = make_sugihara_monoid(3);
  CHECK(w3.label(w3.constant(OpSymbol::truth)) == 0);
  for (int k = 2; k <= 12; k += 2) {
    auto w = make_sugihara_monoid(k);
    Elem t = w.constant(OpSymbol::truth);
    for (Elem a = 0; a < static_cast<Elem>(w.size()); ++a) {
      CHECK(w.fusion(t, a) == a);
      CHECK(w.fusion(a, t) == a);
    }
  }
}

TEST_CASE("kleene three") {
  auto k = make_kleene_algebra();
  CHECK(k.size() == 3);
  CHECK(k.neg(k.at(0)) == k.at(0));
  CHECK(k.neg(k.at(-1)) == k.at(1));
  CHECK(kleene_law_holds(k));
  CHECK(check_algebra_laws(k).ok);
  auto l = make_kleene_lattice();
  CHECK_FALSE(l.signature().has_constants());
  CHECK(l.table(OpSymbol::meet) == k.table(OpSymbol::meet));
  CHECK(l.table(OpSymbol::neg) == k.table(OpSymbol::neg));
}

TEST_CASE("products and tuple closure") {
  auto z3 = make_sugihara_algebra(3);
  auto p = product(z3, z3);
  CHECK(p.size() == 9);
  CHECK(check_algebra_laws(p).ok);
  auto k = make_kleene_algebra();
  CHECK(power(k, 2).size() == 9);
  CHECK(power(k, 0).size() == 1);
}
