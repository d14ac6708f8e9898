#include "doctest.h"
#include "natdual/duality.hpp"
#include "natdual/hom.hpp"

using namespace natdual;

TEST_CASE("alter egos are well formed") {
  for (auto k : {SpecKind::odd_alg, SpecKind::even_alg, SpecKind::odd_mon, SpecKind::even_mon, SpecKind::kleene_alg,
                 SpecKind::kleene_lat})
    for (int m = 2; m <= 3; ++m) {
      std::string why;
      CHECK_MESSAGE(build_alter_ego({k, m}).well_formed(&why), why);
    }
}

TEST_CASE("carrier maps") {
  auto z5 = make_sugihara_algebra(5);
  auto dm = make_carrier_map("delta-", z5);
  CHECK(dm.values == std::vector<int>{0, 0, 1, 1, 1});
  CHECK(make_carrier_map("delta+", z5).values == std::vector<int>{0, 0, 0, 1, 1});
  CHECK(make_carrier_map("beta", make_sugihara_algebra(4)).values == std::vector<int>{0, 0, 1, 1});
  CHECK(is_lattice_hom_to_two(dm, z5));
  CHECK_THROWS_AS(make_carrier_map("gamma", z5), Error);
}

TEST_CASE("dual of an algebra") {
  auto ego = build_alter_ego({SpecKind::odd_alg, 2});
  auto d = dual_of_algebra(make_sugihara_algebra(3), ego);
  CHECK(d.sizes == std::vector<std::size_t>{2, 2});

  auto even = build_alter_ego({SpecKind::even_alg, 2});
  auto point = induced_subalgebra(make_sugihara_algebra(3), std::vector<Elem>{1}, "pt");
  CHECK(dual_of_algebra(point, even).sizes == std::vector<std::size_t>{1, 0, 1});
}

TEST_CASE("E of the empty structure is trivial") {
  auto ego = build_alter_ego({SpecKind::kleene_alg, 2});
  auto d = dual_of_algebra(make_kleene_algebra(), ego);
  MultisortedStructure empty = d;
  empty.id = "empty";
  empty.sizes = {0, 0};
  empty.point_names = {{}, {}};
  empty.gops.clear();
  empty.hops.clear();
  empty.consts.clear();
  empty.rels.clear();
  for (auto const& op : d.gops) empty.gops.push_back({op.name, op.src, op.dst, {}});
  for (auto const& op : d.hops) empty.hops.push_back({op.name, op.src, op.dst, {}});
  for (auto const& r : d.rels) empty.rels.push_back({r.name, r.src, r.dst, {}});
  CHECK(dual_of_structure(empty, ego).size() == 1);
}

TEST_CASE("unit and counit on small algebras") {
  for (auto spec : {DualitySpec{SpecKind::odd_alg, 2}, DualitySpec{SpecKind::even_alg, 2},
                    DualitySpec{SpecKind::odd_mon, 2}, DualitySpec{SpecKind::even_mon, 2}}) {
    auto ego = build_alter_ego(spec);
    bool const mon = is_monoid(spec.kind);
    auto make = [&](int k) { return mon ? make_sugihara_monoid(k) : make_sugihara_algebra(k); };
    std::vector<FiniteAlgebra> corpus{make(3), power(make(3), 2)};
    if (is_even(spec.kind)) corpus.push_back(make(4));
    for (auto const& a : corpus) {
      CHECK_MESSAGE(evaluation_unit(a, ego).iso, to_string(spec) << " " << a.id());
      CHECK_MESSAGE(evaluation_counit(a, ego).iso, to_string(spec) << " " << a.id());
    }
  }
  auto k = build_alter_ego({SpecKind::kleene_alg, 2});
  CHECK(evaluation_unit(make_kleene_algebra(), k).iso);
}

TEST_CASE("free algebras against the projection oracle") {
  struct Row {
    DualitySpec spec;
    int s;
    std::size_t size;
  };
  std::vector<Row> rows{{{SpecKind::kleene_alg, 2}, 0, 2},  {{SpecKind::kleene_alg, 2}, 1, 6},
                        {{SpecKind::kleene_alg, 2}, 2, 84}, {{SpecKind::kleene_lat, 2}, 0, 0},
                        {{SpecKind::kleene_lat, 2}, 1, 4},  {{SpecKind::kleene_lat, 2}, 2, 82},
                        {{SpecKind::odd_alg, 2}, 1, 4},     {{SpecKind::even_alg, 2}, 1, 4},
                        {{SpecKind::odd_mon, 2}, 1, 9}};
  for (auto const& r : rows) {
    auto ego = build_alter_ego(r.spec);
    auto f = free_algebra(ego, r.s);
    auto o = free_algebra_oracle(ego.sorts.algebras(), r.s);
    CHECK_MESSAGE(f.size() == r.size, to_string(r.spec) << " s=" << r.s);
    CHECK(isomorphic(f, o));
  }
  CHECK_THROWS_AS(free_algebra(build_alter_ego({SpecKind::kleene_alg, 2}), 9, 100), Error);
}

TEST_CASE("dropping link maps") {
  for (auto k : {SpecKind::odd_alg, SpecKind::even_alg}) {
    std::vector<FiniteAlgebra> corpus{make_sugihara_algebra(3), power(make_sugihara_algebra(3), 2)};
    if (k == SpecKind::even_alg) corpus.push_back(make_sugihara_algebra(4));
    auto one = build_alter_ego({k, 2}, {.drop_link_mp = true});
    auto both = build_alter_ego({k, 2}, {.drop_link_mp = true, .drop_link_pm = true});
    for (auto const& a : corpus) {
      CHECK(evaluation_unit(a, one).iso);
      CHECK_FALSE(evaluation_unit(a, both).iso);
    }
  }
}

TEST_CASE("strongness on an embedding and a surjection") {
  auto ego = build_alter_ego({SpecKind::odd_alg, 3});
  auto z3 = make_sugihara_algebra(3);
  auto z5 = make_sugihara_algebra(5);
  std::vector<Elem> emb(3);
  for (Elem x = 0; x < 3; ++x) emb[static_cast<std::size_t>(x)] = z5.at(z3.label(x) * 2);
  auto r = check_strongness(z3, z5, PartialMap(z3.id(), z5.id(), emb), ego);
  CHECK(r.injective);
  CHECK(r.dual_surjective);
  CHECK(r.ok);

  auto even = build_alter_ego({SpecKind::even_alg, 2});
  auto z4 = make_sugihara_algebra(4);
  auto s = check_strongness(z4, z3, gen_u(z4, z3), even);
  CHECK(s.surjective);
  CHECK(s.dual_embedding);
  CHECK(s.ok);
}

TEST_CASE("dual of an inclusion that misses a point") {
  // x = (+-1 -> +-2) does not extend to an endomorphism of Z_5, but it is
  // f_2 applied to the restricted identity
  auto ego = build_alter_ego({SpecKind::odd_alg, 3});
  auto z5 = make_sugihara_algebra(5);
  std::vector<Elem> u{z5.at(-1), z5.at(0), z5.at(1)};
  auto a = induced_subalgebra(z5, u, "A");
  auto r = check_strongness(a, z5, PartialMap("A", z5.id(), u), ego);
  CHECK(r.injective);
  CHECK(r.dual_is_morphism);
  CHECK_FALSE(r.dual_surjective);
  CHECK(r.dual_image_generates);
}
