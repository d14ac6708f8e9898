#include "doctest.h"
#include "natdual/duality.hpp"
#include "natdual/io.hpp"

using namespace natdual;

TEST_CASE("algebra json round trip") {
  for (auto const& a : {make_sugihara_algebra(4), make_sugihara_monoid(3), make_kleene_algebra(),
                        make_kleene_lattice(), power(make_sugihara_algebra(3), 2)}) {
    auto j = to_json(a);
    auto back = algebra_from_json(j);
    CHECK(back == a);
    CHECK(to_json(back).dump() == j.dump());
  }
  CHECK(to_json(make_sugihara_monoid(3))["tables"]["t"] == 0);
}

TEST_CASE("maps and relations round trip") {
  auto z5 = make_sugihara_algebra(5);
  auto f = gen_f(z5, 1);
  CHECK(partial_map_from_json(to_json(f)) == f);
  CHECK(to_json(f)["values"][1].is_null());
  auto r = graph_of(f);
  CHECK(relation_from_json(to_json(r)) == r);
}

TEST_CASE("structure json round trip") {
  auto ego = build_alter_ego({SpecKind::even_alg, 2});
  auto x = ego.structure();
  auto back = structure_from_json(to_json(x));
  CHECK(to_json(back).dump() == to_json(x).dump());
  CHECK_THROWS_AS(structure_from_json(Json::parse("{\"id\": 1}")), Error);
  CHECK_THROWS_AS(algebra_from_json(Json::parse("[]")), Error);
}

TEST_CASE("dot export") {
  auto ego = build_alter_ego({SpecKind::kleene_alg, 2});
  auto dot = to_dot(ego.structure());
  CHECK(dot.find("cluster_1") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);
  MultisortedStructure empty;
  empty.id = "empty";
  CHECK(to_dot(empty) == "digraph \"empty\" {\n}\n");
}
