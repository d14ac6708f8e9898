#include "doctest.h"
#include "natdual/hom.hpp"
#include "natdual/piggyback.hpp"

using namespace natdual;

TEST_CASE("kleene sublattices have one maximal subalgebra each") {
  auto ego = build_alter_ego({SpecKind::kleene_alg, 2});
  auto const& m = ego.sort("3-");
  Elem const zero = m.at(-1), a = m.at(0), one = m.at(1);
  auto check = [&](std::string const& s1, std::string const& s2, std::vector<std::pair<Elem, Elem>> want) {
    auto r = pig_sublattice(ego.carrier(s1), ego.carrier(s2));
    auto max = maximal_subalgebras_in(ego.sort(s1), ego.sort(s2), r);
    REQUIRE(max.size() == 1);
    CHECK(max.front() == Relation(s1, s2, std::move(want)));
  };
  check("3-", "3-", {{zero, zero}, {zero, a}, {a, a}, {one, a}, {one, one}});
  check("3+", "3+", {{zero, zero}, {a, zero}, {a, a}, {a, one}, {one, one}});
  check("3-", "3+", {{zero, zero}, {one, one}});
  check("3+", "3-", {{zero, zero}, {zero, a}, {a, zero}, {a, a}, {a, one}, {one, a}, {one, one}});
}

TEST_CASE("classification verdicts") {
  auto z3 = make_sugihara_algebra(3);
  auto g = gen_g(z3);
  auto c = classify_pig_relation(graph_of(g), z3, z3);
  CHECK(c.verdict == Verdict::graph_of);
  auto k = classify_pig_relation(graph_of(g).converse(), z3, z3);
  CHECK(k.verdict == Verdict::converse_graph_of);
  Relation square("Z3", "Z3", {{0, 0}, {0, 2}, {2, 0}, {2, 2}});
  CHECK(classify_pig_relation(square, z3, z3).verdict == Verdict::other);
  // functional both ways reports as a graph
  CHECK(classify_pig_relation(graph_of(identity_map(z3)), z3, z3).verdict == Verdict::graph_of);
}

TEST_CASE("algebra tables match for m = 2, 3") {
  for (auto k : {SpecKind::odd_alg, SpecKind::even_alg, SpecKind::odd_mon})
    for (int m = 2; m <= 3; ++m) {
      auto r = verify_table({k, m});
      CHECK_MESSAGE(r.ok, table_summary(r));
    }
}

TEST_CASE("monoid table emptiness cells") {
  for (int m = 2; m <= 3; ++m) {
    auto r = verify_table({SpecKind::even_mon, m});
    for (auto const& c : r.cells) {
      bool const empty = c.found.empty();
      if ((c.row == "S-" && c.col != "S-") || (c.row == "T" && c.col == "S+")) CHECK(empty);
      for (auto const& f : c.found) CHECK(f.verdict != Verdict::other);
      // expected empty, but inhabited by converse graphs of maps T -> S+
      if (c.row == "S+" && c.col == "T") {
        CHECK_FALSE(empty);
        CHECK_FALSE(c.ok);
        for (auto const& f : c.found) CHECK(f.backward.has_value());
      }
    }
  }
}

TEST_CASE("separation witnesses") {
  auto w = separation_witness({SpecKind::odd_alg, 2}, "P-", 0, 2);
  CHECK(w.found);
  CHECK(w.word.empty());
  auto w2 = separation_witness({SpecKind::odd_alg, 3}, "P+", 0, 1);
  CHECK(w2.found);
  for (auto k : {SpecKind::odd_alg, SpecKind::even_alg, SpecKind::odd_mon, SpecKind::even_mon})
    for (int m = 2; m <= 3; ++m) CHECK(verify_separation({k, m}).ok);
}

TEST_CASE("generating sets and kappa") {
  for (int m = 2; m <= 3; ++m) {
    auto s = verify_generating_sets(m);
    CHECK(s.ok);
    CHECK(s.f_top_needed);
    CHECK(s.pe_w_even == s.pe_z_smaller);
  }
  auto z5 = make_sugihara_algebra(5);
  auto short_set = verify_generating_set(z5, {gen_g(z5), gen_f(z5, 0), gen_f(z5, 1)});
  CHECK_FALSE(short_set.equal);
  CHECK(short_set.closure_size == 15);
  CHECK(short_set.brute_size == 21);
}

TEST_CASE("entailment") {
  for (auto k : {SpecKind::odd_alg, SpecKind::even_alg, SpecKind::odd_mon, SpecKind::even_mon})
    CHECK(verify_entailment({k, 2}).ok);
  auto e = verify_entailment({SpecKind::even_alg, 3});
  CHECK(e.f0_is_u_after_v);
  CHECK(e.f0_in_closure_without_f0);
  CHECK(e.word_v_h_u.find("ill-typed") != std::string::npos);
  CHECK(verify_entailment({SpecKind::even_mon, 3}).monoid_homs_into_t_empty);
}
