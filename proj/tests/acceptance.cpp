// One line per acceptance criterion; exit status 1 if any line fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "natdual/hom.hpp"
#include "natdual/kleene.hpp"
#include "natdual/piggyback.hpp"
#include "natdual/verify.hpp"

using namespace natdual;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

std::string join_failures(std::vector<CheckResult> const& rs, std::size_t limit = 3) {
  std::string out;
  std::size_t shown = 0;
  for (auto const& r : rs)
    for (std::size_t i = 0; i < r.failures && shown < limit; ++i, ++shown)
      out += (out.empty() ? "" : "; ") + r.name + ": " + r.notes[i];
  return out;
}

Outcome from_checks(std::vector<CheckResult> const& rs, std::string const& what) {
  std::size_t items = 0, failures = 0;
  for (auto const& r : rs) {
    items += r.items;
    failures += r.failures;
  }
  std::ostringstream os;
  os << what << ": " << items << " items, " << failures << " failures";
  if (failures) os << " [" << join_failures(rs) << "]";
  return {failures == 0, os.str()};
}

std::vector<DualitySpec> sweep_specs() {
  return {{SpecKind::odd_alg, 2}, {SpecKind::odd_alg, 3}, {SpecKind::even_alg, 2},
          {SpecKind::odd_mon, 2}, {SpecKind::odd_mon, 3}, {SpecKind::even_mon, 2}};
}

std::vector<DualitySpec> parametric(int lo, int hi) {
  std::vector<DualitySpec> out;
  for (auto k : {SpecKind::odd_alg, SpecKind::even_alg, SpecKind::odd_mon, SpecKind::even_mon})
    for (int m = lo; m <= hi; ++m) out.push_back({k, m});
  return out;
}

Outcome kleene_subalgebras() {
  auto n = all_subuniverses(power(make_kleene_algebra(), 2)).size();
  return {n == 11, std::to_string(n) + " subuniverses of 3^2 (expected 11)"};
}

Outcome kleene_piggyback() {
  auto ego = build_alter_ego({SpecKind::kleene_alg, 2});
  auto const& m = ego.sort("3-");
  Elem const z = m.at(-1), a = m.at(0), o = m.at(1);
  using P = std::vector<std::pair<Elem, Elem>>;
  // 3- carries the order with a on top, 3+ its converse; the cross
  // relations are {(0,0),(1,1)} and everything but (0,1), (1,0).
  struct Want {
    std::string s1, s2;
    P pairs;
  };
  std::vector<Want> wants{{"3-", "3-", {{z, z}, {z, a}, {a, a}, {o, a}, {o, o}}},
                          {"3+", "3+", {{z, z}, {a, z}, {a, a}, {a, o}, {o, o}}},
                          {"3-", "3+", {{z, z}, {o, o}}},
                          {"3+", "3-", {{z, z}, {z, a}, {a, z}, {a, a}, {a, o}, {o, a}, {o, o}}}};
  int good = 0;
  for (auto const& w : wants) {
    auto r = pig_sublattice(ego.carrier(w.s1), ego.carrier(w.s2));
    auto max = maximal_subalgebras_in(ego.sort(w.s1), ego.sort(w.s2), r);
    if (max.size() == 1 && max.front() == Relation(w.s1, w.s2, w.pairs)) ++good;
  }
  return {good == 4, std::to_string(good) + "/4 sublattices with the displayed unique maximal subalgebra"};
}

Outcome duality_sweep(bool counit) {
  std::vector<CheckResult> rs;
  for (auto const& s : sweep_specs()) rs.push_back(counit ? check_counit(s, default_parents(s)) : check_unit(s, default_parents(s)));
  return from_checks(rs, counit ? "epsilon_D(A) over the corpus" : "e_A over the corpus");
}

Outcome strongness() {
  std::vector<CheckResult> rs;
  std::size_t emb = 0, sur = 0, gen = 0;
  for (auto const& s : sweep_specs()) {
    auto sw = check_strongness_sweep(s, default_parents(s));
    emb += sw.embeddings;
    sur += sw.surjections;
    gen += sw.image_generates;
    rs.push_back(sw.result);
  }
  auto out = from_checks(rs, std::to_string(emb) + " embeddings, " + std::to_string(sur) + " surjections");
  if (!out.ok) out.detail += "; " + std::to_string(gen) + " failing duals still generate D(A) under G, H, K";
  out.ok = out.ok && emb >= 5 && sur >= 5;
  return out;
}

Outcome generators() {
  std::vector<CheckResult> rs;
  for (int m = 2; m <= 4; ++m) rs.push_back(check_generators(m));
  return from_checks(rs, "closures vs brute force, kappa, End(W_2m)");
}

Outcome tables() {
  std::vector<CheckResult> rs;
  std::size_t other = 0;
  for (auto const& s : parametric(2, 3)) {
    rs.push_back(check_tables(s));
    for (auto const& c : verify_table(s).cells)
      for (auto const& f : c.found) other += f.verdict == Verdict::other;
  }
  auto out = from_checks(rs, "cells");
  out.detail += ", " + std::to_string(other) + " Other verdicts";
  out.ok = out.ok && other == 0;
  return out;
}

Outcome separation() {
  std::vector<CheckResult> rs;
  for (auto const& s : parametric(2, 4)) rs.push_back(check_separation(s));
  return from_checks(rs, "unequal pairs");
}

Outcome entailment() {
  std::vector<CheckResult> rs;
  for (auto const& s : parametric(2, 4)) rs.push_back(check_entailment(s));
  return from_checks(rs, "sort pairs and identities");
}

Outcome variety() {
  std::vector<CheckResult> rs;
  for (int m = 2; m <= 3; ++m)
    for (bool mon : {false, true}) rs.push_back(check_variety_facts(m, mon));
  return from_checks(rs, "facts");
}

Outcome free_algebras() {
  std::vector<CheckResult> rs;
  for (int s = 0; s <= 2; ++s) {
    rs.push_back(check_free({SpecKind::kleene_alg, 2}, s, 2000));
    rs.push_back(check_free({SpecKind::kleene_lat, 2}, s, 2000));
  }
  for (auto k : {SpecKind::odd_alg, SpecKind::even_alg, SpecKind::odd_mon}) rs.push_back(check_free({k, 2}, 1, 2000));
  auto out = from_checks(rs, "E(M^s) vs oracle");
  auto ka = build_alter_ego({SpecKind::kleene_alg, 2});
  auto kl = build_alter_ego({SpecKind::kleene_lat, 2});
  for (int s = 1; s <= 2; ++s) {
    auto a = free_algebra(ka, s).size();
    auto l = free_algebra(kl, s).size();
    out.detail += "; |F_KA(" + std::to_string(s) + ")|=" + std::to_string(a) + " |F_Klu(" + std::to_string(s) +
                  ")|=" + std::to_string(l);
    out.ok = out.ok && l + 2 == a;
  }
  return out;
}

Outcome translation() {
  auto r = check_kleene_translation(2);
  auto out = from_checks({r}, "pipelines");
  auto ego = build_alter_ego({SpecKind::kleene_alg, 2});
  auto k = quotient_to_kleene_space(structure_power(ego.structure(), 1));
  // 2^2: one bottom, one top, two incomparable points; g swaps bottom and top
  int bottom = -1, top = -1;
  std::vector<int> middle;
  for (int x = 0; x < static_cast<int>(k.size()); ++x) {
    bool lo = true, hi = true;
    for (int y = 0; y < static_cast<int>(k.size()); ++y) {
      lo = lo && k.leq(x, y);
      hi = hi && k.leq(y, x);
    }
    if (lo) bottom = x;
    else if (hi) top = x;
    else middle.push_back(x);
  }
  bool const square = k.size() == 4 && bottom >= 0 && top >= 0 && middle.size() == 2 &&
                      !k.leq(middle[0], middle[1]) && !k.leq(middle[1], middle[0]) &&
                      k.g[static_cast<std::size_t>(bottom)] == top &&
                      k.g[static_cast<std::size_t>(middle[0])] == middle[0] &&
                      k.g[static_cast<std::size_t>(middle[1])] == middle[1];
  out.detail += square ? "; s=1 space is 2^2" : "; s=1 space is not 2^2";
  for (auto const& n : r.notes) out.detail += "; " + n;
  out.ok = out.ok && square;
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    char const* title;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all{
      {1, "Kleene subalgebra count", kleene_subalgebras},
      {2, "Kleene piggyback table", kleene_piggyback},
      {3, "Duality sweeps", [] { return duality_sweep(false); }},
      {4, "Fullness on duals", [] { return duality_sweep(true); }},
      {5, "Strongness consequences", strongness},
      {6, "Generating sets", generators},
      {7, "Piggyback tables", tables},
      {8, "Separation", separation},
      {9, "Entailment", entailment},
      {10, "Variety facts", variety},
      {11, "Free algebras", free_algebras},
      {12, "Kleene translation", translation},
  };
  int failed = 0;
  for (auto const& c : all) {
    auto const t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2d %s (%.3f s): %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs, o.detail.c_str());
    failed += !o.ok;
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(all.size()) - failed, all.size());
  return failed ? 1 : 0;
}
