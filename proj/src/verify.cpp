#include "natdual/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "natdual/hom.hpp"
#include "natdual/kleene.hpp"
#include "natdual/piggyback.hpp"

namespace natdual {

Json to_json(CheckResult const& r) {
  return {{"failures", r.failures}, {"items", r.items}, {"name", r.name}, {"notes", r.notes}, {"ok", r.ok}};
}

namespace {

void fail(CheckResult& r, std::string const& what) {
  ++r.failures;
  r.notes.insert(r.notes.begin() + static_cast<long>(r.failures - 1), what);
}

void finish(CheckResult& r) { r.ok = r.failures == 0; }

FiniteAlgebra chain(bool monoid, int k) { return monoid ? make_sugihara_monoid(k) : make_sugihara_algebra(k); }

std::string universe_name(FiniteAlgebra const& parent, std::vector<Elem> const& u) {
  std::string s = parent.id() + "{";
  for (std::size_t i = 0; i < u.size(); ++i) s += (i ? "," : "") + parent.name(u[i]);
  return s + "}";
}

}  // namespace

bool in_quasivariety(FiniteAlgebra const& a, std::vector<FiniteAlgebra> const& gens) {
  auto const n = static_cast<Elem>(a.size());
  std::vector<PartialMap> all;
  for (auto const& g : gens) {
    auto h = homs(a, g);
    all.insert(all.end(), h.begin(), h.end());
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (std::none_of(all.begin(), all.end(), [&](PartialMap const& h) { return h(x) != h(y); })) return false;
  return true;
}

std::vector<FiniteAlgebra> default_parents(DualitySpec const& spec) {
  validate(spec);
  if (!is_parametric(spec.kind)) {
    auto k = spec.kind == SpecKind::kleene_alg ? make_kleene_algebra() : make_kleene_lattice();
    return {k, power(k, 2)};
  }
  bool const mon = is_monoid(spec.kind);
  if (is_even(spec.kind)) return {chain(mon, 4), product(chain(mon, 4), chain(mon, 3))};
  return {power(chain(mon, 3), 2), chain(mon, 5), product(chain(mon, 3), chain(mon, 5))};
}

Corpus subalgebra_corpus(DualitySpec const& spec, std::vector<FiniteAlgebra> const& parents) {
  auto const ego = build_alter_ego(spec);
  auto const& gens = ego.sorts.algebras();
  Corpus c;
  for (auto const& p : parents)
    for (auto const& u : all_subuniverses(p)) {
      auto name = universe_name(p, u);
      auto sub = induced_subalgebra(p, u, name);
      if (in_quasivariety(sub, gens)) {
        c.members.push_back({p.id(), u, std::move(sub)});
      } else {
        c.excluded.push_back(std::move(name));
      }
    }
  return c;
}

namespace {

CheckResult duality_check(DualitySpec const& spec, std::vector<FiniteAlgebra> const& parents, bool counit) {
  CheckResult r;
  r.name = (counit ? "counit " : "unit ") + to_string(spec);
  auto const ego = build_alter_ego(spec);
  auto const corpus = subalgebra_corpus(spec, parents);
  for (auto const& item : corpus.members) {
    ++r.items;
    bool const iso = counit ? evaluation_counit(item.algebra, ego).iso : evaluation_unit(item.algebra, ego).iso;
    if (!iso) fail(r, item.algebra.id() + " is not an isomorphism");
  }
  if (!corpus.excluded.empty())
    r.notes.push_back(std::to_string(corpus.excluded.size()) + " subalgebras outside the quasivariety skipped");
  finish(r);
  return r;
}

}  // namespace

CheckResult check_unit(DualitySpec const& spec, std::vector<FiniteAlgebra> const& parents) {
  return duality_check(spec, parents, false);
}

CheckResult check_counit(DualitySpec const& spec, std::vector<FiniteAlgebra> const& parents) {
  return duality_check(spec, parents, true);
}

StrongnessSweep check_strongness_sweep(DualitySpec const& spec, std::vector<FiniteAlgebra> const& parents) {
  StrongnessSweep s;
  s.result.name = "strongness " + to_string(spec);
  auto const ego = build_alter_ego(spec);
  auto const& gens = ego.sorts.algebras();
  auto const corpus = subalgebra_corpus(spec, parents);
  for (auto const& p : parents) {
    if (!in_quasivariety(p, gens)) continue;
    for (auto const& item : corpus.members) {
      if (item.parent != p.id() || item.universe.size() == p.size()) continue;
      ++s.embeddings;
      ++s.result.items;
      PartialMap inc(item.algebra.id(), p.id(), item.universe);
      auto const rep = check_strongness(item.algebra, p, inc, ego);
      if (!rep.ok) {
        fail(s.result, "inclusion " + item.algebra.id() + " into " + p.id() + ": dual not surjective" +
                           (rep.dual_image_generates ? " (image generates D(A) under G, H, K)" : ""));
        if (rep.dual_image_generates) ++s.image_generates;
      }
    }
  }
  for (auto const& item : corpus.members)
    for (auto const& theta : congruences(item.algebra)) {
      auto const blocks = theta.block_count();
      if (blocks == item.algebra.size() || blocks == 1) continue;
      auto q = quotient(item.algebra, theta);
      if (!in_quasivariety(q.algebra, gens)) continue;
      ++s.surjections;
      ++s.result.items;
      if (!check_strongness(item.algebra, q.algebra, q.projection, ego).ok)
        fail(s.result, "projection onto " + q.algebra.id());
    }
  s.result.notes.push_back(std::to_string(s.embeddings) + " embeddings, " + std::to_string(s.surjections) +
                           " surjections");
  finish(s.result);
  return s;
}

CheckResult check_tables(DualitySpec const& spec) {
  CheckResult r;
  r.name = "tables " + to_string(spec);
  auto const rep = verify_table(spec);
  for (auto const& c : rep.cells) {
    ++r.items;
    if (!c.ok) {
      std::string d = "(" + c.row + ", " + c.col + ") expected [" + describe(c.expected) + "], found " +
                      std::to_string(c.found.size()) + " maximal";
      if (!c.detail.empty()) d += ": " + c.detail;
      fail(r, d);
    }
  }
  finish(r);
  return r;
}

CheckResult check_separation(DualitySpec const& spec) {
  CheckResult r;
  r.name = "separation " + to_string(spec);
  auto const rep = verify_separation(spec);
  r.items = rep.pairs;
  for (std::size_t i = 0; i < rep.failures; ++i) fail(r, "unseparated pair");
  r.notes.push_back("longest witness " + std::to_string(rep.longest));
  finish(r);
  return r;
}

CheckResult check_generators(int m) {
  CheckResult r;
  r.name = "generators m=" + std::to_string(m);
  auto const s = verify_generating_sets(m);
  for (auto const* g : {&s.z_odd, &s.z_even, &s.w_odd, &s.w_even}) {
    ++r.items;
    if (!g->equal)
      fail(r, g->algebra + ": closure " + std::to_string(g->closure_size) + " vs " + std::to_string(g->brute_size));
  }
  ++r.items;
  if (m >= 3 && !s.kappa_bijective)
    fail(r, "kappa: " + std::to_string(s.pe_w_even) + " vs " + std::to_string(s.pe_z_smaller));
  ++r.items;
  if (!s.end_w_even_trivial) fail(r, "End(W_2m) is not trivial");
  r.notes.push_back("|PE^t(W_2m)| = " + std::to_string(s.pe_w_even) + ", |PE(Z_2(m-1))| with empty map = " +
                    std::to_string(s.pe_z_smaller));
  if (s.f_top_needed) r.notes.push_back("f_{m-1} is needed");
  finish(r);
  return r;
}

CheckResult check_entailment(DualitySpec const& spec) {
  CheckResult r;
  r.name = "entailment " + to_string(spec);
  auto const e = verify_entailment(spec);
  for (auto const& p : e.pairs) {
    ++r.items;
    if (!p.equal)
      fail(r, p.src + " -> " + p.dst + ": " + std::to_string(p.closure_size) + " of " + std::to_string(p.brute_size));
  }
  if (spec.kind == SpecKind::even_alg) {
    ++r.items;
    if (!e.f0_is_u_after_v) fail(r, "f_0 differs from u o v");
    ++r.items;
    if (!e.f0_in_closure_without_f0) fail(r, "f_0 not entailed by the other maps");
    r.notes.push_back("v o h_m o ... o h_2 o u against f_0: " + e.word_v_h_u);
  }
  if (spec.kind == SpecKind::even_mon) {
    ++r.items;
    if (!e.monoid_homs_into_t_empty) fail(r, "a monoid partial hom reaches T");
  }
  finish(r);
  return r;
}

CheckResult check_variety_facts(int m, bool monoid) {
  CheckResult r;
  r.name = std::string("variety ") + (monoid ? "W" : "Z") + " m=" + std::to_string(m);
  auto const odd = chain(monoid, 2 * m - 1);
  auto const even = chain(monoid, 2 * m);
  ++r.items;
  if (!homs(odd, even).empty()) fail(r, "homs(" + odd.id() + ", " + even.id() + ") nonempty");
  ++r.items;
  if (in_quasivariety(odd, {even})) fail(r, odd.id() + " lies in ISP(" + even.id() + ")");
  ++r.items;
  auto theta = principal_congruence(even, even.at(-1), even.at(1));
  auto q = quotient(even, theta);
  if (q.algebra.size() != odd.size() || !isomorphic(q.algebra, odd)) fail(r, "quotient is not " + odd.id());
  finish(r);
  return r;
}

CheckResult check_kleene_translation(int s_max) {
  CheckResult r;
  r.name = "kleene translation";
  auto const ego = build_alter_ego({SpecKind::kleene_alg, 2});
  for (int s = 0; s <= s_max; ++s) {
    ++r.items;
    auto q = quotient_to_kleene_space(structure_power(ego.structure(), s));
    auto o = cornish_fowler_oracle(free_algebra_oracle(ego.sorts.algebras(), s));
    std::string why;
    if (!q.valid(&why)) fail(r, "s=" + std::to_string(s) + " quotient: " + why);
    if (!o.valid(&why)) fail(r, "s=" + std::to_string(s) + " oracle: " + why);
    if (!isomorphic(q, o)) fail(r, "s=" + std::to_string(s) + ": spaces differ");
    r.notes.push_back("s=" + std::to_string(s) + ": " + std::to_string(q.size()) + " points");
  }
  finish(r);
  return r;
}

CheckResult check_free(DualitySpec const& spec, int s, std::size_t guard) {
  CheckResult r;
  r.name = "free " + to_string(spec) + " s=" + std::to_string(s);
  auto const ego = build_alter_ego(spec);
  auto f = free_algebra(ego, s, guard);
  auto o = free_algebra_oracle(ego.sorts.algebras(), s, guard);
  ++r.items;
  if (!isomorphic(f, o)) fail(r, "E(M^s) differs from the projection-generated algebra");
  r.notes.push_back("size " + std::to_string(f.size()));
  finish(r);
  return r;
}

}  // namespace natdual
