#include "natdual/piggyback.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "natdual/hom.hpp"

namespace natdual {

Relation pig_sublattice(CarrierMap const& w, CarrierMap const& w2) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (std::size_t a = 0; a < w.values.size(); ++a)
    for (std::size_t b = 0; b < w2.values.size(); ++b)
      if (w.values[a] <= w2.values[b]) pairs.emplace_back(static_cast<Elem>(a), static_cast<Elem>(b));
  return {w.sort, w2.sort, std::move(pairs)};
}

std::vector<Relation> subalgebras_within(FiniteAlgebra const& a, FiniteAlgebra const& b, Relation const& r) {
  if (!(a.signature() == b.signature()))
    throw Error(ErrorKind::signature_mismatch, a.id() + " vs " + b.id());
  auto const nb = static_cast<Elem>(b.size());
  std::vector<std::vector<Elem>> tuples;
  for (Elem x = 0; x < static_cast<Elem>(a.size()); ++x)
    for (Elem y = 0; y < nb; ++y) tuples.push_back({x, y});
  auto const prod = algebra_from_tuples(a.id() + "x" + b.id(), a.signature(), {&a, &b}, tuples, false);

  std::vector<char> allowed(prod.size(), 0);
  std::vector<Elem> allowed_list;
  for (auto [x, y] : r.pairs()) {
    allowed[static_cast<std::size_t>(x * nb + y)] = 1;
    allowed_list.push_back(x * nb + y);
  }
  auto inside = [&](std::vector<Elem> const& s) {
    return std::all_of(s.begin(), s.end(), [&](Elem e) { return allowed[static_cast<std::size_t>(e)] != 0; });
  };

  std::set<std::vector<Elem>> found;
  std::deque<std::vector<Elem>> queue;
  auto offer = [&](std::vector<Elem> s) {
    if (inside(s) && found.insert(s).second) queue.push_back(std::move(s));
  };
  if (prod.signature().has_constants()) offer(subuniverse_closure(prod, {}));
  for (Elem e : allowed_list) {
    Elem const seed[] = {e};
    offer(subuniverse_closure(prod, seed));
  }
  while (!queue.empty()) {
    auto s = std::move(queue.front());
    queue.pop_front();
    for (Elem e : allowed_list) {
      if (std::binary_search(s.begin(), s.end(), e)) continue;
      auto seed = s;
      seed.push_back(e);
      offer(subuniverse_closure(prod, seed));
    }
  }

  std::vector<Relation> out;
  for (auto const& s : found) {
    std::vector<std::pair<Elem, Elem>> pairs;
    for (Elem e : s) pairs.emplace_back(e / nb, e % nb);
    out.emplace_back(a.id(), b.id(), std::move(pairs));
  }
  std::sort(out.begin(), out.end(), [](Relation const& l, Relation const& r2) {
    return l.size() != r2.size() ? l.size() < r2.size() : l < r2;
  });
  return out;
}

std::vector<Relation> maximal_subalgebras_in(FiniteAlgebra const& a, FiniteAlgebra const& b, Relation const& r) {
  auto const all = subalgebras_within(a, b, r);
  std::vector<Relation> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < all.size() && maximal; ++j)
      if (all[j].size() > all[i].size() && all[i].subset_of(all[j])) maximal = false;
    if (maximal) out.push_back(all[i]);
  }
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::graph_of: return "graph";
    case Verdict::converse_graph_of: return "converse-graph";
    case Verdict::other: return "other";
  }
  return "other";
}

namespace {

std::optional<PartialMap> functional_part(Relation const& r, std::size_t n_src, bool flip) {
  std::vector<Elem> values(n_src, kUndefined);
  for (auto [x, y] : r.pairs()) {
    if (flip) std::swap(x, y);
    auto& slot = values[static_cast<std::size_t>(x)];
    if (slot != kUndefined && slot != y) return std::nullopt;
    slot = y;
  }
  if (flip) return PartialMap(r.dst(), r.src(), std::move(values));
  return PartialMap(r.src(), r.dst(), std::move(values));
}

std::optional<Elem> zero_of(FiniteAlgebra const& a) { return a.index_of(0); }

bool zero_in_dom(PartialMap const& h, FiniteAlgebra const& src) {
  auto z = zero_of(src);
  return z && h.defined(*z);
}

bool zero_in_img(PartialMap const& h, FiniteAlgebra const& dst) {
  auto z = zero_of(dst);
  if (!z) return false;
  auto img = h.image();
  return std::find(img.begin(), img.end(), *z) != img.end();
}

}  // namespace

PigClassification classify_pig_relation(Relation const& r, FiniteAlgebra const& a, FiniteAlgebra const& b) {
  PigClassification c;
  c.relation = r;
  c.forward = functional_part(r, a.size(), false);
  c.backward = functional_part(r, b.size(), true);
  if (c.forward) {
    c.verdict = Verdict::graph_of;
    c.side_conditions.push_back(zero_in_dom(*c.forward, a) ? "0 in dom h" : "0 not in dom h");
    c.side_conditions.push_back(zero_in_img(*c.forward, b) ? "0 in img h" : "0 not in img h");
  }
  if (c.backward) {
    if (!c.forward) c.verdict = Verdict::converse_graph_of;
    c.side_conditions.push_back(zero_in_dom(*c.backward, b) ? "0 in dom k" : "0 not in dom k");
    c.side_conditions.push_back(zero_in_img(*c.backward, a) ? "0 in img k" : "0 not in img k");
  }
  return c;
}

std::string describe(CellSpec const& c) {
  std::string s;
  switch (c.form) {
    case CellForm::graph: s = "graph h"; break;
    case CellForm::converse: s = "graph k~"; break;
    case CellForm::graph_or_converse: s = "graph h or graph k~"; break;
    case CellForm::empty: return "---";
  }
  if (c.zero_not_in_dom) s += c.form == CellForm::converse ? ", 0 not in dom k" : ", 0 not in dom h";
  if (c.zero_not_in_img) s += ", 0 not in img h";
  return s;
}

CellSpec expected_cell(DualitySpec const& spec, std::string const& row, std::string const& col) {
  validate(spec);
  if (!is_parametric(spec.kind)) throw Error(ErrorKind::invalid_parameter, "no table for " + to_string(spec));
  auto const names = sort_names(spec);
  auto pos = [&](std::string const& s) {
    auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) throw Error(ErrorKind::type_mismatch, "unknown sort " + s);
    return it - names.begin();
  };
  auto const last = static_cast<long>(names.size()) - 1;
  long const i = pos(row);
  long const j = pos(col);
  bool const minus_row = i == 0, plus_row = i == last, mid_row = !minus_row && !plus_row;
  bool const minus_col = j == 0, plus_col = j == last, mid_col = !minus_col && !plus_col;
  using F = CellForm;

  if (!is_monoid(spec.kind)) {
    if (plus_row && minus_col) return {F::graph_or_converse};
    if (plus_row && plus_col) return {F::converse};
    if (plus_row && mid_col) return {F::converse, true, false};
    if (minus_row && plus_col) return {F::graph, true, true};
    if (mid_row && plus_col) return {F::graph, false, true};
    return {F::graph};
  }
  if (plus_row && minus_col) return {F::graph_or_converse};
  if (plus_row && plus_col) return {F::converse};
  if (plus_row && mid_col) return {F::empty};
  if (minus_row && !minus_col) return {F::empty};
  if (mid_row && plus_col) return {F::empty};
  return {F::graph};
}

namespace {

bool matches(CellSpec const& want, PigClassification const& c, FiniteAlgebra const& a, FiniteAlgebra const& b,
             std::string& why) {
  auto graph_ok = [&] {
    if (!c.forward) return false;
    if (want.zero_not_in_dom && zero_in_dom(*c.forward, a)) return false;
    if (want.zero_not_in_img && zero_in_img(*c.forward, b)) return false;
    return true;
  };
  auto converse_ok = [&] {
    if (!c.backward) return false;
    if (want.zero_not_in_dom && zero_in_dom(*c.backward, b)) return false;
    return true;
  };
  bool ok = false;
  switch (want.form) {
    case CellForm::graph: ok = graph_ok(); break;
    case CellForm::converse: ok = converse_ok(); break;
    case CellForm::graph_or_converse: ok = graph_ok() || converse_ok(); break;
    case CellForm::empty: ok = false; break;
  }
  if (!ok) {
    std::ostringstream os;
    os << "maximal subalgebra of size " << c.relation.size() << " is " << to_string(c.verdict);
    for (auto const& s : c.side_conditions) os << "; " << s;
    why = os.str();
  }
  return ok;
}

}  // namespace

TableReport verify_table(DualitySpec const& spec) {
  TableReport rep;
  rep.spec = spec;
  auto const ego = build_alter_ego(spec);
  rep.ok = true;
  for (auto const& row : ego.sort_names())
    for (auto const& col : ego.sort_names()) {
      CellResult cell;
      cell.row = row;
      cell.col = col;
      cell.expected = expected_cell(spec, row, col);
      auto const& a = ego.sort(row);
      auto const& b = ego.sort(col);
      auto const r = pig_sublattice(ego.carrier(row), ego.carrier(col));
      cell.ok = true;
      for (auto const& s : maximal_subalgebras_in(a, b, r)) {
        cell.found.push_back(classify_pig_relation(s, a, b));
        std::string why;
        if (cell.ok && !matches(cell.expected, cell.found.back(), a, b, why)) {
          cell.ok = false;
          cell.detail = why;
        }
        if (cell.found.back().verdict == Verdict::other) cell.ok = false;
      }
      rep.ok = rep.ok && cell.ok;
      rep.cells.push_back(std::move(cell));
    }
  return rep;
}

std::string table_summary(TableReport const& r) {
  std::ostringstream os;
  os << to_string(r.spec) << (r.ok ? ": all cells match" : ": mismatch") << '\n';
  for (auto const& c : r.cells) {
    os << "  (" << c.row << ", " << c.col << ") expect [" << describe(c.expected) << "] found " << c.found.size()
       << " maximal" << (c.ok ? "" : "  MISMATCH: " + c.detail) << '\n';
  }
  return os.str();
}

Witness separation_witness(DualitySpec const& spec, std::string const& sort, Elem a, Elem b) {
  auto const ego = build_alter_ego(spec);
  std::deque<std::pair<PartialMap, std::vector<std::string>>> queue;
  std::set<PartialMap> seen;
  auto start = identity_map(ego.sort(sort));
  seen.insert(start);
  queue.emplace_back(std::move(start), std::vector<std::string>{});
  while (!queue.empty()) {
    auto [z, word] = std::move(queue.front());
    queue.pop_front();
    if (z.defined(a) && z.defined(b)) {
      auto const& w = ego.carrier(z.dst());
      if (w.values[static_cast<std::size_t>(z(a))] != w.values[static_cast<std::size_t>(z(b))])
        return {true, z, word};
    }
    for (auto const& g : ego.gops) {
      if (g.map.src() != z.dst()) continue;
      auto next = compose(g.map, z);
      if (!seen.insert(next).second) continue;
      auto w2 = word;
      w2.push_back(g.name);
      queue.emplace_back(std::move(next), std::move(w2));
    }
  }
  return {};
}

SeparationReport verify_separation(DualitySpec const& spec) {
  SeparationReport rep;
  rep.spec = spec;
  auto const ego = build_alter_ego(spec);
  for (auto const& s : ego.sort_names()) {
    auto const n = static_cast<Elem>(ego.sort(s).size());
    for (Elem a = 0; a < n; ++a)
      for (Elem b = a + 1; b < n; ++b) {
        ++rep.pairs;
        auto w = separation_witness(spec, s, a, b);
        if (!w.found) ++rep.failures;
        rep.longest = std::max(rep.longest, w.word.size());
      }
  }
  rep.ok = rep.failures == 0;
  return rep;
}

GeneratingReport verify_generating_set(FiniteAlgebra const& a, std::vector<PartialMap> const& gens) {
  GeneratingReport rep;
  rep.algebra = a.id();
  auto closed = closure_under_composition(AlgebraFamily({a}), gens, false);
  auto brute = partial_homs(a, a);
  std::sort(closed.begin(), closed.end());
  std::sort(brute.begin(), brute.end());
  rep.closure_size = closed.size();
  rep.brute_size = brute.size();
  std::set_difference(brute.begin(), brute.end(), closed.begin(), closed.end(), std::back_inserter(rep.missing));
  std::set_difference(closed.begin(), closed.end(), brute.begin(), brute.end(), std::back_inserter(rep.extra));
  rep.equal = rep.missing.empty() && rep.extra.empty();
  return rep;
}

namespace {

std::vector<PartialMap> odd_gens(FiniteAlgebra const& a, int first, int last) {
  std::vector<PartialMap> g{gen_g(a)};
  for (int i = first; i <= last; ++i) g.push_back(gen_f(a, i));
  return g;
}

std::vector<PartialMap> even_gens(FiniteAlgebra const& a, int last) {
  std::vector<PartialMap> g{gen_j(a)};
  for (int i = 2; i <= last; ++i) g.push_back(gen_h(a, i));
  return g;
}

}  // namespace

GeneratorSweep verify_generating_sets(int m) {
  validate({SpecKind::odd_alg, m});
  GeneratorSweep s;
  s.m = m;
  auto const zo = make_sugihara_algebra(2 * m - 1);
  auto const ze = make_sugihara_algebra(2 * m);
  auto const wo = make_sugihara_monoid(2 * m - 1);
  auto const we = make_sugihara_monoid(2 * m);
  auto const zs = make_sugihara_algebra(2 * (m - 1));

  s.z_odd = verify_generating_set(zo, odd_gens(zo, 0, m - 1));
  s.z_even = verify_generating_set(ze, even_gens(ze, m));
  s.w_odd = verify_generating_set(wo, odd_gens(wo, 1, m - 1));
  std::vector<PartialMap> bars{kappa_lift(gen_j(zs), zs, we)};
  for (int i = 2; i <= m - 1; ++i) bars.push_back(kappa_lift(gen_h(zs, i), zs, we));
  s.w_even = verify_generating_set(we, bars);

  s.f_top_needed = !verify_generating_set(zo, odd_gens(zo, 0, m - 2)).equal;
  s.h_top_needed = m == 2 || !verify_generating_set(ze, even_gens(ze, m - 1)).equal;

  auto domain = partial_homs(zs, zs);
  domain.push_back(PartialMap(zs.id(), zs.id(), std::vector<Elem>(zs.size(), kUndefined)));
  std::set<PartialMap> lifts;
  for (auto const& e : domain) lifts.insert(kappa_lift(e, zs, we));
  auto const pe_we = partial_homs(we, we);
  s.pe_w_even = pe_we.size();
  s.pe_z_smaller = domain.size();
  s.kappa_bijective = lifts.size() == domain.size() && std::set<PartialMap>(pe_we.begin(), pe_we.end()) == lifts;

  auto const ends = homs(we, we);
  s.end_w_even_trivial = ends.size() == 1 && ends.front() == identity_map(we);

  s.ok = s.z_odd.equal && s.z_even.equal && s.w_odd.equal && s.w_even.equal && s.kappa_bijective &&
         s.end_w_even_trivial;
  return s;
}

namespace {

// Applies maps left to right; reports a type clash instead of throwing.
std::optional<PartialMap> apply_word(std::vector<PartialMap> const& word) {
  PartialMap acc = word.front();
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (word[i].src() != acc.dst()) return std::nullopt;
    acc = compose(word[i], acc);
  }
  return acc;
}

}  // namespace

EntailmentReport verify_entailment(DualitySpec const& spec) {
  validate(spec);
  if (!is_parametric(spec.kind)) throw Error(ErrorKind::invalid_parameter, "no entailment check for " + to_string(spec));
  EntailmentReport rep;
  rep.spec = spec;
  rep.restriction_used = is_even(spec.kind);
  auto const ego = build_alter_ego(spec);
  std::vector<PartialMap> gens;
  for (auto const& g : ego.gops) gens.push_back(g.map);
  for (auto const& h : ego.hops) gens.push_back(h.map);
  auto closed = closure_under_composition(ego.sorts, gens, rep.restriction_used);
  std::set<PartialMap> closed_set(closed.begin(), closed.end());

  rep.ok = true;
  for (auto const& src : ego.sort_names())
    for (auto const& dst : ego.sort_names()) {
      PairEntailment p{src, dst};
      auto brute = partial_homs(ego.sort(src), ego.sort(dst));
      p.brute_size = brute.size();
      p.closure_size = static_cast<std::size_t>(std::count_if(
          closed.begin(), closed.end(), [&](PartialMap const& x) { return x.src() == src && x.dst() == dst; }));
      p.equal = p.closure_size == p.brute_size &&
                std::all_of(brute.begin(), brute.end(), [&](PartialMap const& x) { return closed_set.count(x) > 0; });
      rep.ok = rep.ok && p.equal;
      rep.pairs.push_back(std::move(p));
    }

  if (spec.kind == SpecKind::even_alg) {
    auto const f0 = named_generator("f_0", spec);
    auto const u = named_generator("u", spec);
    auto const v = named_generator("v", spec);
    rep.f0_is_u_after_v = compose(u, v) == f0;

    std::vector<PartialMap> without;
    for (auto const& g : gens)
      if (!(g == f0)) without.push_back(g);
    auto c2 = closure_under_composition(ego.sorts, without, true);
    rep.f0_in_closure_without_f0 = std::find(c2.begin(), c2.end(), f0) != c2.end();

    // v o h_m o ... o h_2 o u, read both ways: u applied first, or v applied first.
    std::vector<PartialMap> hs;
    for (int i = 2; i <= spec.m; ++i) hs.push_back(named_generator("h_" + std::to_string(i), spec));
    std::vector<PartialMap> u_first{u};
    u_first.insert(u_first.end(), hs.begin(), hs.end());
    u_first.push_back(v);
    std::vector<PartialMap> v_first{v};
    v_first.insert(v_first.end(), hs.rbegin(), hs.rend());
    v_first.push_back(u);
    std::ostringstream os;
    auto report = [&](char const* label, std::optional<PartialMap> const& r) {
      os << label << ": ";
      if (!r) {
        os << "ill-typed";
      } else if (r->is_empty()) {
        os << "empty map";
      } else {
        os << (*r == f0 ? "equals f_0" : "differs from f_0");
      }
    };
    report("u applied first", apply_word(u_first));
    os << "; ";
    report("v applied first", apply_word(v_first));
    rep.word_v_h_u = os.str();
    rep.ok = rep.ok && rep.f0_is_u_after_v && rep.f0_in_closure_without_f0;
  }

  if (spec.kind == SpecKind::even_mon) {
    auto const names = ego.sort_names();
    auto const& t = ego.sort(names[1]);
    rep.monoid_homs_into_t_empty =
        partial_homs(ego.sort(names.front()), t).empty() && partial_homs(ego.sort(names.back()), t).empty();
    rep.ok = rep.ok && rep.monoid_homs_into_t_empty;
  }
  return rep;
}

}  // namespace natdual
