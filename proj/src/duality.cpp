#include "natdual/duality.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "natdual/hom.hpp"

namespace natdual {

CarrierMap make_carrier_map(std::string const& name, FiniteAlgebra const& sort) {
  CarrierMap w{name, sort.id(), {}};
  for (int l : sort.labels()) {
    if (name == "delta-" || name == "beta-") {
      w.values.push_back(l >= 0);
    } else if (name == "delta+" || name == "beta+") {
      w.values.push_back(l >= 1);
    } else if (name == "beta") {
      w.values.push_back(l > 0);
    } else {
      throw Error(ErrorKind::invalid_parameter, "unknown carrier map " + name);
    }
  }
  return w;
}

bool is_lattice_hom_to_two(CarrierMap const& w, FiniteAlgebra const& sort) {
  auto const n = static_cast<Elem>(sort.size());
  auto at = [&](Elem x) { return w.values[static_cast<std::size_t>(x)]; };
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (at(sort.meet(a, b)) != std::min(at(a), at(b))) return false;
      if (at(sort.join(a, b)) != std::max(at(a), at(b))) return false;
    }
  return true;
}

std::vector<std::string> AlterEgo::sort_names() const {
  std::vector<std::string> out;
  for (auto const& a : sorts.algebras()) out.push_back(a.id());
  return out;
}

CarrierMap const& AlterEgo::carrier(std::string const& sort) const {
  for (auto const& c : carriers)
    if (c.sort == sort) return c;
  throw Error(ErrorKind::type_mismatch, "no carrier map on " + sort);
}

MultisortedStructure AlterEgo::structure() const {
  MultisortedStructure m;
  m.id = "ego(" + to_string(spec) + ")";
  auto const names = sort_names();
  m.sorts = names;
  for (auto const& a : sorts.algebras()) {
    m.sizes.push_back(a.size());
    std::vector<std::string> pts;
    for (Elem e = 0; e < static_cast<Elem>(a.size()); ++e) pts.push_back(a.name(e));
    m.point_names.push_back(std::move(pts));
  }
  auto idx = [&](std::string const& s) { return m.sort_index(s); };
  for (auto const& g : gops) m.gops.push_back({g.name, idx(g.map.src()), idx(g.map.dst()), g.map.values()});
  for (auto const& h : hops) m.hops.push_back({h.name, idx(h.map.src()), idx(h.map.dst()), h.map.values()});
  for (auto const& [sort, point] : consts) m.consts.push_back({"c_" + sort, idx(sort), point});
  for (auto const& r : rels) m.rels.push_back({r.name, idx(r.rel.src()), idx(r.rel.dst()), r.rel.pairs()});
  return m;
}

bool AlterEgo::well_formed(std::string* why) const {
  auto fail = [&](std::string const& msg) {
    if (why) *why = msg;
    return false;
  };
  for (auto const& c : carriers)
    if (!is_lattice_hom_to_two(c, sort(c.sort))) return fail(c.name + " is not a lattice homomorphism");
  for (auto const& g : gops) {
    if (!g.map.is_total()) return fail(g.name + " is not total");
    if (!is_homomorphism(sort(g.map.src()), sort(g.map.dst()), g.map)) return fail(g.name + " is not a homomorphism");
  }
  for (auto const& h : hops)
    if (!is_homomorphism(sort(h.map.src()), sort(h.map.dst()), h.map)) return fail(h.name + " is not a partial homomorphism");
  for (auto const& [s, p] : consts) {
    Elem const e = p;
    if (subuniverse_closure(sort(s), std::span<Elem const>(&e, 1)).size() != 1)
      return fail("constant in " + s + " is not a one-element subalgebra");
  }
  for (auto const& r : rels) {
    auto const& a = sort(r.rel.src());
    auto const& b = sort(r.rel.dst());
    auto prod = product(a, b);
    std::vector<Elem> members;
    for (auto [x, y] : r.rel.pairs()) members.push_back(static_cast<Elem>(static_cast<std::size_t>(x) * b.size() + static_cast<std::size_t>(y)));
    if (!is_subuniverse(prod, members)) return fail(r.name + " is not a subalgebra");
  }
  return true;
}

namespace {

struct BoundKey {
  SpecKind kind;
  int m;
  auto operator<=>(BoundKey const&) const = default;
};

bool first_sort_endos_generated(AlterEgo const& ego) {
  std::vector<PartialMap> gens;
  for (auto const& g : ego.gops) gens.push_back(g.map);
  for (auto const& h : ego.hops) gens.push_back(h.map);
  auto closed = closure_under_composition(ego.sorts, gens, is_even(ego.spec.kind));
  auto const& first = ego.sorts.algebras().front();
  std::vector<PartialMap> endos;
  for (auto& p : closed)
    if (p.src() == first.id() && p.dst() == first.id()) endos.push_back(p);
  return endos == partial_homs(first, first);
}

}  // namespace

int resolved_f_bound(DualitySpec const& spec) {
  validate(spec);
  if (!is_parametric(spec.kind)) return -1;
  static std::mutex mu;
  static std::map<BoundKey, int> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({spec.kind, spec.m}); it != cache.end()) return it->second;
  }
  int bound = spec.m - 1;
  for (int b : {spec.m - 2, spec.m - 1}) {
    EgoOptions opts;
    opts.f_bound = b;
    if (first_sort_endos_generated(build_alter_ego(spec, opts))) {
      bound = b;
      break;
    }
  }
  std::lock_guard lock(mu);
  cache[{spec.kind, spec.m}] = bound;
  return bound;
}

AlterEgo build_alter_ego(DualitySpec const& spec, EgoOptions const& opts) {
  validate(spec);
  AlterEgo e;
  e.spec = spec;
  auto const names = sort_names(spec);
  bool const kleene = !is_parametric(spec.kind);
  for (std::size_t i = 0; i < names.size(); ++i) {
    e.sorts.add(sort_algebra(spec, names[i]));
    std::string w = i == 0 ? "delta-" : i + 1 == names.size() ? "delta+" : "beta";
    if (kleene) w = i == 0 ? "beta-" : "beta+";
    e.carriers.push_back(make_carrier_map(w, e.sorts.get(names[i])));
  }
  auto gen = [&](std::string const& name) { return NamedMap{name, named_generator(name, spec)}; };
  if (kleene) {
    if (!opts.drop_link_mp) e.gops.push_back(gen("id_-+"));
    if (!opts.drop_link_pm) e.gops.push_back(gen("id_+-"));
    auto const& m3 = e.sorts.get("3-");
    Elem const zero = m3.at(-1), a = m3.at(0), one = m3.at(1);
    std::vector<std::pair<Elem, Elem>> below, above, cross, wide;
    for (Elem x = 0; x < 3; ++x)
      for (Elem y = 0; y < 3; ++y) {
        // x below y: equal, or y = a
        if (x == y || y == a) below.emplace_back(x, y);
        if (x == y || x == a) above.emplace_back(x, y);
        if (!((x == zero && y == one) || (x == one && y == zero))) wide.emplace_back(x, y);
      }
    cross = {{zero, zero}, {one, one}};
    e.rels.push_back({"below", Relation("3-", "3-", below)});
    e.rels.push_back({"above", Relation("3+", "3+", above)});
    e.rels.push_back({"cross-+", Relation("3-", "3+", cross)});
    e.rels.push_back({"cross+-", Relation("3+", "3-", wide)});
    if (spec.kind == SpecKind::kleene_lat) {
      e.consts.emplace_back("3-", a);
      e.consts.emplace_back("3+", a);
    }
    return e;
  }
  e.gops.push_back(gen("g"));
  if (is_even(spec.kind)) e.gops.push_back(gen("u"));
  if (!opts.drop_link_mp) e.gops.push_back(gen("id_-+"));
  if (!opts.drop_link_pm) e.gops.push_back(gen("id_+-"));
  int const bound = opts.f_bound >= 0 ? opts.f_bound : resolved_f_bound(spec);
  for (int i = spec.kind == SpecKind::odd_alg ? 0 : 1; i <= bound; ++i) e.hops.push_back(gen("f_" + std::to_string(i)));
  if (spec.kind == SpecKind::even_alg) {
    e.hops.push_back(gen("v"));
    for (int i = 2; i <= spec.m; ++i) e.hops.push_back(gen("h_" + std::to_string(i)));
    e.hops.push_back(gen("j"));
  } else if (spec.kind == SpecKind::even_mon) {
    for (int i = 2; i <= spec.m - 1; ++i) e.hops.push_back(gen("bar(h_" + std::to_string(i) + ")"));
    e.hops.push_back(gen("bar(j)"));
  }
  e.consts.emplace_back(names.front(), e.sorts.get(names.front()).at(0));
  return e;
}

// ---------------------------------------------------------------------------
// D and E

namespace {

std::string values_name(FiniteAlgebra const& target, PartialMap const& x) {
  std::string s = "[";
  for (std::size_t i = 0; i < x.source_size(); ++i) s += (i ? "," : "") + target.name(x.values()[i]);
  return s + "]";
}

Elem find_point(std::vector<PartialMap> const& list, PartialMap const& p) {
  auto it = std::ranges::lower_bound(list, p);
  if (it == list.end() || !(*it == p)) return kUndefined;
  return static_cast<Elem>(it - list.begin());
}

// Sorted morphisms X -> ego as concatenated tuples.
std::vector<std::vector<Elem>> morphism_tuples(MultisortedStructure const& x, AlterEgo const& ego) {
  std::vector<std::vector<Elem>> out;
  for (auto const& phi : morphisms(x, ego.structure())) {
    std::vector<Elem> t;
    for (auto const& m : phi.maps) t.insert(t.end(), m.begin(), m.end());
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<FiniteAlgebra const*> coordinates(MultisortedStructure const& x, AlterEgo const& ego) {
  std::vector<FiniteAlgebra const*> coords;
  for (std::size_t i = 0; i < x.sorts.size(); ++i)
    for (std::size_t p = 0; p < x.sizes[i]; ++p) coords.push_back(&ego.sort(x.sorts[i]));
  return coords;
}

Signature ego_signature(AlterEgo const& ego) { return ego.sorts.algebras().front().signature(); }

}  // namespace

MultisortedStructure dual_of_algebra(FiniteAlgebra const& a, AlterEgo const& ego,
                                     std::vector<std::vector<PartialMap>>* hom_lists) {
  if (!(a.signature() == ego_signature(ego)))
    throw Error(ErrorKind::signature_mismatch, a.id() + " against " + to_string(ego.spec));
  MultisortedStructure d;
  d.id = "D(" + a.id() + ")";
  std::vector<std::vector<PartialMap>> lists;
  for (auto const& m : ego.sorts.algebras()) {
    d.sorts.push_back(m.id());
    auto hs = homs(a, m);
    d.sizes.push_back(hs.size());
    std::vector<std::string> names;
    for (auto const& h : hs) names.push_back(values_name(m, h));
    d.point_names.push_back(std::move(names));
    lists.push_back(std::move(hs));
  }
  auto lift = [&](NamedMap const& nm, bool total) {
    auto const src = d.sort_index(nm.map.src());
    auto const dst = d.sort_index(nm.map.dst());
    SortOp op{nm.name, src, dst, {}};
    for (auto const& x : lists[src]) {
      auto y = compose(nm.map, x);
      if (!y.is_total()) {
        if (total) throw Error(ErrorKind::ill_defined, nm.name + " composed to a non-total map");
        op.values.push_back(kUndefined);
        continue;
      }
      Elem const at = find_point(lists[dst], y);
      if (at == kUndefined) throw Error(ErrorKind::ill_defined, nm.name + " left the hom set");
      op.values.push_back(at);
    }
    return op;
  };
  for (auto const& g : ego.gops) d.gops.push_back(lift(g, true));
  for (auto const& h : ego.hops) d.hops.push_back(lift(h, false));
  for (auto const& [sort, point] : ego.consts) {
    auto const i = d.sort_index(sort);
    PartialMap c(a.id(), sort, std::vector<Elem>(a.size(), point));
    Elem const at = find_point(lists[i], c);
    if (at == kUndefined) throw Error(ErrorKind::ill_defined, "constant map into " + sort + " is not a hom");
    d.consts.push_back({"c_" + sort, i, at});
  }
  for (auto const& r : ego.rels) {
    auto const src = d.sort_index(r.rel.src());
    auto const dst = d.sort_index(r.rel.dst());
    SortRel lifted{r.name, src, dst, {}};
    for (std::size_t x = 0; x < lists[src].size(); ++x)
      for (std::size_t y = 0; y < lists[dst].size(); ++y) {
        bool ok = true;
        for (std::size_t e = 0; e < a.size() && ok; ++e)
          ok = r.rel.contains(lists[src][x].values()[e], lists[dst][y].values()[e]);
        if (ok) lifted.pairs.emplace_back(static_cast<Elem>(x), static_cast<Elem>(y));
      }
    d.rels.push_back(std::move(lifted));
  }
  if (hom_lists) *hom_lists = std::move(lists);
  return d;
}

FiniteAlgebra dual_of_structure(MultisortedStructure const& x, AlterEgo const& ego, std::string id) {
  if (id.empty()) id = "E(" + x.id + ")";
  return algebra_from_tuples(id, ego_signature(ego), coordinates(x, ego), morphism_tuples(x, ego), false);
}

UnitResult evaluation_unit(FiniteAlgebra const& a, AlterEgo const& ego) {
  std::vector<std::vector<PartialMap>> lists;
  auto const x = dual_of_algebra(a, ego, &lists);
  auto const tuples = morphism_tuples(x, ego);
  UnitResult r;
  try {
    r.ed = algebra_from_tuples("ED(" + a.id() + ")", ego_signature(ego), coordinates(x, ego), tuples, false);
  } catch (Error const&) {
    return r;  // not an algebra of the right kind: certainly no isomorphism
  }
  std::vector<Elem> values(a.size(), kUndefined);
  for (std::size_t e = 0; e < a.size(); ++e) {
    std::vector<Elem> t;
    for (auto const& list : lists)
      for (auto const& h : list) t.push_back(h.values()[e]);
    auto it = std::ranges::lower_bound(tuples, t);
    if (it != tuples.end() && *it == t) values[e] = static_cast<Elem>(it - tuples.begin());
  }
  r.map = PartialMap(a.id(), r.ed.id(), values);
  r.iso = r.map.is_total() && r.map.is_injective() && a.size() == r.ed.size() && is_homomorphism(a, r.ed, r.map);
  return r;
}

CounitResult evaluation_counit(FiniteAlgebra const& a, AlterEgo const& ego) {
  CounitResult r;
  r.x = dual_of_algebra(a, ego);
  auto const tuples = morphism_tuples(r.x, ego);
  FiniteAlgebra b;
  try {
    b = algebra_from_tuples("E(" + r.x.id + ")", ego_signature(ego), coordinates(r.x, ego), tuples, false);
  } catch (Error const&) {
    return r;
  }
  std::vector<std::vector<PartialMap>> lists;
  r.dex = dual_of_algebra(b, ego, &lists);
  r.map = {r.x.id, r.dex.id, {}};
  std::size_t offset = 0;
  bool found = true;
  for (std::size_t i = 0; i < r.x.sorts.size(); ++i) {
    std::vector<Elem> m;
    for (std::size_t p = 0; p < r.x.sizes[i]; ++p) {
      std::vector<Elem> v;
      for (auto const& t : tuples) v.push_back(t[offset + p]);
      Elem const at = find_point(lists[i], PartialMap(b.id(), r.x.sorts[i], v));
      if (at == kUndefined) found = false;
      m.push_back(at == kUndefined ? 0 : at);
    }
    offset += r.x.sizes[i];
    r.map.maps.push_back(std::move(m));
  }
  r.iso = found && is_isomorphism(r.x, r.dex, r.map);
  return r;
}

FiniteAlgebra free_algebra(AlterEgo const& ego, int s, std::size_t guard) {
  if (s < 0) throw Error(ErrorKind::invalid_parameter, "negative power");
  std::size_t points = 0;
  for (auto const& a : ego.sorts.algebras()) {
    std::size_t n = 1;
    for (int i = 0; i < s && n <= guard; ++i) n *= a.size();
    points += n;
  }
  if (points > guard)
    throw Error(ErrorKind::size_guard, "power of " + to_string(ego.spec) + " to " + std::to_string(s) +
                                           " exceeds the guard of " + std::to_string(guard) + " points");
  auto const p = structure_power(ego.structure(), s);
  return dual_of_structure(p, ego, "F_" + std::string(to_string(ego.spec.kind)) + "(" + std::to_string(s) + ")");
}

FiniteAlgebra free_algebra_oracle(std::vector<FiniteAlgebra> const& sort_algebras, int s, std::size_t guard) {
  if (sort_algebras.empty()) throw Error(ErrorKind::invalid_parameter, "no generating algebras");
  if (s < 0) throw Error(ErrorKind::invalid_parameter, "negative number of generators");
  std::size_t width = 0;
  for (auto const& m : sort_algebras) {
    std::size_t n = 1;
    for (int k = 0; k < s && n <= guard; ++k) n *= m.size();
    width += n;
  }
  if (width > guard) throw Error(ErrorKind::size_guard, "oracle product too wide");
  std::vector<FiniteAlgebra const*> coords;
  std::vector<std::vector<Elem>> seeds(static_cast<std::size_t>(s));
  for (auto const& m : sort_algebras) {
    // every assignment of the s generators into m gives one coordinate
    std::vector<std::vector<Elem>> assignments{{}};
    for (int k = 0; k < s; ++k) {
      std::vector<std::vector<Elem>> next;
      for (auto const& t : assignments)
        for (Elem v = 0; v < static_cast<Elem>(m.size()); ++v) {
          auto u = t;
          u.push_back(v);
          next.push_back(std::move(u));
        }
      assignments = std::move(next);
    }
    for (auto const& t : assignments) {
      coords.push_back(&m);
      for (int k = 0; k < s; ++k) seeds[static_cast<std::size_t>(k)].push_back(t[static_cast<std::size_t>(k)]);
    }
  }
  auto const& sig = sort_algebras.front().signature();
  auto tuples = close_tuples(sig, coords, seeds);
  return algebra_from_tuples("Fo(" + std::to_string(s) + ")", sig, coords, tuples, false);
}

// ---------------------------------------------------------------------------
// Strongness

MultisortedMorphism dual_morphism(FiniteAlgebra const& a, FiniteAlgebra const& b, PartialMap const& f,
                                  AlterEgo const& ego) {
  if (!f.is_total() || !is_homomorphism(a, b, f)) throw Error(ErrorKind::not_a_hom, "D needs a homomorphism");
  std::vector<std::vector<PartialMap>> la, lb;
  auto const da = dual_of_algebra(a, ego, &la);
  auto const db = dual_of_algebra(b, ego, &lb);
  MultisortedMorphism phi{db.id, da.id, {}};
  for (std::size_t i = 0; i < lb.size(); ++i) {
    std::vector<Elem> m;
    for (auto const& x : lb[i]) {
      Elem const at = find_point(la[i], compose(x, f.retyped(a.id(), b.id())));
      if (at == kUndefined) throw Error(ErrorKind::ill_defined, "x o f is not a hom");
      m.push_back(at);
    }
    phi.maps.push_back(std::move(m));
  }
  return phi;
}

StrongnessReport check_strongness(FiniteAlgebra const& a, FiniteAlgebra const& b, PartialMap const& f,
                                  AlterEgo const& ego) {
  StrongnessReport r;
  auto const phi = dual_morphism(a, b, f, ego);
  auto const da = dual_of_algebra(a, ego);
  auto const db = dual_of_algebra(b, ego);
  r.injective = f.is_injective();
  r.surjective = f.image().size() == b.size();
  r.dual_is_morphism = is_morphism(db, da, phi);
  r.dual_surjective = is_surjective(da, phi);
  r.dual_embedding = is_embedding(db, da, phi);

  std::vector<std::vector<char>> in(da.sizes.size());
  for (std::size_t i = 0; i < da.sizes.size(); ++i) {
    in[i].assign(da.sizes[i], 0);
    for (Elem p : phi.maps[i]) in[i][static_cast<std::size_t>(p)] = 1;
  }
  for (auto const& c : da.consts) in[c.sort][static_cast<std::size_t>(c.point)] = 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (auto const* ops : {&da.gops, &da.hops})
      for (auto const& op : *ops)
        for (std::size_t p = 0; p < op.values.size(); ++p) {
          Elem const q = op.values[p];
          if (!in[op.src][p] || q == kUndefined || in[op.dst][static_cast<std::size_t>(q)]) continue;
          in[op.dst][static_cast<std::size_t>(q)] = 1;
          grew = true;
        }
  }
  r.dual_image_generates = std::all_of(in.begin(), in.end(), [](auto const& v) {
    return std::all_of(v.begin(), v.end(), [](char c) { return c != 0; });
  });
  r.ok = r.dual_is_morphism && (!r.injective || r.dual_surjective) && (!r.surjective || r.dual_embedding);
  return r;
}

}  // namespace natdual
