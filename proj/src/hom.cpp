#include "natdual/hom.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace natdual {

// ---------------------------------------------------------------------------
// Subuniverses

namespace {

// Closes `member` (a bitmap over the carrier) in place; `list` holds the
// members in insertion order and is extended alongside.
void close_in_place(FiniteAlgebra const& a, std::vector<char>& member, std::vector<Elem>& list) {
  auto add = [&](Elem v) {
    if (!member[static_cast<std::size_t>(v)]) {
      member[static_cast<std::size_t>(v)] = 1;
      list.push_back(v);
    }
  };
  for (Elem c : a.constants()) add(c);
  std::size_t done = 0;
  while (done < list.size()) {
    Elem const x = list[done];
    for (auto const& op : a.signature().ops()) {
      if (op.arity == 1) {
        add(a.unary(op.symbol, x));
      } else if (op.arity == 2) {
        // pair x with everything up to and including itself
        for (std::size_t j = 0; j <= done; ++j) {
          Elem const y = list[j];
          add(a.binary(op.symbol, x, y));
          add(a.binary(op.symbol, y, x));
        }
      }
    }
    ++done;
  }
}

std::vector<Elem> sorted_members(std::vector<char> const& member) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < member.size(); ++i)
    if (member[i]) out.push_back(static_cast<Elem>(i));
  return out;
}

}  // namespace

std::vector<Elem> subuniverse_closure(FiniteAlgebra const& a, std::span<Elem const> seed) {
  if (seed.empty() && !a.signature().has_constants())
    throw Error(ErrorKind::needs_seed, "empty seed in constant-free signature of " + a.id());
  std::vector<char> member(a.size(), 0);
  std::vector<Elem> list;
  for (Elem s : seed) {
    if (s < 0 || static_cast<std::size_t>(s) >= a.size())
      throw Error(ErrorKind::invalid_parameter, "seed element outside carrier");
    if (!member[static_cast<std::size_t>(s)]) {
      member[static_cast<std::size_t>(s)] = 1;
      list.push_back(s);
    }
  }
  close_in_place(a, member, list);
  return sorted_members(member);
}

bool is_subuniverse(FiniteAlgebra const& a, std::span<Elem const> set) {
  std::vector<char> member(a.size(), 0);
  for (Elem s : set) member[static_cast<std::size_t>(s)] = 1;
  for (Elem c : a.constants())
    if (!member[static_cast<std::size_t>(c)]) return false;
  for (auto const& op : a.signature().ops()) {
    for (Elem x : set) {
      if (op.arity == 1 && !member[static_cast<std::size_t>(a.unary(op.symbol, x))]) return false;
      if (op.arity == 2)
        for (Elem y : set)
          if (!member[static_cast<std::size_t>(a.binary(op.symbol, x, y))]) return false;
    }
  }
  return true;
}

std::vector<std::vector<Elem>> all_subuniverses(FiniteAlgebra const& a) {
  // Every subuniverse is the closure of a smaller one plus one element, so
  // a breadth-first sweep from the closures of singletons reaches them all.
  std::set<std::vector<Elem>> found;
  std::vector<std::vector<Elem>> queue;
  auto push = [&](std::vector<Elem> s) {
    if (!s.empty() && found.insert(s).second) queue.push_back(std::move(s));
  };
  if (a.signature().has_constants()) push(subuniverse_closure(a, {}));
  for (std::size_t x = 0; x < a.size(); ++x) {
    Elem const e = static_cast<Elem>(x);
    push(subuniverse_closure(a, std::span<Elem const>(&e, 1)));
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto const current = queue[i];
    std::vector<char> member(a.size(), 0);
    for (Elem e : current) member[static_cast<std::size_t>(e)] = 1;
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (member[x]) continue;
      auto seed = current;
      seed.push_back(static_cast<Elem>(x));
      push(subuniverse_closure(a, seed));
    }
  }
  std::vector<std::vector<Elem>> out(found.begin(), found.end());
  std::ranges::stable_sort(out, [](auto const& l, auto const& r) {
    return l.size() != r.size() ? l.size() < r.size() : l < r;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms

bool is_homomorphism(FiniteAlgebra const& a, FiniteAlgebra const& b, PartialMap const& h) {
  if (!(a.signature() == b.signature())) return false;
  if (h.source_size() != a.size()) return false;
  auto const dom = h.domain();
  if (dom.empty() && !a.signature().has_constants()) return true;
  if (!is_subuniverse(a, dom)) return false;
  for (Elem x : dom)
    if (h(x) < 0 || static_cast<std::size_t>(h(x)) >= b.size()) return false;
  for (auto const& op : a.signature().ops()) {
    if (op.arity == 0) {
      if (h(a.constant(op.symbol)) != b.constant(op.symbol)) return false;
    } else if (op.arity == 1) {
      for (Elem x : dom)
        if (h(a.unary(op.symbol, x)) != b.unary(op.symbol, h(x))) return false;
    } else {
      for (Elem x : dom)
        for (Elem y : dom)
          if (h(a.binary(op.symbol, x, y)) != b.binary(op.symbol, h(x), h(y))) return false;
    }
  }
  return true;
}

namespace {

struct SearchOptions {
  bool injective = false;
  bool stop_at_first = false;
  std::vector<std::size_t> const* source_invariant = nullptr;
  std::vector<std::size_t> const* target_invariant = nullptr;
};

// Backtracking over the images of a greedy generating set of the
// subuniverse; every other value is forced by propagating the operation
// tables, and a clash prunes the branch.
class HomSearch {
 public:
  HomSearch(FiniteAlgebra const& a, std::span<Elem const> universe, FiniteAlgebra const& b,
            SearchOptions opts)
      : a_(a), b_(b), universe_(universe.begin(), universe.end()), opts_(opts) {
    f_.assign(a.size(), kUndefined);
    used_.assign(b.size(), 0);
    pick_generators();
  }

  std::vector<PartialMap> run() {
    trail_.clear();
    bool ok = true;
    for (auto const& op : a_.signature().ops())
      if (op.arity == 0 && !assign(a_.constant(op.symbol), b_.constant(op.symbol))) ok = false;
    if (ok && propagate()) descend(0);
    return std::move(results_);
  }

 private:
  void pick_generators() {
    std::vector<char> covered(a_.size(), 0);
    std::vector<Elem> list;
    close_in_place(a_, covered, list);
    for (;;) {
      Elem best = kUndefined;
      std::size_t best_size = 0;
      for (Elem x : universe_) {
        if (covered[static_cast<std::size_t>(x)]) continue;
        auto trial = covered;
        auto trial_list = list;
        trial[static_cast<std::size_t>(x)] = 1;
        trial_list.push_back(x);
        close_in_place(a_, trial, trial_list);
        if (trial_list.size() > best_size) {
          best_size = trial_list.size();
          best = x;
        }
      }
      if (best == kUndefined) break;
      covered[static_cast<std::size_t>(best)] = 1;
      list.push_back(best);
      close_in_place(a_, covered, list);
      generators_.push_back(best);
    }
  }

  bool assign(Elem x, Elem y) {
    Elem& slot = f_[static_cast<std::size_t>(x)];
    if (slot != kUndefined) return slot == y;
    if (opts_.injective && used_[static_cast<std::size_t>(y)]) return false;
    slot = y;
    if (opts_.injective) used_[static_cast<std::size_t>(y)] = 1;
    trail_.push_back(x);
    return true;
  }

  // Processes trail entries from `propagated_` onward against all assigned
  // elements.
  bool propagate() {
    while (propagated_ < trail_.size()) {
      Elem const x = trail_[propagated_];
      for (auto const& op : a_.signature().ops()) {
        if (op.arity == 1) {
          if (!assign(a_.unary(op.symbol, x), b_.unary(op.symbol, f_[static_cast<std::size_t>(x)])))
            return false;
        } else if (op.arity == 2) {
          for (std::size_t j = 0; j <= propagated_; ++j) {
            Elem const y = trail_[j];
            Elem const fx = f_[static_cast<std::size_t>(x)], fy = f_[static_cast<std::size_t>(y)];
            if (!assign(a_.binary(op.symbol, x, y), b_.binary(op.symbol, fx, fy))) return false;
            if (!assign(a_.binary(op.symbol, y, x), b_.binary(op.symbol, fy, fx))) return false;
          }
        }
      }
      ++propagated_;
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      Elem const x = trail_.back();
      trail_.pop_back();
      if (opts_.injective) used_[static_cast<std::size_t>(f_[static_cast<std::size_t>(x)])] = 0;
      f_[static_cast<std::size_t>(x)] = kUndefined;
    }
    propagated_ = std::min(propagated_, mark);
  }

  void descend(std::size_t depth) {
    if (opts_.stop_at_first && !results_.empty()) return;
    if (depth == generators_.size()) {
      results_.emplace_back(a_.id(), b_.id(), f_);
      return;
    }
    Elem const x = generators_[depth];
    if (f_[static_cast<std::size_t>(x)] != kUndefined) {
      descend(depth + 1);
      return;
    }
    for (std::size_t y = 0; y < b_.size(); ++y) {
      if (opts_.source_invariant &&
          (*opts_.source_invariant)[static_cast<std::size_t>(x)] != (*opts_.target_invariant)[y])
        continue;
      std::size_t const mark = trail_.size();
      std::size_t const prop_mark = propagated_;
      if (assign(x, static_cast<Elem>(y)) && propagate()) descend(depth + 1);
      undo_to(mark);
      propagated_ = prop_mark;
      if (opts_.stop_at_first && !results_.empty()) return;
    }
  }

  FiniteAlgebra const& a_;
  FiniteAlgebra const& b_;
  std::vector<Elem> universe_;
  SearchOptions opts_;
  std::vector<Elem> generators_;
  std::vector<Elem> f_;
  std::vector<char> used_;
  std::vector<Elem> trail_;
  std::size_t propagated_ = 0;
  std::vector<PartialMap> results_;
};

void require_same_signature(FiniteAlgebra const& a, FiniteAlgebra const& b) {
  if (!(a.signature() == b.signature()))
    throw Error(ErrorKind::signature_mismatch, a.id() + " and " + b.id());
}

}  // namespace

std::vector<PartialMap> homs_from(FiniteAlgebra const& a, std::span<Elem const> universe,
                                  FiniteAlgebra const& b) {
  require_same_signature(a, b);
  if (b.empty()) return {};
  auto out = HomSearch(a, universe, b, {}).run();
  std::ranges::sort(out);
  return out;
}

std::vector<PartialMap> homs(FiniteAlgebra const& a, FiniteAlgebra const& b) {
  std::vector<Elem> all(a.size());
  std::iota(all.begin(), all.end(), 0);
  if (a.empty()) {
    require_same_signature(a, b);
    return {PartialMap(a.id(), b.id(), {})};
  }
  return homs_from(a, all, b);
}

std::vector<PartialMap> partial_homs(FiniteAlgebra const& a, FiniteAlgebra const& b, PartialHomFilter filter) {
  require_same_signature(a, b);
  std::vector<PartialMap> out;
  for (auto const& s : all_subuniverses(a)) {
    if (filter == PartialHomFilter::non_total_only && s.size() == a.size()) continue;
    auto part = homs_from(a, s, b);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::ranges::sort(out);
  return out;
}

PartialMap identity_map(FiniteAlgebra const& a) {
  std::vector<Elem> v(a.size());
  std::iota(v.begin(), v.end(), 0);
  return {a.id(), a.id(), std::move(v)};
}

PartialMap restrict_map(PartialMap const& p, std::span<Elem const> domain) {
  std::vector<Elem> v(p.source_size(), kUndefined);
  for (Elem x : domain) {
    if (!p.defined(x)) throw Error(ErrorKind::invalid_parameter, "restriction outside domain");
    v[static_cast<std::size_t>(x)] = p(x);
  }
  return {p.src(), p.dst(), std::move(v)};
}

PartialMap compose(PartialMap const& p, PartialMap const& q) {
  if (q.dst() != p.src())
    throw Error(ErrorKind::type_mismatch, "cannot compose " + p.src() + "->" + p.dst() + " after " +
                                              q.src() + "->" + q.dst());
  std::vector<Elem> v(q.source_size(), kUndefined);
  for (std::size_t a = 0; a < v.size(); ++a) {
    Elem const b = q.values()[a];
    if (b == kUndefined) continue;
    if (static_cast<std::size_t>(b) >= p.source_size())
      throw Error(ErrorKind::type_mismatch, "image outside source of outer map");
    v[a] = p(b);
  }
  return {q.src(), p.dst(), std::move(v)};
}

std::vector<PartialMap> closure_under_composition(AlgebraFamily const& family,
                                                  std::vector<PartialMap> const& gens,
                                                  bool allow_restriction) {
  std::set<PartialMap> seen;
  std::vector<PartialMap> queue;
  auto push = [&](PartialMap m) {
    if (m.is_empty()) return;
    if (seen.insert(m).second) queue.push_back(std::move(m));
  };
  std::vector<PartialMap> live;
  for (auto const& g : gens) {
    if (!family.contains(g.src()) || !family.contains(g.dst()))
      throw Error(ErrorKind::type_mismatch, "generator " + g.src() + "->" + g.dst() + " outside family");
    if (!g.is_empty()) live.push_back(g);
  }
  for (auto const& a : family.algebras())
    if (!a.empty()) push(identity_map(a));
  for (auto const& g : live) push(g);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto const& g : live) {
      if (g.src() != queue[i].dst()) continue;
      push(compose(g, queue[i]));
    }
  }
  if (allow_restriction) {
    std::map<std::string, std::vector<std::vector<Elem>>> subs;
    for (auto const& a : family.algebras()) subs[a.id()] = all_subuniverses(a);
    std::vector<PartialMap> base(seen.begin(), seen.end());
    for (auto const& m : base) {
      auto const dom = m.domain();
      for (auto const& s : subs[m.src()]) {
        if (s.size() >= dom.size()) continue;
        if (std::ranges::includes(dom, s)) seen.insert(restrict_map(m, s));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// Congruences

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[std::max(x, y)] = std::min(x, y);
    return true;
  }
  std::vector<std::size_t> parent;
};

// Smallest congruence containing the partition in uf.
Congruence close_partition(FiniteAlgebra const& a, UnionFind uf) {
  auto const n = a.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (uf.find(x) != uf.find(y)) continue;
        auto const ex = static_cast<Elem>(x), ey = static_cast<Elem>(y);
        for (auto const& op : a.signature().ops()) {
          if (op.arity == 1) {
            changed |= uf.unite(static_cast<std::size_t>(a.unary(op.symbol, ex)),
                                static_cast<std::size_t>(a.unary(op.symbol, ey)));
          } else if (op.arity == 2) {
            for (std::size_t z = 0; z < n; ++z) {
              auto const ez = static_cast<Elem>(z);
              changed |= uf.unite(static_cast<std::size_t>(a.binary(op.symbol, ex, ez)),
                                  static_cast<std::size_t>(a.binary(op.symbol, ey, ez)));
              changed |= uf.unite(static_cast<std::size_t>(a.binary(op.symbol, ez, ex)),
                                  static_cast<std::size_t>(a.binary(op.symbol, ez, ey)));
            }
          }
        }
      }
    }
  }
  std::vector<Elem> blocks(n);
  for (std::size_t x = 0; x < n; ++x) blocks[x] = static_cast<Elem>(uf.find(x));
  return {a.id(), std::move(blocks)};
}

UnionFind from_congruence(Congruence const& c) {
  UnionFind uf(c.block_of().size());
  for (auto const& block : c.blocks())
    for (std::size_t i = 1; i < block.size(); ++i)
      uf.unite(static_cast<std::size_t>(block[0]), static_cast<std::size_t>(block[i]));
  return uf;
}

}  // namespace

Congruence principal_congruence(FiniteAlgebra const& a, Elem x, Elem y) {
  UnionFind uf(a.size());
  uf.unite(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
  return close_partition(a, std::move(uf));
}

bool is_compatible(FiniteAlgebra const& a, Congruence const& theta) {
  if (theta.block_of().size() != a.size()) return false;
  auto const n = static_cast<Elem>(a.size());
  for (auto const& op : a.signature().ops()) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        if (!theta.related(x, y)) continue;
        if (op.arity == 1 && !theta.related(a.unary(op.symbol, x), a.unary(op.symbol, y))) return false;
        if (op.arity == 2)
          for (Elem z = 0; z < n; ++z)
            if (!theta.related(a.binary(op.symbol, x, z), a.binary(op.symbol, y, z)) ||
                !theta.related(a.binary(op.symbol, z, x), a.binary(op.symbol, z, y)))
              return false;
      }
  }
  return true;
}

std::vector<Congruence> congruences(FiniteAlgebra const& a) {
  auto const n = a.size();
  std::vector<Elem> diag(n);
  std::iota(diag.begin(), diag.end(), 0);
  std::set<Congruence> found{Congruence(a.id(), diag)};
  std::vector<Congruence> principals;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      principals.push_back(principal_congruence(a, static_cast<Elem>(x), static_cast<Elem>(y)));
  std::ranges::sort(principals);
  principals.erase(std::unique(principals.begin(), principals.end()), principals.end());
  std::vector<Congruence> queue(found.begin(), found.end());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto const& p : principals) {
      auto uf = from_congruence(queue[i]);
      for (auto const& block : p.blocks())
        for (std::size_t k = 1; k < block.size(); ++k)
          uf.unite(static_cast<std::size_t>(block[0]), static_cast<std::size_t>(block[k]));
      auto joined = close_partition(a, std::move(uf));
      if (found.insert(joined).second) queue.push_back(std::move(joined));
    }
  }
  std::vector<Congruence> out(found.begin(), found.end());
  std::ranges::stable_sort(out, [](Congruence const& l, Congruence const& r) {
    return l.block_count() > r.block_count();
  });
  return out;
}

Congruence kernel(PartialMap const& h) {
  if (!h.is_total()) throw Error(ErrorKind::invalid_parameter, "kernel of a non-total map");
  return {h.src(), h.values()};
}

Quotient quotient(FiniteAlgebra const& a, Congruence const& theta) {
  if (!is_compatible(a, theta)) throw Error(ErrorKind::invalid_congruence, "partition is not compatible with " + a.id());
  auto const blocks = theta.blocks();
  std::size_t const k = blocks.size();
  std::array<std::vector<Elem>, kOpSymbolCount> tables{};
  auto block = [&](Elem x) { return theta.block_of()[static_cast<std::size_t>(x)]; };
  for (auto const& op : a.signature().ops()) {
    auto& t = tables[static_cast<std::size_t>(op.symbol)];
    if (op.arity == 0) {
      t.push_back(block(a.constant(op.symbol)));
    } else if (op.arity == 1) {
      for (auto const& b : blocks) t.push_back(block(a.unary(op.symbol, b[0])));
    } else {
      for (auto const& b1 : blocks)
        for (auto const& b2 : blocks) t.push_back(block(a.binary(op.symbol, b1[0], b2[0])));
    }
  }
  std::vector<int> labels(k);
  std::iota(labels.begin(), labels.end(), 0);
  std::vector<std::string> names;
  for (auto const& b : blocks) {
    std::string s = "{";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + a.name(b[i]);
    names.push_back(s + "}");
  }
  std::string id = a.id() + "/theta";
  FiniteAlgebra q(id, a.signature(), std::move(labels), std::move(tables), std::move(names));
  PartialMap proj(a.id(), id, theta.block_of());
  return {std::move(q), std::move(proj)};
}

// ---------------------------------------------------------------------------
// Isomorphism and separation

namespace {

std::vector<std::size_t> element_invariants(FiniteAlgebra const& a) {
  auto const n = static_cast<Elem>(a.size());
  std::vector<std::size_t> inv(a.size());
  bool const lattice = a.signature().has(OpSymbol::meet);
  for (Elem x = 0; x < n; ++x) {
    std::size_t below = 0, above = 0;
    if (lattice)
      for (Elem y = 0; y < n; ++y) {
        below += a.leq(y, x);
        above += a.leq(x, y);
      }
    std::size_t const gen = subuniverse_closure(a, std::span<Elem const>(&x, 1)).size();
    inv[static_cast<std::size_t>(x)] = (below * 1024 + above) * 1024 + gen;
  }
  return inv;
}

}  // namespace

std::optional<PartialMap> find_isomorphism(FiniteAlgebra const& a, FiniteAlgebra const& b) {
  require_same_signature(a, b);
  if (a.size() != b.size()) return std::nullopt;
  if (a.empty()) return PartialMap(a.id(), b.id(), {});
  auto ia = element_invariants(a);
  auto ib = element_invariants(b);
  auto sa = ia, sb = ib;
  std::ranges::sort(sa);
  std::ranges::sort(sb);
  if (sa != sb) return std::nullopt;
  std::vector<Elem> all(a.size());
  std::iota(all.begin(), all.end(), 0);
  SearchOptions opts;
  opts.injective = true;
  opts.stop_at_first = true;
  opts.source_invariant = &ia;
  opts.target_invariant = &ib;
  auto found = HomSearch(a, all, b, opts).run();
  for (auto& f : found)
    if (f.is_total() && f.is_injective()) return std::move(f);
  return std::nullopt;
}

bool isomorphic(FiniteAlgebra const& a, FiniteAlgebra const& b) { return find_isomorphism(a, b).has_value(); }

SeparationResult separates(FiniteAlgebra const& a, FiniteAlgebra const& b) {
  SeparationResult r;
  auto const hs = homs(a, b);
  if (hs.empty()) {
    r.reason = "empty-hom-set";
    return r;
  }
  std::set<PartialMap> family;
  auto const n = static_cast<Elem>(a.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y) {
      auto it = std::ranges::find_if(hs, [&](PartialMap const& h) { return h(x) != h(y); });
      if (it == hs.end()) {
        r.reason = "pair-not-separated";
        r.failing_pair = {x, y};
        return r;
      }
      family.insert(*it);
    }
  r.separates = true;
  r.reason = "ok";
  r.family.assign(family.begin(), family.end());
  return r;
}

}  // namespace natdual
