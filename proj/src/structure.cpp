#include "natdual/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace natdual {

bool SortRel::contains(Elem a, Elem b) const { return std::ranges::binary_search(pairs, std::pair{a, b}); }

std::size_t MultisortedStructure::sort_index(std::string const& name) const {
  for (std::size_t i = 0; i < sorts.size(); ++i)
    if (sorts[i] == name) return i;
  throw Error(ErrorKind::type_mismatch, "no sort " + name + " in " + id);
}

std::size_t MultisortedStructure::total_size() const {
  std::size_t n = 0;
  for (auto s : sizes) n += s;
  return n;
}

std::string MultisortedStructure::point_name(std::size_t sort, Elem x) const {
  if (sort < point_names.size() && static_cast<std::size_t>(x) < point_names[sort].size())
    return point_names[sort][static_cast<std::size_t>(x)];
  return std::to_string(x);
}

namespace {

bool same_shape(std::vector<SortOp> const& a, std::vector<SortOp> const& b) {
  return std::ranges::equal(a, b, [](SortOp const& l, SortOp const& r) {
    return l.name == r.name && l.src == r.src && l.dst == r.dst;
  });
}

}  // namespace

bool MultisortedStructure::same_signature(MultisortedStructure const& o) const {
  if (sorts != o.sorts || !same_shape(gops, o.gops) || !same_shape(hops, o.hops)) return false;
  if (!std::ranges::equal(consts, o.consts, [](SortConst const& l, SortConst const& r) {
        return l.name == r.name && l.sort == r.sort;
      }))
    return false;
  return std::ranges::equal(rels, o.rels, [](SortRel const& l, SortRel const& r) {
    return l.name == r.name && l.src == r.src && l.dst == r.dst;
  });
}

void MultisortedStructure::validate() const {
  auto bad = [&](std::string const& what) { throw Error(ErrorKind::type_mismatch, id + ": " + what); };
  if (sizes.size() != sorts.size()) bad("sort sizes");
  auto check_op = [&](SortOp const& op, bool total) {
    if (op.src >= sorts.size() || op.dst >= sorts.size()) bad(op.name + " refers to a missing sort");
    if (op.values.size() != sizes[op.src]) bad(op.name + " has the wrong source size");
    for (Elem v : op.values) {
      if (v == kUndefined && total) bad(op.name + " is not total");
      if (v != kUndefined && (v < 0 || static_cast<std::size_t>(v) >= sizes[op.dst])) bad(op.name + " leaves its sort");
    }
  };
  for (auto const& op : gops) check_op(op, true);
  for (auto const& op : hops) check_op(op, false);
  for (auto const& c : consts)
    if (c.sort >= sorts.size() || c.point < 0 || static_cast<std::size_t>(c.point) >= sizes[c.sort]) bad(c.name);
  for (auto const& r : rels) {
    if (r.src >= sorts.size() || r.dst >= sorts.size()) bad(r.name);
    for (auto [a, b] : r.pairs)
      if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= sizes[r.src] || static_cast<std::size_t>(b) >= sizes[r.dst])
        bad(r.name + " pair out of range");
  }
}

bool is_morphism(MultisortedStructure const& x, MultisortedStructure const& y, MultisortedMorphism const& phi) {
  if (!x.same_signature(y) || phi.maps.size() != x.sorts.size()) return false;
  for (std::size_t i = 0; i < x.sorts.size(); ++i) {
    if (phi.maps[i].size() != x.sizes[i]) return false;
    for (Elem v : phi.maps[i])
      if (v < 0 || static_cast<std::size_t>(v) >= y.sizes[i]) return false;
  }
  auto at = [&](std::size_t sort, Elem p) { return phi.maps[sort][static_cast<std::size_t>(p)]; };
  for (std::size_t k = 0; k < x.gops.size(); ++k) {
    auto const& ox = x.gops[k];
    auto const& oy = y.gops[k];
    for (std::size_t p = 0; p < ox.values.size(); ++p)
      if (at(ox.dst, ox.values[p]) != oy.values[static_cast<std::size_t>(at(ox.src, static_cast<Elem>(p)))]) return false;
  }
  for (std::size_t k = 0; k < x.hops.size(); ++k) {
    auto const& ox = x.hops[k];
    auto const& oy = y.hops[k];
    for (std::size_t p = 0; p < ox.values.size(); ++p) {
      if (ox.values[p] == kUndefined) continue;
      Elem const img = oy.values[static_cast<std::size_t>(at(ox.src, static_cast<Elem>(p)))];
      if (img == kUndefined || img != at(ox.dst, ox.values[p])) return false;
    }
  }
  for (std::size_t k = 0; k < x.consts.size(); ++k)
    if (at(x.consts[k].sort, x.consts[k].point) != y.consts[k].point) return false;
  for (std::size_t k = 0; k < x.rels.size(); ++k)
    for (auto [a, b] : x.rels[k].pairs)
      if (!y.rels[k].contains(at(x.rels[k].src, a), at(x.rels[k].dst, b))) return false;
  return true;
}

namespace {

bool injective(std::vector<Elem> const& m) {
  auto s = m;
  std::ranges::sort(s);
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

}  // namespace

bool is_surjective(MultisortedStructure const& y, MultisortedMorphism const& phi) {
  for (std::size_t i = 0; i < y.sorts.size(); ++i) {
    std::vector<char> hit(y.sizes[i], 0);
    for (Elem v : phi.maps[i]) hit[static_cast<std::size_t>(v)] = 1;
    if (std::ranges::count(hit, 0) != 0) return false;
  }
  return true;
}

bool is_embedding(MultisortedStructure const& x, MultisortedStructure const& y, MultisortedMorphism const& phi) {
  if (!is_morphism(x, y, phi)) return false;
  for (auto const& m : phi.maps)
    if (!injective(m)) return false;
  auto at = [&](std::size_t sort, Elem p) { return phi.maps[sort][static_cast<std::size_t>(p)]; };
  for (std::size_t k = 0; k < x.hops.size(); ++k) {
    auto const& ox = x.hops[k];
    auto const& oy = y.hops[k];
    for (std::size_t p = 0; p < ox.values.size(); ++p)
      if (ox.values[p] == kUndefined && oy.values[static_cast<std::size_t>(at(ox.src, static_cast<Elem>(p)))] != kUndefined)
        return false;
  }
  for (std::size_t k = 0; k < x.rels.size(); ++k) {
    auto const& rx = x.rels[k];
    for (std::size_t a = 0; a < x.sizes[rx.src]; ++a)
      for (std::size_t b = 0; b < x.sizes[rx.dst]; ++b) {
        Elem const ea = static_cast<Elem>(a), eb = static_cast<Elem>(b);
        if (y.rels[k].contains(at(rx.src, ea), at(rx.dst, eb)) && !rx.contains(ea, eb)) return false;
      }
  }
  return true;
}

bool is_isomorphism(MultisortedStructure const& x, MultisortedStructure const& y, MultisortedMorphism const& phi) {
  if (!is_morphism(x, y, phi)) return false;
  MultisortedMorphism inv{y.id, x.id, {}};
  for (std::size_t i = 0; i < x.sorts.size(); ++i) {
    if (x.sizes[i] != y.sizes[i] || !injective(phi.maps[i])) return false;
    std::vector<Elem> back(y.sizes[i], kUndefined);
    for (std::size_t p = 0; p < phi.maps[i].size(); ++p)
      back[static_cast<std::size_t>(phi.maps[i][p])] = static_cast<Elem>(p);
    inv.maps.push_back(std::move(back));
  }
  return is_morphism(y, x, inv);
}

// ---------------------------------------------------------------------------
// Morphism search

namespace {

using Mask = std::uint64_t;

struct Constraint {
  std::size_t p, q;
  std::vector<Mask> fwd;  // fwd[v]: allowed values of q when p = v
  std::vector<Mask> bwd;  // bwd[w]: allowed values of p when q = w
};

class MorphismSearch {
 public:
  MorphismSearch(MultisortedStructure const& x, MultisortedStructure const& y) : x_(x), y_(y) {
    for (std::size_t i = 0; i < x.sorts.size(); ++i) {
      if (y.sizes[i] > 64) throw Error(ErrorKind::size_guard, "target sort larger than 64 points");
      offset_.push_back(sort_of_.size());
      for (std::size_t p = 0; p < x.sizes[i]; ++p) sort_of_.push_back(i);
    }
    dom_.resize(sort_of_.size());
    for (std::size_t v = 0; v < dom_.size(); ++v) {
      auto n = y.sizes[sort_of_[v]];
      dom_[v] = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    }
    build();
  }

  std::vector<MultisortedMorphism> run() {
    if (!consistent_) return {};
    std::vector<std::size_t> all(constraints_.size());
    for (std::size_t c = 0; c < all.size(); ++c) all[c] = c;
    if (!propagate(dom_, all)) return {};
    search(dom_);
    std::ranges::sort(solutions_, [](auto const& l, auto const& r) { return l.maps < r.maps; });
    return std::move(solutions_);
  }

 private:
  std::size_t var(std::size_t sort, Elem p) const { return offset_[sort] + static_cast<std::size_t>(p); }

  void add(std::size_t p, std::size_t q, auto&& allowed) {
    auto const np = y_.sizes[sort_of_[p]], nq = y_.sizes[sort_of_[q]];
    if (p == q) {
      Mask keep = 0;
      for (std::size_t v = 0; v < np; ++v)
        if (allowed(static_cast<Elem>(v), static_cast<Elem>(v))) keep |= Mask{1} << v;
      dom_[p] &= keep;
      return;
    }
    Constraint c{p, q, std::vector<Mask>(np, 0), std::vector<Mask>(nq, 0)};
    for (std::size_t v = 0; v < np; ++v)
      for (std::size_t w = 0; w < nq; ++w)
        if (allowed(static_cast<Elem>(v), static_cast<Elem>(w))) {
          c.fwd[v] |= Mask{1} << w;
          c.bwd[w] |= Mask{1} << v;
        }
    watch_[p].push_back(constraints_.size());
    watch_[q].push_back(constraints_.size());
    constraints_.push_back(std::move(c));
  }

  void build() {
    watch_.resize(dom_.size());
    for (std::size_t k = 0; k < x_.gops.size(); ++k) {
      auto const& ox = x_.gops[k];
      auto const& oy = y_.gops[k];
      for (std::size_t p = 0; p < ox.values.size(); ++p)
        add(var(ox.src, static_cast<Elem>(p)), var(ox.dst, ox.values[p]),
            [&](Elem v, Elem w) { return oy.values[static_cast<std::size_t>(v)] == w; });
    }
    for (std::size_t k = 0; k < x_.hops.size(); ++k) {
      auto const& ox = x_.hops[k];
      auto const& oy = y_.hops[k];
      for (std::size_t p = 0; p < ox.values.size(); ++p) {
        if (ox.values[p] == kUndefined) continue;
        add(var(ox.src, static_cast<Elem>(p)), var(ox.dst, ox.values[p]), [&](Elem v, Elem w) {
          Elem const img = oy.values[static_cast<std::size_t>(v)];
          return img != kUndefined && img == w;
        });
      }
    }
    for (std::size_t k = 0; k < x_.consts.size(); ++k)
      dom_[var(x_.consts[k].sort, x_.consts[k].point)] &= Mask{1} << y_.consts[k].point;
    for (std::size_t k = 0; k < x_.rels.size(); ++k) {
      auto const& rx = x_.rels[k];
      auto const& ry = y_.rels[k];
      for (auto [a, b] : rx.pairs)
        add(var(rx.src, a), var(rx.dst, b), [&](Elem v, Elem w) { return ry.contains(v, w); });
    }
    for (Mask d : dom_)
      if (d == 0) consistent_ = false;
  }

  // AC-3 starting from the given constraints.
  bool propagate(std::vector<Mask>& dom, std::vector<std::size_t> queue) const {
    std::vector<char> queued(constraints_.size(), 0);
    for (auto c : queue) queued[c] = 1;
    while (!queue.empty()) {
      auto const ci = queue.back();
      queue.pop_back();
      queued[ci] = 0;
      auto const& c = constraints_[ci];
      for (int side = 0; side < 2; ++side) {
        auto const self = side == 0 ? c.p : c.q;
        auto const other = side == 0 ? c.q : c.p;
        auto const& support = side == 0 ? c.fwd : c.bwd;
        Mask keep = 0;
        for (Mask m = dom[self]; m; m &= m - 1) {
          auto const v = static_cast<std::size_t>(std::countr_zero(m));
          if (support[v] & dom[other]) keep |= Mask{1} << v;
        }
        if (keep == dom[self]) continue;
        if (keep == 0) return false;
        dom[self] = keep;
        for (auto cj : watch_[self])
          if (cj != ci && !queued[cj]) {
            queued[cj] = 1;
            queue.push_back(cj);
          }
      }
    }
    return true;
  }

  void search(std::vector<Mask> const& dom) {
    std::size_t best = dom.size();
    int best_count = 65;
    for (std::size_t v = 0; v < dom.size(); ++v) {
      int const c = std::popcount(dom[v]);
      if (c > 1 && c < best_count) {
        best_count = c;
        best = v;
      }
    }
    if (best == dom.size()) {
      MultisortedMorphism phi{x_.id, y_.id, {}};
      for (std::size_t i = 0; i < x_.sorts.size(); ++i) {
        std::vector<Elem> m(x_.sizes[i]);
        for (std::size_t p = 0; p < m.size(); ++p) m[p] = std::countr_zero(dom[offset_[i] + p]);
        phi.maps.push_back(std::move(m));
      }
      solutions_.push_back(std::move(phi));
      return;
    }
    for (Mask m = dom[best]; m; m &= m - 1) {
      auto next = dom;
      next[best] = m & (~m + 1);
      if (propagate(next, watch_[best])) search(next);
    }
  }

  MultisortedStructure const& x_;
  MultisortedStructure const& y_;
  std::vector<std::size_t> offset_;
  std::vector<std::size_t> sort_of_;
  std::vector<Mask> dom_;
  std::vector<Constraint> constraints_;
  std::vector<std::vector<std::size_t>> watch_;
  bool consistent_ = true;
  std::vector<MultisortedMorphism> solutions_;
};

}  // namespace

std::vector<MultisortedMorphism> morphisms(MultisortedStructure const& x, MultisortedStructure const& y) {
  if (!x.same_signature(y)) throw Error(ErrorKind::signature_mismatch, x.id + " and " + y.id);
  return MorphismSearch(x, y).run();
}

// ---------------------------------------------------------------------------
// Powers

MultisortedStructure structure_power(MultisortedStructure const& m, int s) {
  if (s < 0) throw Error(ErrorKind::invalid_parameter, "negative power");
  MultisortedStructure out;
  out.id = m.id + "^" + std::to_string(s);
  out.sorts = m.sorts;
  // tuples[i][t] = coordinates of point t of sort i
  std::vector<std::vector<std::vector<Elem>>> tuples(m.sorts.size());
  for (std::size_t i = 0; i < m.sorts.size(); ++i) {
    std::vector<std::vector<Elem>> ts{{}};
    for (int c = 0; c < s; ++c) {
      std::vector<std::vector<Elem>> next;
      for (auto const& t : ts)
        for (std::size_t v = 0; v < m.sizes[i]; ++v) {
          auto u = t;
          u.push_back(static_cast<Elem>(v));
          next.push_back(std::move(u));
        }
      ts = std::move(next);
    }
    out.sizes.push_back(ts.size());
    std::vector<std::string> names;
    for (auto const& t : ts) {
      if (s == 1) {
        names.push_back(m.point_name(i, t[0]));
        continue;
      }
      std::string n = "(";
      for (std::size_t c = 0; c < t.size(); ++c) n += (c ? "," : "") + m.point_name(i, t[c]);
      names.push_back(n + ")");
    }
    out.point_names.push_back(std::move(names));
    tuples[i] = std::move(ts);
  }
  auto index_of = [&](std::size_t sort, std::vector<Elem> const& t) {
    std::size_t idx = 0;
    for (Elem v : t) idx = idx * m.sizes[sort] + static_cast<std::size_t>(v);
    return static_cast<Elem>(idx);
  };
  auto lift_op = [&](SortOp const& op) {
    SortOp o{op.name, op.src, op.dst, {}};
    for (auto const& t : tuples[op.src]) {
      std::vector<Elem> img;
      bool defined = true;
      for (Elem v : t) {
        Elem const w = op.values[static_cast<std::size_t>(v)];
        if (w == kUndefined) defined = false;
        img.push_back(w);
      }
      o.values.push_back(defined ? index_of(op.dst, img) : kUndefined);
    }
    return o;
  };
  for (auto const& op : m.gops) out.gops.push_back(lift_op(op));
  for (auto const& op : m.hops) out.hops.push_back(lift_op(op));
  for (auto const& c : m.consts)
    out.consts.push_back({c.name, c.sort, index_of(c.sort, std::vector<Elem>(static_cast<std::size_t>(s), c.point))});
  for (auto const& r : m.rels) {
    SortRel lifted{r.name, r.src, r.dst, {}};
    auto const& ta = tuples[r.src];
    auto const& tb = tuples[r.dst];
    for (std::size_t a = 0; a < ta.size(); ++a)
      for (std::size_t b = 0; b < tb.size(); ++b) {
        bool ok = true;
        for (int c = 0; c < s && ok; ++c) ok = r.contains(ta[a][static_cast<std::size_t>(c)], tb[b][static_cast<std::size_t>(c)]);
        if (ok) lifted.pairs.emplace_back(static_cast<Elem>(a), static_cast<Elem>(b));
      }
    out.rels.push_back(std::move(lifted));
  }
  return out;
}

}  // namespace natdual
