#include "natdual/kleene.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "natdual/error.hpp"

namespace natdual {

bool KleeneSpace::valid(std::string* why) const {
  auto fail = [&](std::string const& s) {
    if (why) *why = s;
    return false;
  };
  auto const n = static_cast<int>(size());
  if (order.size() != size() * size()) return fail("order table has the wrong size");
  for (int x = 0; x < n; ++x) {
    if (!leq(x, x)) return fail("not reflexive at " + names[static_cast<std::size_t>(x)]);
    int const gx = g[static_cast<std::size_t>(x)];
    if (gx < 0 || gx >= n || g[static_cast<std::size_t>(gx)] != x) return fail("g is not an involution");
    if (!leq(x, gx) && !leq(gx, x)) return fail(names[static_cast<std::size_t>(x)] + " is incomparable with its image");
    for (int y = 0; y < n; ++y) {
      if (x != y && leq(x, y) && leq(y, x)) return fail("not antisymmetric");
      if (leq(x, y) && !leq(g[static_cast<std::size_t>(y)], gx)) return fail("g does not reverse the order");
      for (int z = 0; z < n; ++z)
        if (leq(x, y) && leq(y, z) && !leq(x, z)) return fail("not transitive");
    }
  }
  return true;
}

Preorder union_preorder(MultisortedStructure const& x) {
  if (x.sorts.size() != 2) throw Error(ErrorKind::type_mismatch, x.id + " is not two-sorted");
  std::vector<std::size_t> offset{0, x.sizes[0]};
  Preorder p;
  p.size = x.total_size();
  p.rel.assign(p.size * p.size, 0);
  for (std::size_t i = 0; i < p.size; ++i) p.rel[i * p.size + i] = 1;
  for (auto const& r : x.rels)
    for (auto [a, b] : r.pairs)
      p.rel[(offset[r.src] + static_cast<std::size_t>(a)) * p.size + offset[r.dst] + static_cast<std::size_t>(b)] = 1;
  for (std::size_t k = 0; k < p.size; ++k)
    for (std::size_t i = 0; i < p.size; ++i)
      if (p.rel[i * p.size + k])
        for (std::size_t j = 0; j < p.size; ++j)
          if (p.rel[k * p.size + j]) p.rel[i * p.size + j] = 1;
  return p;
}

KleeneSpace quotient_to_kleene_space(MultisortedStructure const& x, std::vector<int>* class_of) {
  auto const p = union_preorder(x);
  std::vector<std::size_t> offset{0, x.sizes[0]};
  std::vector<int> cls(p.size, -1);
  std::vector<std::size_t> rep;
  for (std::size_t i = 0; i < p.size; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = static_cast<int>(rep.size());
    for (std::size_t j = i + 1; j < p.size; ++j)
      if (p.related(i, j) && p.related(j, i)) cls[j] = cls[i];
    rep.push_back(i);
  }

  KleeneSpace s;
  s.id = "K(" + x.id + ")";
  auto const n = rep.size();
  s.order.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) s.order[a * n + b] = p.related(rep[a], rep[b]);

  // the link out of each sort, read on the union
  std::vector<int> link(p.size, -1);
  for (auto const& op : x.gops) {
    if (op.src == op.dst) continue;
    for (std::size_t e = 0; e < op.values.size(); ++e)
      if (op.values[e] != kUndefined)
        link[offset[op.src] + e] = static_cast<int>(offset[op.dst] + static_cast<std::size_t>(op.values[e]));
  }
  s.g.assign(n, -1);
  for (std::size_t i = 0; i < p.size; ++i) {
    if (link[i] < 0) throw Error(ErrorKind::ill_defined, "no link defined at point " + std::to_string(i));
    int const target = cls[static_cast<std::size_t>(link[i])];
    int& slot = s.g[static_cast<std::size_t>(cls[i])];
    if (slot >= 0 && slot != target) throw Error(ErrorKind::ill_defined, "links do not respect the equivalence");
    slot = target;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::string name = "{";
    for (std::size_t i = 0; i < p.size; ++i) {
      if (cls[i] != static_cast<int>(c)) continue;
      std::size_t const sort = i < offset[1] ? 0 : 1;
      if (name.size() > 1) name += ",";
      name += x.point_name(sort, static_cast<Elem>(i - offset[sort])) + (sort == 0 ? "-" : "+");
    }
    s.names.push_back(name + "}");
  }
  if (class_of) *class_of = cls;
  return s;
}

KleeneSpace cornish_fowler_oracle(FiniteAlgebra const& a) {
  auto const n = static_cast<Elem>(a.size());
  std::vector<Elem> joinirr;
  for (Elem j = 0; j < n; ++j) {
    // join of everything strictly below j
    Elem below = -1;
    bool bottom = true;
    for (Elem y = 0; y < n; ++y) {
      if (y == j || !a.leq(y, j)) continue;
      bottom = false;
      below = below < 0 ? y : a.join(below, y);
    }
    if (!bottom && below != j) joinirr.push_back(j);
  }
  auto const k = joinirr.size();
  KleeneSpace s;
  s.id = "CF(" + a.id() + ")";
  s.order.assign(k * k, 0);
  // up(j1) is contained in up(j2) iff j2 <= j1
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) s.order[x * k + y] = a.leq(joinirr[y], joinirr[x]);
  for (std::size_t x = 0; x < k; ++x) {
    Elem const j = joinirr[x];
    // g(up j) = {y : neg y not >= j}; a prime filter, hence up of its meet
    Elem least = -1;
    for (Elem y = 0; y < n; ++y)
      if (!a.leq(j, a.neg(y))) least = least < 0 ? y : a.meet(least, y);
    auto it = std::find(joinirr.begin(), joinirr.end(), least);
    if (it == joinirr.end()) throw Error(ErrorKind::ill_defined, "g(F) is not a prime filter");
    s.g.push_back(static_cast<int>(it - joinirr.begin()));
    s.names.push_back("up(" + a.name(j) + ")");
  }
  return s;
}

std::optional<std::vector<int>> find_isomorphism(KleeneSpace const& a, KleeneSpace const& b) {
  auto const n = static_cast<int>(a.size());
  if (a.size() != b.size()) return std::nullopt;
  auto profile = [](KleeneSpace const& s, int x) {
    int up = 0, down = 0;
    for (int y = 0; y < static_cast<int>(s.size()); ++y) {
      up += s.leq(x, y);
      down += s.leq(y, x);
    }
    int const gx = s.g[static_cast<std::size_t>(x)];
    return std::tuple{up, down, gx == x, s.leq(x, gx)};
  };
  std::vector<int> phi(a.size(), -1);
  std::vector<char> used(b.size(), 0);
  std::function<bool(int)> go = [&](int x) -> bool {
    if (x == n) return true;
    if (phi[static_cast<std::size_t>(x)] >= 0) return go(x + 1);
    for (int y = 0; y < n; ++y) {
      if (used[static_cast<std::size_t>(y)] || profile(a, x) != profile(b, y)) continue;
      int const gx = a.g[static_cast<std::size_t>(x)];
      int const gy = b.g[static_cast<std::size_t>(y)];
      if ((gx == x) != (gy == y)) continue;
      if (gx != x && (phi[static_cast<std::size_t>(gx)] >= 0 || used[static_cast<std::size_t>(gy)])) continue;
      auto fits = [&](int p) {
        int const q = phi[static_cast<std::size_t>(p)];
        return a.leq(x, p) == b.leq(y, q) && a.leq(p, x) == b.leq(q, y);
      };
      phi[static_cast<std::size_t>(x)] = y;
      used[static_cast<std::size_t>(y)] = 1;
      bool ok = true;
      for (int p = 0; p < n && ok; ++p)
        if (p != x && phi[static_cast<std::size_t>(p)] >= 0) ok = fits(p);
      if (ok && gx != x) {
        phi[static_cast<std::size_t>(gx)] = gy;
        used[static_cast<std::size_t>(gy)] = 1;
        for (int p = 0; p < n && ok; ++p) {
          if (p == gx || phi[static_cast<std::size_t>(p)] < 0) continue;
          int const q = phi[static_cast<std::size_t>(p)];
          ok = a.leq(gx, p) == b.leq(gy, q) && a.leq(p, gx) == b.leq(q, gy);
        }
        if (ok && go(x + 1)) return true;
        phi[static_cast<std::size_t>(gx)] = -1;
        used[static_cast<std::size_t>(gy)] = 0;
      } else if (ok && go(x + 1)) {
        return true;
      }
      phi[static_cast<std::size_t>(x)] = -1;
      used[static_cast<std::size_t>(y)] = 0;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return phi;
}

bool isomorphic(KleeneSpace const& a, KleeneSpace const& b) { return find_isomorphism(a, b).has_value(); }

std::string to_dot(KleeneSpace const& s) {
  auto const n = static_cast<int>(s.size());
  std::ostringstream os;
  os << "digraph \"" << s.id << "\" {\n  rankdir=BT;\n";
  for (int x = 0; x < n; ++x) os << "  p" << x << " [label=\"" << s.names[static_cast<std::size_t>(x)] << "\"];\n";
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !s.leq(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < n && cover; ++z)
        if (z != x && z != y && s.leq(x, z) && s.leq(z, y)) cover = false;
      if (cover) os << "  p" << x << " -> p" << y << ";\n";
    }
  for (int x = 0; x < n; ++x) {
    int const gx = s.g[static_cast<std::size_t>(x)];
    if (x < gx) os << "  p" << x << " -> p" << gx << " [style=dashed, dir=both, constraint=false];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace natdual
