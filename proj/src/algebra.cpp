#include "natdual/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace natdual {

char const* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::needs_seed: return "needs-seed";
    case ErrorKind::signature_mismatch: return "signature-mismatch";
    case ErrorKind::type_mismatch: return "type-mismatch";
    case ErrorKind::invalid_congruence: return "invalid-congruence";
    case ErrorKind::index_out_of_range: return "index-out-of-range";
    case ErrorKind::invalid_generator: return "invalid-generator";
    case ErrorKind::not_a_hom: return "not-a-hom";
    case ErrorKind::size_guard: return "size-guard";
    case ErrorKind::ill_defined: return "ill-defined";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

std::string_view to_string(OpSymbol s) {
  switch (s) {
    case OpSymbol::meet: return "meet";
    case OpSymbol::join: return "join";
    case OpSymbol::arrow: return "arrow";
    case OpSymbol::neg: return "neg";
    case OpSymbol::truth: return "t";
    case OpSymbol::zero: return "zero";
    case OpSymbol::one: return "one";
  }
  return "?";
}

OpSymbol op_symbol_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kOpSymbolCount; ++i) {
    auto sym = static_cast<OpSymbol>(i);
    if (to_string(sym) == s) return sym;
  }
  throw Error(ErrorKind::parse, "unknown operation symbol '" + std::string(s) + "'");
}

Signature::Signature(std::vector<OpSpec> ops) : ops_(std::move(ops)) {
  std::set<OpSymbol> seen;
  int truth_constants = 0;
  for (auto const& op : ops_) {
    if (!seen.insert(op.symbol).second)
      throw Error(ErrorKind::invalid_parameter, "duplicate operation symbol");
    int expected = 0;
    switch (op.symbol) {
      case OpSymbol::meet:
      case OpSymbol::join:
      case OpSymbol::arrow: expected = 2; break;
      case OpSymbol::neg: expected = 1; break;
      case OpSymbol::truth:
      case OpSymbol::zero:
      case OpSymbol::one: expected = 0; break;
    }
    if (op.arity != expected)
      throw Error(ErrorKind::invalid_parameter,
                  "operation " + std::string(to_string(op.symbol)) + " has wrong arity");
    if (op.symbol == OpSymbol::truth) ++truth_constants;
  }
  if (truth_constants > 0 && (seen.contains(OpSymbol::zero) || seen.contains(OpSymbol::one)))
    throw Error(ErrorKind::invalid_parameter, "t cannot be combined with bounds");
  if (seen.contains(OpSymbol::zero) != seen.contains(OpSymbol::one))
    throw Error(ErrorKind::invalid_parameter, "bounds come in pairs");
}

Signature Signature::sugihara_algebra() {
  return Signature({{OpSymbol::meet, 2}, {OpSymbol::join, 2}, {OpSymbol::arrow, 2}, {OpSymbol::neg, 1}});
}

Signature Signature::sugihara_monoid() {
  return Signature({{OpSymbol::meet, 2},
                    {OpSymbol::join, 2},
                    {OpSymbol::arrow, 2},
                    {OpSymbol::neg, 1},
                    {OpSymbol::truth, 0}});
}

Signature Signature::kleene_algebra() {
  return Signature({{OpSymbol::meet, 2},
                    {OpSymbol::join, 2},
                    {OpSymbol::neg, 1},
                    {OpSymbol::zero, 0},
                    {OpSymbol::one, 0}});
}

Signature Signature::kleene_lattice() {
  return Signature({{OpSymbol::meet, 2}, {OpSymbol::join, 2}, {OpSymbol::neg, 1}});
}

bool Signature::has(OpSymbol s) const {
  return std::ranges::any_of(ops_, [s](OpSpec const& o) { return o.symbol == s; });
}

int Signature::arity(OpSymbol s) const {
  for (auto const& o : ops_)
    if (o.symbol == s) return o.arity;
  throw Error(ErrorKind::signature_mismatch, "symbol not in signature");
}

bool Signature::has_constants() const {
  return std::ranges::any_of(ops_, [](OpSpec const& o) { return o.arity == 0; });
}

FiniteAlgebra::FiniteAlgebra(std::string id, Signature signature, std::vector<int> labels,
                             std::array<std::vector<Elem>, kOpSymbolCount> tables,
                             std::vector<std::string> names)
    : id_(std::move(id)),
      signature_(std::move(signature)),
      labels_(std::move(labels)),
      names_(std::move(names)),
      tables_(std::move(tables)) {
  std::size_t const n = labels_.size();
  if (!names_.empty() && names_.size() != n)
    throw Error(ErrorKind::invalid_parameter, "name table size mismatch");
  for (auto const& op : signature_.ops()) {
    auto const& t = tables_[static_cast<std::size_t>(op.symbol)];
    std::size_t expected = op.arity == 2 ? n * n : (op.arity == 1 ? n : 1);
    if (n == 0) expected = op.arity == 0 ? 1 : 0;
    if (t.size() != expected)
      throw Error(ErrorKind::invalid_parameter,
                  "table for " + std::string(to_string(op.symbol)) + " has wrong size");
    for (Elem v : t)
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw Error(ErrorKind::invalid_parameter, "table not closed in carrier");
  }
  if (n == 0 && signature_.has_constants())
    throw Error(ErrorKind::invalid_parameter, "empty carrier with constants");
}

std::optional<Elem> FiniteAlgebra::index_of(int label) const {
  auto it = std::ranges::find(labels_, label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Elem>(it - labels_.begin());
}

Elem FiniteAlgebra::at(int label) const {
  auto i = index_of(label);
  if (!i) throw Error(ErrorKind::invalid_parameter, "label " + std::to_string(label) + " not in " + id_);
  return *i;
}

std::string FiniteAlgebra::name(Elem a) const {
  if (!names_.empty()) return names_[static_cast<std::size_t>(a)];
  return std::to_string(label(a));
}

std::vector<Elem> FiniteAlgebra::constants() const {
  std::vector<Elem> out;
  for (auto const& op : signature_.ops())
    if (op.arity == 0) out.push_back(constant(op.symbol));
  return out;
}

FiniteAlgebra FiniteAlgebra::with_id(std::string id) const {
  FiniteAlgebra copy = *this;
  copy.id_ = std::move(id);
  return copy;
}

namespace {

FiniteAlgebra chain_with_involution(std::string id, Signature sig, std::vector<int> labels,
                                    bool with_arrow, std::vector<std::string> names = {}) {
  std::size_t const n = labels.size();
  std::array<std::vector<Elem>, kOpSymbolCount> t{};
  auto idx = [&](int label) {
    return static_cast<Elem>(std::ranges::find(labels, label) - labels.begin());
  };
  auto& meet = t[static_cast<std::size_t>(OpSymbol::meet)];
  auto& join = t[static_cast<std::size_t>(OpSymbol::join)];
  auto& neg = t[static_cast<std::size_t>(OpSymbol::neg)];
  for (std::size_t i = 0; i < n; ++i) {
    neg.push_back(idx(-labels[i]));
    for (std::size_t j = 0; j < n; ++j) {
      meet.push_back(static_cast<Elem>(std::min(i, j)));
      join.push_back(static_cast<Elem>(std::max(i, j)));
    }
  }
  if (with_arrow) {
    auto& arrow = t[static_cast<std::size_t>(OpSymbol::arrow)];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        int a = labels[i], b = labels[j];
        arrow.push_back(idx(a <= b ? std::max(-a, b) : std::min(-a, b)));
      }
  }
  return FiniteAlgebra(std::move(id), std::move(sig), std::move(labels), std::move(t),
                       std::move(names));
}

std::vector<int> sugihara_labels(int k) {
  if (k <= 0) throw Error(ErrorKind::invalid_parameter, "k must be positive, got " + std::to_string(k));
  int const n = k / 2;
  std::vector<int> labels;
  for (int a = -n; a <= n; ++a)
    if (!(k % 2 == 0 && a == 0)) labels.push_back(a);
  return labels;
}

}  // namespace

FiniteAlgebra make_sugihara_algebra(int k) {
  auto labels = sugihara_labels(k);
  return chain_with_involution("Z" + std::to_string(k), Signature::sugihara_algebra(),
                               std::move(labels), true);
}

FiniteAlgebra make_sugihara_monoid(int k) {
  auto labels = sugihara_labels(k);
  auto base = chain_with_involution("W" + std::to_string(k), Signature::sugihara_algebra(),
                                    std::move(labels), true);
  auto tables = std::array<std::vector<Elem>, kOpSymbolCount>{};
  for (auto const& op : base.signature().ops())
    if (op.arity > 0) tables[static_cast<std::size_t>(op.symbol)] = base.table(op.symbol);
  tables[static_cast<std::size_t>(OpSymbol::truth)] = {base.at(k % 2 == 1 ? 0 : 1)};
  return FiniteAlgebra(base.id(), Signature::sugihara_monoid(), base.labels(), std::move(tables));
}

FiniteAlgebra make_kleene_lattice() {
  return chain_with_involution("3u", Signature::kleene_lattice(), {-1, 0, 1}, false,
                               {"0", "a", "1"});
}

FiniteAlgebra make_kleene_algebra() {
  auto base = chain_with_involution("3", Signature::kleene_lattice(), {-1, 0, 1}, false,
                                    {"0", "a", "1"});
  auto tables = std::array<std::vector<Elem>, kOpSymbolCount>{};
  for (auto const& op : base.signature().ops())
    if (op.arity > 0) tables[static_cast<std::size_t>(op.symbol)] = base.table(op.symbol);
  tables[static_cast<std::size_t>(OpSymbol::zero)] = {0};
  tables[static_cast<std::size_t>(OpSymbol::one)] = {2};
  return FiniteAlgebra(base.id(), Signature::kleene_algebra(), base.labels(), std::move(tables),
                       {"0", "a", "1"});
}

std::vector<std::vector<Elem>> close_tuples(Signature const& signature,
                                            std::vector<FiniteAlgebra const*> const& coords,
                                            std::vector<std::vector<Elem>> seeds) {
  std::size_t const width = coords.size();
  std::set<std::vector<Elem>> seen;
  std::vector<std::vector<Elem>> all;
  auto add = [&](std::vector<Elem> t) {
    if (seen.insert(t).second) all.push_back(std::move(t));
  };
  for (auto const& op : signature.ops()) {
    if (op.arity != 0) continue;
    std::vector<Elem> t(width);
    for (std::size_t i = 0; i < width; ++i) t[i] = coords[i]->constant(op.symbol);
    add(std::move(t));
  }
  for (auto& s : seeds) add(std::move(s));

  // Semi-naive fixpoint: each round combines new tuples with everything.
  std::size_t done = 0;
  while (done < all.size()) {
    std::size_t const frontier_end = all.size();
    for (std::size_t i = done; i < frontier_end; ++i) {
      for (auto const& op : signature.ops()) {
        if (op.arity == 1) {
          std::vector<Elem> t(width);
          for (std::size_t c = 0; c < width; ++c) t[c] = coords[c]->unary(op.symbol, all[i][c]);
          add(std::move(t));
        } else if (op.arity == 2) {
          for (std::size_t j = 0; j < frontier_end; ++j) {
            for (int side = 0; side < 2; ++side) {
              auto const& x = side == 0 ? all[i] : all[j];
              auto const& y = side == 0 ? all[j] : all[i];
              std::vector<Elem> t(width);
              for (std::size_t c = 0; c < width; ++c) t[c] = coords[c]->binary(op.symbol, x[c], y[c]);
              add(std::move(t));
            }
          }
        }
      }
    }
    done = frontier_end;
  }
  std::vector<std::vector<Elem>> out(seen.begin(), seen.end());
  return out;
}

FiniteAlgebra algebra_from_tuples(std::string id, Signature const& signature,
                                  std::vector<FiniteAlgebra const*> const& coords,
                                  std::vector<std::vector<Elem>> const& tuples,
                                  bool name_elements) {
  std::map<std::vector<Elem>, Elem> index;
  for (std::size_t i = 0; i < tuples.size(); ++i) index.emplace(tuples[i], static_cast<Elem>(i));
  std::size_t const n = tuples.size();
  std::size_t const width = coords.size();
  auto lookup = [&](std::vector<Elem> const& t) {
    auto it = index.find(t);
    if (it == index.end()) throw Error(ErrorKind::ill_defined, "tuple set not closed under operations");
    return it->second;
  };
  std::array<std::vector<Elem>, kOpSymbolCount> tables{};
  std::vector<Elem> scratch(width);
  for (auto const& op : signature.ops()) {
    auto& t = tables[static_cast<std::size_t>(op.symbol)];
    if (op.arity == 0) {
      for (std::size_t c = 0; c < width; ++c) scratch[c] = coords[c]->constant(op.symbol);
      t.push_back(lookup(scratch));
    } else if (op.arity == 1) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < width; ++c) scratch[c] = coords[c]->unary(op.symbol, tuples[i][c]);
        t.push_back(lookup(scratch));
      }
    } else {
      t.reserve(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t c = 0; c < width; ++c)
            scratch[c] = coords[c]->binary(op.symbol, tuples[i][c], tuples[j][c]);
          t.push_back(lookup(scratch));
        }
    }
  }
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<int>(i);
  std::vector<std::string> names;
  if (name_elements) {
    names.reserve(n);
    for (auto const& tup : tuples) {
      std::string s = "(";
      for (std::size_t c = 0; c < width; ++c) {
        if (c) s += ",";
        s += coords[c]->name(tup[c]);
      }
      names.push_back(s + ")");
    }
  }
  return FiniteAlgebra(std::move(id), signature, std::move(labels), std::move(tables), std::move(names));
}

FiniteAlgebra product(FiniteAlgebra const& a, FiniteAlgebra const& b) {
  if (!(a.signature() == b.signature()))
    throw Error(ErrorKind::signature_mismatch, a.id() + " x " + b.id());
  std::vector<std::vector<Elem>> tuples;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) tuples.push_back({static_cast<Elem>(i), static_cast<Elem>(j)});
  return algebra_from_tuples(a.id() + "x" + b.id(), a.signature(), {&a, &b}, tuples);
}

FiniteAlgebra power(FiniteAlgebra const& a, int n) {
  if (n < 0) throw Error(ErrorKind::invalid_parameter, "negative power");
  std::vector<FiniteAlgebra const*> coords(static_cast<std::size_t>(n), &a);
  std::vector<std::vector<Elem>> tuples{{}};
  for (int c = 0; c < n; ++c) {
    std::vector<std::vector<Elem>> next;
    for (auto const& t : tuples)
      for (std::size_t e = 0; e < a.size(); ++e) {
        auto u = t;
        u.push_back(static_cast<Elem>(e));
        next.push_back(std::move(u));
      }
    tuples = std::move(next);
  }
  return algebra_from_tuples(a.id() + "^" + std::to_string(n), a.signature(), coords, tuples);
}

FiniteAlgebra induced_subalgebra(FiniteAlgebra const& a, std::span<Elem const> universe, std::string id) {
  std::vector<Elem> pos(a.size(), kUndefined);
  for (std::size_t i = 0; i < universe.size(); ++i) pos[static_cast<std::size_t>(universe[i])] = static_cast<Elem>(i);
  std::array<std::vector<Elem>, kOpSymbolCount> tables{};
  auto map_back = [&](Elem v) {
    Elem p = pos[static_cast<std::size_t>(v)];
    if (p == kUndefined) throw Error(ErrorKind::invalid_parameter, "not a subuniverse of " + a.id());
    return p;
  };
  for (auto const& op : a.signature().ops()) {
    auto& t = tables[static_cast<std::size_t>(op.symbol)];
    if (op.arity == 0) {
      t.push_back(map_back(a.constant(op.symbol)));
    } else if (op.arity == 1) {
      for (Elem x : universe) t.push_back(map_back(a.unary(op.symbol, x)));
    } else {
      for (Elem x : universe)
        for (Elem y : universe) t.push_back(map_back(a.binary(op.symbol, x, y)));
    }
  }
  std::vector<int> labels;
  std::vector<std::string> names;
  for (Elem x : universe) {
    labels.push_back(a.label(x));
    if (a.has_names()) names.push_back(a.name(x));
  }
  if (id.empty()) id = a.id() + "|sub";
  return FiniteAlgebra(std::move(id), a.signature(), std::move(labels), std::move(tables), std::move(names));
}

LawReport check_algebra_laws(FiniteAlgebra const& a) {
  LawReport r;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.failures.push_back(std::move(msg));
  };
  auto const n = static_cast<Elem>(a.size());
  auto const& sig = a.signature();
  if (n == 0) {
    if (sig.has_constants()) fail("empty carrier");
    return r;
  }
  if (!sig.has(OpSymbol::meet) || !sig.has(OpSymbol::join) || !sig.has(OpSymbol::neg)) {
    fail("signature lacks lattice operations or negation");
    return r;
  }
  for (Elem x = 0; x < n; ++x) {
    if (a.meet(x, x) != x || a.join(x, x) != x) fail("idempotence at " + a.name(x));
    if (a.neg(a.neg(x)) != x) fail("neg is not an involution at " + a.name(x));
    for (Elem y = 0; y < n; ++y) {
      if (a.meet(x, y) != a.meet(y, x) || a.join(x, y) != a.join(y, x)) fail("commutativity");
      if (a.meet(x, a.join(x, y)) != x || a.join(x, a.meet(x, y)) != x) fail("absorption");
      if (a.leq(x, y) && !a.leq(a.neg(y), a.neg(x))) fail("neg does not reverse order");
      for (Elem z = 0; z < n; ++z) {
        if (a.meet(x, a.meet(y, z)) != a.meet(a.meet(x, y), z)) fail("meet associativity");
        if (a.join(x, a.join(y, z)) != a.join(a.join(x, y), z)) fail("join associativity");
        if (a.meet(x, a.join(y, z)) != a.join(a.meet(x, y), a.meet(x, z))) fail("distributivity");
      }
    }
  }
  if (sig.has(OpSymbol::truth) && sig.has(OpSymbol::arrow)) {
    Elem const t = a.constant(OpSymbol::truth);
    for (Elem x = 0; x < n; ++x)
      if (a.fusion(t, x) != x || a.fusion(x, t) != x) fail("t is not a fusion identity at " + a.name(x));
  }
  // keep the report readable
  std::ranges::sort(r.failures);
  auto last = std::unique(r.failures.begin(), r.failures.end());
  r.failures.erase(last, r.failures.end());
  return r;
}

bool kleene_law_holds(FiniteAlgebra const& a) {
  auto const n = static_cast<Elem>(a.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (!a.leq(a.meet(x, a.neg(x)), a.join(y, a.neg(y)))) return false;
  return true;
}

}  // namespace natdual
