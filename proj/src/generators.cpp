#include "natdual/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <optional>

#include "natdual/hom.hpp"

namespace natdual {

bool is_parametric(SpecKind k) { return k != SpecKind::kleene_alg && k != SpecKind::kleene_lat; }
bool is_monoid(SpecKind k) { return k == SpecKind::odd_mon || k == SpecKind::even_mon; }
bool is_even(SpecKind k) { return k == SpecKind::even_alg || k == SpecKind::even_mon; }

std::string_view to_string(SpecKind k) {
  switch (k) {
    case SpecKind::odd_alg: return "odd-alg";
    case SpecKind::even_alg: return "even-alg";
    case SpecKind::odd_mon: return "odd-mon";
    case SpecKind::even_mon: return "even-mon";
    case SpecKind::kleene_alg: return "kleene";
    case SpecKind::kleene_lat: return "kleene-lat";
  }
  return "?";
}

SpecKind spec_kind_from_string(std::string_view s) {
  for (auto k : {SpecKind::odd_alg, SpecKind::even_alg, SpecKind::odd_mon, SpecKind::even_mon,
                 SpecKind::kleene_alg, SpecKind::kleene_lat})
    if (to_string(k) == s) return k;
  if (s == "kleene-alg") return SpecKind::kleene_alg;
  throw Error(ErrorKind::invalid_parameter, "unknown duality spec " + std::string(s));
}

std::string to_string(DualitySpec const& s) {
  std::string out(to_string(s.kind));
  if (is_parametric(s.kind)) out += " m=" + std::to_string(s.m);
  return out;
}

void validate(DualitySpec const& s) {
  if (is_parametric(s.kind) && s.m < 2)
    throw Error(ErrorKind::invalid_parameter, "m must be at least 2, got " + std::to_string(s.m));
}

std::vector<std::string> sort_names(DualitySpec const& s) {
  switch (s.kind) {
    case SpecKind::odd_alg: return {"P-", "P+"};
    case SpecKind::even_alg: return {"P-", "Q", "P+"};
    case SpecKind::odd_mon: return {"S-", "S+"};
    case SpecKind::even_mon: return {"S-", "T", "S+"};
    default: return {"3-", "3+"};
  }
}

FiniteAlgebra sort_algebra(DualitySpec const& s, std::string_view sort) {
  validate(s);
  std::string const name(sort);
  auto names = sort_names(s);
  if (std::ranges::find(names, name) == names.end())
    throw Error(ErrorKind::invalid_parameter, "no sort " + name + " in " + to_string(s));
  switch (s.kind) {
    case SpecKind::kleene_alg: return make_kleene_algebra().with_id(name);
    case SpecKind::kleene_lat: return make_kleene_lattice().with_id(name);
    default: break;
  }
  bool const middle = name == "Q" || name == "T";
  int const k = middle ? 2 * s.m : 2 * s.m - 1;
  return (is_monoid(s.kind) ? make_sugihara_monoid(k) : make_sugihara_algebra(k)).with_id(name);
}

namespace {

int max_label(FiniteAlgebra const& a) { return a.labels().back(); }
bool has_zero(FiniteAlgebra const& a) { return a.index_of(0).has_value(); }

template <class F>
PartialMap by_labels(FiniteAlgebra const& src, FiniteAlgebra const& dst, F&& fn) {
  std::vector<Elem> v(src.size(), kUndefined);
  for (Elem x = 0; x < static_cast<Elem>(src.size()); ++x) {
    auto y = fn(src.label(x));
    if (y) v[static_cast<std::size_t>(x)] = dst.at(*y);
  }
  return {src.id(), dst.id(), std::move(v)};
}

PartialMap checked(PartialMap p, FiniteAlgebra const& src, FiniteAlgebra const& dst, std::string const& what) {
  if (!is_homomorphism(src, dst, p))
    throw Error(ErrorKind::invalid_generator, what + " is not a partial homomorphism " + src.id() + " -> " + dst.id());
  return p;
}

void need_odd(FiniteAlgebra const& a, std::string const& what) {
  if (!has_zero(a)) throw Error(ErrorKind::invalid_generator, what + " needs an odd chain, got " + a.id());
}
void need_even(FiniteAlgebra const& a, std::string const& what) {
  if (has_zero(a)) throw Error(ErrorKind::invalid_generator, what + " needs an even chain, got " + a.id());
}

int sign(int x) { return (x > 0) - (x < 0); }

}  // namespace

PartialMap gen_f(FiniteAlgebra const& a, int i) {
  need_odd(a, "f");
  int const n = max_label(a);
  if (i < 0 || i > n || (n == 0 && i > 0))
    throw Error(ErrorKind::index_out_of_range, "f_" + std::to_string(i) + " on " + a.id());
  auto p = by_labels(a, a, [i](int x) -> std::optional<int> {
    if (i == 0) return x == 0 ? std::nullopt : std::optional(x);
    if (x == i || x == -i) return std::nullopt;
    if (i > 1 && std::abs(x) == i - 1) return sign(x) * i;
    return x;
  });
  return checked(std::move(p), a, a, "f_" + std::to_string(i));
}

PartialMap gen_g(FiniteAlgebra const& a) {
  need_odd(a, "g");
  return checked(by_labels(a, a, [](int x) { return std::optional(x - sign(x)); }), a, a, "g");
}

PartialMap gen_h(FiniteAlgebra const& a, int i) {
  need_even(a, "h");
  int const n = max_label(a);
  if (i < 2 || i > n) throw Error(ErrorKind::index_out_of_range, "h_" + std::to_string(i) + " on " + a.id());
  auto p = by_labels(a, a, [i](int x) -> std::optional<int> {
    if (std::abs(x) == i) return std::nullopt;
    if (std::abs(x) == i - 1) return sign(x) * i;
    return x;
  });
  return checked(std::move(p), a, a, "h_" + std::to_string(i));
}

PartialMap gen_j(FiniteAlgebra const& a) {
  need_even(a, "j");
  auto p = by_labels(a, a, [](int x) -> std::optional<int> {
    if (std::abs(x) == 1) return std::nullopt;
    return x > 0 ? x - 1 : x + 1;
  });
  return checked(std::move(p), a, a, "j");
}

PartialMap gen_u(FiniteAlgebra const& even, FiniteAlgebra const& odd) {
  need_even(even, "u");
  need_odd(odd, "u");
  if (max_label(even) != max_label(odd) + 1)
    throw Error(ErrorKind::invalid_generator, "u needs Z_2m -> Z_2m-1");
  return checked(by_labels(even, odd, [](int x) { return std::optional(x - sign(x)); }), even, odd, "u");
}

PartialMap gen_v(FiniteAlgebra const& odd, FiniteAlgebra const& even) {
  need_odd(odd, "v");
  need_even(even, "v");
  if (max_label(even) != max_label(odd) + 1)
    throw Error(ErrorKind::invalid_generator, "v needs Z_2m-1 -> Z_2m");
  auto p = by_labels(odd, even, [](int x) -> std::optional<int> {
    if (x == 0) return std::nullopt;
    return x + sign(x);
  });
  return checked(std::move(p), odd, even, "v");
}

PartialMap gen_link(FiniteAlgebra const& from, FiniteAlgebra const& to) {
  if (from.labels() != to.labels()) throw Error(ErrorKind::invalid_generator, "linking map between different carriers");
  return checked(by_labels(from, to, [](int x) { return std::optional(x); }), from, to, "link");
}

PartialMap kappa_lift(PartialMap const& e, FiniteAlgebra const& source, FiniteAlgebra const& target) {
  if (e.src() != source.id() || e.dst() != source.id() || e.source_size() != source.size())
    throw Error(ErrorKind::invalid_generator, "bar needs a partial endomorphism of " + source.id());
  if (!e.is_injective()) throw Error(ErrorKind::invalid_generator, "bar needs an injective map");
  need_even(source, "bar");
  need_even(target, "bar");
  if (max_label(target) != max_label(source) + 1)
    throw Error(ErrorKind::invalid_generator, "bar lifts Z_2(m-1) to W_2m");
  auto p = by_labels(target, target, [&](int x) -> std::optional<int> {
    if (std::abs(x) == 1) return x;
    Elem const pre = source.at(x - sign(x));
    if (!e.defined(pre)) return std::nullopt;
    int const y = source.label(e(pre));
    return y + sign(y);
  });
  return checked(std::move(p), target, target, "bar");
}

namespace {

int parse_index(std::string_view name, std::string_view prefix) {
  auto digits = name.substr(prefix.size());
  int v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
    throw Error(ErrorKind::invalid_generator, "bad generator name " + std::string(name));
  return v;
}

}  // namespace

PartialMap named_generator(std::string_view name, DualitySpec const& spec) {
  validate(spec);
  auto const sorts = sort_names(spec);
  auto first = sort_algebra(spec, sorts.front());
  auto last = sort_algebra(spec, sorts.back());
  if (name == "id_-+") return gen_link(first, last);
  if (name == "id_+-") return gen_link(last, first);
  if (!is_parametric(spec.kind))
    throw Error(ErrorKind::invalid_generator, std::string(name) + " does not exist for " + to_string(spec));
  auto middle = [&] {
    if (!is_even(spec.kind))
      throw Error(ErrorKind::invalid_generator, std::string(name) + " needs an even spec, got " + to_string(spec));
    return sort_algebra(spec, sorts[1]);
  };
  if (name == "g") return gen_g(first);
  if (name.starts_with("f_")) return gen_f(first, parse_index(name, "f_"));
  if (name == "u") return gen_u(middle(), first);
  if (name == "v") {
    if (is_monoid(spec.kind)) throw Error(ErrorKind::invalid_generator, "v does not exist in monoid specs");
    return gen_v(first, middle());
  }
  if (name.starts_with("h_")) return gen_h(middle(), parse_index(name, "h_"));
  if (name == "j") return gen_j(middle());
  if (name.starts_with("bar(") && name.ends_with(")")) {
    auto t = middle();
    if (spec.m < 2) throw Error(ErrorKind::index_out_of_range, "bar needs m >= 2");
    auto src = make_sugihara_algebra(2 * (spec.m - 1));
    auto inner = name.substr(4, name.size() - 5);
    PartialMap e;
    if (inner == "j") {
      e = gen_j(src);
    } else if (inner.starts_with("h_")) {
      e = gen_h(src, parse_index(inner, "h_"));
    } else {
      throw Error(ErrorKind::invalid_generator, "bad generator name " + std::string(name));
    }
    return kappa_lift(e, src, t);
  }
  throw Error(ErrorKind::invalid_generator, "unknown generator " + std::string(name));
}

}  // namespace natdual
