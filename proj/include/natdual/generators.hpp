#ifndef NATDUAL_GENERATORS_HPP
#define NATDUAL_GENERATORS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "natdual/algebra.hpp"
#include "natdual/partial_map.hpp"

namespace natdual {

enum class SpecKind { odd_alg, even_alg, odd_mon, even_mon, kleene_alg, kleene_lat };

struct DualitySpec {
  SpecKind kind = SpecKind::odd_alg;
  int m = 2;  // ignored for the Kleene specs
  bool operator==(DualitySpec const&) const = default;
};

bool is_parametric(SpecKind k);
bool is_monoid(SpecKind k);
bool is_even(SpecKind k);
std::string_view to_string(SpecKind k);
SpecKind spec_kind_from_string(std::string_view s);  // "odd-alg", ..., "kleene", "kleene-lat"
std::string to_string(DualitySpec const& s);
// Throws invalid-parameter for m < 2 on parametric specs.
void validate(DualitySpec const& s);

// Sort names in canonical order: P-, Q, P+ (Q only in even specs); S-, T,
// S+ for monoids; 3-, 3+ for Kleene.
std::vector<std::string> sort_names(DualitySpec const& s);
// The sort as an algebra whose id is the sort name.
FiniteAlgebra sort_algebra(DualitySpec const& s, std::string_view sort);

// Maps on symmetric integer chains, given by label. Each is checked to be a
// partial homomorphism of `a` (or between the two algebras) and throws
// invalid-generator otherwise, e.g. f_0 on a monoid.
PartialMap gen_f(FiniteAlgebra const& a, int i);
PartialMap gen_g(FiniteAlgebra const& a);
PartialMap gen_h(FiniteAlgebra const& a, int i);
PartialMap gen_j(FiniteAlgebra const& a);
PartialMap gen_u(FiniteAlgebra const& even, FiniteAlgebra const& odd);
PartialMap gen_v(FiniteAlgebra const& odd, FiniteAlgebra const& even);
PartialMap gen_link(FiniteAlgebra const& from, FiniteAlgebra const& to);

// e is a partial endomorphism of Z_{2(m-1)}; the lift lives on W_{2m}
// (`target`), fixes +-1 and shifts everything else out by one.
PartialMap kappa_lift(PartialMap const& e, FiniteAlgebra const& source, FiniteAlgebra const& target);

// Generator by name inside a duality context: "g", "u", "v", "f_i", "h_i",
// "j", "bar(h_i)", "bar(j)", "id_-+", "id_+-". Result is typed between sort
// names. Throws invalid-generator / index-out-of-range.
PartialMap named_generator(std::string_view name, DualitySpec const& spec);

}  // namespace natdual

#endif  // NATDUAL_GENERATORS_HPP
