#ifndef NATDUAL_HOM_HPP
#define NATDUAL_HOM_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "natdual/algebra.hpp"
#include "natdual/partial_map.hpp"

namespace natdual {

// Least subuniverse containing seed and every constant. Sorted.
std::vector<Elem> subuniverse_closure(FiniteAlgebra const& a, std::span<Elem const> seed);
bool is_subuniverse(FiniteAlgebra const& a, std::span<Elem const> set);

// Every nonempty subuniverse, ordered by size then lexicographically.
std::vector<std::vector<Elem>> all_subuniverses(FiniteAlgebra const& a);

// Re-checks a map against the tables from scratch: domain is a
// subuniverse, constants land on constants, every operation commutes.
bool is_homomorphism(FiniteAlgebra const& a, FiniteAlgebra const& b, PartialMap const& h);

std::vector<PartialMap> homs(FiniteAlgebra const& a, FiniteAlgebra const& b);
// Homomorphisms from the subalgebra of a on `universe` into b.
std::vector<PartialMap> homs_from(FiniteAlgebra const& a, std::span<Elem const> universe,
                                  FiniteAlgebra const& b);

enum class PartialHomFilter { all, non_total_only };
// Union of homs_from over all nonempty subuniverses, canonically sorted.
std::vector<PartialMap> partial_homs(FiniteAlgebra const& a, FiniteAlgebra const& b,
                                     PartialHomFilter filter = PartialHomFilter::all);

PartialMap identity_map(FiniteAlgebra const& a);
PartialMap restrict_map(PartialMap const& p, std::span<Elem const> domain);

// p o q (apply q first). The domain may come out empty; callers that need
// nonempty maps check is_empty().
PartialMap compose(PartialMap const& p, PartialMap const& q);

// Least set containing gens and the identity of every family member that
// is closed under composition, and under restriction to subuniverses when
// allow_restriction is set. Empty maps are dropped.
std::vector<PartialMap> closure_under_composition(AlgebraFamily const& family,
                                                  std::vector<PartialMap> const& gens,
                                                  bool allow_restriction);

Congruence principal_congruence(FiniteAlgebra const& a, Elem x, Elem y);
bool is_compatible(FiniteAlgebra const& a, Congruence const& theta);
// All congruences, finest first.
std::vector<Congruence> congruences(FiniteAlgebra const& a);
Congruence kernel(PartialMap const& h);

struct Quotient {
  FiniteAlgebra algebra;
  PartialMap projection;
};
Quotient quotient(FiniteAlgebra const& a, Congruence const& theta);

std::optional<PartialMap> find_isomorphism(FiniteAlgebra const& a, FiniteAlgebra const& b);
bool isomorphic(FiniteAlgebra const& a, FiniteAlgebra const& b);

struct SeparationResult {
  bool separates = false;
  std::string reason;  // "empty-hom-set", "pair-not-separated" or "ok"
  std::optional<std::pair<Elem, Elem>> failing_pair;
  std::vector<PartialMap> family;  // one separating hom per pair, deduplicated
};
// Does the set of homs a -> b separate the points of a (a in ISP(b))?
SeparationResult separates(FiniteAlgebra const& a, FiniteAlgebra const& b);

}  // namespace natdual

#endif  // NATDUAL_HOM_HPP
