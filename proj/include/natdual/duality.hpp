#ifndef NATDUAL_DUALITY_HPP
#define NATDUAL_DUALITY_HPP

#include <string>
#include <vector>

#include "natdual/algebra.hpp"
#include "natdual/generators.hpp"
#include "natdual/partial_map.hpp"
#include "natdual/structure.hpp"

namespace natdual {

// Lattice homomorphism from a sort onto 2 = {0 < 1}.
struct CarrierMap {
  std::string name;  // "delta-", "delta+", "beta", "beta-", "beta+"
  std::string sort;
  std::vector<int> values;  // by element index
};

CarrierMap make_carrier_map(std::string const& name, FiniteAlgebra const& sort);
bool is_lattice_hom_to_two(CarrierMap const& w, FiniteAlgebra const& sort);

struct NamedMap {
  std::string name;
  PartialMap map;
};

struct NamedRelation {
  std::string name;
  Relation rel;
};

struct EgoOptions {
  bool drop_link_mp = false;  // leave out id_-+
  bool drop_link_pm = false;  // leave out id_+-
  int f_bound = -1;           // highest f index; -1 = resolved bound
};

struct AlterEgo {
  DualitySpec spec;
  AlgebraFamily sorts;  // ids are sort names, in canonical order
  std::vector<CarrierMap> carriers;
  std::vector<NamedMap> gops;
  std::vector<NamedMap> hops;
  std::vector<std::pair<std::string, Elem>> consts;
  std::vector<NamedRelation> rels;

  std::vector<std::string> sort_names() const;
  FiniteAlgebra const& sort(std::string const& name) const { return sorts.get(name); }
  CarrierMap const& carrier(std::string const& sort) const;
  // The alter ego itself as a multisorted structure (points are element
  // indices of the sort algebras).
  MultisortedStructure structure() const;
  // Every G/H item is a (partial) hom, every constant a one-element
  // subuniverse, every relation a subuniverse of its product.
  bool well_formed(std::string* why = nullptr) const;
};

// Smallest f index bound (m-2 or m-1) for which the ego's maps compose to
// every partial endomorphism of the first sort; m-1 when neither does.
int resolved_f_bound(DualitySpec const& spec);

AlterEgo build_alter_ego(DualitySpec const& spec, EgoOptions const& opts = {});

// D(A): sort i = homs(A, M_i), items lifted pointwise. hom_lists, when
// given, receives the hom underlying each point.
MultisortedStructure dual_of_algebra(FiniteAlgebra const& a, AlterEgo const& ego,
                                     std::vector<std::vector<PartialMap>>* hom_lists = nullptr);

// E(X): all morphisms X -> ego, as a subalgebra of the product of sort
// algebras indexed by the points of X. Elements follow the canonical order
// of morphisms.
FiniteAlgebra dual_of_structure(MultisortedStructure const& x, AlterEgo const& ego, std::string id = {});

struct UnitResult {
  FiniteAlgebra ed;    // E(D(A))
  PartialMap map;      // e_A : A -> ED(A)
  bool iso = false;
};
UnitResult evaluation_unit(FiniteAlgebra const& a, AlterEgo const& ego);

struct CounitResult {
  MultisortedStructure x;   // D(A)
  MultisortedStructure dex; // D(E(D(A)))
  MultisortedMorphism map;  // epsilon_X
  bool iso = false;
};
CounitResult evaluation_counit(FiniteAlgebra const& a, AlterEgo const& ego);

// E(M^s). Throws size-guard when the power has more than `guard` points.
FiniteAlgebra free_algebra(AlterEgo const& ego, int s, std::size_t guard = 2000);
// Subalgebra of prod_i M_i^(M_i^s) generated by the s projections.
FiniteAlgebra free_algebra_oracle(std::vector<FiniteAlgebra> const& sort_algebras, int s,
                                  std::size_t guard = 2000);

// D(f) : D(B) -> D(A), x |-> x o f.
MultisortedMorphism dual_morphism(FiniteAlgebra const& a, FiniteAlgebra const& b, PartialMap const& f,
                                  AlterEgo const& ego);

struct StrongnessReport {
  bool injective = false;
  bool surjective = false;
  bool dual_is_morphism = false;
  bool dual_surjective = false;
  bool dual_embedding = false;
  bool dual_image_generates = false;  // image closes up to all of D(A) under G, H, K
  bool ok = false;  // morphism, injective => surjective dual, surjective => embedding dual
};
StrongnessReport check_strongness(FiniteAlgebra const& a, FiniteAlgebra const& b, PartialMap const& f,
                                  AlterEgo const& ego);

}  // namespace natdual

#endif  // NATDUAL_DUALITY_HPP
