#ifndef NATDUAL_STRUCTURE_HPP
#define NATDUAL_STRUCTURE_HPP

#include <string>
#include <utility>
#include <vector>

#include "natdual/algebra.hpp"

namespace natdual {

// A unary operation between sorts. values[x] is kUndefined outside the
// domain; total operations (G) have no undefined entries.
struct SortOp {
  std::string name;
  std::size_t src = 0;
  std::size_t dst = 0;
  std::vector<Elem> values;
  bool operator==(SortOp const&) const = default;
};

struct SortConst {
  std::string name;
  std::size_t sort = 0;
  Elem point = 0;
  bool operator==(SortConst const&) const = default;
};

struct SortRel {
  std::string name;
  std::size_t src = 0;
  std::size_t dst = 0;
  std::vector<std::pair<Elem, Elem>> pairs;  // sorted
  bool contains(Elem a, Elem b) const;
  bool operator==(SortRel const&) const = default;
};

// Finite multisorted structure. Points of sort i are 0..sizes[i]-1; the
// optional point names are only used for display.
struct MultisortedStructure {
  std::string id;
  std::vector<std::string> sorts;
  std::vector<std::size_t> sizes;
  std::vector<std::vector<std::string>> point_names;
  std::vector<SortOp> gops;
  std::vector<SortOp> hops;
  std::vector<SortConst> consts;
  std::vector<SortRel> rels;

  std::size_t sort_index(std::string const& name) const;
  std::size_t total_size() const;
  std::string point_name(std::size_t sort, Elem x) const;
  // Same sorts and same names/types of G, H, K, R.
  bool same_signature(MultisortedStructure const& other) const;
  // Throws type-mismatch when an item refers to a missing sort or point.
  void validate() const;
};

struct MultisortedMorphism {
  std::string src;
  std::string dst;
  std::vector<std::vector<Elem>> maps;  // one per sort
  bool operator==(MultisortedMorphism const&) const = default;
};

bool is_morphism(MultisortedStructure const& x, MultisortedStructure const& y, MultisortedMorphism const& phi);
// Bijective on every sort, and the inverse is a morphism as well.
bool is_isomorphism(MultisortedStructure const& x, MultisortedStructure const& y, MultisortedMorphism const& phi);
// Injective on every sort and reflects H-domains and relations.
bool is_embedding(MultisortedStructure const& x, MultisortedStructure const& y, MultisortedMorphism const& phi);
bool is_surjective(MultisortedStructure const& y, MultisortedMorphism const& phi);

// All morphisms X -> Y, canonically ordered (lexicographic on the
// concatenated sort maps). Backtracking with arc consistency over the
// binary constraints the G/H/R items impose.
std::vector<MultisortedMorphism> morphisms(MultisortedStructure const& x, MultisortedStructure const& y);

// Sort i becomes sorts[i]^s (tuples in lexicographic order), everything
// lifted coordinatewise. s = 0 gives one point per sort.
MultisortedStructure structure_power(MultisortedStructure const& m, int s);

}  // namespace natdual

#endif  // NATDUAL_STRUCTURE_HPP
