#ifndef NATDUAL_KLEENE_HPP
#define NATDUAL_KLEENE_HPP

#include <optional>
#include <string>
#include <vector>

#include "natdual/algebra.hpp"
#include "natdual/structure.hpp"

namespace natdual {

// Finite poset with an order-reversing involution g such that every point
// is comparable with its image.
struct KleeneSpace {
  std::string id;
  std::vector<std::string> names;
  std::vector<char> order;  // order[x*n+y] iff x <= y
  std::vector<int> g;

  std::size_t size() const { return g.size(); }
  bool leq(int x, int y) const { return order[static_cast<std::size_t>(x) * size() + static_cast<std::size_t>(y)] != 0; }
  bool valid(std::string* why = nullptr) const;
};

// Preorder on the disjoint union of the two sorts of a structure typed
// over the Kleene alter ego: reflexive-transitive closure of the union of
// its relations. Points are numbered sort by sort.
struct Preorder {
  std::size_t size = 0;
  std::vector<char> rel;  // rel[x*size+y]
  bool related(std::size_t x, std::size_t y) const { return rel[x * size + y] != 0; }
};
Preorder union_preorder(MultisortedStructure const& x);

// Quotient by the preorder's equivalence, g induced by the linking maps.
// Throws ill-defined when the links do not respect the classes. class_of,
// when given, receives the class of every point of the union.
KleeneSpace quotient_to_kleene_space(MultisortedStructure const& x, std::vector<int>* class_of = nullptr);

// Prime filters of a finite Kleene algebra (principal filters of the
// join-irreducibles) ordered by inclusion, g(F) = {y : neg y not in F}.
KleeneSpace cornish_fowler_oracle(FiniteAlgebra const& a);

std::optional<std::vector<int>> find_isomorphism(KleeneSpace const& a, KleeneSpace const& b);
bool isomorphic(KleeneSpace const& a, KleeneSpace const& b);

std::string to_dot(KleeneSpace const& s);

}  // namespace natdual

#endif  // NATDUAL_KLEENE_HPP
