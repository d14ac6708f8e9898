#ifndef NATDUAL_IO_HPP
#define NATDUAL_IO_HPP

#include <json.hpp>
#include <string>

#include "natdual/algebra.hpp"
#include "natdual/kleene.hpp"
#include "natdual/partial_map.hpp"
#include "natdual/structure.hpp"

namespace natdual {

using Json = nlohmann::json;

// Tables are written with element labels, not indices. Keys come out
// sorted, so dump() is byte-stable.
Json to_json(FiniteAlgebra const& a);
FiniteAlgebra algebra_from_json(Json const& j);

// Undefined entries are written as null.
Json to_json(PartialMap const& p);
PartialMap partial_map_from_json(Json const& j);

Json to_json(Relation const& r);
Relation relation_from_json(Json const& j);

Json to_json(MultisortedStructure const& x);
MultisortedStructure structure_from_json(Json const& j);

Json to_json(KleeneSpace const& s);

// One cluster per sort; maps between different sorts are dashed,
// relations are labelled edges without their reflexive pairs.
std::string to_dot(MultisortedStructure const& x);

}  // namespace natdual

#endif  // NATDUAL_IO_HPP
