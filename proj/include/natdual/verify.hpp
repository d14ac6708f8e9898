#ifndef NATDUAL_VERIFY_HPP
#define NATDUAL_VERIFY_HPP

#include <string>
#include <vector>

#include "natdual/duality.hpp"
#include "natdual/io.hpp"

namespace natdual {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::size_t items = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;  // failures first, then remarks
};
Json to_json(CheckResult const& r);

// a is in ISP of the algebras when the homs into them separate points.
bool in_quasivariety(FiniteAlgebra const& a, std::vector<FiniteAlgebra> const& gens);

struct CorpusItem {
  std::string parent;
  std::vector<Elem> universe;
  FiniteAlgebra algebra;
};
struct Corpus {
  std::vector<CorpusItem> members;
  std::vector<std::string> excluded;  // subalgebras outside the quasivariety
};
// Every subalgebra of every parent that lies in ISP(sorts of spec).
Corpus subalgebra_corpus(DualitySpec const& spec, std::vector<FiniteAlgebra> const& parents);
// Z_3^2, Z_5, Z_3 x Z_5 for odd specs, Z_4, Z_4 x Z_3 for even ones (W for
// monoids), 3 and 3^2 for the Kleene specs.
std::vector<FiniteAlgebra> default_parents(DualitySpec const& spec);

CheckResult check_unit(DualitySpec const& spec, std::vector<FiniteAlgebra> const& parents);
CheckResult check_counit(DualitySpec const& spec, std::vector<FiniteAlgebra> const& parents);
// Inclusions of proper subalgebras and quotient maps inside the corpus.
struct StrongnessSweep {
  CheckResult result;
  std::size_t embeddings = 0;
  std::size_t surjections = 0;
  std::size_t image_generates = 0;  // failing inclusions whose dual image still generates
};
StrongnessSweep check_strongness_sweep(DualitySpec const& spec, std::vector<FiniteAlgebra> const& parents);

CheckResult check_tables(DualitySpec const& spec);
CheckResult check_separation(DualitySpec const& spec);
CheckResult check_generators(int m);
CheckResult check_entailment(DualitySpec const& spec);
// homs(Z_{2m-1}, Z_{2m}) empty and Z_{2m}/collapse{-1,1} iso to Z_{2m-1}; W when monoid.
CheckResult check_variety_facts(int m, bool monoid);
CheckResult check_kleene_translation(int s_max);
CheckResult check_free(DualitySpec const& spec, int s, std::size_t guard);

}  // namespace natdual

#endif  // NATDUAL_VERIFY_HPP
