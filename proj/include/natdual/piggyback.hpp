#ifndef NATDUAL_PIGGYBACK_HPP
#define NATDUAL_PIGGYBACK_HPP

#include <optional>
#include <string>
#include <vector>

#include "natdual/duality.hpp"

namespace natdual {

// {(a,b) : w(a) <= w2(b)}, typed w.sort x w2.sort.
Relation pig_sublattice(CarrierMap const& w, CarrierMap const& w2);

// Every subuniverse of a x b contained in r, and the maximal ones.
std::vector<Relation> subalgebras_within(FiniteAlgebra const& a, FiniteAlgebra const& b, Relation const& r);
std::vector<Relation> maximal_subalgebras_in(FiniteAlgebra const& a, FiniteAlgebra const& b, Relation const& r);

enum class Verdict { graph_of, converse_graph_of, other };
std::string_view to_string(Verdict v);

struct PigClassification {
  Relation relation;
  Verdict verdict = Verdict::other;
  std::optional<PartialMap> forward;   // r is the graph of this map a -> b
  std::optional<PartialMap> backward;  // r is the converse graph of this map b -> a
  std::vector<std::string> side_conditions;
};
// Functional in both directions reports graph_of.
PigClassification classify_pig_relation(Relation const& r, FiniteAlgebra const& a, FiniteAlgebra const& b);

enum class CellForm { graph, converse, graph_or_converse, empty };

struct CellSpec {
  CellForm form = CellForm::empty;
  bool zero_not_in_dom = false;  // of h for graphs, of k for converses
  bool zero_not_in_img = false;
};
std::string describe(CellSpec const& c);

struct CellResult {
  std::string row;
  std::string col;
  CellSpec expected;
  std::vector<PigClassification> found;  // one per maximal subalgebra
  bool ok = false;
  std::string detail;
};

struct TableReport {
  DualitySpec spec;
  std::vector<CellResult> cells;
  bool ok = false;
};

// The expected classification for a sort pair (rows are first coordinates).
CellSpec expected_cell(DualitySpec const& spec, std::string const& row, std::string const& col);
TableReport verify_table(DualitySpec const& spec);
std::string table_summary(TableReport const& r);

struct Witness {
  bool found = false;
  PartialMap zeta;
  std::vector<std::string> word;  // generator names, first applied first
};
// Breadth-first over composites of g, id_-+, id_+- and (even specs) u,
// starting from the identity on `sort`.
Witness separation_witness(DualitySpec const& spec, std::string const& sort, Elem a, Elem b);

struct SeparationReport {
  DualitySpec spec;
  std::size_t pairs = 0;
  std::size_t failures = 0;
  std::size_t longest = 0;
  bool ok = false;
};
SeparationReport verify_separation(DualitySpec const& spec);

struct GeneratingReport {
  std::string algebra;
  std::size_t closure_size = 0;
  std::size_t brute_size = 0;
  std::vector<PartialMap> missing;
  std::vector<PartialMap> extra;
  bool equal = false;
};
GeneratingReport verify_generating_set(FiniteAlgebra const& a, std::vector<PartialMap> const& gens);

struct GeneratorSweep {
  int m = 0;
  GeneratingReport z_odd, z_even, w_odd, w_even;
  bool f_top_needed = false;      // dropping f_{m-1} loses equality for Z_{2m-1}
  bool h_top_needed = false;      // dropping h_m loses equality for Z_{2m}
  bool kappa_bijective = false;   // PE(Z_{2(m-1)}) with the empty map, onto PE^t(W_{2m})
  std::size_t pe_w_even = 0;
  std::size_t pe_z_smaller = 0;   // including the empty map
  bool end_w_even_trivial = false;
  bool ok = false;
};
GeneratorSweep verify_generating_sets(int m);

struct PairEntailment {
  std::string src;
  std::string dst;
  std::size_t closure_size = 0;
  std::size_t brute_size = 0;
  bool equal = false;
};

struct EntailmentReport {
  DualitySpec spec;
  std::vector<PairEntailment> pairs;
  bool restriction_used = false;
  // even-alg only
  bool f0_is_u_after_v = false;
  bool f0_in_closure_without_f0 = false;
  std::string word_v_h_u;  // what v o h_m o ... o h_2 o u evaluates to
  // even-mon only
  bool monoid_homs_into_t_empty = false;
  bool ok = false;
};
EntailmentReport verify_entailment(DualitySpec const& spec);

}  // namespace natdual

#endif  // NATDUAL_PIGGYBACK_HPP
