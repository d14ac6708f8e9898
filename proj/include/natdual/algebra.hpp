#ifndef NATDUAL_ALGEBRA_HPP
#define NATDUAL_ALGEBRA_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "natdual/error.hpp"

namespace natdual {

// Elements are addressed by their index in the carrier. Labels are the
// integers a reader would write down (e.g. -2..2 for Z_5).
using Elem = int;
inline constexpr Elem kUndefined = -1;

enum class OpSymbol { meet, join, arrow, neg, truth, zero, one };
inline constexpr std::size_t kOpSymbolCount = 7;

std::string_view to_string(OpSymbol s);
OpSymbol op_symbol_from_string(std::string_view s);

struct OpSpec {
  OpSymbol symbol;
  int arity;
  bool operator==(OpSpec const&) const = default;
};

class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<OpSpec> ops);

  static Signature sugihara_algebra();
  static Signature sugihara_monoid();
  static Signature kleene_algebra();
  static Signature kleene_lattice();

  std::vector<OpSpec> const& ops() const { return ops_; }
  bool has(OpSymbol s) const;
  int arity(OpSymbol s) const;
  bool has_constants() const;

  bool operator==(Signature const&) const = default;

 private:
  std::vector<OpSpec> ops_;
};

// Carrier plus fully materialised operation tables. Immutable after
// construction; copying is cheap enough at the sizes used here.
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;

  // Tables are indexed by element index: binary tables are row-major
  // n*n, unary tables have n entries, nullary tables one.
  FiniteAlgebra(std::string id, Signature signature, std::vector<int> labels,
                std::array<std::vector<Elem>, kOpSymbolCount> tables,
                std::vector<std::string> names = {});

  std::string const& id() const { return id_; }
  Signature const& signature() const { return signature_; }
  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

  int label(Elem a) const { return labels_[static_cast<std::size_t>(a)]; }
  std::vector<int> const& labels() const { return labels_; }
  std::optional<Elem> index_of(int label) const;
  Elem at(int label) const;  // throws on unknown label
  std::string name(Elem a) const;
  bool has_names() const { return !names_.empty(); }

  Elem meet(Elem a, Elem b) const { return binary(OpSymbol::meet, a, b); }
  Elem join(Elem a, Elem b) const { return binary(OpSymbol::join, a, b); }
  Elem arrow(Elem a, Elem b) const { return binary(OpSymbol::arrow, a, b); }
  Elem neg(Elem a) const { return unary(OpSymbol::neg, a); }
  Elem constant(OpSymbol s) const { return table(s)[0]; }

  Elem binary(OpSymbol s, Elem a, Elem b) const {
    return table(s)[static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b)];
  }
  Elem unary(OpSymbol s, Elem a) const { return table(s)[static_cast<std::size_t>(a)]; }
  std::vector<Elem> const& table(OpSymbol s) const {
    return tables_[static_cast<std::size_t>(s)];
  }

  bool leq(Elem a, Elem b) const { return meet(a, b) == a; }
  // a . b = neg(a -> neg b); only meaningful when arrow is present.
  Elem fusion(Elem a, Elem b) const { return neg(arrow(a, neg(b))); }

  std::vector<Elem> constants() const;

  FiniteAlgebra with_id(std::string id) const;

  bool operator==(FiniteAlgebra const&) const = default;

 private:
  std::string id_;
  Signature signature_;
  std::vector<int> labels_;
  std::vector<std::string> names_;
  std::array<std::vector<Elem>, kOpSymbolCount> tables_{};
};

// Z_k: the k-element Sugihara chain. k = 2n+1 gives {-n..n}; k = 2n the
// same without 0.
FiniteAlgebra make_sugihara_algebra(int k);
// W_k: Z_k with t = 0 (k odd) or t = 1 (k even).
FiniteAlgebra make_sugihara_monoid(int k);
// The three-element Kleene algebra 0 < a < 1, labelled -1 < 0 < 1.
FiniteAlgebra make_kleene_algebra();
// The constant-free reduct of make_kleene_algebra().
FiniteAlgebra make_kleene_lattice();

// Builds an algebra whose elements are tuples over coordinate algebras
// (all sharing one signature). The tuple list must be closed under the
// pointwise operations; labels are 0..n-1 in the order given.
FiniteAlgebra algebra_from_tuples(std::string id, Signature const& signature,
                                  std::vector<FiniteAlgebra const*> const& coords,
                                  std::vector<std::vector<Elem>> const& tuples,
                                  bool name_elements = true);

// Pointwise closure of seed tuples (plus constant tuples) under the
// operations of the coordinate algebras. Result is sorted.
std::vector<std::vector<Elem>> close_tuples(Signature const& signature,
                                            std::vector<FiniteAlgebra const*> const& coords,
                                            std::vector<std::vector<Elem>> seeds);

FiniteAlgebra product(FiniteAlgebra const& a, FiniteAlgebra const& b);
FiniteAlgebra power(FiniteAlgebra const& a, int n);
// Algebra induced on a subuniverse (given as sorted element indices).
FiniteAlgebra induced_subalgebra(FiniteAlgebra const& a, std::span<Elem const> universe,
                                 std::string id = {});

struct LawReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Exhaustive checks of the FiniteAlgebra invariants: closure, distributive
// lattice, order-reversing involution, fusion identity when t is present.
LawReport check_algebra_laws(FiniteAlgebra const& a);
bool kleene_law_holds(FiniteAlgebra const& a);

}  // namespace natdual

#endif  // NATDUAL_ALGEBRA_HPP
