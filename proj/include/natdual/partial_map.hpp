#ifndef NATDUAL_PARTIAL_MAP_HPP
#define NATDUAL_PARTIAL_MAP_HPP

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "natdual/algebra.hpp"

namespace natdual {

// A map from (part of) one algebra into another, addressed by element
// index. values()[a] is kUndefined outside the domain. The source and
// target are named by algebra id, which inside an alter ego is the sort
// name; that is what keeps "0 in P-" and "0 in P+" apart.
class PartialMap {
 public:
  PartialMap() = default;
  PartialMap(std::string src, std::string dst, std::vector<Elem> values)
      : src_(std::move(src)), dst_(std::move(dst)), values_(std::move(values)) {}

  std::string const& src() const { return src_; }
  std::string const& dst() const { return dst_; }
  std::vector<Elem> const& values() const { return values_; }
  std::size_t source_size() const { return values_.size(); }

  bool defined(Elem a) const { return values_[static_cast<std::size_t>(a)] != kUndefined; }
  Elem operator()(Elem a) const { return values_[static_cast<std::size_t>(a)]; }

  std::vector<Elem> domain() const;
  std::vector<Elem> image() const;
  std::size_t domain_size() const;
  bool is_total() const { return domain_size() == values_.size(); }
  bool is_empty() const { return domain_size() == 0; }
  bool is_injective() const;

  // The same assignment re-typed between other algebras (e.g. a map of
  // Z_5 read as a map of the sort P-).
  PartialMap retyped(std::string src, std::string dst) const { return {std::move(src), std::move(dst), values_}; }

  auto operator<=>(PartialMap const&) const = default;
  bool operator==(PartialMap const&) const = default;

 private:
  std::string src_;
  std::string dst_;
  std::vector<Elem> values_;
};

// Binary relation typed src x dst, pairs kept sorted and unique.
class Relation {
 public:
  Relation() = default;
  Relation(std::string src, std::string dst, std::vector<std::pair<Elem, Elem>> pairs);

  std::string const& src() const { return src_; }
  std::string const& dst() const { return dst_; }
  std::vector<std::pair<Elem, Elem>> const& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool contains(Elem a, Elem b) const;
  bool subset_of(Relation const& other) const;
  Relation converse() const;

  auto operator<=>(Relation const&) const = default;
  bool operator==(Relation const&) const = default;

 private:
  std::string src_;
  std::string dst_;
  std::vector<std::pair<Elem, Elem>> pairs_;
};

Relation graph_of(PartialMap const& h);

// Partition of a carrier. block_of()[a] numbers blocks in order of their
// least element, so equal partitions compare equal.
class Congruence {
 public:
  Congruence() = default;
  Congruence(std::string algebra, std::vector<Elem> block_of);

  std::string const& algebra() const { return algebra_; }
  std::vector<Elem> const& block_of() const { return block_of_; }
  std::size_t block_count() const;
  std::vector<std::vector<Elem>> blocks() const;
  bool related(Elem a, Elem b) const { return block_of_[static_cast<std::size_t>(a)] == block_of_[static_cast<std::size_t>(b)]; }

  auto operator<=>(Congruence const&) const = default;
  bool operator==(Congruence const&) const = default;

 private:
  std::string algebra_;
  std::vector<Elem> block_of_;
};

// A fixed collection of algebras, looked up by id, over which partial maps
// are composed.
class AlgebraFamily {
 public:
  AlgebraFamily() = default;
  explicit AlgebraFamily(std::vector<FiniteAlgebra> algebras);

  void add(FiniteAlgebra a);
  FiniteAlgebra const& get(std::string_view id) const;
  bool contains(std::string_view id) const;
  std::vector<FiniteAlgebra> const& algebras() const { return algebras_; }
  std::size_t size() const { return algebras_.size(); }

 private:
  std::vector<FiniteAlgebra> algebras_;
};

}  // namespace natdual

#endif  // NATDUAL_PARTIAL_MAP_HPP
