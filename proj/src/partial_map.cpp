#include "natdual/partial_map.hpp"

#include <algorithm>

#include "natdual/error.hpp"

namespace natdual {


std::vector<Elem> PartialMap::domain() const {
  std::vector<Elem> d;
  for (std::size_t a = 0; a < values_.size(); ++a)
    if (values_[a] != kUndefined) d.push_back(static_cast<Elem>(a));
  return d;
}

std::vector<Elem> PartialMap::image() const {
  std::vector<Elem> img;
  for (Elem v : values_)
    if (v != kUndefined) img.push_back(v);
  std::ranges::sort(img);
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

std::size_t PartialMap::domain_size() const {
  return static_cast<std::size_t>(std::ranges::count_if(values_, [](Elem v) { return v != kUndefined; }));
}

bool PartialMap::is_injective() const { return image().size() == domain_size(); }

Relation::Relation(std::string src, std::string dst, std::vector<std::pair<Elem, Elem>> pairs)
    : src_(std::move(src)), dst_(std::move(dst)), pairs_(std::move(pairs)) {
  std::ranges::sort(pairs_);
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool Relation::contains(Elem a, Elem b) const {
  return std::ranges::binary_search(pairs_, std::pair{a, b});
}

bool Relation::subset_of(Relation const& other) const {
  return std::ranges::includes(other.pairs_, pairs_);
}

Relation Relation::converse() const {
  std::vector<std::pair<Elem, Elem>> flipped;
  flipped.reserve(pairs_.size());
  for (auto [a, b] : pairs_) flipped.emplace_back(b, a);
  return {dst_, src_, std::move(flipped)};
}

Relation graph_of(PartialMap const& h) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem a : h.domain()) pairs.emplace_back(a, h(a));
  return {h.src(), h.dst(), std::move(pairs)};
}

namespace {

std::vector<Elem> canonical_blocks(std::vector<Elem> const& raw) {
  std::vector<Elem> renumber(raw.size() + 1, kUndefined);
  std::vector<Elem> out(raw.size());
  Elem next = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto r = static_cast<std::size_t>(raw[i]);
    if (r >= renumber.size()) renumber.resize(r + 1, kUndefined);
    if (renumber[r] == kUndefined) renumber[r] = next++;
    out[i] = renumber[r];
  }
  return out;
}

}  // namespace

Congruence::Congruence(std::string algebra, std::vector<Elem> block_of)
    : algebra_(std::move(algebra)), block_of_(canonical_blocks(block_of)) {}

std::size_t Congruence::block_count() const {
  if (block_of_.empty()) return 0;
  return static_cast<std::size_t>(*std::ranges::max_element(block_of_)) + 1;
}

std::vector<std::vector<Elem>> Congruence::blocks() const {
  std::vector<std::vector<Elem>> out(block_count());
  for (std::size_t a = 0; a < block_of_.size(); ++a)
    out[static_cast<std::size_t>(block_of_[a])].push_back(static_cast<Elem>(a));
  return out;
}

AlgebraFamily::AlgebraFamily(std::vector<FiniteAlgebra> algebras) {
  for (auto& a : algebras) add(std::move(a));
}

void AlgebraFamily::add(FiniteAlgebra a) {
  if (contains(a.id())) throw Error(ErrorKind::invalid_parameter, "duplicate algebra id " + a.id());
  algebras_.push_back(std::move(a));
}

FiniteAlgebra const& AlgebraFamily::get(std::string_view id) const {
  for (auto const& a : algebras_)
    if (a.id() == id) return a;
  throw Error(ErrorKind::type_mismatch, "no algebra named " + std::string(id) + " in family");
}

bool AlgebraFamily::contains(std::string_view id) const {
  return std::ranges::any_of(algebras_, [id](FiniteAlgebra const& a) { return a.id() == id; });
}

}  // namespace natdual
