#pragma once

// Instance generators shared by the unit tests and the acceptance harness.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "twords/twords.hpp"

namespace twords::testing {

struct NamedSpace {
  std::string name;
  SpacePtr space;
};

/// Every poset on at most three points, up to isomorphism.
inline std::vector<NamedSpace> posets_up_to_3() {
  using P = std::vector<std::pair<std::string, std::string>>;
  return {
      {"point", SpaceDef::finite_poset({"a"}, {})},
      {"antichain2", SpaceDef::finite_poset({"a", "b"}, {})},
      {"chain2", SpaceDef::finite_poset({"a", "b"}, P{{"a", "b"}})},
      {"antichain3", SpaceDef::finite_poset({"a", "b", "c"}, {})},
      {"chain3", SpaceDef::finite_poset({"a", "b", "c"}, P{{"a", "b"}, {"b", "c"}})},
      {"chain2+point", SpaceDef::finite_poset({"a", "b", "c"}, P{{"a", "b"}})},
      {"vee", SpaceDef::finite_poset({"a", "b", "c"}, P{{"a", "c"}, {"b", "c"}})},
      {"wedge", SpaceDef::finite_poset({"a", "b", "c"}, P{{"a", "b"}, {"a", "c"}})},
  };
}

/// A spread of four-point posets on top of the three-point ones.
inline std::vector<NamedSpace> posets_up_to_4() {
  using P = std::vector<std::pair<std::string, std::string>>;
  auto out = posets_up_to_3();
  out.push_back({"antichain4", SpaceDef::finite_poset({"a", "b", "c", "d"}, {})});
  out.push_back({"chain4", SpaceDef::finite_poset({"a", "b", "c", "d"}, P{{"a", "b"}, {"b", "c"}, {"c", "d"}})});
  out.push_back({"diamond", SpaceDef::finite_poset({"a", "b", "c", "d"}, P{{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}})});
  out.push_back({"vee+point", SpaceDef::finite_poset({"a", "b", "c", "d"}, P{{"a", "c"}, {"b", "c"}})});
  out.push_back({"N", SpaceDef::finite_poset({"a", "b", "c", "d"}, P{{"a", "c"}, {"b", "c"}, {"b", "d"}})});
  return out;
}

inline Bound bound(const char* text) { return parse_bound(text); }

inline std::vector<Bound> omega_fragment_bounds() { return {bound("2"), bound("w")}; }

inline std::vector<Bound> wide_bounds() {
  return {bound("2"), bound("w"), bound("w+1"), bound("w^2"), bound("w^2+1")};
}

/// Every valid atom with the given exponents.
inline std::vector<Atom> all_atoms(const SpacePtr& space, const std::vector<Bound>& exponents) {
  std::vector<Atom> out;
  for (const auto& f : all_closed_sets(space)) {
    if (f.is_empty()) continue;
    for (const auto& g : exponents)
      if (!g.is_unit_succ() || is_irreducible(f)) out.emplace_back(f, g);
  }
  return out;
}

/// Every atom sequence of length <= max_atoms (not reduced).
inline std::vector<Product> all_sequences(const std::vector<Atom>& atoms, std::size_t max_atoms) {
  std::vector<Product> out{Product{}};
  std::vector<std::vector<Atom>> layer{{}};
  for (std::size_t len = 1; len <= max_atoms; ++len) {
    std::vector<std::vector<Atom>> next;
    for (const auto& seq : layer)
      for (const auto& a : atoms) {
        auto s = seq;
        s.push_back(a);
        out.emplace_back(s);
        next.push_back(std::move(s));
      }
    layer = std::move(next);
  }
  return out;
}

/// Reduced forms of every sequence of length <= max_atoms, without repeats,
/// in structural order.
inline std::vector<Product> reduced_family(const SpacePtr& space, const std::vector<Bound>& exponents,
                                           std::size_t max_atoms) {
  std::vector<Product> out;
  for (const auto& p : all_sequences(all_atoms(space, exponents), max_atoms)) out.push_back(reduce(p));
  std::sort(out.begin(), out.end(), [](const Product& a, const Product& b) { return structural_compare(a, b) < 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline Product random_sequence(std::mt19937& rng, const std::vector<Atom>& atoms, std::size_t max_atoms) {
  std::uniform_int_distribution<std::size_t> len(0, max_atoms);
  std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
  std::vector<Atom> out;
  for (std::size_t n = len(rng); n > 0; --n) out.push_back(atoms[pick(rng)]);
  return Product(std::move(out));
}

/// Membership of every word up to a length, one bit per word in
/// enumeration order.
class WordTable {
 public:
  WordTable(const SpacePtr& space, std::size_t max_length)
      : space_(space), words_(oracle::enumerate(*space, max_length)) {}

  const std::vector<FiniteWord>& words() const { return words_; }
  const SpacePtr& space() const { return space_; }

  boost::dynamic_bitset<> members(const Product& p) const {
    boost::dynamic_bitset<> bits(words_.size());
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (oracle::matches(words_[k], p)) bits.set(k);
    return bits;
  }

  /// Cached by printed form.
  const boost::dynamic_bitset<>& cached(const Product& p) {
    auto key = to_string(p);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(std::move(key), members(p)).first;
    return it->second;
  }

 private:
  SpacePtr space_;
  std::vector<FiniteWord> words_;
  std::map<std::string, boost::dynamic_bitset<>> cache_;
};

// ---------------------------------------------------------------------------
// Symbolic words

/// Indecomposable lengths up to w^2.
inline std::vector<Ordinal> word_lengths() {
  return {Ordinal::finite(1), Ordinal::omega(), Ordinal::omega_pow(Ordinal::finite(2))};
}

inline WordComponent random_component(std::mt19937& rng, const SpacePtr& space) {
  const auto lengths = word_lengths();
  std::uniform_int_distribution<std::size_t> pick_len(0, lengths.size() - 1);
  const Ordinal len = lengths[pick_len(rng)];
  if (!space->is_finite()) {
    std::uniform_int_distribution<int> coin(0, 3);
    if (!len.is_finite() && coin(rng) == 0) return {ClosedSet::whole(space), len};
    std::uniform_int_distribution<Point> pt(0, 4);
    std::vector<Point> pts{pt(rng)};
    if (!len.is_finite() && coin(rng) < 2) pts.push_back(pt(rng));
    return {ClosedSet::closure_of(space, pts), len};
  }
  std::uniform_int_distribution<Point> pt(0, space->size() - 1);
  if (len.is_finite()) return WordComponent::letter(space, pt(rng));
  std::vector<Point> pts{pt(rng)};
  std::uniform_int_distribution<int> extra(0, 2);
  for (int k = extra(rng); k > 0; --k) pts.push_back(pt(rng));
  return {ClosedSet::closure_of(space, pts), len};
}

inline SymbolicWord random_word(std::mt19937& rng, const SpacePtr& space, std::size_t max_components) {
  std::uniform_int_distribution<std::size_t> len(0, max_components);
  std::vector<WordComponent> cs;
  for (std::size_t n = len(rng); n > 0; --n) cs.push_back(random_component(rng, space));
  return SymbolicWord(std::move(cs));
}

}  // namespace twords::testing
