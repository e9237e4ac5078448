#pragma once

// Brute-force ground truth on finite words. Nothing here calls the product
// algorithms: membership is decided directly from the definition of
// concatenation, so agreement with the algebra is a real cross-check.

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "twords/error.hpp"
#include "twords/product.hpp"
#include "twords/space.hpp"

namespace twords::oracle {

/// w splits into |P| consecutive segments, segment i with letters in F_i
/// and length below g_i.
inline bool matches(const FiniteWord& w, const Product& p) {
  const std::size_t len = w.size();
  // reach[k]: the first k letters are consumed by the atoms seen so far
  std::vector<bool> reach(len + 1, false);
  reach[0] = true;
  for (const auto& atom : p.atoms()) {
    const Ordinal cap = atom.exponent().to_ordinal();
    const std::size_t longest = cap.is_finite() ? cap.finite_value() - 1 : len;
    std::vector<bool> next(len + 1, false);
    for (std::size_t k = 0; k <= len; ++k) {
      if (!reach[k]) continue;
      for (std::size_t e = k; e <= len; ++e) {
        if (e - k > longest) break;
        if (e > k && !atom.support().contains(w[e - 1])) break;
        next[e] = true;
      }
    }
    reach = std::move(next);
  }
  return reach[len];
}

inline bool matches_any(const FiniteWord& w, std::span<const Product> ps) {
  for (const auto& p : ps)
    if (matches(w, p)) return true;
  return false;
}

/// Words over a finite poset up to a maximal length, shortest first and
/// lexicographic within a length (letters in declaration order).
class WordEnumerator {
 public:
  WordEnumerator(const SpaceDef& space, std::size_t max_length) : alphabet_(space.size()), max_length_(max_length) {
    if (!space.is_finite()) throw invalid_argument("cannot enumerate words over an infinite alphabet");
  }

  std::optional<FiniteWord> next() {
    if (done_) return std::nullopt;
    FiniteWord out = current_;
    advance();
    return out;
  }

  void reset() {
    current_.clear();
    done_ = false;
  }

 private:
  void advance() {
    std::size_t i = current_.size();
    while (i > 0) {
      --i;
      if (++current_[i] < alphabet_) return;
      current_[i] = 0;
    }
    if (current_.size() == max_length_ || alphabet_ == 0) {
      done_ = true;
      return;
    }
    current_.assign(current_.size() + 1, 0);
  }

  std::size_t alphabet_;
  std::size_t max_length_;
  FiniteWord current_;
  bool done_ = false;
};

inline std::vector<FiniteWord> enumerate(const SpaceDef& space, std::size_t max_length) {
  std::vector<FiniteWord> out;
  WordEnumerator it(space, max_length);
  while (auto w = it.next()) out.push_back(std::move(*w));
  return out;
}

namespace detail {

// Finite-word automaton of a product. State 0 is "nothing read yet", state
// i+1 is "inside atom i". On finite words an exponent of at least w never
// caps a segment, and the only finite bound exponent is 2 (one letter).
class ProductAutomaton {
 public:
  explicit ProductAutomaton(const Product& p) : p_(p) {
    if (p.size() >= 63) throw invalid_argument("product too long for the oracle automaton");
  }

  static std::uint64_t start() { return 1; }

  std::uint64_t step(std::uint64_t states, Point x) const {
    std::uint64_t out = 0;
    const std::size_t n = p_.size();
    for (std::size_t s = 0; s <= n; ++s) {
      if (!(states >> s & 1)) continue;
      // s == i+1: may continue atom i when it is uncapped
      if (s > 0 && !p_[s - 1].exponent().is_unit_succ() && p_[s - 1].support().contains(x)) out |= 1ull << s;
      for (std::size_t j = s; j < n; ++j)
        if (p_[j].support().contains(x)) out |= 1ull << (j + 1);
    }
    return out;
  }

 private:
  const Product& p_;
};

}  // namespace detail

/// The shortlex-least word of length <= max_length in P and in no member
/// of Q. Equivalent to scanning `enumerate(space, max_length)`, but words
/// reaching the same automaton states are explored once.
inline std::optional<FiniteWord> find_inclusion_counterexample(const SpaceDef& space, const Product& p,
                                                               std::span<const Product> q,
                                                               std::size_t max_length) {
  if (!space.is_finite()) throw invalid_argument("cannot enumerate words over an infinite alphabet");
  const detail::ProductAutomaton pa(p);
  std::vector<detail::ProductAutomaton> qa;
  for (const auto& m : q) qa.emplace_back(m);

  // a configuration: P states followed by the states of every Q member
  using Config = std::vector<std::uint64_t>;
  auto refutes = [](const Config& c) {
    if (c[0] == 0) return false;
    for (std::size_t k = 1; k < c.size(); ++k)
      if (c[k] != 0) return false;
    return true;
  };
  struct Node {
    Config config;
    std::size_t parent;
    Point letter;
  };
  std::vector<Node> nodes{{Config(q.size() + 1, detail::ProductAutomaton::start()), 0, 0}};
  std::set<Config> seen{nodes[0].config};
  auto word_of = [&](std::size_t k) {
    FiniteWord w;
    for (; k != 0; k = nodes[k].parent) w.push_back(nodes[k].letter);
    return FiniteWord(w.rbegin(), w.rend());
  };
  if (refutes(nodes[0].config)) return FiniteWord{};
  std::size_t level_begin = 0;
  for (std::size_t depth = 0; depth < max_length; ++depth) {
    const std::size_t level_end = nodes.size();
    for (std::size_t k = level_begin; k < level_end; ++k) {
      for (Point x = 0; x < space.size(); ++x) {
        Config next(nodes[k].config.size());
        next[0] = pa.step(nodes[k].config[0], x);
        if (next[0] == 0) continue;  // dead for P
        for (std::size_t m = 0; m < qa.size(); ++m) next[m + 1] = qa[m].step(nodes[k].config[m + 1], x);
        if (!seen.insert(next).second) continue;
        nodes.push_back({std::move(next), k, x});
        if (refutes(nodes.back().config)) return word_of(nodes.size() - 1);
      }
    }
    if (nodes.size() == level_end) break;
    level_begin = level_end;
  }
  return std::nullopt;
}

inline std::optional<FiniteWord> find_inclusion_counterexample(const SpaceDef& space, const Product& p,
                                                               const ProductUnion& q, std::size_t max_length) {
  return find_inclusion_counterexample(space, p, std::span<const Product>(q.members()), max_length);
}

/// Same contract, by scanning every word up to max_length.
inline std::optional<FiniteWord> find_inclusion_counterexample_by_enumeration(const SpaceDef& space,
                                                                              const Product& p,
                                                                              std::span<const Product> q,
                                                                              std::size_t max_length) {
  WordEnumerator it(space, max_length);
  while (auto w = it.next())
    if (matches(*w, p) && !matches_any(*w, q)) return w;
  return std::nullopt;
}

}  // namespace twords::oracle
