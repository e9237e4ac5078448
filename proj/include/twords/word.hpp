#pragma once

// Symbolic transfinite words, written as finite concatenations of
// topologically indecomposable components (support, indecomposable length).
//
// A component (F, l) stands for the word of length l that cycles through a
// fixed generator list of F (the maximal points of a finite poset, or
// 0 1 2 ... for the whole cofinite space). Every non-empty suffix of such a
// word contains the whole word as a subword, so it is topologically
// indecomposable with closure F^{<l+1}.

#include <string>
#include <utility>
#include <vector>

#include "twords/error.hpp"
#include "twords/ordinal.hpp"
#include "twords/product.hpp"
#include "twords/space.hpp"

namespace twords {

class WordComponent {
 public:
  WordComponent(ClosedSet support, Ordinal length) : support_(std::move(support)), length_(std::move(length)) {
    if (!is_indecomposable(length_)) throw invalid_argument("component length " + to_string(length_) + " is not indecomposable");
    if (support_.is_empty()) throw invalid_argument("component support must be non-empty");
    if (length_ == Ordinal::finite(1) && !is_irreducible(support_))
      throw invalid_argument("a one-letter component needs a point closure as support");
    if (length_.is_finite() && !support_.space()->is_finite() && support_.is_whole())
      throw invalid_argument("the whole cofinite space is only the support of infinite components");
  }

  /// The one-letter component x.
  static WordComponent letter(const SpacePtr& space, Point x) {
    const Point pts[] = {x};
    return {ClosedSet::closure_of(space, pts), Ordinal::finite(1)};
  }

  const ClosedSet& support() const { return support_; }
  const Ordinal& length() const { return length_; }
  bool is_letter() const { return length_ == Ordinal::finite(1); }

  friend bool operator==(const WordComponent&, const WordComponent&) = default;

 private:
  ClosedSet support_;
  Ordinal length_;
};

class SymbolicWord {
 public:
  SymbolicWord() = default;  // epsilon
  explicit SymbolicWord(std::vector<WordComponent> components) : components_(std::move(components)) {
    for (const auto& c : components_)
      if (c.support().space() != components_.front().support().space()) throw space_mismatch();
  }
  static SymbolicWord from_letters(const SpacePtr& space, const FiniteWord& letters) {
    std::vector<WordComponent> cs;
    for (Point x : letters) cs.push_back(WordComponent::letter(space, x));
    return SymbolicWord(std::move(cs));
  }

  const std::vector<WordComponent>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }
  bool empty() const { return components_.empty(); }

  Ordinal length() const {
    Ordinal l;
    for (const auto& c : components_) l = l + c.length();
    return l;
  }

  friend bool operator==(const SymbolicWord&, const SymbolicWord&) = default;

 private:
  std::vector<WordComponent> components_;
};

/// Letters of a word whose components all have length 1.
inline FiniteWord to_finite_word(const SymbolicWord& w) {
  FiniteWord out;
  for (const auto& c : w.components()) {
    if (!c.is_letter()) throw invalid_argument("word is not finite");
    out.push_back(c.support().generators().front());
  }
  return out;
}

/// Closure of w: the reduced product of supp(w_i)^{<|w_i|+1}.
inline Product word_closure(const SymbolicWord& w) {
  std::vector<Preatom> factors;
  for (const auto& c : w.components()) factors.push_back({c.support(), c.length() + Ordinal::finite(1)});
  return reduce(factors);
}

/// Specialization preorder: w <= w' iff the components of w split into
/// consecutive (possibly empty) blocks, one per component w'_j, each block
/// having support inside supp(w'_j) and total length at most |w'_j|.
inline bool word_leq(const SymbolicWord& w, const SymbolicWord& w2) {
  const std::size_t m = w.size();
  const std::size_t n = w2.size();
  // reach[j][i]: the first i components of w fit the first j of w2
  std::vector<std::vector<bool>> reach(n + 1, std::vector<bool>(m + 1, false));
  reach[0][0] = true;
  for (std::size_t j = 1; j <= n; ++j) {
    const WordComponent& target = w2.components()[j - 1];
    for (std::size_t k = 0; k <= m; ++k) {
      if (!reach[j - 1][k]) continue;
      reach[j][k] = true;  // empty block
      Ordinal len;
      for (std::size_t i = k; i < m; ++i) {
        const WordComponent& c = w.components()[i];
        if (!subset(c.support(), target.support())) break;
        len = len + c.length();
        if (len > target.length()) break;
        reach[j][i + 1] = true;
      }
    }
  }
  return reach[n][m];
}

/// w belongs to the closed set U.
inline bool word_member(const SymbolicWord& w, const ProductUnion& u) {
  return union_includes(ProductUnion::single(word_closure(w)), u);
}

/// Scattered-subword embedding of finite words with letters compared in the
/// base order; the leftmost greedy match is optimal.
inline bool higman_leq(const SpaceDef& space, const FiniteWord& u, const FiniteWord& v) {
  std::size_t j = 0;
  for (Point x : u) {
    while (j < v.size() && !space.leq(x, v[j])) ++j;
    if (j == v.size()) return false;
    ++j;
  }
  return true;
}

inline bool higman_leq(const SymbolicWord& u, const SymbolicWord& v) {
  if (u.empty()) return true;
  if (v.empty()) {
    to_finite_word(u);
    return false;
  }
  return higman_leq(*v.components().front().support().space(), to_finite_word(u), to_finite_word(v));
}

// ---------------------------------------------------------------------------
// Text

inline std::string to_string(const WordComponent& c) {
  if (c.is_letter()) return to_string(c.support());
  std::string len = to_string(c.length());
  if (len.find_first_of("^+*") != std::string::npos) len = "(" + len + ")";
  return "(" + to_string(c.support()) + ")^" + len;
}

/// Components separated by a space; `eps` for the empty word.
inline std::string to_string(const SymbolicWord& w) {
  if (w.empty()) return "eps";
  std::string out;
  for (const auto& c : w.components()) {
    if (!out.empty()) out += ' ';
    out += to_string(c);
  }
  return out;
}

inline std::string to_string(const SpaceDef& space, const FiniteWord& w) {
  if (w.empty()) return "eps";
  std::string out;
  for (Point x : w) {
    if (!out.empty()) out += ' ';
    out += space.point_name(x);
  }
  return out;
}

}  // namespace twords
