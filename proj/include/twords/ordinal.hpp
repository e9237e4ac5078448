#pragma once

// Ordinals below epsilon_0 in hereditary Cantor normal form, bounds
// (omega^b and omega^b + 1) and the rank combinatorics used by product_rank.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twords/error.hpp"

namespace twords {

class Ordinal;

/// One CNF term omega^exponent * coefficient.
struct CnfTerm;

class Ordinal {
 public:
  Ordinal() = default;  // zero

  static Ordinal finite(std::uint64_t n);
  static Ordinal omega();
  /// omega^exponent
  static Ordinal omega_pow(const Ordinal& exponent);
  /// Builds from terms; throws if exponents are not strictly decreasing or
  /// a coefficient is zero.
  static Ordinal from_terms(std::vector<CnfTerm> terms);

  const std::vector<CnfTerm>& terms() const;

  bool is_zero() const;
  bool is_finite() const;
  /// Value of a finite ordinal.
  std::uint64_t finite_value() const;
  bool is_successor() const;
  bool is_limit() const;

  /// Splits into (limit part, finite tail): a = lambda + n.
  std::pair<Ordinal, std::uint64_t> split_finite_tail() const;

  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<CnfTerm> terms_;
};

struct CnfTerm {
  Ordinal exponent;
  std::uint64_t coefficient = 1;

  friend bool operator==(const CnfTerm&, const CnfTerm&) = default;
};

// ---------------------------------------------------------------------------

inline const std::vector<CnfTerm>& Ordinal::terms() const { return terms_; }
inline bool Ordinal::is_zero() const { return terms_.empty(); }
inline bool Ordinal::is_limit() const { return !is_zero() && !is_successor(); }

inline Ordinal Ordinal::finite(std::uint64_t n) {
  Ordinal r;
  if (n > 0) r.terms_.push_back({Ordinal{}, n});
  return r;
}

inline Ordinal Ordinal::omega() { return omega_pow(finite(1)); }

inline Ordinal Ordinal::omega_pow(const Ordinal& exponent) {
  Ordinal r;
  r.terms_.push_back({exponent, 1});
  return r;
}

inline Ordinal Ordinal::from_terms(std::vector<CnfTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) throw invalid_argument("CNF coefficient must be positive");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
      throw invalid_argument("CNF exponents must be strictly decreasing");
  }
  Ordinal r;
  r.terms_ = std::move(terms);
  return r;
}

inline bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

inline std::uint64_t Ordinal::finite_value() const {
  if (!is_finite()) throw invalid_argument("ordinal is not finite");
  return terms_.empty() ? 0 : terms_[0].coefficient;
}

inline bool Ordinal::is_successor() const {
  return !terms_.empty() && terms_.back().exponent.is_zero();
}

inline std::pair<Ordinal, std::uint64_t> Ordinal::split_finite_tail() const {
  if (!is_successor()) return {*this, 0};
  Ordinal lambda;
  lambda.terms_.assign(terms_.begin(), terms_.end() - 1);
  return {lambda, terms_.back().coefficient};
}

inline std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].exponent <=> b.terms_[i].exponent; c != 0) return c;
    if (auto c = a.terms_[i].coefficient <=> b.terms_[i].coefficient; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

inline bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms_ == b.terms_; }

/// Ordinal sum: terms of a below the leading exponent of b are absorbed.
inline Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& lead = b.terms().front().exponent;
  std::vector<CnfTerm> out;
  for (const auto& t : a.terms()) {
    if (t.exponent > lead) {
      out.push_back(t);
    } else if (t.exponent == lead) {
      out.push_back({lead, t.coefficient + b.terms().front().coefficient});
      out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
      return Ordinal::from_terms(std::move(out));
    } else {
      break;
    }
  }
  out.insert(out.end(), b.terms().begin(), b.terms().end());
  return Ordinal::from_terms(std::move(out));
}

/// Hessenberg sum: merge the two exponent multisets in decreasing order.
inline Ordinal natural_sum(const Ordinal& a, const Ordinal& b) {
  std::vector<CnfTerm> out;
  auto i = a.terms().begin();
  auto j = b.terms().begin();
  while (i != a.terms().end() || j != b.terms().end()) {
    if (j == b.terms().end() || (i != a.terms().end() && i->exponent > j->exponent)) {
      out.push_back(*i++);
    } else if (i == a.terms().end() || j->exponent > i->exponent) {
      out.push_back(*j++);
    } else {
      out.push_back({i->exponent, i->coefficient + j->coefficient});
      ++i;
      ++j;
    }
  }
  return Ordinal::from_terms(std::move(out));
}

/// True iff a = omega^b for some b. Zero is not indecomposable.
inline bool is_indecomposable(const Ordinal& a) {
  return a.terms().size() == 1 && a.terms()[0].coefficient == 1;
}

/// Weakly decreasing list of indecomposable summands of a.
inline std::vector<Ordinal> cnf_summands(const Ordinal& a) {
  std::vector<Ordinal> out;
  for (const auto& t : a.terms())
    for (std::uint64_t k = 0; k < t.coefficient; ++k) out.push_back(Ordinal::omega_pow(t.exponent));
  return out;
}

/// A critical ordinal satisfies omega^d = d. None exist below epsilon_0,
/// so this is false for every representable value.
inline bool is_critical(const Ordinal& d) { return Ordinal::omega_pow(d) == d; }

/// a + 1 when a = d + n with d critical, otherwise a. Guarantees
/// a < omega^result.
inline Ordinal skip_critical(const Ordinal& a) {
  auto [lambda, n] = a.split_finite_tail();
  Ordinal result = is_critical(lambda) ? a + Ordinal::finite(1) : a;
  if (!(a < Ordinal::omega_pow(result)))
    throw invariant_violation("skip_critical: a < omega^result does not hold");
  return result;
}

// ---------------------------------------------------------------------------
// Bounds

/// omega^base_exponent, or omega^base_exponent + 1 when plus_one is set.
struct Bound {
  Ordinal base_exponent;
  bool plus_one = false;

  static Bound omega_pow(Ordinal beta) { return {std::move(beta), false}; }
  static Bound omega_pow_succ(Ordinal beta) { return {std::move(beta), true}; }
  /// The bound omega^0 + 1 = 2, i.e. the exponent of F^?.
  static Bound unit_succ() { return {Ordinal{}, true}; }
  /// Returns the bound equal to o, if o is a bound.
  static std::optional<Bound> from_ordinal(const Ordinal& o);

  Ordinal to_ordinal() const;

  bool is_trivial() const { return base_exponent.is_zero() && !plus_one; }
  bool is_proper() const { return !base_exponent.is_zero(); }
  bool is_nontrivial() const { return !is_trivial(); }
  bool is_unit_succ() const { return base_exponent.is_zero() && plus_one; }
  bool is_decomposable() const { return plus_one; }

  friend bool operator==(const Bound&, const Bound&) = default;
  friend std::strong_ordering operator<=>(const Bound& a, const Bound& b) {
    if (auto c = a.base_exponent <=> b.base_exponent; c != 0) return c;
    return static_cast<int>(a.plus_one) <=> static_cast<int>(b.plus_one);
  }
};

inline std::optional<Bound> Bound::from_ordinal(const Ordinal& o) {
  const auto& t = o.terms();
  if (t.size() == 1 && t[0].coefficient == 1) return Bound{t[0].exponent, false};
  if (t.size() == 1 && t[0].exponent.is_zero() && t[0].coefficient == 2) return Bound{Ordinal{}, true};
  if (t.size() == 2 && t[0].coefficient == 1 && t[1].exponent.is_zero() && t[1].coefficient == 1)
    return Bound{t[0].exponent, true};
  return std::nullopt;
}

inline Ordinal Bound::to_ordinal() const {
  Ordinal r = Ordinal::omega_pow(base_exponent);
  return plus_one ? r + Ordinal::finite(1) : r;
}

/// Rank of a proper bound among all proper bounds below or equal to it:
/// omega^n -> 2n-2, omega^n+1 -> 2n-1, omega^(l+n) -> l+2n,
/// omega^(l+n)+1 -> l+2n+1 (l a limit).
inline Ordinal bound_rank(const Bound& g) {
  if (!g.is_proper()) throw invalid_argument("bound_rank is defined on proper bounds only");
  auto [lambda, n] = g.base_exponent.split_finite_tail();
  if (lambda.is_zero()) return Ordinal::finite(2 * n - 2 + (g.plus_one ? 1 : 0));
  return lambda + Ordinal::finite(2 * n + (g.plus_one ? 1 : 0));
}

}  // namespace twords

namespace twords {

/// Canonical text form: `w^2+w*3+1`, `w^(w+1)`, `0`.
inline std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += '+';
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += 'w';
    if (t.exponent.is_finite()) {
      if (t.exponent.finite_value() != 1) out += '^' + std::to_string(t.exponent.finite_value());
    } else {
      out += "^(" + to_string(t.exponent) + ')';
    }
    if (t.coefficient != 1) out += '*' + std::to_string(t.coefficient);
  }
  return out;
}

inline std::string to_string(const Bound& g) { return to_string(g.to_ordinal()); }

}  // namespace twords
