#pragma once

// Transfinite products F1^{<g1} ... Fn^{<gn} over a base space: reduction
// to canonical form, inclusion, intersection, alpha-products and the
// ordinal rank function.

#include <algorithm>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twords/error.hpp"
#include "twords/ordinal.hpp"
#include "twords/space.hpp"

namespace twords {

/// F^{<g} with g a non-trivial bound, F non-empty, and F irreducible when
/// g = omega^0+1.
class Atom {
 public:
  Atom(ClosedSet support, Bound exponent) : support_(std::move(support)), exponent_(std::move(exponent)) {
    if (exponent_.is_trivial()) throw invalid_argument("atom exponent must be a non-trivial bound");
    if (support_.is_empty()) throw invalid_argument("atom support must be non-empty");
    if (exponent_.is_unit_succ() && !is_irreducible(support_))
      throw invalid_argument("support of an F^{<2} atom must be irreducible");
  }

  const ClosedSet& support() const { return support_; }
  const Bound& exponent() const { return exponent_; }

  friend bool operator==(const Atom&, const Atom&) = default;

 private:
  ClosedSet support_;
  Bound exponent_;
};

/// A finite sequence of atoms; the empty sequence denotes {epsilon}.
class Product {
 public:
  Product() = default;
  explicit Product(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    for (std::size_t i = 1; i < atoms_.size(); ++i)
      if (atoms_[i].support().space() != atoms_[0].support().space()) throw space_mismatch();
  }

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  const Atom& operator[](std::size_t i) const { return atoms_[i]; }

  friend bool operator==(const Product&, const Product&) = default;

 private:
  std::vector<Atom> atoms_;
};

/// F^{<a} with an arbitrary ordinal exponent.
struct Preatom {
  ClosedSet support;
  Ordinal exponent;
};

inline std::strong_ordering structural_compare(const Product& p, const Product& q) {
  const std::size_t n = std::min(p.size(), q.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = p[i].exponent() <=> q[i].exponent(); c != 0) return c;
    if (auto c = structural_compare(p[i].support(), q[i].support()); c != 0) return c;
  }
  return p.size() <=> q.size();
}

// ---------------------------------------------------------------------------
// Canonical form

/// Checks every adjacent pair against the four clauses defining reduced
/// sequences (supports are non-empty by the Atom invariant).
inline bool is_reduced(const Product& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const ClosedSet& f = p[i].support();
    const ClosedSet& f2 = p[i + 1].support();
    const Bound& g = p[i].exponent();
    const Bound& g2 = p[i + 1].exponent();
    if (g < g2 && subset(f, f2)) return false;
    if (g == g2 && !g.is_decomposable() && (subset(f, f2) || subset(f2, f))) return false;
    if (!g.is_decomposable() && g > g2 && subset(f2, f)) return false;
  }
  return true;
}

namespace detail {

// F^{<g} F'^{<g'} = F'^{<g'}
inline bool absorbed_by_next(const Atom& a, const Atom& b) {
  const Bound& g = a.exponent();
  const Bound& g2 = b.exponent();
  return subset(a.support(), b.support()) && (g < g2 || (g == g2 && !g.is_decomposable()));
}

// F^{<g} F'^{<g'} = F^{<g}
inline bool absorbs_next(const Atom& a, const Atom& b) {
  const Bound& g = a.exponent();
  return !g.is_decomposable() && b.exponent() <= g && subset(b.support(), a.support());
}

}  // namespace detail

/// Rewrites a factor sequence into its unique reduced form. Exponents must
/// be bounds; factors with an empty support or a trivial exponent are
/// dropped.
inline Product reduce(std::span<const Preatom> factors) {
  std::vector<Atom> stack;
  for (const auto& pa : factors) {
    auto g = Bound::from_ordinal(pa.exponent);
    if (!g) throw invalid_argument("factor exponent " + to_string(pa.exponent) + " is not a bound");
    if (pa.support.is_empty() || g->is_trivial()) continue;
    stack.emplace_back(pa.support, *g);
    while (stack.size() >= 2) {
      const Atom& a = stack[stack.size() - 2];
      const Atom& b = stack.back();
      if (detail::absorbed_by_next(a, b)) {
        stack.erase(stack.end() - 2);
      } else if (detail::absorbs_next(a, b)) {
        stack.pop_back();
      } else {
        break;
      }
    }
  }
  return Product(std::move(stack));
}

inline std::vector<Preatom> to_preatoms(const Product& p) {
  std::vector<Preatom> out;
  out.reserve(p.size());
  for (const auto& a : p.atoms()) out.push_back({a.support(), a.exponent().to_ordinal()});
  return out;
}

inline Product reduce(const Product& p) {
  auto factors = to_preatoms(p);
  return reduce(factors);
}

// ---------------------------------------------------------------------------
// Inclusion

/// Decides P ⊆ Q. Walks both atom sequences once: every step drops the
/// head of P or of Q (or both).
inline bool product_includes(const Product& p, const Product& q) {
  std::size_t i = 0, j = 0;
  while (true) {
    if (i == p.size()) return true;
    if (j == q.size()) return false;
    const Atom& a = p[i];
    const Atom& b = q[j];
    const Bound& g = a.exponent();
    const Bound& g2 = b.exponent();
    if (g < g2 || (g == g2 && !g.is_decomposable())) {
      if (subset(a.support(), b.support()))
        ++i;
      else
        ++j;
    } else if (g > g2) {
      ++j;
    } else if (subset(a.support(), b.support())) {
      ++i;
      ++j;
    } else {
      ++j;
    }
  }
}

inline bool product_equal(const Product& p, const Product& q) {
  return product_includes(p, q) && product_includes(q, p);
}

// ---------------------------------------------------------------------------
// Unions

/// Finite union of reduced products kept as an inclusion antichain, members
/// sorted structurally.
class ProductUnion {
 public:
  ProductUnion() = default;  // the empty set

  /// Reduces every member and drops those included in another.
  static ProductUnion of(std::vector<Product> products);
  static ProductUnion single(const Product& p) { return of({p}); }

  const std::vector<Product>& members() const& { return members_; }
  std::vector<Product> members() && { return std::move(members_); }
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }

  friend bool operator==(const ProductUnion&, const ProductUnion&) = default;

 private:
  std::vector<Product> members_;
};

inline ProductUnion ProductUnion::of(std::vector<Product> products) {
  for (auto& p : products)
    if (!is_reduced(p)) p = reduce(p);
  std::sort(products.begin(), products.end(),
            [](const Product& a, const Product& b) { return structural_compare(a, b) < 0; });
  products.erase(std::unique(products.begin(), products.end()), products.end());
  ProductUnion u;
  for (std::size_t i = 0; i < products.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < products.size() && !redundant; ++j)
      redundant = j != i && product_includes(products[i], products[j]);
    if (!redundant) u.members_.push_back(products[i]);
  }
  return u;
}

/// U ⊆ V, checked memberwise: every member of U is irreducible, so it lies
/// in the union V only if it lies in one member.
inline bool union_includes(const ProductUnion& u, const ProductUnion& v) {
  return std::all_of(u.members().begin(), u.members().end(), [&](const Product& p) {
    return std::any_of(v.members().begin(), v.members().end(),
                       [&](const Product& q) { return product_includes(p, q); });
  });
}

inline bool union_equal(const ProductUnion& u, const ProductUnion& v) {
  return union_includes(u, v) && union_includes(v, u);
}

inline ProductUnion union_union(const ProductUnion& u, const ProductUnion& v) {
  std::vector<Product> all = u.members();
  all.insert(all.end(), v.members().begin(), v.members().end());
  return ProductUnion::of(std::move(all));
}

// ---------------------------------------------------------------------------
// Preatoms

/// Splits F^{<a} (a > 0) into factors with non-trivial bound exponents:
/// a = g1 + ... + gm in CNF gives F^{<g1+1} ... F^{<g(m-1)+1} F^{<gm},
/// the last factor dropped when gm = 1.
inline std::vector<Preatom> split_preatom(const Preatom& p) {
  if (p.exponent.is_zero()) throw invalid_argument("cannot split a preatom with exponent 0");
  const auto summands = cnf_summands(p.exponent);
  std::vector<Preatom> out;
  for (std::size_t i = 0; i + 1 < summands.size(); ++i)
    out.push_back({p.support, summands[i] + Ordinal::finite(1)});
  if (summands.back() != Ordinal::finite(1)) out.push_back({p.support, summands.back()});
  return out;
}

/// Rewrites an arbitrary preatom sequence as a union of reduced products.
inline ProductUnion normalize_preatoms(std::span<const Preatom> preatoms) {
  for (const auto& p : preatoms)
    if (p.exponent.is_zero()) return {};
  // choices[k] lists the alternatives for the k-th bound factor
  std::vector<std::vector<Preatom>> choices;
  for (const auto& p : preatoms) {
    if (p.support.is_empty()) continue;
    for (auto& f : split_preatom(p)) {
      if (Bound::from_ordinal(f.exponent)->is_unit_succ() && !is_irreducible(f.support)) {
        std::vector<Preatom> alts;
        for (auto& c : irreducible_components(f.support)) alts.push_back({std::move(c), f.exponent});
        choices.push_back(std::move(alts));
      } else {
        choices.push_back({std::move(f)});
      }
    }
  }
  std::vector<Product> products;
  std::vector<std::size_t> pick(choices.size(), 0);
  std::vector<Preatom> seq(choices.size());
  while (true) {
    for (std::size_t k = 0; k < choices.size(); ++k) seq[k] = choices[k][pick[k]];
    products.push_back(reduce(seq));
    std::size_t k = 0;
    while (k < choices.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
    if (k == choices.size()) break;
  }
  return ProductUnion::of(std::move(products));
}

// ---------------------------------------------------------------------------
// Intersection

namespace detail {

class Intersector {
 public:
  Intersector(const Product& p, const Product& q)
      : p_(p), q_(q), memo_((p.size() + 1) * (q.size() + 1)) {}

  const std::vector<Product>& at(std::size_t i, std::size_t j) {
    auto& slot = memo_[i * (q_.size() + 1) + j];
    if (!slot) slot = compute(i, j);
    return *slot;
  }

 private:
  // G^{<e} R for every tail R, distributing irreducible components of G
  // when e = omega^0+1.
  static void prepend(const ClosedSet& g, const Bound& e, const std::vector<Product>& tails,
                      std::vector<Product>& out) {
    if (g.is_empty() || e.is_trivial()) {
      out.insert(out.end(), tails.begin(), tails.end());
      return;
    }
    std::vector<ClosedSet> heads;
    if (e.is_unit_succ())
      heads = irreducible_components(g);
    else
      heads.push_back(g);
    for (const auto& h : heads) {
      for (const auto& t : tails) {
        std::vector<Preatom> seq;
        seq.reserve(t.size() + 1);
        seq.push_back({h, e.to_ordinal()});
        for (const auto& a : t.atoms()) seq.push_back({a.support(), a.exponent().to_ordinal()});
        out.push_back(reduce(seq));
      }
    }
  }

  std::vector<Product> compute(std::size_t i, std::size_t j) {
    if (i == p_.size() || j == q_.size()) return {Product{}};
    const Atom& a = p_[i];
    const Atom& b = q_[j];
    const ClosedSet g = intersect(a.support(), b.support());
    std::vector<Product> out;
    if (a.exponent() == b.exponent() && a.exponent().is_decomposable()) {
      const Bound lower = Bound::omega_pow(a.exponent().base_exponent);
      prepend(g, a.exponent(), at(i + 1, j + 1), out);
      prepend(g, lower, at(i + 1, j), out);
      prepend(g, lower, at(i, j + 1), out);
    } else {
      const bool a_first = a.exponent() <= b.exponent();
      const Bound& e = a_first ? a.exponent() : b.exponent();
      // where the shorter atom is still available afterwards, the common
      // prefix is a strict prefix of it, hence shorter than omega^beta
      const Bound kept = e.is_decomposable() ? Bound::omega_pow(e.base_exponent) : e;
      prepend(g, a_first ? e : kept, at(i + 1, j), out);
      prepend(g, a_first ? kept : e, at(i, j + 1), out);
    }
    return ProductUnion::of(std::move(out)).members();
  }

  const Product& p_;
  const Product& q_;
  std::vector<std::optional<std::vector<Product>>> memo_;
};

}  // namespace detail

/// P ∩ Q as an antichain of reduced products.
inline ProductUnion product_intersect(const Product& p, const Product& q) {
  detail::Intersector in(p, q);
  return ProductUnion::of(in.at(0, 0));
}

inline ProductUnion union_intersect(const ProductUnion& u, const ProductUnion& v) {
  std::vector<Product> all;
  for (const auto& p : u.members())
    for (const auto& q : v.members())
      for (const auto& r : product_intersect(p, q).members()) all.push_back(r);
  return ProductUnion::of(std::move(all));
}

// ---------------------------------------------------------------------------
// alpha-products

/// Every exponent is at most alpha, and only the last one may equal alpha
/// when alpha is decomposable.
inline bool is_alpha_product(const Product& p, const Bound& alpha) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Bound& g = p[i].exponent();
    if (g > alpha) return false;
    if (alpha.is_decomposable() && i + 1 < p.size() && g == alpha) return false;
  }
  return true;
}

/// Rewrites P (all exponents <= alpha) as a union of alpha-products with
/// the same words of length < alpha.
inline ProductUnion to_alpha_products(const Product& p, const Bound& alpha) {
  for (const auto& a : p.atoms())
    if (a.exponent() > alpha) throw invalid_argument("exponent " + to_string(a.exponent()) + " exceeds " + to_string(alpha));
  if (!alpha.is_decomposable()) return ProductUnion::single(p);
  const Ordinal lowered = Ordinal::omega_pow(alpha.base_exponent);
  std::vector<Product> out;
  std::vector<Preatom> prefix;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Atom& a = p[i];
    if (i + 1 < p.size() && a.exponent() == alpha) {
      auto seq = prefix;
      seq.push_back({a.support(), alpha.to_ordinal()});
      out.push_back(reduce(seq));
      prefix.push_back({a.support(), lowered});
    } else {
      prefix.push_back({a.support(), a.exponent().to_ordinal()});
    }
  }
  out.push_back(reduce(prefix));
  return ProductUnion::of(std::move(out));
}

/// Intersection of a union of products with X^{<alpha}, as alpha-products.
/// Exponents above alpha are first clamped to alpha.
inline ProductUnion alpha_normalize(const ProductUnion& u, const Bound& alpha) {
  std::vector<Product> out;
  for (const auto& p : u.members()) {
    std::vector<Preatom> clamped;
    for (const auto& a : p.atoms())
      clamped.push_back({a.support(), std::min(a.exponent(), alpha).to_ordinal()});
    for (const auto& q : normalize_preatoms(clamped).members())
      for (const auto& r : to_alpha_products(q, alpha).members()) out.push_back(r);
  }
  return ProductUnion::of(std::move(out));
}

// ---------------------------------------------------------------------------
// Rank

/// ||F|| for F^{<2}, else omega^{skip_critical(||F|| (+) bound_rank(g))}.
inline Ordinal atom_rank(const Atom& a) {
  const Ordinal s = stature(a.support());
  if (a.exponent().is_unit_succ()) return s;
  return Ordinal::omega_pow(skip_critical(natural_sum(s, bound_rank(a.exponent()))));
}

/// Natural sum of the atom ranks of a reduced product. Strictly monotone
/// under strict inclusion.
inline Ordinal product_rank(const Product& p) {
  if (!is_reduced(p)) throw invalid_argument("product_rank requires a reduced product");
  Ordinal r;
  for (const auto& a : p.atoms()) r = natural_sum(r, atom_rank(a));
  return r;
}

// ---------------------------------------------------------------------------
// Text

inline std::string to_string(const Atom& a) {
  return "[" + to_string(a.support()) + "]^{<" + to_string(a.exponent()) + "}";
}

/// Atoms separated by a space; `eps` for the empty product.
inline std::string to_string(const Product& p) {
  if (p.empty()) return "eps";
  std::string out;
  for (const auto& a : p.atoms()) {
    if (!out.empty()) out += ' ';
    out += to_string(a);
  }
  return out;
}

/// Members separated by ` | `; `empty` for the empty union.
inline std::string to_string(const ProductUnion& u) {
  if (u.empty()) return "empty";
  std::string out;
  for (const auto& p : u.members()) {
    if (!out.empty()) out += " | ";
    out += to_string(p);
  }
  return out;
}

}  // namespace twords
