#pragma once

// Noetherian base spaces: finite posets under the Alexandroff topology
// (closed sets = downsets) and the naturals under the cofinite topology
// (closed sets = finite sets and the whole space).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "twords/error.hpp"
#include "twords/ordinal.hpp"

namespace twords {

/// A point of the base space: an element index for finite posets, the
/// number itself for the cofinite naturals.
using Point = std::uint64_t;

/// A finite word, letter by letter.
using FiniteWord = std::vector<Point>;

enum class SpaceKind { finite_poset, cofinite_nat };

class SpaceDef;
using SpacePtr = std::shared_ptr<const SpaceDef>;

class SpaceDef {
 public:
  /// Builds a finite poset from element names and declared `x <= y` pairs.
  /// The order is closed under reflexivity and transitivity; a cycle
  /// between distinct elements is rejected.
  static SpacePtr finite_poset(std::vector<std::string> names,
                               const std::vector<std::pair<std::string, std::string>>& order);
  static SpacePtr cofinite_nat();

  SpaceKind kind() const { return kind_; }
  bool is_finite() const { return kind_ == SpaceKind::finite_poset; }
  /// Number of elements of a finite poset.
  std::size_t size() const { return names_.size(); }
  bool leq(Point x, Point y) const;

  const std::vector<std::string>& names() const { return names_; }
  std::string point_name(Point p) const;
  Point parse_point(const std::string& name) const;
  bool has_point(Point p) const { return kind_ == SpaceKind::cofinite_nat || p < names_.size(); }

  /// Principal ideal of x in a finite poset.
  const boost::dynamic_bitset<>& down(Point x) const { return down_[x]; }

 private:
  SpaceKind kind_ = SpaceKind::finite_poset;
  std::vector<std::string> names_;
  std::map<std::string, Point> index_;
  std::vector<boost::dynamic_bitset<>> down_;  // down_[y][x] iff x <= y
};

inline SpacePtr SpaceDef::finite_poset(std::vector<std::string> names,
                                       const std::vector<std::pair<std::string, std::string>>& order) {
  auto s = std::make_shared<SpaceDef>();
  s->kind_ = SpaceKind::finite_poset;
  const std::size_t n = names.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!s->index_.emplace(names[i], i).second) throw invalid_argument("duplicate element '" + names[i] + "'");
  }
  s->names_ = std::move(names);
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (const auto& [x, y] : order) le[s->parse_point(x)][s->parse_point(y)] = true;
  // Warshall
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (le[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (le[k][j]) le[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (le[i][j] && le[j][i])
        throw invalid_argument("order is not antisymmetric: '" + s->names_[i] + "' and '" + s->names_[j] +
                               "' are equivalent");
  s->down_.assign(n, boost::dynamic_bitset<>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (le[x][y]) s->down_[y].set(x);
  return s;
}

inline SpacePtr SpaceDef::cofinite_nat() {
  auto s = std::make_shared<SpaceDef>();
  s->kind_ = SpaceKind::cofinite_nat;
  return s;
}

inline bool SpaceDef::leq(Point x, Point y) const {
  if (kind_ == SpaceKind::cofinite_nat) return x == y;
  return down_.at(y).test(x);
}

inline std::string SpaceDef::point_name(Point p) const {
  if (kind_ == SpaceKind::cofinite_nat) return std::to_string(p);
  return names_.at(p);
}

inline Point SpaceDef::parse_point(const std::string& name) const {
  if (kind_ == SpaceKind::cofinite_nat) {
    if (name.empty() || !std::all_of(name.begin(), name.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw unknown_point(name);
    try {
      return std::stoull(name);
    } catch (const std::out_of_range&) {
      throw unknown_point(name);
    }
  }
  auto it = index_.find(name);
  if (it == index_.end()) throw unknown_point(name);
  return it->second;
}

// ---------------------------------------------------------------------------

/// A closed subset of a base space.
class ClosedSet {
 public:
  ClosedSet() = default;

  static ClosedSet empty(SpacePtr space);
  static ClosedSet whole(SpacePtr space);
  /// Smallest closed set containing the given points.
  static ClosedSet closure_of(SpacePtr space, std::span<const Point> points);
  /// Finite poset only; throws unless `members` is downward closed.
  static ClosedSet from_members(SpacePtr space, boost::dynamic_bitset<> members);

  const SpacePtr& space() const { return space_; }
  bool is_empty() const;
  bool is_whole() const;
  bool contains(Point p) const;
  /// Finite poset: the member bitset. Cofinite: unused.
  const boost::dynamic_bitset<>& members() const { return members_; }
  /// Cofinite naturals: the finite member list (sorted), empty when whole.
  const std::vector<Point>& finite_points() const { return finite_; }

  /// Maximal points for finite posets, the members for finite sets of
  /// naturals; empty for the whole cofinite space.
  std::vector<Point> generators() const;

  friend bool operator==(const ClosedSet& a, const ClosedSet& b) {
    return a.space_ == b.space_ && a.all_ == b.all_ && a.members_ == b.members_ && a.finite_ == b.finite_;
  }
  /// Structural total order used to sort canonical outputs.
  friend std::strong_ordering structural_compare(const ClosedSet& a, const ClosedSet& b);

  friend bool subset(const ClosedSet& a, const ClosedSet& b);
  friend ClosedSet intersect(const ClosedSet& a, const ClosedSet& b);
  friend ClosedSet unite(const ClosedSet& a, const ClosedSet& b);

 private:
  SpacePtr space_;
  boost::dynamic_bitset<> members_;
  std::vector<Point> finite_;
  bool all_ = false;
};

inline void require_same_space(const ClosedSet& a, const ClosedSet& b) {
  if (a.space() != b.space() || !a.space()) throw space_mismatch();
}

inline ClosedSet ClosedSet::empty(SpacePtr space) {
  ClosedSet c;
  if (space->is_finite()) c.members_.resize(space->size());
  c.space_ = std::move(space);
  return c;
}

inline ClosedSet ClosedSet::whole(SpacePtr space) {
  ClosedSet c;
  if (space->is_finite()) {
    c.members_.resize(space->size());
    c.members_.set();
  } else {
    c.all_ = true;
  }
  c.space_ = std::move(space);
  return c;
}

inline ClosedSet ClosedSet::closure_of(SpacePtr space, std::span<const Point> points) {
  ClosedSet c = empty(space);
  for (Point p : points) {
    if (!space->has_point(p)) throw unknown_point(std::to_string(p));
    if (space->is_finite())
      c.members_ |= space->down(p);
    else
      c.finite_.push_back(p);
  }
  std::sort(c.finite_.begin(), c.finite_.end());
  c.finite_.erase(std::unique(c.finite_.begin(), c.finite_.end()), c.finite_.end());
  return c;
}

inline ClosedSet ClosedSet::from_members(SpacePtr space, boost::dynamic_bitset<> members) {
  if (!space->is_finite() || members.size() != space->size())
    throw invalid_argument("member bitset does not fit the space");
  for (std::size_t x = members.find_first(); x != members.npos; x = members.find_next(x))
    if (!space->down(x).is_subset_of(members)) throw invalid_argument("member set is not downward closed");
  ClosedSet c;
  c.space_ = std::move(space);
  c.members_ = std::move(members);
  return c;
}

inline bool ClosedSet::is_empty() const {
  if (!space_) return true;
  return space_->is_finite() ? members_.none() : (!all_ && finite_.empty());
}

inline bool ClosedSet::is_whole() const { return space_->is_finite() ? members_.all() : all_; }

inline bool ClosedSet::contains(Point p) const {
  if (space_->is_finite()) return p < members_.size() && members_.test(p);
  return all_ || std::binary_search(finite_.begin(), finite_.end(), p);
}

inline std::vector<Point> ClosedSet::generators() const {
  std::vector<Point> out;
  if (!space_->is_finite()) return all_ ? out : finite_;
  for (std::size_t x = members_.find_first(); x != members_.npos; x = members_.find_next(x)) {
    bool maximal = true;
    for (std::size_t y = members_.find_first(); y != members_.npos; y = members_.find_next(y))
      if (y != x && space_->leq(x, y)) maximal = false;
    if (maximal) out.push_back(x);
  }
  return out;
}

inline std::strong_ordering structural_compare(const ClosedSet& a, const ClosedSet& b) {
  if (auto c = a.all_ <=> b.all_; c != 0) return c;
  if (a.members_ != b.members_) return a.members_ < b.members_ ? std::strong_ordering::less : std::strong_ordering::greater;
  return a.finite_ <=> b.finite_;
}

inline bool subset(const ClosedSet& a, const ClosedSet& b) {
  require_same_space(a, b);
  if (a.space_->is_finite()) return a.members_.is_subset_of(b.members_);
  if (b.all_) return true;
  if (a.all_) return false;
  return std::includes(b.finite_.begin(), b.finite_.end(), a.finite_.begin(), a.finite_.end());
}

inline ClosedSet intersect(const ClosedSet& a, const ClosedSet& b) {
  require_same_space(a, b);
  ClosedSet c = ClosedSet::empty(a.space_);
  if (a.space_->is_finite()) {
    c.members_ = a.members_ & b.members_;
  } else if (a.all_) {
    c = b;
  } else if (b.all_) {
    c = a;
  } else {
    std::set_intersection(a.finite_.begin(), a.finite_.end(), b.finite_.begin(), b.finite_.end(),
                          std::back_inserter(c.finite_));
  }
  return c;
}

inline ClosedSet unite(const ClosedSet& a, const ClosedSet& b) {
  require_same_space(a, b);
  ClosedSet c = ClosedSet::empty(a.space_);
  if (a.space_->is_finite()) {
    c.members_ = a.members_ | b.members_;
  } else if (a.all_ || b.all_) {
    c.all_ = true;
  } else {
    std::set_union(a.finite_.begin(), a.finite_.end(), b.finite_.begin(), b.finite_.end(),
                   std::back_inserter(c.finite_));
  }
  return c;
}

/// Minimal list of irreducible closed sets whose union is F. For finite
/// posets: principal ideals of the maximal elements. For the cofinite
/// naturals: singletons, or [F] when F is the whole space.
inline std::vector<ClosedSet> irreducible_components(const ClosedSet& f) {
  std::vector<ClosedSet> out;
  if (!f.space()->is_finite() && f.is_whole()) {
    out.push_back(f);
    return out;
  }
  for (Point p : f.generators()) {
    const Point pts[] = {p};
    out.push_back(ClosedSet::closure_of(f.space(), pts));
  }
  return out;
}

inline bool is_irreducible(const ClosedSet& f) {
  auto parts = irreducible_components(f);
  return parts.size() == 1 && parts.front() == f;
}

/// Rank of F in the lattice of closed sets.
inline Ordinal stature(const ClosedSet& f) {
  if (f.space()->is_finite()) return Ordinal::finite(f.members().count());
  if (f.is_whole()) return Ordinal::omega();
  return Ordinal::finite(f.finite_points().size());
}

/// Every closed subset of a finite poset, in increasing bitset order.
inline std::vector<ClosedSet> all_closed_sets(const SpacePtr& space) {
  if (!space->is_finite()) throw invalid_argument("closed sets of the cofinite naturals are not enumerable");
  const std::size_t n = space->size();
  if (n > 20) throw invalid_argument("too many points to enumerate closed sets");
  std::vector<ClosedSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    boost::dynamic_bitset<> bits(n, mask);
    bool down = true;
    for (std::size_t x = bits.find_first(); x != bits.npos && down; x = bits.find_next(x))
      down = space->down(x).is_subset_of(bits);
    if (down) out.push_back(ClosedSet::from_members(space, std::move(bits)));
  }
  return out;
}

/// `a,b` listing generators; `*` for the whole cofinite space.
inline std::string to_string(const ClosedSet& f) {
  if (!f.space()->is_finite() && f.is_whole()) return "*";
  std::string out;
  for (Point p : f.generators()) {
    if (!out.empty()) out += ',';
    out += f.space()->point_name(p);
  }
  return out;
}

}  // namespace twords
