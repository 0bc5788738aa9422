#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "famalg/algebra.hpp"
#include "famalg/core.hpp"

// Finite abelian groups as products of cyclic groups, with subgroups, coset
// partitions, transversals and a weighted counting measure. The group's
// element set doubles as a core Universe, so the family algebra applies to
// coset families and transversal families directly.

namespace famalg::models {

class GroupModel {
 public:
  /// Product of cyclic groups Z_{n1} x ... x Z_{nk}; order at most 64.
  static GroupModel make(std::vector<int> moduli);

  int order() const { return order_; }
  const std::vector<int>& moduli() const { return moduli_; }
  const Universe& universe() const { return universe_; }

  int add(int a, int b) const;
  int neg(int a) const;
  static constexpr int zero() { return 0; }

  /// Mixed-radix digits of an element index (row-major, first modulus most
  /// significant).
  std::vector<int> decode(int index) const;
  int encode(const std::vector<int>& digits) const;

  /// "Z6" or "Z2xZ3".
  std::string spec_string() const;

  friend bool operator==(const GroupModel& a, const GroupModel& b) {
    return a.moduli_ == b.moduli_;
  }
  friend bool operator!=(const GroupModel& a, const GroupModel& b) {
    return !(a == b);
  }

 private:
  GroupModel(std::vector<int> moduli, int order, Universe u)
      : moduli_(std::move(moduli)), order_(order), universe_(std::move(u)) {}
  std::vector<int> moduli_;
  int order_;
  Universe universe_;
};

class Subgroup {
 public:
  /// Validates closure under addition and membership of 0.
  static Subgroup from_elements(const GroupModel& g, const Subset& elements);

  const GroupModel& parent() const { return parent_; }
  const Subset& elements() const { return elements_; }
  int order() const { return elements_.count(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  Subgroup(GroupModel g, Subset elements)
      : parent_(std::move(g)), elements_(std::move(elements)) {}
  GroupModel parent_;
  Subset elements_;
};

/// Smallest subgroup containing the generators (additive closure).
Subgroup subgroup_generated(const GroupModel& g, const std::vector<int>& gens);

/// Every subgroup, ordered by element mask.
std::vector<Subgroup> all_subgroups(const GroupModel& g);

class CosetPartition {
 public:
  explicit CosetPartition(Subgroup q, std::vector<Subset> cosets)
      : subgroup_(std::move(q)), cosets_(std::move(cosets)) {}

  const Subgroup& subgroup() const { return subgroup_; }
  const std::vector<Subset>& cosets() const { return cosets_; }
  std::size_t coset_count() const { return cosets_.size(); }

 private:
  Subgroup subgroup_;
  std::vector<Subset> cosets_;
};

/// Pairwise-disjoint cosets covering the group, ordered by least element.
CosetPartition cosets_of(const Subgroup& q);

struct Transversal {
  CosetPartition partition;
  Subset picks;
};

/// True iff v meets every coset exactly once.
bool is_transversal(const Subset& v, const CosetPartition& p);

/// All transversals in a fixed mixed-radix order (last coset varies fastest).
class TransversalEnumerator {
 public:
  explicit TransversalEnumerator(CosetPartition p,
                                 std::uint64_t ceiling = 1ull << 20);

  /// |Q|^{#cosets} (saturates at UINT64_MAX).
  std::uint64_t count() const { return count_; }

  bool next(Transversal& out);

 private:
  CosetPartition partition_;
  std::vector<std::vector<int>> coset_elems_;
  std::vector<std::size_t> digits_;
  std::uint64_t count_;
  bool done_ = false;
};

/// Pointwise group translation a + t.
Subset translate(const GroupModel& g, const Subset& a, int t);

/// {v+q : q in Q} are pairwise disjoint and cover the group.
bool vitali_partition_check(const Transversal& v);

/// v + t is again a transversal of the same partition.
bool translate_transversal_check(const Transversal& v, int t);

/// The family of all cosets of b, over the group's universe.
SetFamily coset_family(const Subgroup& b);

/// Every union of a proper non-empty subfamily of cosets is a proper subset
/// of the group, and every omitted coset is disjoint from it. Requires at
/// least two cosets.
bool proper_coset_union_check(const Subgroup& b);

/// Canonically least pair of non-trivial subgroups intersecting in {0}.
std::optional<std::pair<Subgroup, Subgroup>> trivial_intersection_pair(
    const GroupModel& g);

/// Every translate of every member stays in the family.
bool translation_invariance_check(const SetFamily& f, const GroupModel& g);

using Rational = boost::rational<long long>;

/// "3", "1/2", "0".
std::string rational_string(const Rational& r);

class WeightedMeasure {
 public:
  /// One non-negative weight per element.
  static WeightedMeasure make(Universe u, std::vector<Rational> weights);

  const Universe& universe() const { return universe_; }
  const std::vector<Rational>& weights() const { return weights_; }

  /// Sum of member weights (exact).
  Rational measure(const Subset& a) const;

  /// P({i : w_i = 0}); membership in it is exactly "measure zero".
  PrincipalIdeal null_ideal() const;

 private:
  WeightedMeasure(Universe u, std::vector<Rational> w)
      : universe_(std::move(u)), weights_(std::move(w)) {}
  Universe universe_;
  std::vector<Rational> weights_;
};

}  // namespace famalg::models
