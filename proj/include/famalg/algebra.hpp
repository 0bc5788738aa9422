#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>

#include "famalg/core.hpp"

// Constructors over set families: union closure S(A), the generated ideal
// I(A), the join  A v B = {A∪B},  and the star
// A * B = {(A\B1)∪B2 : A∈A, B1,B2∈B},  plus principal-ideal arithmetic.
// On a finite universe every ideal is P(Y) for a single apex Y, so ideals are
// stored as their apex; star products with an ideal admit closed-form
// membership windows that are equivalence-tested against the definitional
// enumerations.

namespace famalg {

/// Default ceiling for materializations (star products, powersets).
inline constexpr std::uint64_t kMaterializeCeiling = 1'000'000;

class PrincipalIdeal {
 public:
  explicit PrincipalIdeal(Subset apex) : apex_(std::move(apex)) {}

  const Subset& apex() const { return apex_; }
  const Universe& universe() const { return apex_.universe(); }

  /// B belongs to P(Y) iff B is contained in the apex Y.
  bool contains(const Subset& s) const { return s.subset_of(apex_); }

  /// All subsets of the apex as a family (2^|Y| members).
  SetFamily materialize(std::uint64_t ceiling = kMaterializeCeiling) const;

  friend bool operator==(const PrincipalIdeal& a, const PrincipalIdeal& b) {
    return a.apex_ == b.apex_;
  }
  friend bool operator!=(const PrincipalIdeal& a, const PrincipalIdeal& b) {
    return !(a == b);
  }

 private:
  Subset apex_;
};

/// {A∪B : A∈f, B∈g}; both operands must be non-empty.
SetFamily join(const SetFamily& f, const SetFamily& g);

/// {(A\B1)∪B2 : A∈f, B1,B2∈g}, materialized; throws bound_error when
/// |f|·|g|^2 exceeds the ceiling.
SetFamily star(const SetFamily& f, const SetFamily& g,
               std::uint64_t ceiling = kMaterializeCeiling);

/// x ∈ f * g without materializing: some B2∈g lies inside x, some A∈f
/// supplies x\B2, and some B1∈g covers A\x while avoiding the supplied part.
bool star_contains(const SetFamily& f, const SetFamily& g, const Subset& x);

/// Smallest union-closed family containing f (fixed point of pairwise
/// unions).
SetFamily semigroup_closure(const SetFamily& f);

/// x ∈ S(f) without materializing the closure: the members of f contained in
/// x must be non-empty and union to exactly x.
bool member_of_closure(const Subset& x, const SetFamily& f);

/// Generated ideal I(f) = {B : ∃A∈S(f), B⊆A} = P(∪f).
PrincipalIdeal ideal_from_family(const SetFamily& f);

/// True iff the union of every pair of members is a member.
bool is_semigroup(const SetFamily& f);

/// True iff union-closed and downward-closed (then f = P(∪f)).
bool is_ideal(const SetFamily& f);

/// f ∪ {y} canonicalized.
SetFamily adjoin(const SetFamily& f, const Subset& y);

/// S(f) ∪ {y} canonicalized.
SetFamily s_adjoin(const SetFamily& f, const Subset& y);

/// P(Y1) v P(Y2) = P(Y1 ∪ Y2).
PrincipalIdeal join_ideals(const PrincipalIdeal& i1, const PrincipalIdeal& i2);

/// P(Y1) * P(Y2) = P(Y1 ∪ Y2) (the star of two powersets collapses).
PrincipalIdeal star_ideals(const PrincipalIdeal& i1, const PrincipalIdeal& i2);

/// f * P(Y): membership decider plus optional materialization.
/// x ∈ f*P(Y)  iff  ∃A∈f:  A\Y ⊆ x ⊆ A∪Y.
class StarWithIdeal {
 public:
  StarWithIdeal(SetFamily f, PrincipalIdeal ideal);

  bool contains(const Subset& x) const;
  /// { (A\Y) ∪ T : A∈f, T ⊆ Y }; throws bound_error past the ceiling.
  SetFamily materialize(std::uint64_t ceiling = kMaterializeCeiling) const;

  const SetFamily& family() const { return f_; }
  const PrincipalIdeal& ideal() const { return ideal_; }

 private:
  SetFamily f_;
  PrincipalIdeal ideal_;
};

/// P(Y) * f: membership decider plus optional materialization.
/// x ∈ P(Y)*f  iff  ∃S∈f:  S ⊆ x ⊆ S∪Y.
class IdealWithFamily {
 public:
  IdealWithFamily(PrincipalIdeal ideal, SetFamily f);

  bool contains(const Subset& x) const;
  /// { S ∪ T : S∈f, T ⊆ Y }; throws bound_error past the ceiling.
  SetFamily materialize(std::uint64_t ceiling = kMaterializeCeiling) const;

  const SetFamily& family() const { return f_; }
  const PrincipalIdeal& ideal() const { return ideal_; }

 private:
  PrincipalIdeal ideal_;
  SetFamily f_;
};

StarWithIdeal star_ideal(const SetFamily& f, const PrincipalIdeal& i);
IdealWithFamily ideal_star(const PrincipalIdeal& i, const SetFamily& f);

/// Materializations without constructing a handle (no operand copies).
SetFamily star_ideal_materialized(const SetFamily& f, const PrincipalIdeal& i,
                                  std::uint64_t ceiling = kMaterializeCeiling);
SetFamily ideal_star_materialized(const PrincipalIdeal& i, const SetFamily& f,
                                  std::uint64_t ceiling = kMaterializeCeiling);

/// A family of generators with a lazily materialized closure. The cache is
/// written at most once; concurrent materialization is idempotent because
/// the closure is canonical.
class ClosureHandle {
 public:
  explicit ClosureHandle(SetFamily generators);

  const SetFamily& generators() const { return generators_; }

  /// The full closure; computed on first use and cached.
  const SetFamily& materialized() const;

  /// Membership via the cover decider; does not force materialization.
  bool contains(const Subset& x) const;

 private:
  SetFamily generators_;
  mutable std::once_flag once_;
  mutable std::optional<SetFamily> cache_;
};

}  // namespace famalg
