#pragma once

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "famalg/errors.hpp"

// Ground representations: a universe of up to 64 labeled elements, subsets as
// one-word bit masks, and families as canonically ordered duplicate-free
// member lists. All values are immutable after construction and compare
// extensionally.

namespace famalg {

class Universe {
 public:
  /// Labels default to the decimal indices "0".."size-1"; when given they
  /// must be pairwise distinct and one per element. size must be in 1..64.
  static Universe make(int size,
                       std::optional<std::vector<std::string>> labels = {});

  int size() const { return impl_->size; }
  const std::string& label(int i) const { return impl_->labels[i]; }
  const std::vector<std::string>& labels() const { return impl_->labels; }

  /// Index of a label, or -1 when absent.
  int index_of(const std::string& label) const;

  /// Mask with one bit per element.
  std::uint64_t full_mask() const { return impl_->full; }

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.impl_ == b.impl_ || (a.impl_->size == b.impl_->size &&
                                  a.impl_->labels == b.impl_->labels);
  }
  friend bool operator!=(const Universe& a, const Universe& b) {
    return !(a == b);
  }

 private:
  struct Impl {
    int size;
    std::uint64_t full;
    std::vector<std::string> labels;
  };
  explicit Universe(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

class Subset {
 public:
  Subset(Universe u, std::uint64_t bits);

  /// Subset with exactly the given element indices set; duplicates collapse.
  static Subset of(const Universe& u, const std::vector<int>& elems);

  const Universe& universe() const { return u_; }
  std::uint64_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int count() const { return __builtin_popcountll(bits_); }
  bool contains(int i) const { return (bits_ >> i) & 1; }

  bool subset_of(const Subset& other) const;

  Subset union_with(const Subset& other) const;
  Subset intersect(const Subset& other) const;
  Subset difference(const Subset& other) const;
  Subset symmetric_difference(const Subset& other) const;
  Subset complement() const;

  /// Element indices in ascending order.
  std::vector<int> elements() const;

  /// "{a,b}" using the universe's labels; "{}" when empty.
  std::string to_string() const;

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.bits_ == b.bits_ && a.u_ == b.u_;
  }
  friend bool operator!=(const Subset& a, const Subset& b) { return !(a == b); }
  /// Canonical order: bit pattern as an unsigned integer.
  friend bool operator<(const Subset& a, const Subset& b) {
    return a.bits_ < b.bits_;
  }

 private:
  Universe u_;
  std::uint64_t bits_;
};

enum class family_relation { equal, subfamily, superfamily, incomparable };

/// Member masks of a family; inline up to 16 so small-universe algebra runs
/// without heap traffic.
using MaskList = boost::container::small_vector<std::uint64_t, 16>;

class SetFamily {
 public:
  /// Deduplicated, canonically ordered family; may be empty.
  static SetFamily make(const Universe& u, const std::vector<Subset>& subsets);

  /// Same, from raw masks (each must fit the universe).
  static SetFamily from_masks(const Universe& u, MaskList masks);
  static SetFamily from_masks(const Universe& u,
                              const std::vector<std::uint64_t>& masks);

  /// For universes of at most 6 elements a family fits one word: bit m is
  /// set iff the subset with mask m is a member.
  static SetFamily from_subset_bitmap(const Universe& u, std::uint64_t present);
  std::uint64_t subset_bitmap() const;

  const Universe& universe() const { return u_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  /// Members as raw masks, strictly increasing.
  const MaskList& masks() const { return members_; }
  Subset member(std::size_t i) const { return Subset(u_, members_[i]); }
  std::vector<Subset> members() const;

  bool contains(const Subset& s) const;
  bool contains_mask(std::uint64_t m) const;

  /// "[{a},{b,c}]" in canonical member order; "[]" when empty.
  std::string to_string() const;

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.members_ == b.members_ && a.u_ == b.u_;
  }
  friend bool operator!=(const SetFamily& a, const SetFamily& b) {
    return !(a == b);
  }
  /// Canonical order: lexicographic over the member list (prefix first).
  friend bool operator<(const SetFamily& a, const SetFamily& b) {
    return a.members_ < b.members_;
  }

 private:
  SetFamily(Universe u, MaskList members)
      : u_(std::move(u)), members_(std::move(members)) {}
  Universe u_;
  MaskList members_;
};

Universe make_universe(int size,
                       std::optional<std::vector<std::string>> labels = {});

Subset make_subset(const Universe& u, const std::vector<int>& elems);

SetFamily make_family(const Universe& u, const std::vector<Subset>& subsets);

/// Extensional comparison of the two member sets.
family_relation family_relations(const SetFamily& f, const SetFamily& g);

/// {X\S : S in f}; rejects empty families.
SetFamily complement_family(const SetFamily& f);

/// Union of the two families as collections of sets (not the join).
SetFamily family_union(const SetFamily& f, const SetFamily& g);

/// True iff every member of f is a member of g.
bool is_subfamily(const SetFamily& f, const SetFamily& g);

namespace internal {
void require_same_universe(const Universe& a, const Universe& b,
                           const char* where);
}

}  // namespace famalg
