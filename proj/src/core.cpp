#include "famalg/core.hpp"

#include <algorithm>
#include <unordered_set>

#include "famalg/kernels.hpp"

namespace famalg {

namespace internal {

void require_same_universe(const Universe& a, const Universe& b,
                           const char* where) {
  if (a != b)
    throw universe_mismatch(std::string(where) +
                            ": operands belong to different universes");
}

}  // namespace internal

Universe Universe::make(int size,
                        std::optional<std::vector<std::string>> labels) {
  if (size < 1 || size > 64)
    throw std::invalid_argument("universe size must be in 1..64, got " +
                                std::to_string(size));
  auto impl = std::make_shared<Impl>();
  impl->size = size;
  impl->full = size == 64 ? ~0ull : ((1ull << size) - 1);
  if (labels) {
    if (static_cast<int>(labels->size()) != size)
      throw std::invalid_argument("expected " + std::to_string(size) +
                                  " labels, got " +
                                  std::to_string(labels->size()));
    std::unordered_set<std::string> seen;
    for (const auto& l : *labels) {
      if (l.empty()) throw std::invalid_argument("empty universe label");
      if (!seen.insert(l).second)
        throw std::invalid_argument("duplicate universe label \"" + l + "\"");
    }
    impl->labels = std::move(*labels);
  } else {
    impl->labels.reserve(size);
    for (int i = 0; i < size; ++i) impl->labels.push_back(std::to_string(i));
  }
  return Universe(std::move(impl));
}

int Universe::index_of(const std::string& label) const {
  for (int i = 0; i < impl_->size; ++i)
    if (impl_->labels[i] == label) return i;
  return -1;
}

Subset::Subset(Universe u, std::uint64_t bits) : u_(std::move(u)), bits_(bits) {
  if (bits & ~u_.full_mask())
    throw std::invalid_argument("subset has bits outside its universe");
}

Subset Subset::of(const Universe& u, const std::vector<int>& elems) {
  std::uint64_t bits = 0;
  for (int e : elems) {
    if (e < 0 || e >= u.size())
      throw std::invalid_argument("element index " + std::to_string(e) +
                                  " out of range for universe of size " +
                                  std::to_string(u.size()));
    bits |= 1ull << e;
  }
  return Subset(u, bits);
}

bool Subset::subset_of(const Subset& other) const {
  internal::require_same_universe(u_, other.u_, "subset_of");
  return (bits_ & ~other.bits_) == 0;
}

Subset Subset::union_with(const Subset& other) const {
  internal::require_same_universe(u_, other.u_, "union");
  return Subset(u_, bits_ | other.bits_);
}

Subset Subset::intersect(const Subset& other) const {
  internal::require_same_universe(u_, other.u_, "intersection");
  return Subset(u_, bits_ & other.bits_);
}

Subset Subset::difference(const Subset& other) const {
  internal::require_same_universe(u_, other.u_, "difference");
  return Subset(u_, bits_ & ~other.bits_);
}

Subset Subset::symmetric_difference(const Subset& other) const {
  internal::require_same_universe(u_, other.u_, "symmetric_difference");
  return Subset(u_, bits_ ^ other.bits_);
}

Subset Subset::complement() const { return Subset(u_, u_.full_mask() & ~bits_); }

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for (int i = 0; i < u_.size(); ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < u_.size(); ++i) {
    if (!contains(i)) continue;
    if (!first) out += ",";
    out += u_.label(i);
    first = false;
  }
  out += "}";
  return out;
}

SetFamily SetFamily::make(const Universe& u,
                          const std::vector<Subset>& subsets) {
  MaskList masks;
  masks.reserve(subsets.size());
  for (const auto& s : subsets) {
    internal::require_same_universe(u, s.universe(), "make_family");
    masks.push_back(s.bits());
  }
  return from_masks(u, std::move(masks));
}

SetFamily SetFamily::from_masks(const Universe& u,
                                const std::vector<std::uint64_t>& masks) {
  return from_masks(u, MaskList(masks.begin(), masks.end()));
}

SetFamily SetFamily::from_masks(const Universe& u, MaskList masks) {
  for (std::uint64_t m : masks)
    if (m & ~u.full_mask())
      throw std::invalid_argument("family member has bits outside its universe");
  if (u.size() <= 6) {
    // All masks fit in 0..63, so one word indexed by mask sorts and
    // deduplicates in a single pass.
    std::uint64_t present = 0;
    for (std::uint64_t m : masks) present |= 1ull << m;
    masks.clear();
    while (present) {
      masks.push_back(static_cast<std::uint64_t>(__builtin_ctzll(present)));
      present &= present - 1;
    }
  } else {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  }
  return SetFamily(u, std::move(masks));
}

SetFamily SetFamily::from_subset_bitmap(const Universe& u,
                                        std::uint64_t present) {
  if (u.size() > 6)
    throw std::invalid_argument("subset bitmaps need a universe of size <= 6");
  if (u.size() < 6 && (present & ~((1ull << (1ull << u.size())) - 1)))
    throw std::invalid_argument("subset bitmap has members outside the universe");
  MaskList masks;
  masks.reserve(static_cast<std::size_t>(__builtin_popcountll(present)));
  while (present) {
    masks.push_back(static_cast<std::uint64_t>(__builtin_ctzll(present)));
    present &= present - 1;
  }
  return SetFamily(u, std::move(masks));
}

std::uint64_t SetFamily::subset_bitmap() const {
  if (u_.size() > 6)
    throw std::invalid_argument("subset bitmaps need a universe of size <= 6");
  std::uint64_t present = 0;
  for (std::uint64_t m : members_) present |= 1ull << m;
  return present;
}

std::vector<Subset> SetFamily::members() const {
  std::vector<Subset> out;
  out.reserve(members_.size());
  for (std::uint64_t m : members_) out.emplace_back(u_, m);
  return out;
}

bool SetFamily::contains(const Subset& s) const {
  internal::require_same_universe(u_, s.universe(), "family contains");
  return contains_mask(s.bits());
}

bool SetFamily::contains_mask(std::uint64_t m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

std::string SetFamily::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ",";
    out += Subset(u_, members_[i]).to_string();
  }
  out += "]";
  return out;
}

Universe make_universe(int size,
                       std::optional<std::vector<std::string>> labels) {
  return Universe::make(size, std::move(labels));
}

Subset make_subset(const Universe& u, const std::vector<int>& elems) {
  return Subset::of(u, elems);
}

SetFamily make_family(const Universe& u, const std::vector<Subset>& subsets) {
  return SetFamily::make(u, subsets);
}

bool is_subfamily(const SetFamily& f, const SetFamily& g) {
  internal::require_same_universe(f.universe(), g.universe(), "is_subfamily");
  return std::includes(g.masks().begin(), g.masks().end(), f.masks().begin(),
                       f.masks().end());
}

family_relation family_relations(const SetFamily& f, const SetFamily& g) {
  internal::require_same_universe(f.universe(), g.universe(),
                                  "family_relations");
  const bool fg = is_subfamily(f, g);
  const bool gf = is_subfamily(g, f);
  if (fg && gf) return family_relation::equal;
  if (fg) return family_relation::subfamily;
  if (gf) return family_relation::superfamily;
  return family_relation::incomparable;
}

SetFamily complement_family(const SetFamily& f) {
  if (f.empty())
    throw empty_family_error("complement_family: empty family");
  const std::uint64_t full = f.universe().full_mask();
  MaskList out(f.size());
  // X\S = (full & ~S) | 0
  kern::carve_or(f.masks().data(), f.size(), full, 0, out.data());
  return SetFamily::from_masks(f.universe(), std::move(out));
}

SetFamily family_union(const SetFamily& f, const SetFamily& g) {
  internal::require_same_universe(f.universe(), g.universe(), "family_union");
  MaskList all;
  all.reserve(f.size() + g.size());
  all.insert(all.end(), f.masks().begin(), f.masks().end());
  all.insert(all.end(), g.masks().begin(), g.masks().end());
  return SetFamily::from_masks(f.universe(), std::move(all));
}

}  // namespace famalg
