#include "famalg/algebra.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

#include "famalg/kernels.hpp"

namespace famalg {

namespace {

void require_nonempty(const SetFamily& f, const char* where) {
  if (f.empty())
    throw empty_family_error(std::string(where) +
                             ": empty family is not allowed here");
}

/// Appends all (base | T) for T ⊆ free to out.
void append_window(std::uint64_t base, std::uint64_t free,
                   std::vector<std::uint64_t>& out) {
  std::uint64_t t = free;
  while (true) {
    out.push_back(base | t);
    if (t == 0) break;
    t = (t - 1) & free;
  }
}

}  // namespace

SetFamily PrincipalIdeal::materialize(std::uint64_t ceiling) const {
  const int k = apex_.count();
  if (k >= 63 || (1ull << k) > ceiling)
    throw bound_error("ideal materialization of 2^" + std::to_string(k) +
                      " subsets exceeds the ceiling");
  std::vector<std::uint64_t> out;
  out.reserve(1ull << k);
  append_window(0, apex_.bits(), out);
  return SetFamily::from_masks(universe(), std::move(out));
}

SetFamily join(const SetFamily& f, const SetFamily& g) {
  internal::require_same_universe(f.universe(), g.universe(), "join");
  require_nonempty(f, "join");
  require_nonempty(g, "join");
  if (f.universe().size() <= 6) {
    // a family over <= 6 elements has <= 64 members; rows fit on the stack
    // and results collapse into one subset bitmap
    std::uint64_t row[64];
    std::uint64_t bm = 0;
    for (std::uint64_t a : f.masks()) {
      kern::or_with(g.masks().data(), g.size(), a, row);
      for (std::size_t i = 0; i < g.size(); ++i) bm |= 1ull << row[i];
    }
    return SetFamily::from_subset_bitmap(f.universe(), bm);
  }
  std::vector<std::uint64_t> out(f.size() * g.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    kern::or_with(g.masks().data(), g.size(), f.masks()[i],
                  out.data() + i * g.size());
  return SetFamily::from_masks(f.universe(), std::move(out));
}

SetFamily star(const SetFamily& f, const SetFamily& g, std::uint64_t ceiling) {
  internal::require_same_universe(f.universe(), g.universe(), "star");
  require_nonempty(f, "star");
  require_nonempty(g, "star");
  const std::uint64_t total = f.size() * g.size() * g.size();
  if (total > ceiling)
    throw bound_error("star materialization of " + std::to_string(total) +
                      " triples exceeds the ceiling");
  if (f.universe().size() <= 6) {
    std::uint64_t row[64];
    std::uint64_t bm = 0;
    for (std::uint64_t a : f.masks()) {
      for (std::uint64_t b2 : g.masks()) {
        kern::carve_or(g.masks().data(), g.size(), a, b2, row);
        for (std::size_t i = 0; i < g.size(); ++i) bm |= 1ull << row[i];
      }
    }
    return SetFamily::from_subset_bitmap(f.universe(), bm);
  }
  std::vector<std::uint64_t> out(total);
  std::size_t row = 0;
  for (std::uint64_t a : f.masks()) {
    for (std::uint64_t b2 : g.masks()) {
      kern::carve_or(g.masks().data(), g.size(), a, b2,
                     out.data() + row * g.size());
      ++row;
    }
  }
  return SetFamily::from_masks(f.universe(), std::move(out));
}

bool star_contains(const SetFamily& f, const SetFamily& g, const Subset& x) {
  internal::require_same_universe(f.universe(), g.universe(), "star_contains");
  internal::require_same_universe(f.universe(), x.universe(), "star_contains");
  require_nonempty(f, "star_contains");
  require_nonempty(g, "star_contains");
  const std::uint64_t xm = x.bits();
  for (std::uint64_t b2 : g.masks()) {
    if (b2 & ~xm) continue;
    const std::uint64_t rest = xm & ~b2;  // what A must supply
    for (std::uint64_t a : f.masks()) {
      if (rest & ~a) continue;
      // need B1 ⊇ A\x with B1 ∩ rest = 0, so (A\B1)|B2 lands exactly on x
      if (kern::any_window(g.masks().data(), g.size(), rest, a & ~xm))
        return true;
    }
  }
  return false;
}

SetFamily semigroup_closure(const SetFamily& f) {
  require_nonempty(f, "semigroup_closure");
  MaskList all(f.masks());
  MaskList scratch;
  // Pairwise unions to a fixed point; each processed element is joined with
  // everything known at that moment, so every pair gets covered.
  if (f.universe().size() <= 6) {
    std::uint64_t present = 0;
    for (std::uint64_t m : all) present |= 1ull << m;
    for (std::size_t next = 0; next < all.size(); ++next) {
      scratch.resize(all.size());
      kern::or_with(all.data(), all.size(), all[next], scratch.data());
      for (std::uint64_t c : scratch) {
        if (!((present >> c) & 1)) {
          present |= 1ull << c;
          all.push_back(c);
        }
      }
    }
  } else {
    std::unordered_set<std::uint64_t> seen(all.begin(), all.end());
    for (std::size_t next = 0; next < all.size(); ++next) {
      scratch.resize(all.size());
      kern::or_with(all.data(), all.size(), all[next], scratch.data());
      for (std::uint64_t c : scratch)
        if (seen.insert(c).second) all.push_back(c);
    }
  }
  return SetFamily::from_masks(f.universe(), std::move(all));
}

bool member_of_closure(const Subset& x, const SetFamily& f) {
  internal::require_same_universe(x.universe(), f.universe(),
                                  "member_of_closure");
  require_nonempty(f, "member_of_closure");
  const auto scan = kern::cover_within(f.masks().data(), f.size(), x.bits());
  return scan.matched > 0 && scan.united == x.bits();
}

PrincipalIdeal ideal_from_family(const SetFamily& f) {
  require_nonempty(f, "ideal_from_family");
  std::uint64_t apex = 0;
  for (std::uint64_t m : f.masks()) apex |= m;
  return PrincipalIdeal(Subset(f.universe(), apex));
}

bool is_semigroup(const SetFamily& f) {
  require_nonempty(f, "is_semigroup");
  MaskList scratch(f.size());
  for (std::uint64_t a : f.masks()) {
    kern::or_with(f.masks().data(), f.size(), a, scratch.data());
    for (std::uint64_t c : scratch)
      if (!f.contains_mask(c)) return false;
  }
  return true;
}

bool is_ideal(const SetFamily& f) {
  require_nonempty(f, "is_ideal");
  if (!is_semigroup(f)) return false;
  for (std::uint64_t a : f.masks()) {
    std::uint64_t t = a;
    while (true) {
      if (!f.contains_mask(t)) return false;
      if (t == 0) break;
      t = (t - 1) & a;
    }
  }
  return true;
}

SetFamily adjoin(const SetFamily& f, const Subset& y) {
  internal::require_same_universe(f.universe(), y.universe(), "adjoin");
  require_nonempty(f, "adjoin");
  MaskList all(f.masks());
  all.push_back(y.bits());
  return SetFamily::from_masks(f.universe(), std::move(all));
}

SetFamily s_adjoin(const SetFamily& f, const Subset& y) {
  internal::require_same_universe(f.universe(), y.universe(), "s_adjoin");
  return adjoin(semigroup_closure(f), y);
}

PrincipalIdeal join_ideals(const PrincipalIdeal& i1, const PrincipalIdeal& i2) {
  internal::require_same_universe(i1.universe(), i2.universe(), "join_ideals");
  return PrincipalIdeal(i1.apex().union_with(i2.apex()));
}

PrincipalIdeal star_ideals(const PrincipalIdeal& i1, const PrincipalIdeal& i2) {
  internal::require_same_universe(i1.universe(), i2.universe(), "star_ideals");
  return PrincipalIdeal(i1.apex().union_with(i2.apex()));
}

StarWithIdeal::StarWithIdeal(SetFamily f, PrincipalIdeal ideal)
    : f_(std::move(f)), ideal_(std::move(ideal)) {
  internal::require_same_universe(f_.universe(), ideal_.universe(),
                                  "star_ideal");
  require_nonempty(f_, "star_ideal");
}

bool StarWithIdeal::contains(const Subset& x) const {
  internal::require_same_universe(x.universe(), f_.universe(), "star_ideal");
  const std::uint64_t full = f_.universe().full_mask();
  const std::uint64_t y = ideal_.apex().bits();
  // ∃A: A\Y ⊆ x ⊆ A∪Y
  return kern::any_window(f_.masks().data(), f_.size(),
                          full & ~x.bits() & ~y, x.bits() & ~y);
}

SetFamily star_ideal_materialized(const SetFamily& f, const PrincipalIdeal& i,
                                  std::uint64_t ceiling) {
  internal::require_same_universe(f.universe(), i.universe(), "star_ideal");
  require_nonempty(f, "star_ideal");
  const std::uint64_t y = i.apex().bits();
  const int k = i.apex().count();
  if (k >= 63 || f.size() * (1ull << k) > ceiling)
    throw bound_error("star materialization exceeds the ceiling");
  if (f.universe().size() <= 6) {
    std::uint64_t bm = 0;
    for (std::uint64_t a : f.masks()) {
      const std::uint64_t base = a & ~y;
      std::uint64_t t = y;
      while (true) {
        bm |= 1ull << (base | t);
        if (t == 0) break;
        t = (t - 1) & y;
      }
    }
    return SetFamily::from_subset_bitmap(f.universe(), bm);
  }
  std::vector<std::uint64_t> out;
  out.reserve(f.size() << k);
  for (std::uint64_t a : f.masks()) append_window(a & ~y, y, out);
  return SetFamily::from_masks(f.universe(), std::move(out));
}

SetFamily StarWithIdeal::materialize(std::uint64_t ceiling) const {
  return star_ideal_materialized(f_, ideal_, ceiling);
}

IdealWithFamily::IdealWithFamily(PrincipalIdeal ideal, SetFamily f)
    : ideal_(std::move(ideal)), f_(std::move(f)) {
  internal::require_same_universe(f_.universe(), ideal_.universe(),
                                  "ideal_star");
  require_nonempty(f_, "ideal_star");
}

bool IdealWithFamily::contains(const Subset& x) const {
  internal::require_same_universe(x.universe(), f_.universe(), "ideal_star");
  const std::uint64_t full = f_.universe().full_mask();
  const std::uint64_t y = ideal_.apex().bits();
  // ∃S: S ⊆ x ⊆ S∪Y
  return kern::any_window(f_.masks().data(), f_.size(), full & ~x.bits(),
                          x.bits() & ~y);
}

SetFamily ideal_star_materialized(const PrincipalIdeal& i, const SetFamily& f,
                                  std::uint64_t ceiling) {
  internal::require_same_universe(f.universe(), i.universe(), "ideal_star");
  require_nonempty(f, "ideal_star");
  const std::uint64_t y = i.apex().bits();
  const int k = i.apex().count();
  if (k >= 63 || f.size() * (1ull << k) > ceiling)
    throw bound_error("star materialization exceeds the ceiling");
  if (f.universe().size() <= 6) {
    std::uint64_t bm = 0;
    for (std::uint64_t s : f.masks()) {
      std::uint64_t t = y;
      while (true) {
        bm |= 1ull << (s | t);
        if (t == 0) break;
        t = (t - 1) & y;
      }
    }
    return SetFamily::from_subset_bitmap(f.universe(), bm);
  }
  std::vector<std::uint64_t> out;
  out.reserve(f.size() << k);
  for (std::uint64_t s : f.masks()) append_window(s, y, out);
  return SetFamily::from_masks(f.universe(), std::move(out));
}

SetFamily IdealWithFamily::materialize(std::uint64_t ceiling) const {
  return ideal_star_materialized(ideal_, f_, ceiling);
}

StarWithIdeal star_ideal(const SetFamily& f, const PrincipalIdeal& i) {
  return StarWithIdeal(f, i);
}

IdealWithFamily ideal_star(const PrincipalIdeal& i, const SetFamily& f) {
  return IdealWithFamily(i, f);
}

ClosureHandle::ClosureHandle(SetFamily generators)
    : generators_(std::move(generators)) {
  require_nonempty(generators_, "ClosureHandle");
}

const SetFamily& ClosureHandle::materialized() const {
  std::call_once(once_, [this] { cache_ = semigroup_closure(generators_); });
  return *cache_;
}

bool ClosureHandle::contains(const Subset& x) const {
  return member_of_closure(x, generators_);
}

}  // namespace famalg
