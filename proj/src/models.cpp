#include "famalg/models.hpp"

#include <algorithm>
#include <set>

namespace famalg::models {

GroupModel GroupModel::make(std::vector<int> moduli) {
  if (moduli.empty()) throw std::invalid_argument("group needs moduli");
  long long order = 1;
  for (int n : moduli) {
    if (n < 1) throw std::invalid_argument("group modulus must be positive");
    order *= n;
    if (order > 64)
      throw std::invalid_argument("group order exceeds 64");
  }
  Universe u = [&] {
    if (moduli.size() == 1) return Universe::make(static_cast<int>(order));
    std::vector<std::string> labels;
    labels.reserve(order);
    std::vector<int> digits(moduli.size(), 0);
    for (long long i = 0; i < order; ++i) {
      std::string l = "(";
      for (std::size_t j = 0; j < digits.size(); ++j) {
        if (j) l += ",";
        l += std::to_string(digits[j]);
      }
      l += ")";
      labels.push_back(std::move(l));
      for (int j = static_cast<int>(digits.size()) - 1; j >= 0; --j) {
        if (++digits[j] < moduli[j]) break;
        digits[j] = 0;
      }
    }
    return Universe::make(static_cast<int>(order), std::move(labels));
  }();
  return GroupModel(std::move(moduli), static_cast<int>(order), std::move(u));
}

std::vector<int> GroupModel::decode(int index) const {
  std::vector<int> digits(moduli_.size());
  for (int j = static_cast<int>(moduli_.size()) - 1; j >= 0; --j) {
    digits[j] = index % moduli_[j];
    index /= moduli_[j];
  }
  return digits;
}

int GroupModel::encode(const std::vector<int>& digits) const {
  int idx = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    int d = digits[j] % moduli_[j];
    if (d < 0) d += moduli_[j];
    idx = idx * moduli_[j] + d;
  }
  return idx;
}

int GroupModel::add(int a, int b) const {
  if (a < 0 || a >= order_ || b < 0 || b >= order_)
    throw std::invalid_argument("group element out of range");
  auto da = decode(a), db = decode(b);
  for (std::size_t j = 0; j < da.size(); ++j) da[j] += db[j];
  return encode(da);
}

int GroupModel::neg(int a) const {
  if (a < 0 || a >= order_)
    throw std::invalid_argument("group element out of range");
  auto d = decode(a);
  for (std::size_t j = 0; j < d.size(); ++j) d[j] = -d[j];
  return encode(d);
}

std::string GroupModel::spec_string() const {
  std::string s;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    if (j) s += "x";
    s += "Z" + std::to_string(moduli_[j]);
  }
  return s;
}

Subgroup Subgroup::from_elements(const GroupModel& g, const Subset& elements) {
  internal::require_same_universe(g.universe(), elements.universe(),
                                  "subgroup");
  if (!elements.contains(0))
    throw std::invalid_argument("subgroup must contain 0");
  for (int a : elements.elements())
    for (int b : elements.elements())
      if (!elements.contains(g.add(a, b)))
        throw std::invalid_argument("subgroup is not closed under addition");
  return Subgroup(g, elements);
}

namespace {

std::uint64_t additive_closure(const GroupModel& g, std::uint64_t seed) {
  std::uint64_t mask = seed | 1;  // always contains 0
  // In a finite group, closure under addition of a set containing 0 is
  // already a subgroup (inverses arise from element orders).
  bool grew = true;
  while (grew) {
    grew = false;
    std::uint64_t cur = mask;
    for (int a = 0; a < g.order(); ++a) {
      if (!((cur >> a) & 1)) continue;
      for (int b = a; b < g.order(); ++b) {
        if (!((cur >> b) & 1)) continue;
        const int c = g.add(a, b);
        if (!((mask >> c) & 1)) {
          mask |= 1ull << c;
          grew = true;
        }
      }
    }
  }
  return mask;
}

}  // namespace

Subgroup subgroup_generated(const GroupModel& g, const std::vector<int>& gens) {
  std::uint64_t seed = 1;
  for (int e : gens) {
    if (e < 0 || e >= g.order())
      throw std::invalid_argument("generator out of range");
    seed |= 1ull << e;
  }
  return Subgroup::from_elements(g,
                                 Subset(g.universe(), additive_closure(g, seed)));
}

std::vector<Subgroup> all_subgroups(const GroupModel& g) {
  std::set<std::uint64_t> seen{1};
  std::vector<std::uint64_t> work{1};
  for (std::size_t next = 0; next < work.size(); ++next) {
    const std::uint64_t h = work[next];
    for (int e = 0; e < g.order(); ++e) {
      if ((h >> e) & 1) continue;
      const std::uint64_t ext = additive_closure(g, h | (1ull << e));
      if (seen.insert(ext).second) work.push_back(ext);
    }
  }
  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (std::uint64_t m : seen)
    out.push_back(Subgroup::from_elements(g, Subset(g.universe(), m)));
  return out;
}

CosetPartition cosets_of(const Subgroup& q) {
  const GroupModel& g = q.parent();
  std::vector<Subset> cosets;
  std::uint64_t visited = 0;
  for (int t = 0; t < g.order(); ++t) {
    if ((visited >> t) & 1) continue;
    const Subset c = translate(g, q.elements(), t);
    visited |= c.bits();
    cosets.push_back(c);
  }
  return CosetPartition(q, std::move(cosets));
}

bool is_transversal(const Subset& v, const CosetPartition& p) {
  internal::require_same_universe(
      v.universe(), p.subgroup().parent().universe(), "is_transversal");
  for (const Subset& c : p.cosets())
    if (__builtin_popcountll(v.bits() & c.bits()) != 1) return false;
  return true;
}

TransversalEnumerator::TransversalEnumerator(CosetPartition p,
                                             std::uint64_t ceiling)
    : partition_(std::move(p)) {
  count_ = 1;
  for (const Subset& c : partition_.cosets()) {
    coset_elems_.push_back(c.elements());
    const std::uint64_t k = static_cast<std::uint64_t>(c.count());
    count_ = (count_ > UINT64_MAX / k) ? UINT64_MAX : count_ * k;
  }
  if (count_ > ceiling)
    throw bound_error("transversal enumeration of " + std::to_string(count_) +
                      " picks exceeds the ceiling");
  digits_.assign(coset_elems_.size(), 0);
}

bool TransversalEnumerator::next(Transversal& out) {
  if (done_) return false;
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < digits_.size(); ++i)
    bits |= 1ull << coset_elems_[i][digits_[i]];
  out = Transversal{partition_,
                    Subset(partition_.subgroup().parent().universe(), bits)};
  // advance, last coset fastest
  int i = static_cast<int>(digits_.size()) - 1;
  for (; i >= 0; --i) {
    if (++digits_[i] < coset_elems_[i].size()) break;
    digits_[i] = 0;
  }
  if (i < 0) done_ = true;
  return true;
}

Subset translate(const GroupModel& g, const Subset& a, int t) {
  internal::require_same_universe(g.universe(), a.universe(), "translate");
  if (t < 0 || t >= g.order())
    throw std::invalid_argument("translation element out of range");
  std::uint64_t bits = 0;
  for (int e : a.elements()) bits |= 1ull << g.add(e, t);
  return Subset(g.universe(), bits);
}

bool vitali_partition_check(const Transversal& v) {
  const GroupModel& g = v.partition.subgroup().parent();
  std::uint64_t acc = 0;
  for (int q : v.partition.subgroup().elements().elements()) {
    const std::uint64_t w = translate(g, v.picks, q).bits();
    if (acc & w) return false;
    acc |= w;
  }
  return acc == g.universe().full_mask();
}

bool translate_transversal_check(const Transversal& v, int t) {
  const GroupModel& g = v.partition.subgroup().parent();
  return is_transversal(translate(g, v.picks, t), v.partition);
}

SetFamily coset_family(const Subgroup& b) {
  const CosetPartition p = cosets_of(b);
  return SetFamily::make(b.parent().universe(), p.cosets());
}

bool proper_coset_union_check(const Subgroup& b) {
  const CosetPartition p = cosets_of(b);
  const std::size_t m = p.coset_count();
  if (m < 2)
    throw std::invalid_argument(
        "proper_coset_union_check needs at least two cosets");
  if (m > 20)
    throw bound_error("proper coset union scan over 2^" + std::to_string(m) +
                      " subfamilies exceeds the ceiling");
  const std::uint64_t full = b.parent().universe().full_mask();
  for (std::uint64_t pick = 1; pick + 1 < (1ull << m); ++pick) {
    std::uint64_t u = 0;
    for (std::size_t i = 0; i < m; ++i)
      if ((pick >> i) & 1) u |= p.cosets()[i].bits();
    if (u == full) return false;
    for (std::size_t i = 0; i < m; ++i)
      if (!((pick >> i) & 1) && (p.cosets()[i].bits() & u)) return false;
  }
  return true;
}

std::optional<std::pair<Subgroup, Subgroup>> trivial_intersection_pair(
    const GroupModel& g) {
  const auto subs = all_subgroups(g);  // ordered by mask
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].order() < 2) continue;
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      if (subs[j].order() < 2) continue;
      if ((subs[i].elements().bits() & subs[j].elements().bits()) == 1)
        return std::make_pair(subs[i], subs[j]);
    }
  }
  return std::nullopt;
}

bool translation_invariance_check(const SetFamily& f, const GroupModel& g) {
  internal::require_same_universe(f.universe(), g.universe(),
                                  "translation_invariance_check");
  for (std::uint64_t m : f.masks()) {
    const Subset a(g.universe(), m);
    for (int t = 0; t < g.order(); ++t)
      if (!f.contains_mask(translate(g, a, t).bits())) return false;
  }
  return true;
}

std::string rational_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

WeightedMeasure WeightedMeasure::make(Universe u,
                                      std::vector<Rational> weights) {
  if (static_cast<int>(weights.size()) != u.size())
    throw std::invalid_argument("expected one weight per element");
  for (const Rational& w : weights)
    if (w < Rational(0)) throw std::invalid_argument("negative weight");
  return WeightedMeasure(std::move(u), std::move(weights));
}

Rational WeightedMeasure::measure(const Subset& a) const {
  internal::require_same_universe(universe_, a.universe(), "measure");
  Rational sum(0);
  for (int i : a.elements()) sum += weights_[i];
  return sum;
}

PrincipalIdeal WeightedMeasure::null_ideal() const {
  std::uint64_t apex = 0;
  for (int i = 0; i < universe_.size(); ++i)
    if (weights_[i] == Rational(0)) apex |= 1ull << i;
  return PrincipalIdeal(Subset(universe_, apex));
}

}  // namespace famalg::models
