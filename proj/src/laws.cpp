#include "famalg/laws.hpp"

#include <algorithm>
#include <thread>

namespace famalg::laws {

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

const SetFamily& fam(const std::vector<Operand>& ops, std::size_t i) {
  return std::get<SetFamily>(ops[i]);
}

const PrincipalIdeal& idl(const std::vector<Operand>& ops, std::size_t i) {
  return std::get<PrincipalIdeal>(ops[i]);
}

SetFamily sim(const SetFamily& f, const PrincipalIdeal& i) {
  return star_ideal_materialized(f, i);
}

SetFamily ism(const PrincipalIdeal& i, const SetFamily& f) {
  return ideal_star_materialized(i, f);
}

SetFamily join3(const SetFamily& a, const SetFamily& b, const SetFamily& c) {
  return join(join(a, b), c);
}

int operand_compare(const Operand& a, const Operand& b) {
  if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
  if (std::holds_alternative<SetFamily>(a)) {
    const auto& fa = std::get<SetFamily>(a).masks();
    const auto& fb = std::get<SetFamily>(b).masks();
    if (fa < fb) return -1;
    if (fb < fa) return 1;
    return 0;
  }
  const auto xa = std::get<PrincipalIdeal>(a).apex().bits();
  const auto xb = std::get<PrincipalIdeal>(b).apex().bits();
  if (xa < xb) return -1;
  if (xb < xa) return 1;
  return 0;
}

}  // namespace

bool binding_less(const Binding& a, const Binding& b) {
  const std::size_t n = std::min(a.operands.size(), b.operands.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = operand_compare(a.operands[i], b.operands[i]);
    if (c != 0) return c < 0;
  }
  return a.operands.size() < b.operands.size();
}

const char* to_string(LawKind k) {
  switch (k) {
    case LawKind::identity: return "identity";
    case LawKind::inclusion: return "inclusion";
    case LawKind::non_law: return "non-law";
  }
  return "?";
}

const char* to_string(Role r) {
  switch (r) {
    case Role::family: return "family";
    case Role::semigroup: return "semigroup";
    case Role::ideal: return "ideal";
  }
  return "?";
}

const char* to_string(relation_class c) {
  switch (c) {
    case relation_class::equal: return "equal";
    case relation_class::left_subset: return "left-subset";
    case relation_class::right_subset: return "right-subset";
    case relation_class::incomparable: return "incomparable";
  }
  return "?";
}

const std::vector<Law>& builtin_laws() {
  static const std::vector<Law> registry = [] {
    std::vector<Law> v;
    const auto F = Role::family;
    const auto S = Role::semigroup;
    const auto P = Role::ideal;

    v.push_back({"L1", "S1 v S2 is union-closed", LawKind::identity, {S, S}, 3,
                 3, [](const auto& o) { return is_semigroup(join(fam(o, 0), fam(o, 1))); }});

    v.push_back({"L2", "S(A v B) = S(A) v S(B)", LawKind::identity, {F, F}, 3,
                 3, [](const auto& o) {
                   return semigroup_closure(join(fam(o, 0), fam(o, 1))) ==
                          join(semigroup_closure(fam(o, 0)),
                               semigroup_closure(fam(o, 1)));
                 }});

    v.push_back({"L3", "S(A1 v A2 v A3) = S(A1) v S(A2) v S(A3)",
                 LawKind::identity, {F, F, F}, 3, 2, [](const auto& o) {
                   return semigroup_closure(
                              join3(fam(o, 0), fam(o, 1), fam(o, 2))) ==
                          join3(semigroup_closure(fam(o, 0)),
                                semigroup_closure(fam(o, 1)),
                                semigroup_closure(fam(o, 2)));
                 }});

    v.push_back({"L4", "(S1 v S2) * I = (S1 * I) v (S2 * I)",
                 LawKind::identity, {S, S, P}, 3, 2, [](const auto& o) {
                   return sim(join(fam(o, 0), fam(o, 1)), idl(o, 2)) ==
                          join(sim(fam(o, 0), idl(o, 2)),
                               sim(fam(o, 1), idl(o, 2)));
                 }});

    v.push_back({"L4'", "(A v B) * I = (A * I) v (B * I) for arbitrary families",
                 LawKind::identity, {F, F, P}, 3, 2, [](const auto& o) {
                   return sim(join(fam(o, 0), fam(o, 1)), idl(o, 2)) ==
                          join(sim(fam(o, 0), idl(o, 2)),
                               sim(fam(o, 1), idl(o, 2)));
                 }});

    v.push_back({"L5", "I * (S1 v S2) = (I * S1) v (I * S2)",
                 LawKind::identity, {S, S, P}, 3, 2, [](const auto& o) {
                   return ism(idl(o, 2), join(fam(o, 0), fam(o, 1))) ==
                          join(ism(idl(o, 2), fam(o, 0)),
                               ism(idl(o, 2), fam(o, 1)));
                 }});

    v.push_back({"L6",
                 "(S1 v S2 v S3) * I and I * (S1 v S2 v S3) distribute over v",
                 LawKind::identity, {S, S, S, P}, 3, 2, [](const auto& o) {
                   const SetFamily j = join3(fam(o, 0), fam(o, 1), fam(o, 2));
                   const auto& i = idl(o, 3);
                   return sim(j, i) == join3(sim(fam(o, 0), i),
                                             sim(fam(o, 1), i),
                                             sim(fam(o, 2), i)) &&
                          ism(i, j) == join3(ism(i, fam(o, 0)),
                                             ism(i, fam(o, 1)),
                                             ism(i, fam(o, 2)));
                 }});

    // The equality S*(I1 v I2) = (S*I1) v (S*I2) is refuted by the engine
    // (see N6); only the inclusions survive, so L7 carries those.
    v.push_back({"L7",
                 "S * Ii <= S * (I1 v I2) and (S*I1) v (S*I2) <= S * (I1 v I2)",
                 LawKind::inclusion, {S, P, P}, 3, 2, [](const auto& o) {
                   const auto& s = fam(o, 0);
                   const auto j = join_ideals(idl(o, 1), idl(o, 2));
                   const SetFamily lhs = sim(s, j);
                   return is_subfamily(join(sim(s, idl(o, 1)),
                                            sim(s, idl(o, 2))),
                                       lhs) &&
                          is_subfamily(sim(s, idl(o, 1)), lhs) &&
                          is_subfamily(sim(s, idl(o, 2)), lhs);
                 }});

    v.push_back({"L8", "(I1 v I2) * S = (I1 * S) v (I2 * S) and Ii * S <= it",
                 LawKind::identity, {S, P, P}, 3, 2, [](const auto& o) {
                   const auto& s = fam(o, 0);
                   const auto j = join_ideals(idl(o, 1), idl(o, 2));
                   const SetFamily lhs = ism(j, s);
                   return lhs == join(ism(idl(o, 1), s), ism(idl(o, 2), s)) &&
                          is_subfamily(ism(idl(o, 1), s), lhs) &&
                          is_subfamily(ism(idl(o, 2), s), lhs);
                 }});

    v.push_back({"L8n3",
                 "(I1 v I2 v I3) * S distributes over v; "
                 "v(S * Ii) <= S * (I1 v I2 v I3)",
                 LawKind::identity, {S, P, P, P}, 3, 2, [](const auto& o) {
                   const auto& s = fam(o, 0);
                   const auto j = join_ideals(join_ideals(idl(o, 1), idl(o, 2)),
                                              idl(o, 3));
                   return ism(j, s) == join3(ism(idl(o, 1), s),
                                             ism(idl(o, 2), s),
                                             ism(idl(o, 3), s)) &&
                          is_subfamily(join3(sim(s, idl(o, 1)),
                                             sim(s, idl(o, 2)),
                                             sim(s, idl(o, 3))),
                                       sim(s, j));
                 }});

    v.push_back({"L9",
                 "S <= I*S <= S*I; I*(I*S) = I*S; (S*I)*I = S*I",
                 LawKind::identity, {S, P}, 3, 3, [](const auto& o) {
                   const auto& s = fam(o, 0);
                   const auto& i = idl(o, 1);
                   const SetFamily is = ism(i, s);
                   const SetFamily si = sim(s, i);
                   return is_subfamily(s, is) && is_subfamily(is, si) &&
                          ism(i, is) == is && sim(si, i) == si;
                 }});

    v.push_back({"L10", "A v B <= A * B and A v B <= B * A",
                 LawKind::inclusion, {F, F}, 3, 3, [](const auto& o) {
                   const SetFamily j = join(fam(o, 0), fam(o, 1));
                   return is_subfamily(j, star(fam(o, 0), fam(o, 1))) &&
                          is_subfamily(j, star(fam(o, 1), fam(o, 0)));
                 }});

    v.push_back({"L11", "v and * are monotone in both operands",
                 LawKind::inclusion, {F, F}, 3, 3, [](const auto& o) {
                   const auto& a = fam(o, 0);
                   const auto& b = fam(o, 1);
                   const SetFamily u = family_union(a, b);
                   return is_subfamily(join(a, b), join(u, b)) &&
                          is_subfamily(join(a, b), join(a, u)) &&
                          is_subfamily(star(a, b), star(u, b)) &&
                          is_subfamily(star(a, b), star(a, u));
                 }});

    v.push_back({"L12", "A <= A v A; A v A = A when A is union-closed",
                 LawKind::identity, {F}, 3, 3, [](const auto& o) {
                   const auto& a = fam(o, 0);
                   const SetFamily c = semigroup_closure(a);
                   return is_subfamily(a, join(a, a)) && join(c, c) == c;
                 }});

    v.push_back({"N1", "S(A | B) = S(A) | S(B)", LawKind::non_law, {F, F}, 2,
                 1, [](const auto& o) {
                   return semigroup_closure(family_union(fam(o, 0), fam(o, 1))) ==
                          family_union(semigroup_closure(fam(o, 0)),
                                       semigroup_closure(fam(o, 1)));
                 }});

    v.push_back({"N2", "S1 * I <= (S1 v S2) * I", LawKind::non_law, {S, S, P},
                 2, 2, [](const auto& o) {
                   return is_subfamily(
                       sim(fam(o, 0), idl(o, 2)),
                       sim(join(fam(o, 0), fam(o, 1)), idl(o, 2)));
                 }});

    v.push_back({"N3", "I * S2 <= I * (S1 v S2)", LawKind::non_law, {S, S, P},
                 2, 2, [](const auto& o) {
                   return is_subfamily(
                       ism(idl(o, 2), fam(o, 1)),
                       ism(idl(o, 2), join(fam(o, 0), fam(o, 1))));
                 }});

    v.push_back({"N4", "A <= A v B", LawKind::non_law, {F, F}, 2, 1,
                 [](const auto& o) {
                   return is_subfamily(fam(o, 0), join(fam(o, 0), fam(o, 1)));
                 }});

    v.push_back({"N5", "S1 | S2 is union-closed", LawKind::non_law, {S, S}, 2,
                 1, [](const auto& o) {
                   return is_semigroup(family_union(fam(o, 0), fam(o, 1)));
                 }});

    // demoted from L7: the witness S={{0}}, I1=P({}), I2=P({0}) on a
    // 2-universe gives S*(I1 v I2) = [{},{0}] but (S*I1) v (S*I2) = [{0}]
    v.push_back({"N6", "S * (I1 v I2) = (S * I1) v (S * I2)",
                 LawKind::non_law, {S, P, P}, 2, 1, [](const auto& o) {
                   const auto& s = fam(o, 0);
                   const auto j = join_ideals(idl(o, 1), idl(o, 2));
                   return sim(s, j) ==
                          join(sim(s, idl(o, 1)), sim(s, idl(o, 2)));
                 }});

    return v;
  }();
  return registry;
}

const Law* find_law(const std::string& id) {
  for (const Law& l : builtin_laws())
    if (l.id == id) return &l;
  return nullptr;
}

std::uint64_t family_domain_size(int universe_size, int max_members) {
  const std::uint64_t m = 1ull << universe_size;  // number of subsets
  std::uint64_t total = 0;
  __uint128_t binom = 1;
  for (int k = 1; k <= max_members && static_cast<std::uint64_t>(k) <= m; ++k) {
    binom = binom * (m - k + 1) / k;
    const std::uint64_t add =
        binom > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(binom);
    total = (total > UINT64_MAX - add) ? UINT64_MAX : total + add;
  }
  return total;
}

std::vector<SetFamily> enumerate_families(const Universe& u, int max_members) {
  if (max_members < 1)
    throw std::invalid_argument("max_members must be at least 1");
  std::vector<SetFamily> out;
  std::vector<std::uint64_t> cur;
  const std::uint64_t count = 1ull << u.size();
  auto rec = [&](auto&& self, std::uint64_t next_min) -> void {
    for (std::uint64_t m = next_min; m < count; ++m) {
      cur.push_back(m);
      out.push_back(SetFamily::from_masks(u, cur));
      if (static_cast<int>(cur.size()) < max_members) self(self, m + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

void validate_binding(const Law& law, std::vector<Operand>& ops,
                      bool auto_close) {
  if (ops.size() != law.roles.size())
    throw std::invalid_argument("law " + law.id + " expects " +
                                std::to_string(law.roles.size()) +
                                " operands, got " +
                                std::to_string(ops.size()));
  const Universe* u = nullptr;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const Role role = law.roles[i];
    if (role == Role::ideal) {
      if (!std::holds_alternative<PrincipalIdeal>(ops[i]))
        throw std::invalid_argument("operand " + std::to_string(i + 1) +
                                    " of " + law.id + " must be an ideal");
    } else {
      if (!std::holds_alternative<SetFamily>(ops[i]))
        throw std::invalid_argument("operand " + std::to_string(i + 1) +
                                    " of " + law.id + " must be a family");
      const SetFamily& f = std::get<SetFamily>(ops[i]);
      if (f.empty())
        throw empty_family_error("operand " + std::to_string(i + 1) + " of " +
                                 law.id + " must be non-empty");
      if (role == Role::semigroup && !is_semigroup(f)) {
        if (!auto_close)
          throw std::invalid_argument("operand " + std::to_string(i + 1) +
                                      " of " + law.id +
                                      " must be union-closed");
        ops[i] = semigroup_closure(f);
      }
    }
    const Universe& ou = std::holds_alternative<SetFamily>(ops[i])
                             ? std::get<SetFamily>(ops[i]).universe()
                             : std::get<PrincipalIdeal>(ops[i]).universe();
    if (!u)
      u = &ou;
    else
      internal::require_same_universe(*u, ou, "check_law");
  }
}

struct Domains {
  Universe u;
  std::vector<SetFamily> families;
  std::vector<SetFamily> closures;
  std::vector<PrincipalIdeal> ideals;
};

Domains build_domains(const Law& law, int universe_size, int max_members) {
  Domains d{make_universe(universe_size), {}, {}, {}};
  const bool wants_fam =
      std::any_of(law.roles.begin(), law.roles.end(),
                  [](Role r) { return r != Role::ideal; });
  const bool wants_sg = std::any_of(law.roles.begin(), law.roles.end(),
                                    [](Role r) { return r == Role::semigroup; });
  const bool wants_ideal = std::any_of(law.roles.begin(), law.roles.end(),
                                       [](Role r) { return r == Role::ideal; });
  if (wants_fam) {
    d.families = enumerate_families(d.u, max_members);
    if (wants_sg) {
      d.closures.reserve(d.families.size());
      for (const SetFamily& f : d.families)
        d.closures.push_back(semigroup_closure(f));
    }
  }
  if (wants_ideal) {
    const std::uint64_t n = 1ull << universe_size;
    d.ideals.reserve(n);
    for (std::uint64_t apex = 0; apex < n; ++apex)
      d.ideals.emplace_back(Subset(d.u, apex));
  }
  return d;
}

std::uint64_t role_domain_size(Role r, const Domains& d) {
  return r == Role::ideal ? d.ideals.size() : d.families.size();
}

}  // namespace

SearchReport check_law(const Law& law, std::vector<Operand> operands,
                       bool auto_close) {
  validate_binding(law, operands, auto_close);
  SearchReport r;
  r.law_id = law.id;
  r.law_kind = law.kind;
  r.mode = "single";
  const Universe& u = std::holds_alternative<SetFamily>(operands[0])
                          ? std::get<SetFamily>(operands[0]).universe()
                          : std::get<PrincipalIdeal>(operands[0]).universe();
  r.universe_size = u.size();
  r.cases_checked = 1;
  if (!law.holds(operands)) {
    r.witness_found = true;
    r.witness = Binding{std::move(operands)};
  }
  return r;
}

SearchReport exhaustive_search(const Law& law, int universe_size,
                               int max_members, int threads,
                               std::uint64_t ceiling) {
  if (universe_size < 1 || universe_size > 5)
    throw bound_error("exhaustive search supports universe sizes 1..5");
  if (max_members < 1)
    throw std::invalid_argument("max_members must be at least 1");
  if (law.roles.size() > 16)
    throw std::invalid_argument("laws are limited to 16 operands");

  const std::uint64_t fam_count =
      family_domain_size(universe_size, max_members);
  std::uint64_t total = 1;
  for (Role r : law.roles)
    total = sat_mul(total, r == Role::ideal ? (1ull << universe_size)
                                            : fam_count);
  if (total > ceiling)
    throw bound_error("estimated " + std::to_string(total) +
                      " cases exceed the search ceiling of " +
                      std::to_string(ceiling));

  const int nthreads =
      std::max(1, std::min({threads, 64, static_cast<int>(total)}));
  std::vector<std::optional<Binding>> best(nthreads);
  // Each worker builds its own domains: operand values are identical across
  // workers, but distinct universe handles keep refcount traffic local.
  auto worker = [&](int w, std::uint64_t lo, std::uint64_t hi) {
    if (lo >= hi) return;
    const Domains d = build_domains(law, universe_size, max_members);
    const std::size_t nroles = law.roles.size();
    std::uint64_t digit[16], radix[16];
    for (std::size_t i = 0; i < nroles; ++i)
      radix[i] = role_domain_size(law.roles[i], d);
    std::uint64_t rest = lo;
    for (int i = static_cast<int>(nroles) - 1; i >= 0; --i) {
      digit[i] = rest % radix[i];
      rest /= radix[i];
    }
    std::vector<Operand> scratch;
    auto assign = [&](std::size_t i) {
      switch (law.roles[i]) {
        case Role::family: scratch[i] = d.families[digit[i]]; break;
        case Role::semigroup: scratch[i] = d.closures[digit[i]]; break;
        case Role::ideal: scratch[i] = d.ideals[digit[i]]; break;
      }
    };
    scratch.resize(nroles, Operand{PrincipalIdeal(Subset(d.u, 0))});
    for (std::size_t i = 0; i < nroles; ++i) assign(i);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      if (!law.holds(scratch)) {
        Binding b{scratch};
        if (!best[w] || binding_less(b, *best[w])) best[w] = std::move(b);
      }
      // odometer step: bump the fastest role, reassign only what changed
      for (int i = static_cast<int>(nroles) - 1; i >= 0; --i) {
        if (++digit[i] < radix[i]) {
          assign(i);
          break;
        }
        digit[i] = 0;
        assign(i);
      }
    }
  };
  if (nthreads == 1) {
    worker(0, 0, total);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + nthreads - 1) / nthreads;
    for (int w = 0; w < nthreads; ++w) {
      const std::uint64_t lo = chunk * w;
      const std::uint64_t hi = std::min(total, lo + chunk);
      pool.emplace_back(worker, w, lo, hi);
    }
    for (auto& t : pool) t.join();
  }

  SearchReport r;
  r.law_id = law.id;
  r.law_kind = law.kind;
  r.mode = "exhaustive";
  r.universe_size = universe_size;
  r.max_members = max_members;
  r.cases_checked = total;
  for (auto& b : best) {
    if (!b) continue;
    if (!r.witness || binding_less(*b, *r.witness)) r.witness = std::move(b);
  }
  r.witness_found = r.witness.has_value();
  return r;
}

SearchReport random_search(const Law& law, int universe_size, int max_members,
                           std::uint64_t trials, std::uint64_t seed) {
  if (universe_size < 1 || universe_size > 16)
    throw bound_error("random search supports universe sizes 1..16");
  if (max_members < 1)
    throw std::invalid_argument("max_members must be at least 1");

  // splitmix64; fixed here so reports are reproducible across platforms
  std::uint64_t state = seed;
  auto next = [&state]() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  };
  auto below = [&next](std::uint64_t n) { return next() % n; };

  const Universe u = make_universe(universe_size);
  const std::uint64_t nsubsets = 1ull << universe_size;

  SearchReport r;
  r.law_id = law.id;
  r.law_kind = law.kind;
  r.mode = "random";
  r.universe_size = universe_size;
  r.max_members = max_members;
  r.trials = trials;
  r.seed = seed;
  r.seeded = true;
  r.cases_checked = trials;

  std::vector<Operand> scratch;
  std::vector<std::uint64_t> masks;
  for (std::uint64_t t = 0; t < trials; ++t) {
    scratch.clear();
    for (Role role : law.roles) {
      if (role == Role::ideal) {
        scratch.emplace_back(PrincipalIdeal(Subset(u, below(nsubsets))));
        continue;
      }
      const std::uint64_t k = 1 + below(static_cast<std::uint64_t>(max_members));
      masks.clear();
      for (std::uint64_t i = 0; i < k; ++i) masks.push_back(below(nsubsets));
      SetFamily f = SetFamily::from_masks(u, masks);
      scratch.emplace_back(role == Role::semigroup ? semigroup_closure(f)
                                                   : std::move(f));
    }
    if (!law.holds(scratch)) {
      Binding b{scratch};
      if (!r.witness || binding_less(b, *r.witness)) r.witness = std::move(b);
    }
  }
  r.witness_found = r.witness.has_value();
  return r;
}

Q213Report explore_q213(int universe_size, int max_members,
                        std::uint64_t ceiling) {
  if (universe_size < 1 || universe_size > 4)
    throw bound_error("the relation explorer supports universe sizes 1..4");
  const std::uint64_t fam_count =
      family_domain_size(universe_size, max_members);
  const std::uint64_t total =
      sat_mul(sat_mul(fam_count, fam_count), 1ull << universe_size);
  if (total > ceiling)
    throw bound_error("estimated " + std::to_string(total) +
                      " cases exceed the search ceiling");

  const Universe u = make_universe(universe_size);
  const auto families = enumerate_families(u, max_members);
  std::vector<bool> closed(families.size());
  for (std::size_t i = 0; i < families.size(); ++i)
    closed[i] = is_semigroup(families[i]);

  Q213Report rep;
  rep.universe_size = universe_size;
  rep.max_members = max_members;

  for (std::size_t ai = 0; ai < families.size(); ++ai) {
    for (std::size_t bi = 0; bi < families.size(); ++bi) {
      const SetFamily j = join(families[ai], families[bi]);
      const SetFamily sj = semigroup_closure(j);
      for (std::uint64_t apex = 0; apex < (1ull << universe_size); ++apex) {
        const PrincipalIdeal ideal(Subset(u, apex));
        const SetFamily left = star_ideal(sj, ideal).materialize();
        const SetFamily right =
            semigroup_closure(star_ideal(j, ideal).materialize());
        relation_class cls;
        switch (family_relations(left, right)) {
          case family_relation::equal: cls = relation_class::equal; break;
          case family_relation::subfamily:
            cls = relation_class::left_subset;
            break;
          case family_relation::superfamily:
            cls = relation_class::right_subset;
            break;
          default: cls = relation_class::incomparable; break;
        }
        auto& stat = rep.stats[static_cast<int>(cls)];
        ++stat.count;
        ++rep.cases;
        const bool both_closed = closed[ai] && closed[bi];
        if (both_closed) {
          ++rep.union_closed_cases;
          if (cls == relation_class::equal) ++rep.union_closed_equal;
        }
        if (!stat.least) {
          stat.least =
              Binding{{families[ai], families[bi], PrincipalIdeal(ideal)}};
        }
      }
    }
  }
  return rep;
}

namespace {

void check(std::vector<std::string>& fails, bool ok, const std::string& what) {
  if (!ok) fails.push_back(what);
}

FixtureResult fixture_closure_join_collapse() {
  std::vector<std::string> fails;
  const Universe x = make_universe(4, {{"a", "b", "c", "d"}});
  const Subset A = make_subset(x, {0, 1});
  const Subset B = make_subset(x, {1, 2});
  const Subset D = make_subset(x, {2, 3});
  const SetFamily famA = make_family(x, {A});
  const SetFamily famB = make_family(x, {B, D});

  check(fails, semigroup_closure(famA) == famA, "S({A}) = {A}");
  check(fails,
        semigroup_closure(famB) ==
            make_family(x, {B, D, B.union_with(D)}),
        "S({B,D}) = {B, D, B|D}");

  const SetFamily expected_join =
      make_family(x, {A.union_with(B), A.union_with(D)});
  check(fails, expected_join.size() == 2, "A v B collapses to two values");
  check(fails, join(famA, famB) == expected_join, "A v B value");
  check(fails, semigroup_closure(join(famA, famB)) == expected_join,
        "S(A v B) value");
  check(fails,
        semigroup_closure(join(famA, famB)) ==
            join(semigroup_closure(famA), semigroup_closure(famB)),
        "S(A v B) = S(A) v S(B)");

  const SetFamily lhs = semigroup_closure(family_union(famA, famB));
  const SetFamily rhs =
      family_union(semigroup_closure(famA), semigroup_closure(famB));
  check(fails, lhs.size() == 6 && rhs.size() == 4 && lhs != rhs,
        "S(A | B) differs from S(A) | S(B)");

  FixtureResult r{"closure-join-collapse", fails.empty(), ""};
  for (const auto& f : fails) r.detail += (r.detail.empty() ? "" : "; ") + f;
  return r;
}

FixtureResult fixture_star_ideal_split(int universe_size,
                                       std::uint64_t a_mask) {
  std::vector<std::string> fails;
  const Universe x = make_universe(universe_size);
  const Subset A(x, a_mask);
  const Subset B = A.complement();
  const Subset full(x, x.full_mask());
  const Subset empty(x, 0);
  const SetFamily s1 = make_family(x, {A, full});
  const SetFamily s2 = make_family(x, {B, full});
  const PrincipalIdeal ideal_a(A);   // all subsets of A
  const PrincipalIdeal ideal_b(B);   // all subsets of B
  const SetFamily joined = join(s1, s2);

  check(fails, joined == make_family(x, {full}), "S1 v S2 = {X}");
  check(fails, star_ideal(s1, ideal_a).contains(empty), "{} in S1*I");
  check(fails, star_ideal(s1, ideal_a).contains(A), "A in S1*I");
  check(fails, !star_ideal(joined, ideal_a).contains(empty),
        "{} not in (S1 v S2)*I");
  check(fails, !star_ideal(joined, ideal_a).contains(A),
        "A not in (S1 v S2)*I");
  check(fails,
        ideal_star(ideal_a, joined).materialize() == make_family(x, {full}),
        "I*(S1 v S2) = {X}");
  check(fails,
        ideal_star(ideal_b, joined).materialize() == make_family(x, {full}),
        "J*(S1 v S2) = {X}");
  check(fails, ideal_star(ideal_a, s2).contains(B), "B in I*S2");
  check(fails, ideal_star(ideal_b, s2).contains(B), "B in J*S2");
  check(fails, ideal_star(ideal_b, s1).contains(A), "A in J*S1");
  check(fails,
        !is_subfamily(star_ideal(s1, ideal_a).materialize(),
                      star_ideal(joined, ideal_a).materialize()),
        "S1*I not <= (S1 v S2)*I");
  check(fails,
        !is_subfamily(ideal_star(ideal_a, s2).materialize(),
                      ideal_star(ideal_a, joined).materialize()),
        "I*S2 not <= I*(S1 v S2)");
  check(fails,
        !is_subfamily(ideal_star(ideal_b, s2).materialize(),
                      ideal_star(ideal_b, joined).materialize()),
        "J*S2 not <= J*(S1 v S2)");

  FixtureResult r{"star-ideal-split-" + std::to_string(universe_size),
                  fails.empty(), ""};
  for (const auto& f : fails) r.detail += (r.detail.empty() ? "" : "; ") + f;
  return r;
}

}  // namespace

std::vector<FixtureResult> regression_fixtures() {
  return {fixture_closure_join_collapse(),
          fixture_star_ideal_split(2, 0b01),    // A = {0} in a 2-universe
          fixture_star_ideal_split(3, 0b011)};  // A = {0,1} in a 3-universe
}

}  // namespace famalg::laws
