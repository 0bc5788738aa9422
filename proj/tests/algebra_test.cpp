#include <doctest.h>

#include <random>
#include <thread>

#include "famalg/algebra.hpp"
#include "oracles.hpp"

using namespace famalg;

namespace {

Universe abcd() { return make_universe(4, {{"a", "b", "c", "d"}}); }

std::vector<std::uint64_t> masks_of(const SetFamily& f) {
  return std::vector<std::uint64_t>(f.masks().begin(), f.masks().end());
}

/// Every non-empty family with at most max_members members over an
/// n-universe, as mask vectors.
std::vector<std::vector<std::uint64_t>> small_families(int n, int max_members) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> cur;
  const std::uint64_t subsets = 1ull << n;
  auto rec = [&](auto&& self, std::uint64_t from) -> void {
    for (std::uint64_t m = from; m < subsets; ++m) {
      cur.push_back(m);
      out.push_back(cur);
      if (static_cast<int>(cur.size()) < max_members) self(self, m + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

TEST_CASE("join reproduces the worked four-element example") {
  const Universe x = abcd();
  const Subset A = make_subset(x, {0, 1});
  const Subset B = make_subset(x, {1, 2});
  const Subset D = make_subset(x, {2, 3});
  const SetFamily fa = make_family(x, {A});
  const SetFamily fbd = make_family(x, {B, D});

  const SetFamily j = join(fa, fbd);
  CHECK(j == make_family(x, {make_subset(x, {0, 1, 2}), Subset(x, 15)}));
  CHECK(j.size() == 2);

  const SetFamily empty_single = make_family(x, {make_subset(x, {})});
  CHECK(join(fbd, empty_single) == fbd);

  CHECK_THROWS_AS(join(fa, make_family(x, {})), empty_family_error);
  CHECK_THROWS_AS(join(make_family(x, {}), fa), empty_family_error);
}

TEST_CASE("join of a union-closed family with itself is itself") {
  for (int n = 1; n <= 4; ++n) {
    const Universe u = make_universe(n);
    for (const auto& fam : small_families(n, 3)) {
      const SetFamily c = semigroup_closure(SetFamily::from_masks(u, fam));
      CHECK(join(c, c) == c);
    }
  }
}

TEST_CASE("star reproduces the two-block example") {
  const Universe x = make_universe(2);
  const Subset A(x, 0b01);
  const Subset full(x, 0b11);
  const SetFamily s1 = make_family(x, {A, full});
  const SetFamily ideal_members = make_family(x, {Subset(x, 0), A});

  // all four subsets of a 2-universe
  CHECK(star(s1, ideal_members) ==
        SetFamily::from_masks(x, std::vector<std::uint64_t>{0, 1, 2, 3}));
  CHECK(star(make_family(x, {full}), ideal_members) ==
        SetFamily::from_masks(x, std::vector<std::uint64_t>{2, 3}));

  // star with {the empty set} forces B1 = B2 = {} and returns the family
  const SetFamily just_empty = make_family(x, {Subset(x, 0)});
  CHECK(star(s1, just_empty) == s1);
}

TEST_CASE("star agrees with the definitional triple enumeration") {
  for (int n = 1; n <= 3; ++n) {
    const Universe u = make_universe(n);
    const auto fams = small_families(n, 2);
    for (const auto& f : fams)
      for (const auto& g : fams) {
        const SetFamily got =
            star(SetFamily::from_masks(u, f), SetFamily::from_masks(u, g));
        CHECK(oracles::to_set(got) == oracles::star(f, g));
      }
  }
}

TEST_CASE("star ceiling is enforced; the decider keeps answering") {
  const Universe u = make_universe(3);
  const SetFamily f =
      SetFamily::from_masks(u, std::vector<std::uint64_t>{1, 2, 4});
  CHECK_THROWS_AS(star(f, f, 10), bound_error);
  // membership stays available past the materialization ceiling
  const auto want = oracles::star({1, 2, 4}, {1, 2, 4});
  for (std::uint64_t m = 0; m < 8; ++m)
    CHECK(star_contains(f, f, Subset(u, m)) == (want.count(m) > 0));
}

TEST_CASE("star decider agrees with the triple enumeration") {
  for (int n = 1; n <= 3; ++n) {
    const Universe u = make_universe(n);
    const auto fams = small_families(n, 2);
    for (const auto& fm : fams)
      for (const auto& gm : fams) {
        const SetFamily f = SetFamily::from_masks(u, fm);
        const SetFamily g = SetFamily::from_masks(u, gm);
        const auto want = oracles::star(fm, gm);
        for (std::uint64_t m = 0; m < (1ull << n); ++m)
          CHECK(star_contains(f, g, Subset(u, m)) == (want.count(m) > 0));
      }
  }
}

TEST_CASE("semigroup closure") {
  const Universe x = abcd();
  const Subset B = make_subset(x, {1, 2});
  const Subset D = make_subset(x, {2, 3});
  const SetFamily fbd = make_family(x, {B, D});
  CHECK(semigroup_closure(fbd) ==
        make_family(x, {B, D, B.union_with(D)}));

  // singletons of a 3-universe close to all seven non-empty subsets
  const Universe z = make_universe(3);
  const SetFamily singles =
      SetFamily::from_masks(z, std::vector<std::uint64_t>{1, 2, 4});
  CHECK(semigroup_closure(singles) ==
        SetFamily::from_masks(z,
                              std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7}));

  CHECK_THROWS_AS(semigroup_closure(make_family(x, {})), empty_family_error);
}

TEST_CASE("closure agrees with the subfamily-union oracle") {
  for (int n = 1; n <= 4; ++n) {
    const Universe u = make_universe(n);
    for (const auto& fam : small_families(n, 3)) {
      const SetFamily c = semigroup_closure(SetFamily::from_masks(u, fam));
      CHECK(oracles::to_set(c) == oracles::closure(fam));
      // fixed point and containment
      CHECK(is_semigroup(c));
      CHECK(semigroup_closure(c) == c);
      CHECK(is_subfamily(SetFamily::from_masks(u, fam), c));
    }
  }
}

TEST_CASE("closure is monotone in the subfamily order") {
  const Universe u = make_universe(3);
  const auto fams = small_families(3, 2);
  for (const auto& fm : fams) {
    const SetFamily f = SetFamily::from_masks(u, fm);
    for (const auto& gm : fams) {
      const SetFamily g = SetFamily::from_masks(u, gm);
      if (is_subfamily(f, g))
        CHECK(is_subfamily(semigroup_closure(f), semigroup_closure(g)));
      // every family extends to a superfamily with the union thrown in
      const SetFamily sup = family_union(f, g);
      CHECK(is_subfamily(semigroup_closure(f), semigroup_closure(sup)));
    }
  }
}

TEST_CASE("closure membership decider equals materialized membership") {
  const Universe x = abcd();
  const Subset B = make_subset(x, {1, 2});
  const Subset D = make_subset(x, {2, 3});
  CHECK(member_of_closure(B.union_with(D), make_family(x, {B, D})));

  const Universe z = make_universe(3);
  CHECK_FALSE(member_of_closure(
      Subset(z, 0b111),
      SetFamily::from_masks(z, std::vector<std::uint64_t>{1, 2})));

  for (int n = 1; n <= 4; ++n) {
    const Universe u = make_universe(n);
    for (const auto& fam : small_families(n, 3)) {
      const SetFamily f = SetFamily::from_masks(u, fam);
      const auto cl = oracles::closure(fam);
      for (std::uint64_t m = 0; m < (1ull << n); ++m)
        CHECK(member_of_closure(Subset(u, m), f) == (cl.count(m) > 0));
    }
  }
}

TEST_CASE("generated ideal equals the brute-force generated ideal") {
  const Universe x = abcd();
  const Subset B = make_subset(x, {1, 2});
  const Subset D = make_subset(x, {2, 3});
  CHECK(ideal_from_family(make_family(x, {B, D})).apex() ==
        make_subset(x, {1, 2, 3}));

  const Universe z = make_universe(2);
  CHECK(ideal_from_family(
            SetFamily::from_masks(z, std::vector<std::uint64_t>{1, 2}))
            .apex()
            .bits() == 3);

  for (int n = 1; n <= 4; ++n) {
    const Universe u = make_universe(n);
    for (const auto& fam : small_families(n, 3)) {
      const PrincipalIdeal i =
          ideal_from_family(SetFamily::from_masks(u, fam));
      CHECK(oracles::to_set(i.materialize()) ==
            oracles::generated_ideal(fam, n));
    }
  }
}

TEST_CASE("semigroup and ideal predicates") {
  const Universe x = abcd();
  const Subset A = make_subset(x, {0, 1});
  const Subset B = make_subset(x, {1, 2});
  const Subset D = make_subset(x, {2, 3});
  CHECK(is_semigroup(make_family(x, {B, D, B.union_with(D)})));
  CHECK(is_semigroup(make_family(x, {A})));
  CHECK_FALSE(is_semigroup(make_family(x, {B, D})));

  const Universe z = make_universe(2);
  CHECK(is_ideal(SetFamily::from_masks(z, std::vector<std::uint64_t>{0, 1})));
  CHECK_FALSE(is_ideal(make_family(x, {Subset(x, 15)})));
  CHECK(is_ideal(make_family(x, {make_subset(x, {})})));
  CHECK_THROWS_AS(is_ideal(make_family(x, {})), empty_family_error);

  // an ideal is exactly the powerset of its apex
  for (const auto& fam : small_families(3, 3)) {
    const Universe u = make_universe(3);
    const SetFamily f = SetFamily::from_masks(u, fam);
    if (is_ideal(f))
      CHECK(f == ideal_from_family(f).materialize());
  }
}

TEST_CASE("star with an ideal: windows match the definitional enumeration") {
  const Universe x = make_universe(2);
  const Subset A(x, 0b01);
  const SetFamily s1 = make_family(x, {A, Subset(x, 0b11)});

  const StarWithIdeal all = star_ideal(s1, PrincipalIdeal(A));
  for (std::uint64_t m = 0; m < 4; ++m) CHECK(all.contains(Subset(x, m)));

  // trivial ideal: membership collapses to the family itself
  const StarWithIdeal trivial = star_ideal(s1, PrincipalIdeal(Subset(x, 0)));
  for (std::uint64_t m = 0; m < 4; ++m)
    CHECK(trivial.contains(Subset(x, m)) == s1.contains_mask(m));

  for (int n = 1; n <= 4; ++n) {
    const Universe u = make_universe(n);
    for (const auto& fam : small_families(n, 3)) {
      const SetFamily f = SetFamily::from_masks(u, fam);
      for (std::uint64_t y = 0; y < (1ull << n); ++y) {
        const PrincipalIdeal ideal(Subset(u, y));
        const auto want = oracles::star_ideal(fam, y);
        const StarWithIdeal h = star_ideal(f, ideal);
        CHECK(oracles::to_set(h.materialize()) == want);
        for (std::uint64_t m = 0; m < (1ull << n); ++m)
          CHECK(h.contains(Subset(u, m)) == (want.count(m) > 0));
      }
    }
  }
}

TEST_CASE("ideal star family: windows match the definitional enumeration") {
  const Universe x = make_universe(2);
  const Subset A(x, 0b01);
  const Subset B(x, 0b10);
  const SetFamily s2 = make_family(x, {B, Subset(x, 0b11)});
  CHECK(ideal_star(PrincipalIdeal(A), s2).contains(B));

  const IdealWithFamily trivial =
      ideal_star(PrincipalIdeal(Subset(x, 0)), s2);
  for (std::uint64_t m = 0; m < 4; ++m)
    CHECK(trivial.contains(Subset(x, m)) == s2.contains_mask(m));

  for (int n = 1; n <= 4; ++n) {
    const Universe u = make_universe(n);
    for (const auto& fam : small_families(n, 3)) {
      const SetFamily f = SetFamily::from_masks(u, fam);
      for (std::uint64_t y = 0; y < (1ull << n); ++y) {
        const PrincipalIdeal ideal(Subset(u, y));
        const auto want = oracles::ideal_star(y, fam);
        const IdealWithFamily h = ideal_star(ideal, f);
        CHECK(oracles::to_set(h.materialize()) == want);
        for (std::uint64_t m = 0; m < (1ull << n); ++m)
          CHECK(h.contains(Subset(u, m)) == (want.count(m) > 0));
      }
    }
  }
}

TEST_CASE("adjoin") {
  const Universe x = abcd();
  const Subset A = make_subset(x, {0, 1});
  const SetFamily fa = make_family(x, {A});
  CHECK(adjoin(fa, A) == fa);
  CHECK(adjoin(fa, make_subset(x, {})).size() == 2);

  for (const auto& fam : small_families(4, 3)) {
    const Universe u = make_universe(4);
    const SetFamily f = SetFamily::from_masks(u, fam);
    CHECK(is_semigroup(s_adjoin(f, Subset(u, 0))));
    CHECK(is_semigroup(s_adjoin(f, Subset(u, u.full_mask()))));
  }
}

TEST_CASE("principal ideal arithmetic") {
  const Universe u = make_universe(4);
  for (std::uint64_t y1 = 0; y1 < 16; ++y1) {
    for (std::uint64_t y2 = 0; y2 < 16; ++y2) {
      const PrincipalIdeal i1{Subset(u, y1)}, i2{Subset(u, y2)};
      CHECK(join_ideals(i1, i2).apex().bits() == (y1 | y2));
      // P(Y1) v P(Y2) = P(Y1|Y2) extensionally
      CHECK(join(i1.materialize(), i2.materialize()) ==
            join_ideals(i1, i2).materialize());
      // and the star of two powersets collapses the same way
      CHECK(star(i1.materialize(), i2.materialize()) ==
            star_ideals(i1, i2).materialize());
    }
  }
  const PrincipalIdeal py{Subset(u, 0b0110)};
  CHECK(join_ideals(PrincipalIdeal{Subset(u, 0)}, py) == py);
  CHECK(join_ideals(py, py) == py);
  CHECK_THROWS_AS(PrincipalIdeal(Subset(u, 15)).materialize(8), bound_error);

  // P(Y) is union- and downward-closed by construction, for every apex
  for (std::uint64_t y = 0; y < 16; ++y) {
    const SetFamily mat = PrincipalIdeal(Subset(u, y)).materialize();
    CHECK(is_ideal(mat));
    CHECK(mat.size() == (1ull << __builtin_popcountll(y)));
    for (std::uint64_t m = 0; m < 16; ++m)
      CHECK(PrincipalIdeal(Subset(u, y)).contains(Subset(u, m)) ==
            ((m & ~y) == 0));
  }
}

TEST_CASE("inclusion chain and idempotence around a union-closed family") {
  for (int n = 1; n <= 4; ++n) {
    const Universe u = make_universe(n);
    for (const auto& fam : small_families(n, 2)) {
      const SetFamily s = semigroup_closure(SetFamily::from_masks(u, fam));
      for (std::uint64_t y = 0; y < (1ull << n); ++y) {
        const PrincipalIdeal ideal(Subset(u, y));
        const SetFamily is = ideal_star_materialized(ideal, s);
        const SetFamily si = star_ideal_materialized(s, ideal);
        CHECK(is_subfamily(s, is));
        CHECK(is_subfamily(is, si));
        CHECK(ideal_star_materialized(ideal, is) == is);
        CHECK(star_ideal_materialized(si, ideal) == si);
      }
    }
  }
}

TEST_CASE("join and star inclusions over arbitrary families") {
  const int n = 3;
  const Universe u = make_universe(n);
  const auto fams = small_families(n, 2);
  for (const auto& fm : fams) {
    const SetFamily f = SetFamily::from_masks(u, fm);
    CHECK(is_subfamily(f, star(f, f)));
    CHECK(is_subfamily(f, join(f, f)));
    for (const auto& gm : fams) {
      const SetFamily g = SetFamily::from_masks(u, gm);
      const SetFamily j = join(f, g);
      CHECK(is_subfamily(j, star(f, g)));
      CHECK(is_subfamily(j, star(g, f)));
      CHECK(is_subfamily(f, join(f, adjoin(g, Subset(u, 0)))));
    }
  }
}

TEST_CASE("randomized closure and window checks on 5- and 6-universes") {
  std::mt19937_64 rng(20240817);
  for (int n : {5, 6}) {
    const Universe u = make_universe(n);
    const std::uint64_t subsets = 1ull << n;
    for (int rep = 0; rep < 120; ++rep) {
      std::vector<std::uint64_t> fam;
      const int k = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < k; ++i) fam.push_back(rng() % subsets);
      const SetFamily f = SetFamily::from_masks(u, fam);
      const SetFamily c = semigroup_closure(f);
      CHECK(is_semigroup(c));
      CHECK(is_subfamily(f, c));
      CHECK(semigroup_closure(c) == c);
      CHECK(oracles::to_set(c) == oracles::closure(fam));

      const std::uint64_t y = rng() % subsets;
      const PrincipalIdeal ideal(Subset(u, y));
      const auto si_want = oracles::star_ideal(masks_of(f), y);
      const auto is_want = oracles::ideal_star(y, masks_of(f));
      const StarWithIdeal si = star_ideal(f, ideal);
      const IdealWithFamily is = ideal_star(ideal, f);
      for (int probe = 0; probe < 40; ++probe) {
        const std::uint64_t m = rng() % subsets;
        CHECK(si.contains(Subset(u, m)) == (si_want.count(m) > 0));
        CHECK(is.contains(Subset(u, m)) == (is_want.count(m) > 0));
      }
    }
  }
}

TEST_CASE("closure handles cache once and stay consistent") {
  const Universe u = make_universe(4);
  const SetFamily f =
      SetFamily::from_masks(u, std::vector<std::uint64_t>{1, 2, 8});
  ClosureHandle h(f);
  CHECK(h.contains(Subset(u, 3)));
  CHECK_FALSE(h.contains(Subset(u, 4)));

  const SetFamily* first = nullptr;
  std::thread t1([&] { first = &h.materialized(); });
  const SetFamily& second = h.materialized();
  t1.join();
  CHECK(*first == semigroup_closure(f));
  CHECK(&second == first);  // one shared cached value
}
