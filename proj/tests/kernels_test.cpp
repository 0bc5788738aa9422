#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "famalg/kernels.hpp"

// The dispatched kernels must agree with the scalar reference on every
// input, including lengths around the vector width and the empty array.

namespace {

using famalg::kern::cover_scan;

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint64_t> out(n);
  for (auto& w : out) w = rng() & 0xFFFF;  // favors collisions
  return out;
}

}  // namespace

TEST_CASE("kernel spot checks") {
  const std::vector<std::uint64_t> xs{0b001, 0b010, 0b100, 0b110, 0b011};
  std::vector<std::uint64_t> out(xs.size());

  famalg::kern::or_with(xs.data(), xs.size(), 0b100, out.data());
  CHECK(out == std::vector<std::uint64_t>{0b101, 0b110, 0b100, 0b110, 0b111});

  famalg::kern::carve_or(xs.data(), xs.size(), 0b111, 0b1000, out.data());
  CHECK(out ==
        std::vector<std::uint64_t>{0b1110, 0b1101, 0b1011, 0b1001, 0b1100});

  const cover_scan cs = famalg::kern::cover_within(xs.data(), xs.size(), 0b011);
  CHECK(cs.matched == 3);  // 001, 010, 011
  CHECK(cs.united == 0b011);

  CHECK(famalg::kern::any_window(xs.data(), xs.size(), 0b100, 0b011));
  CHECK_FALSE(famalg::kern::any_window(xs.data(), xs.size(), 0b1000, 0b111));
}

TEST_CASE("scalar and dispatched kernels agree") {
  std::mt19937_64 rng(0xfa31a6);
  for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 15u, 16u, 33u, 67u}) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto xs = random_words(rng, n);
      const std::uint64_t a = rng() & 0xFFFF;
      const std::uint64_t b = rng() & 0xFFFF;
      std::vector<std::uint64_t> got(n), want(n);

      famalg::kern::or_with(xs.data(), n, a, got.data());
      famalg::kern::detail::or_with_scalar(xs.data(), n, a, want.data());
      CHECK(got == want);

      famalg::kern::carve_or(xs.data(), n, a, b, got.data());
      famalg::kern::detail::carve_or_scalar(xs.data(), n, a, b, want.data());
      CHECK(got == want);

      const auto s1 = famalg::kern::cover_within(xs.data(), n, a);
      const auto s2 = famalg::kern::detail::cover_within_scalar(xs.data(), n, a);
      CHECK(s1.united == s2.united);
      CHECK(s1.matched == s2.matched);

      CHECK(famalg::kern::any_window(xs.data(), n, a, b) ==
            famalg::kern::detail::any_window_scalar(xs.data(), n, a, b));
    }
  }
}

#if defined(FAMALG_BUILD_AVX2)
TEST_CASE("avx2 variants match the scalar reference") {
  if (!famalg::kern::avx2_available()) return;
  std::mt19937_64 rng(0x5eed);
  for (std::size_t n : {1u, 3u, 4u, 6u, 9u, 31u, 64u, 129u}) {
    for (int rep = 0; rep < 50; ++rep) {
      const auto xs = random_words(rng, n);
      const std::uint64_t a = rng();
      const std::uint64_t b = rng();
      std::vector<std::uint64_t> got(n), want(n);

      famalg::kern::detail::or_with_avx2(xs.data(), n, a, got.data());
      famalg::kern::detail::or_with_scalar(xs.data(), n, a, want.data());
      CHECK(got == want);

      famalg::kern::detail::carve_or_avx2(xs.data(), n, a, b, got.data());
      famalg::kern::detail::carve_or_scalar(xs.data(), n, a, b, want.data());
      CHECK(got == want);

      const auto s1 = famalg::kern::detail::cover_within_avx2(xs.data(), n, a);
      const auto s2 =
          famalg::kern::detail::cover_within_scalar(xs.data(), n, a);
      CHECK(s1.united == s2.united);
      CHECK(s1.matched == s2.matched);

      CHECK(famalg::kern::detail::any_window_avx2(xs.data(), n, a, b) ==
            famalg::kern::detail::any_window_scalar(xs.data(), n, a, b));
    }
  }
}
#endif

TEST_CASE("backend forcing") {
  const auto original = famalg::kern::active_backend();
  famalg::kern::force_backend(famalg::kern::backend::scalar);
  CHECK(famalg::kern::active_backend() == famalg::kern::backend::scalar);
  if (famalg::kern::avx2_available()) {
    famalg::kern::force_backend(famalg::kern::backend::avx2);
    CHECK(famalg::kern::active_backend() == famalg::kern::backend::avx2);
  } else {
    CHECK_THROWS_AS(famalg::kern::force_backend(famalg::kern::backend::avx2),
                    std::invalid_argument);
  }
  famalg::kern::reset_backend();
  CHECK(famalg::kern::active_backend() == original);
}
