#pragma once

#include <cstddef>
#include <cstdint>

// Bit-mask kernels underneath the family algebra. Every set over a universe
// of up to 64 elements is one machine word, and the hot loops of the engine
// (pairwise unions, star windows, cover scans) stream over arrays of such
// words. Each kernel has a scalar reference implementation and, on x86-64,
// an AVX2 variant; the active variant is picked once at startup from CPU
// support and can be forced for equivalence testing.

namespace famalg::kern {

enum class backend { scalar, avx2 };

/// Backend currently used by the dispatching entry points.
backend active_backend();

/// True when the AVX2 variants were compiled in and the CPU supports them.
bool avx2_available();

/// Force a backend (throws std::invalid_argument if unavailable).
void force_backend(backend b);

/// Return to the automatically selected backend.
void reset_backend();

/// out[i] = xs[i] | a
void or_with(const std::uint64_t* xs, std::size_t n, std::uint64_t a,
             std::uint64_t* out);

/// out[i] = (a & ~xs[i]) | b    — "remove xs[i] from a, then add b"
void carve_or(const std::uint64_t* xs, std::size_t n, std::uint64_t a,
              std::uint64_t b, std::uint64_t* out);

struct cover_scan {
  std::uint64_t united;  // OR of all xs[i] contained in cap
  std::size_t matched;   // how many xs[i] are contained in cap
};

/// Scan xs for entries that are subsets of cap.
cover_scan cover_within(const std::uint64_t* xs, std::size_t n,
                        std::uint64_t cap);

/// True iff some xs[i] avoids every bit of `forbid` and covers every bit of
/// `need`:  (xs[i] & forbid) == 0  &&  (xs[i] & need) == need.
bool any_window(const std::uint64_t* xs, std::size_t n, std::uint64_t forbid,
                std::uint64_t need);

namespace detail {

void or_with_scalar(const std::uint64_t* xs, std::size_t n, std::uint64_t a,
                    std::uint64_t* out);
void carve_or_scalar(const std::uint64_t* xs, std::size_t n, std::uint64_t a,
                     std::uint64_t b, std::uint64_t* out);
cover_scan cover_within_scalar(const std::uint64_t* xs, std::size_t n,
                               std::uint64_t cap);
bool any_window_scalar(const std::uint64_t* xs, std::size_t n,
                       std::uint64_t forbid, std::uint64_t need);

#if defined(FAMALG_BUILD_AVX2)
void or_with_avx2(const std::uint64_t* xs, std::size_t n, std::uint64_t a,
                  std::uint64_t* out);
void carve_or_avx2(const std::uint64_t* xs, std::size_t n, std::uint64_t a,
                   std::uint64_t b, std::uint64_t* out);
cover_scan cover_within_avx2(const std::uint64_t* xs, std::size_t n,
                             std::uint64_t cap);
bool any_window_avx2(const std::uint64_t* xs, std::size_t n,
                     std::uint64_t forbid, std::uint64_t need);
#endif

}  // namespace detail

}  // namespace famalg::kern
