// AVX2 variants of the mask kernels. This translation unit is compiled with
// -mavx2; callers reach it only through the runtime dispatch in kernels.cpp.

#include <immintrin.h>

#include "famalg/kernels.hpp"

namespace famalg::kern::detail {

namespace {
constexpr std::size_t kLanes = 4;  // 4 x 64-bit per __m256i
}

void or_with_avx2(const std::uint64_t* xs, std::size_t n, std::uint64_t a,
                  std::uint64_t* out) {
  const __m256i av = _mm256_set1_epi64x(static_cast<long long>(a));
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(xs + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i),
                        _mm256_or_si256(x, av));
  }
  for (; i < n; ++i) out[i] = xs[i] | a;
}

void carve_or_avx2(const std::uint64_t* xs, std::size_t n, std::uint64_t a,
                   std::uint64_t b, std::uint64_t* out) {
  const __m256i av = _mm256_set1_epi64x(static_cast<long long>(a));
  const __m256i bv = _mm256_set1_epi64x(static_cast<long long>(b));
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(xs + i));
    // andnot(x, a) = a & ~x
    __m256i r = _mm256_or_si256(_mm256_andnot_si256(x, av), bv);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), r);
  }
  for (; i < n; ++i) out[i] = (a & ~xs[i]) | b;
}

cover_scan cover_within_avx2(const std::uint64_t* xs, std::size_t n,
                             std::uint64_t cap) {
  const __m256i notcap = _mm256_set1_epi64x(static_cast<long long>(~cap));
  const __m256i zero = _mm256_setzero_si256();
  __m256i acc = zero;
  std::size_t matched = 0;
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(xs + i));
    __m256i outside = _mm256_and_si256(x, notcap);
    __m256i is_subset = _mm256_cmpeq_epi64(outside, zero);  // lane mask
    acc = _mm256_or_si256(acc, _mm256_and_si256(x, is_subset));
    unsigned m = static_cast<unsigned>(
        _mm256_movemask_pd(_mm256_castsi256_pd(is_subset)));
    matched += static_cast<std::size_t>(__builtin_popcount(m));
  }
  alignas(32) std::uint64_t lanes[kLanes];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  cover_scan r{lanes[0] | lanes[1] | lanes[2] | lanes[3], matched};
  for (; i < n; ++i) {
    if ((xs[i] & ~cap) == 0) {
      r.united |= xs[i];
      ++r.matched;
    }
  }
  return r;
}

bool any_window_avx2(const std::uint64_t* xs, std::size_t n,
                     std::uint64_t forbid, std::uint64_t need) {
  const __m256i fv = _mm256_set1_epi64x(static_cast<long long>(forbid));
  const __m256i nv = _mm256_set1_epi64x(static_cast<long long>(need));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(xs + i));
    __m256i avoids = _mm256_cmpeq_epi64(_mm256_and_si256(x, fv), zero);
    __m256i covers = _mm256_cmpeq_epi64(_mm256_and_si256(x, nv), nv);
    if (_mm256_movemask_pd(
            _mm256_castsi256_pd(_mm256_and_si256(avoids, covers))) != 0)
      return true;
  }
  for (; i < n; ++i) {
    if ((xs[i] & forbid) == 0 && (xs[i] & need) == need) return true;
  }
  return false;
}

}  // namespace famalg::kern::detail
