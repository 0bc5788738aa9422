#include "famalg/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace famalg::kern {

namespace detail {

void or_with_scalar(const std::uint64_t* xs, std::size_t n, std::uint64_t a,
                    std::uint64_t* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = xs[i] | a;
}

void carve_or_scalar(const std::uint64_t* xs, std::size_t n, std::uint64_t a,
                     std::uint64_t b, std::uint64_t* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = (a & ~xs[i]) | b;
}

cover_scan cover_within_scalar(const std::uint64_t* xs, std::size_t n,
                               std::uint64_t cap) {
  cover_scan r{0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    if ((xs[i] & ~cap) == 0) {
      r.united |= xs[i];
      ++r.matched;
    }
  }
  return r;
}

bool any_window_scalar(const std::uint64_t* xs, std::size_t n,
                       std::uint64_t forbid, std::uint64_t need) {
  for (std::size_t i = 0; i < n; ++i) {
    if ((xs[i] & forbid) == 0 && (xs[i] & need) == need) return true;
  }
  return false;
}

}  // namespace detail

namespace {

struct vtable {
  void (*or_with)(const std::uint64_t*, std::size_t, std::uint64_t,
                  std::uint64_t*);
  void (*carve_or)(const std::uint64_t*, std::size_t, std::uint64_t,
                   std::uint64_t, std::uint64_t*);
  cover_scan (*cover_within)(const std::uint64_t*, std::size_t, std::uint64_t);
  bool (*any_window)(const std::uint64_t*, std::size_t, std::uint64_t,
                     std::uint64_t);
  backend which;
};

constexpr vtable scalar_table{detail::or_with_scalar, detail::carve_or_scalar,
                              detail::cover_within_scalar,
                              detail::any_window_scalar, backend::scalar};

#if defined(FAMALG_BUILD_AVX2)
constexpr vtable avx2_table{detail::or_with_avx2, detail::carve_or_avx2,
                            detail::cover_within_avx2, detail::any_window_avx2,
                            backend::avx2};
#endif

const vtable* detect() {
#if defined(FAMALG_BUILD_AVX2)
  if (__builtin_cpu_supports("avx2")) return &avx2_table;
#endif
  return &scalar_table;
}

std::atomic<const vtable*>& active() {
  static std::atomic<const vtable*> tbl{detect()};
  return tbl;
}

}  // namespace

backend active_backend() { return active().load()->which; }

bool avx2_available() {
#if defined(FAMALG_BUILD_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

void force_backend(backend b) {
  if (b == backend::scalar) {
    active().store(&scalar_table);
    return;
  }
#if defined(FAMALG_BUILD_AVX2)
  if (b == backend::avx2 && avx2_available()) {
    active().store(&avx2_table);
    return;
  }
#endif
  throw std::invalid_argument("requested kernel backend is not available");
}

void reset_backend() { active().store(detect()); }

void or_with(const std::uint64_t* xs, std::size_t n, std::uint64_t a,
             std::uint64_t* out) {
  active().load()->or_with(xs, n, a, out);
}

void carve_or(const std::uint64_t* xs, std::size_t n, std::uint64_t a,
              std::uint64_t b, std::uint64_t* out) {
  active().load()->carve_or(xs, n, a, b, out);
}

cover_scan cover_within(const std::uint64_t* xs, std::size_t n,
                        std::uint64_t cap) {
  return active().load()->cover_within(xs, n, cap);
}

bool any_window(const std::uint64_t* xs, std::size_t n, std::uint64_t forbid,
                std::uint64_t need) {
  return active().load()->any_window(xs, n, forbid, need);
}

}  // namespace famalg::kern
