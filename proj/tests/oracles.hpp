#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "famalg/core.hpp"

// Definitional brute-force oracles. These enumerate the defining expressions
// directly (all subfamily unions, all (A,B1,B2) triples, all (A,M,N) window
// picks) and stay independent of the library's fixed points and closed
// forms, which are tested against them.

namespace oracles {

using MaskSet = std::set<std::uint64_t>;

inline MaskSet to_set(const famalg::SetFamily& f) {
  return MaskSet(f.masks().begin(), f.masks().end());
}

/// All unions of non-empty subfamilies of f.
inline MaskSet closure(const std::vector<std::uint64_t>& f) {
  MaskSet out;
  const std::size_t n = f.size();
  for (std::uint64_t pick = 1; pick < (1ull << n); ++pick) {
    std::uint64_t u = 0;
    for (std::size_t i = 0; i < n; ++i)
      if ((pick >> i) & 1) u |= f[i];
    out.insert(u);
  }
  return out;
}

/// {A ∪ B : A in f, B in g}.
inline MaskSet join(const std::vector<std::uint64_t>& f,
                    const std::vector<std::uint64_t>& g) {
  MaskSet out;
  for (auto a : f)
    for (auto b : g) out.insert(a | b);
  return out;
}

/// {(A\B1) ∪ B2 : A in f, B1,B2 in g}.
inline MaskSet star(const std::vector<std::uint64_t>& f,
                    const std::vector<std::uint64_t>& g) {
  MaskSet out;
  for (auto a : f)
    for (auto b1 : g)
      for (auto b2 : g) out.insert((a & ~b1) | b2);
  return out;
}

/// All submasks of y, including 0 and y.
inline std::vector<std::uint64_t> submasks(std::uint64_t y) {
  std::vector<std::uint64_t> out;
  std::uint64_t t = y;
  while (true) {
    out.push_back(t);
    if (t == 0) break;
    t = (t - 1) & y;
  }
  return out;
}

/// {(A\M) ∪ N : A in f, M,N ⊆ y}  — the family starred with P(y).
inline MaskSet star_ideal(const std::vector<std::uint64_t>& f,
                          std::uint64_t y) {
  MaskSet out;
  const auto subs = submasks(y);
  for (auto a : f)
    for (auto m : subs)
      for (auto n : subs) out.insert((a & ~m) | n);
  return out;
}

/// {(M\S1) ∪ S2 : M ⊆ y, S1,S2 in f}  — P(y) starred with the family.
inline MaskSet ideal_star(std::uint64_t y,
                          const std::vector<std::uint64_t>& f) {
  MaskSet out;
  for (auto m : submasks(y))
    for (auto s1 : f)
      for (auto s2 : f) out.insert((m & ~s1) | s2);
  return out;
}

/// {B ⊆ X : some A in the closure of f contains B}, as a set of masks.
inline MaskSet generated_ideal(const std::vector<std::uint64_t>& f,
                               int universe_size) {
  const MaskSet cl = closure(f);
  MaskSet out;
  for (std::uint64_t b = 0; b < (1ull << universe_size); ++b)
    for (auto a : cl)
      if ((b & ~a) == 0) {
        out.insert(b);
        break;
      }
  return out;
}

}  // namespace oracles
