// Independent reference computations used only by the tests. None of these
// call into the library routines they are compared against.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

#include "frobmark/cyclo.hpp"
#include "frobmark/group.hpp"

namespace oracle {

using frobmark::Cyclo;
using frobmark::Int;

// Determinant by the Leibniz permutation sum.
template <typename Scalar, typename Entry>
Scalar leibniz_det(int n, Entry&& entry) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Scalar acc(0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
    }
    Scalar term(1);
    for (int i = 0; i < n; ++i) term = term * entry(i, perm[static_cast<std::size_t>(i)]);
    acc = (inversions % 2) ? acc - term : acc + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// All Markov triples x <= y <= z <= max_z by solving z^2 - 3xy z + x^2 + y^2 = 0
// for each (x, y).
inline std::vector<std::array<std::int64_t, 3>> markov_scan(std::int64_t max_z) {
  std::vector<std::array<std::int64_t, 3>> out;
  for (std::int64_t x = 1; x <= max_z; ++x) {
    for (std::int64_t y = x; y <= max_z; ++y) {
      const __int128 b = 3 * static_cast<__int128>(x) * y;
      const __int128 disc = b * b - 4 * (static_cast<__int128>(x) * x + static_cast<__int128>(y) * y);
      if (disc < 0) continue;
      auto r = static_cast<__int128>(std::sqrt(static_cast<long double>(disc)));
      while (r * r > disc) --r;
      while ((r + 1) * (r + 1) <= disc) ++r;
      if (r * r != disc) continue;
      for (const __int128 z2 : {b - r, b + r}) {
        if (z2 % 2 != 0) continue;
        const __int128 z = z2 / 2;
        if (z >= y && z <= max_z) {
          const std::array<std::int64_t, 3> t{x, y, static_cast<std::int64_t>(z)};
          if (out.empty() || out.back() != t) out.push_back(t);
        }
      }
      // the larger root is at least 3xy/2 and the smaller one is below y except at (1,1)
      if (b > 2 * static_cast<__int128>(max_z)) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a[2], a[1], a[0]) < std::tie(b[2], b[1], b[0]);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Conjugacy classes from the multiplication table alone: inverses are found by
// search and classes are collected as orbits of h g h^-1.
inline std::set<std::set<int>> conjugacy_classes(const frobmark::FiniteGroup& g) {
  const int n = g.order();
  auto inverse = [&](int h) {
    for (int k = 0; k < n; ++k) {
      if (g.mul(h, k) == 0) return k;
    }
    return -1;
  };
  std::set<std::set<int>> out;
  for (int x = 0; x < n; ++x) {
    std::set<int> cls;
    for (int h = 0; h < n; ++h) cls.insert(g.mul(g.mul(h, x), inverse(h)));
    out.insert(cls);
  }
  return out;
}

inline int element_order(const frobmark::FiniteGroup& g, int x) {
  int k = 1;
  for (int p = x; p != 0; p = g.mul(p, x)) ++k;
  return k;
}

// Frobenius k-character in floating point via the signed sum over S_k of
// cycle products. Cycles are walked backwards (sigma(i) -> i); sigma and its
// inverse carry the same sign, so the total does not depend on the direction.
inline std::complex<double> kchar_numeric(const frobmark::FiniteGroup& g, const std::vector<std::complex<double>>& chi,
                                          const std::vector<int>& h) {
  const int k = static_cast<int>(h.size());
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::complex<double> acc = 0;
  do {
    std::vector<int> preimage(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) preimage[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    std::vector<bool> used(static_cast<std::size_t>(k), false);
    std::complex<double> term = 1;
    int cycles = 0;
    for (int start = 0; start < k; ++start) {
      if (used[static_cast<std::size_t>(start)]) continue;
      ++cycles;
      int prod = 0;
      for (int i = start; !used[static_cast<std::size_t>(i)]; i = preimage[static_cast<std::size_t>(i)]) {
        used[static_cast<std::size_t>(i)] = true;
        prod = g.mul(prod, h[static_cast<std::size_t>(i)]);
      }
      term *= chi[static_cast<std::size_t>(prod)];
    }
    acc += ((k - cycles) % 2 ? -1.0 : 1.0) * term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

inline std::vector<std::complex<double>> embed(const std::vector<Cyclo>& values) {
  std::vector<std::complex<double>> out;
  for (const auto& v : values) out.push_back(v.embed_complex());
  return out;
}

// splitmix64, used by the property generators.
struct Rng {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
};

}  // namespace oracle
