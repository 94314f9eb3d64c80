#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "frobmark/class_function.hpp"
#include "frobmark/verdict.hpp"

namespace frobmark {

/// Frobenius k-characters of a class function, by the recursion
///
///   chi_{k+1}(h0, h1..hk) = chi(h0) chi_k(h1..hk) - sum_j chi_k(h1, .., h0 hj, .., hk)
///
/// with chi_1 = chi. Values are memoized per instance, so an evaluator is cheap
/// to query repeatedly but must not be shared across threads.
class KCharacter {
 public:
  enum class Memo {
    Auto,    // Sorted when chi is trace-like, Exact otherwise
    Sorted,  // key by the sorted tuple (valid because chi_k is symmetric)
    Exact,   // key by the tuple as given
    None,
  };

  explicit KCharacter(ClassFunction chi, Memo memo = Memo::Auto);

  Cyclo operator()(std::span<const int> tuple);
  Cyclo operator()(std::initializer_list<int> tuple) { return (*this)(std::span<const int>(tuple.begin(), tuple.size())); }

  const ClassFunction& chi() const { return chi_; }
  Memo memo_mode() const { return memo_; }
  std::size_t cache_size() const { return cache_.size(); }

 private:
  Cyclo compute(std::span<const int> tuple);

  ClassFunction chi_;
  Memo memo_;
  std::unordered_map<std::uint64_t, Cyclo> cache_;
};

/// One-shot recursive evaluation; throws InvalidParameter on an empty tuple.
Cyclo kchar_recursive(const ClassFunction& chi, std::span<const int> tuple);

inline constexpr int kMaxCyclicK = 6;

/// Signed sum over S_k of products of chi along the cycles of each permutation.
/// Throws SizeLimit for k > kMaxCyclicK.
Cyclo kchar_cyclic(const ClassFunction& chi, std::span<const int> tuple);

/// Visits G^k exhaustively or by seeded sampling (see CoverageOptions); returns the
/// mode used. The callback returns false to stop early.
template <typename Visit>
std::string for_each_tuple(int order, int k, const CoverageOptions& opts, Visit&& visit);

std::string tuple_string(std::span<const int> tuple);

/// chi_k invariant under all k! reorderings of each tuple. Uses exact-tuple
/// memoization only, so it does not presuppose the symmetry it tests.
Verdict kchar_symmetry_check(const ClassFunction& chi, int k, const CoverageOptions& opts = {});

/// chi_j == 0 on G^j for an n-dimensional character and j > n.
Verdict vanishing_check(const ClassFunction& chi, int j, const CoverageOptions& opts = {});

/// Recursion and cyclic-sum definitions agree on G^k.
Verdict kchar_equivalence_check(const ClassFunction& chi, int k, const CoverageOptions& opts = {});

/// chi_2 and chi_3 from the recursion match the closed two- and six-term forms
/// on every pair and triple.
Verdict explicit_formula_check(const ClassFunction& chi, const CoverageOptions& opts = {});

/// chi_{j+1}(e, h1..hj) = (n - j) chi_j(h1..hj), and chi_1(e) = n for j = 0.
Verdict identity_reduction_check(const ClassFunction& chi, int j, const CoverageOptions& opts = {});

// ---------------------------------------------------------------------------

template <typename Visit>
std::string for_each_tuple(int order, int k, const CoverageOptions& opts, Visit&& visit) {
  std::vector<int> tuple(static_cast<std::size_t>(k), 0);
  // |G|^k with overflow guard
  std::uint64_t total = 1;
  bool exhaustive = true;
  for (int i = 0; i < k; ++i) {
    total *= static_cast<std::uint64_t>(order);
    if (total > opts.exhaustive_limit) {
      exhaustive = false;
      break;
    }
  }
  if (exhaustive) {
    for (std::uint64_t t = 0; t < total; ++t) {
      if (!visit(std::span<const int>(tuple))) break;
      for (int i = k - 1; i >= 0; --i) {
        if (++tuple[static_cast<std::size_t>(i)] < order) break;
        tuple[static_cast<std::size_t>(i)] = 0;
      }
    }
    return "exhaustive";
  }
  // splitmix64 stream: portable and fully determined by the seed
  std::uint64_t state = opts.seed;
  auto next = [&state]() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  };
  for (std::uint64_t s = 0; s < opts.samples; ++s) {
    for (auto& h : tuple) h = static_cast<int>(next() % static_cast<std::uint64_t>(order));
    if (!visit(std::span<const int>(tuple))) break;
  }
  return "sampled";
}

}  // namespace frobmark
