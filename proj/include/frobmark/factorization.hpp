#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "frobmark/char_table.hpp"
#include "frobmark/kchar.hpp"
#include "frobmark/poly.hpp"

namespace frobmark {

/// Phi_k^chi = (1/k!) sum over G^k of chi_k(h1..hk) x_h1 .. x_hk, assembled over
/// multisets: each multiset contributes chi_k / prod(multiplicity!).
MultiPoly phi_k(const ClassFunction& chi, int k);
/// Same polynomial, reusing an existing evaluator's cache.
MultiPoly phi_k(KCharacter& chi, int k);

/// Phi_k^chi evaluated at a point without building the polynomial.
Cyclo phi_k_at(KCharacter& chi, int k, std::span<const Cyclo> point);

/// X_G with X[i][j] = x_{g_i g_j^-1}.
PolyMatrix group_matrix(const FiniteGroup& g);

/// det X_G; throws SizeLimit for |G| > 8.
MultiPoly group_det(const FiniteGroup& g);

enum class FactorMode { Auto, Symbolic, Eval };

struct FactorizationReport {
  Verdict verdict;
  MultiPoly theta;                 // empty in eval mode
  std::vector<MultiPoly> factors;  // Phi_{n_i}^{chi_i}, one per row (symbolic mode)
  std::vector<int> degrees;
};

struct FactorizationOptions {
  FactorMode mode = FactorMode::Auto;
  int eval_points = 50;
  std::uint64_t seed = 20240601;
};

inline constexpr int kMaxEvalOrder = 24;

/// Checks det X_G = prod_i (Phi_{n_i}^{chi_i})^{n_i}: symbolically for |G| <= 8,
/// or by exact comparison at seeded random rational points for |G| <= 24.
/// Throws TableInvalid when the degrees do not square-sum to |G|.
FactorizationReport verify_factorization(const FiniteGroup& g, const CharTable& table,
                                         const FactorizationOptions& opts = {});

/// Phi_n(x + u e) = u^n + Phi_1 u^(n-1) + ... + Phi_n for the character's degree n,
/// comparing u-coefficients with independently built Phi_j.
Verdict u_expansion_check(const ClassFunction& chi);

}  // namespace frobmark
