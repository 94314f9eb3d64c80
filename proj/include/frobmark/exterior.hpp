#pragma once

#include <span>

#include "frobmark/class_function.hpp"
#include "frobmark/kchar.hpp"
#include "frobmark/poly.hpp"
#include "frobmark/verdict.hpp"

namespace frobmark {

/// Trace of rho(g) on the k-th exterior power: the sum of principal k x k minors.
Cyclo exterior_char(const MatrixRep& rep, int k, int g);

/// theta_k(g) = chi_k(g, .., g) / k!, with theta_0 = 1.
Cyclo diagonal_theta(const ClassFunction& chi, int k, int g);
Cyclo diagonal_theta(KCharacter& chi, int k, int g);

/// det(u I + rho(g)) as a polynomial in u alone (no x variables).
MultiPoly lambda_polynomial(const MatrixRep& rep, int g);

/// e_n from power sums s_1..s_n through the Waring determinant
/// n! e_n = det[[s1, 1, 0..], [s2, s1, 2, ..], .., [sn, .., s1]].
Cyclo waring_e_from_s(std::span<const Cyclo> s);

/// For every element and 0 <= k <= dim: diagonal theta_k = exterior_char, the
/// generating-function identity det(uI + rho(g)) = sum_k theta_k u^(dim-k), and
/// theta_k = waring_e_from_s(chi(g), chi(g^2), .., chi(g^k)).
Verdict exterior_power_check(const MatrixRep& rep);

/// Number of terms in the shuffle expansion of chi_k for a sum of two class
/// functions (2^k, counting the two pure terms).
std::uint64_t shuffle_term_count(int k);

/// chi_k of chi1 + chi2 equals the sum over m and (m, k-m)-shuffles of
/// chi1_m(h_sigma(1..m)) * chi2_{k-m}(h_sigma(m+1..k)).
Verdict direct_sum_kchar_check(const ClassFunction& chi1, const ClassFunction& chi2, int k,
                               const CoverageOptions& opts = {});

/// theta_k of rho1 + rho2 (as exterior trace of the block sum and as the diagonal
/// k-character of the sum character) equals sum_m theta_m^rho1 theta_{k-m}^rho2.
Verdict whitney_check(const MatrixRep& rep1, const MatrixRep& rep2, int k);

}  // namespace frobmark
