#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <nlohmann/json_fwd.hpp>

#include "frobmark/markov.hpp"
#include "frobmark/rational.hpp"
#include "frobmark/verdict.hpp"

namespace frobmark {

using Mat2 = Eigen::Matrix<Rat, 2, 2>;

Mat2 mat2(const Rat& a, const Rat& b, const Rat& c, const Rat& d);
Mat2 m_identity();
Mat2 m_mul(const Mat2& a, const Mat2& b);
Rat m_det(const Mat2& a);
Rat m_tr(const Mat2& a);
/// Adjugate divided by the determinant; throws DivisionByZero when singular.
Mat2 m_inv(const Mat2& a);
bool is_unimodular(const Mat2& a);
std::string m_str(const Mat2& a);

/// One asserted equation lhs = rhs, possibly with the intermediate equations
/// that establish it.
struct IdentityCheck {
  std::string identity;
  Rat lhs;
  Rat rhs;
  bool pass = true;
  std::string witness;
  std::vector<IdentityCheck> steps;
};

nlohmann::json identity_to_json(const IdentityCheck& c);

/// tr(XY) + tr(XY^-1) = tr X tr Y. Throws PreconditionError unless det X = det Y = 1.
IdentityCheck skein_check(const Mat2& x, const Mat2& y);

/// (trA)^2 + (trB)^2 + (trAB)^2 = trA trB trAB + tr(ABA^-1B^-1) + 2, with the
/// skein applications of its derivation recorded as steps.
IdentityCheck fricke_check(const Mat2& a, const Mat2& b);

/// Six-term chi_3 with chi = trace.
Rat chi3_trace(const Mat2& x, const Mat2& y, const Mat2& z);

/// chi_3(ab, a^-1, b^-1) = 0, and each of its six terms matches the matching
/// term of the Fricke identity in (a, b, c = ab).
IdentityCheck chi3_bridge_check(const Mat2& a, const Mat2& b);

struct TraceTriple {
  Rat x, y, z, jc;
  friend bool operator==(const TraceTriple&, const TraceTriple&) = default;
};

TraceTriple fricke_traces(const Mat2& a, const Mat2& b);
Rat surface_eval(const Rat& x, const Rat& y, const Rat& z, const Rat& jc);
Rat surface_eval(const TraceTriple& t);
Rat markov_surface_eval(const Rat& x, const Rat& y, const Rat& z);
/// (3x, 3y, 3z) with j_c = -2.
TraceTriple markov_lift(const MarkovTriple& t);

/// S: (x, y, z) -> (y, x, xy - z).
TraceTriple action_S(const TraceTriple& t);
/// TS: (x, y, z) -> (y, z, x).
TraceTriple action_TS(const TraceTriple& t);

/// 2 arcosh(-j_c / 2); DomainError for j_c > -2.
double boundary_length(const Rat& jc);

/// Product of `length` generators drawn from [[1,1],[0,1]], [[1,0],[1,1]] and
/// their inverses by a splitmix64 stream seeded with `seed`.
Mat2 random_sl2z_word(int length, std::uint64_t seed);

struct FrickeSuiteOptions {
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 1;
  int word_length = 12;
};

/// Skein, Fricke, chi_3 bridge and general chi_3 vanishing over seeded word pairs.
std::vector<Verdict> fricke_suite(const FrickeSuiteOptions& opts);

}  // namespace frobmark
