#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <nlohmann/json_fwd.hpp>

#include "frobmark/rational.hpp"

namespace frobmark {

/// Exact element of the cyclotomic field Q(zeta_m).
///
/// Stored as rational coefficients on the power basis zeta^0 .. zeta^(phi(m)-1),
/// reduced modulo the m-th cyclotomic polynomial. Every result is renormalized to
/// the smallest conductor that contains it, so equality is a plain comparison of
/// (conductor, coefficients) and rational values always carry conductor 1.
class Cyclo {
 public:
  Cyclo() : coeffs_{Rat(0)} {}
  Cyclo(int v) : coeffs_{Rat(v)} {}  // NOLINT(google-explicit-constructor)
  Cyclo(const Rat& v) : coeffs_{v} {}  // NOLINT(google-explicit-constructor)

  /// Value sum_i coeffs[i] * zeta_m^i for any coefficient count (not necessarily
  /// reduced); the result is reduced and normalized.
  static Cyclo from_powers(int m, const std::vector<Rat>& coeffs);

  int conductor() const { return m_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const { return m_ == 1 && coeffs_[0].is_zero(); }
  bool is_rational() const { return m_ == 1; }
  /// Throws InvalidParameter when the value is not rational.
  const Rat& to_rat() const;

  Cyclo conj() const;
  /// Throws DivisionByZero on zero.
  Cyclo inv() const;
  Cyclo pow(long exponent) const;

  std::complex<double> embed_complex() const;

  /// Human rendering, e.g. "-1", "1/2 + z3^2", "z12 - 2*z12^3".
  std::string str() const;

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator/=(const Cyclo& o) { return *this *= o.inv(); }

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
  friend Cyclo operator-(const Cyclo& a);

  friend bool operator==(const Cyclo& a, const Cyclo& b) {
    return a.m_ == b.m_ && a.coeffs_ == b.coeffs_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Cyclo& a) { return os << a.str(); }

 private:
  Cyclo(int m, std::vector<Rat> coeffs) : m_(m), coeffs_(std::move(coeffs)) {}

  /// Coefficients of this value rewritten in conductor `target` (a multiple of m).
  std::vector<Rat> lifted(int target) const;
  void normalize();

  int m_ = 1;
  std::vector<Rat> coeffs_;
};

/// zeta_m^k; throws InvalidParameter for m < 1.
Cyclo zeta(int m, long k);

inline Cyclo conj(const Cyclo& a) { return a.conj(); }
inline Cyclo inv(const Cyclo& a) { return a.inv(); }

/// Euler's totient.
int euler_phi(int m);
/// Integer coefficients (ascending degree) of the m-th cyclotomic polynomial.
const std::vector<Int>& cyclotomic_polynomial(int m);

void to_json(nlohmann::json& j, const Cyclo& a);
void from_json(const nlohmann::json& j, Cyclo& a);

}  // namespace frobmark

namespace Eigen {

template <>
struct NumTraits<frobmark::Cyclo> : GenericNumTraits<frobmark::Cyclo> {
  using Real = frobmark::Cyclo;
  using NonInteger = frobmark::Cyclo;
  using Literal = frobmark::Cyclo;
  using Nested = frobmark::Cyclo;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 128,
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
