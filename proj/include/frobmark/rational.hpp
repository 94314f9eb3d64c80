#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

#include <Eigen/Core>

namespace frobmark {

/// Unbounded integer.
using Int = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over `mpq_class` so that arithmetic returns concrete values
/// rather than gmpxx expression templates (which do not mix with `auto` or Eigen).
class Rat {
 public:
  Rat() = default;
  Rat(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long long v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rat(const Int& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(const Int& num, const Int& den);
  explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses "a" or "a/b" in decimal; throws ParseError on malformed input.
  static Rat parse(const std::string& text);

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }
  std::string str() const { return v_.get_str(); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.v_; }

 private:
  mpq_class v_;
};

Rat pow(const Rat& base, unsigned exponent);
Rat abs(const Rat& r);
Int factorial(unsigned n);

/// Decimal string of an unbounded integer.
inline std::string to_string(const Int& v) { return v.get_str(); }
Int parse_int(const std::string& text);

struct IntHash {
  std::size_t operator()(const Int& v) const noexcept;
};

}  // namespace frobmark

namespace Eigen {

template <>
struct NumTraits<frobmark::Rat> : GenericNumTraits<frobmark::Rat> {
  using Real = frobmark::Rat;
  using NonInteger = frobmark::Rat;
  using Literal = frobmark::Rat;
  using Nested = frobmark::Rat;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32,
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
