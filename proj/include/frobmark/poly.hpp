#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "frobmark/cyclo.hpp"

namespace frobmark {

/// Exponent vector over x_0 .. x_{n-1} plus the auxiliary variable u.
struct Monomial {
  std::vector<std::uint8_t> exps;
  std::uint8_t uexp = 0;

  unsigned degree() const;  // including u
  unsigned x_degree() const;

  /// Graded lexicographic: total degree, then u exponent, then exps.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

/// Sparse multivariate polynomial with cyclotomic coefficients.
///
/// Terms live in a map keyed by Monomial, so the representation is canonical:
/// no zero coefficients are stored and equality is map equality.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Cyclo>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Cyclo& c);
  static MultiPoly variable(int nvars, int index);
  static MultiPoly u(int nvars);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of a monomial (zero when absent).
  Cyclo coeff(const Monomial& m) const;
  /// Adds c * m in place.
  void add_term(const Monomial& m, const Cyclo& c);

  /// Highest total degree (u included); -1 for the zero polynomial.
  int total_degree() const;
  /// Every term has total degree d (u included).
  bool is_homogeneous(int d) const;
  bool has_u() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Cyclo& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Cyclo& c) { return a *= c; }
  friend MultiPoly operator*(const Cyclo& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

  /// Human rendering with variables named x1..xN (1-based, x1 = identity) and u.
  std::string str() const;

 private:
  void check_compatible(const MultiPoly& o) const;

  int nvars_ = 0;
  Terms terms_;
};

MultiPoly p_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly p_mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly p_pow(const MultiPoly& a, unsigned k);

/// Replaces x_0 (the identity variable) by x_0 + u. Requires no u in the input.
MultiPoly substitute_u(const MultiPoly& p);
/// Coefficient of u^j as a u-free polynomial.
MultiPoly extract_u_coeff(const MultiPoly& q, unsigned j);

/// Exact evaluation at a point (u must not occur); throws DimensionError on
/// a length mismatch.
Cyclo eval(const MultiPoly& p, std::span<const Cyclo> point);

/// Square matrix of polynomials.
class PolyMatrix {
 public:
  PolyMatrix(int size, int nvars);
  int rows() const { return size_; }
  int cols() const { return size_; }
  MultiPoly& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * size_ + j)]; }
  const MultiPoly& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * size_ + j)]; }
  int nvars() const { return nvars_; }

 private:
  int size_;
  int nvars_;
  std::vector<MultiPoly> data_;
};

inline constexpr int kMaxSymbolicDeterminant = 8;

/// Exact determinant by Laplace expansion over column subsets (division free).
/// Throws SizeLimit above kMaxSymbolicDeterminant.
MultiPoly det_poly_matrix(const PolyMatrix& m);

nlohmann::json poly_to_json(const MultiPoly& p);

}  // namespace frobmark
