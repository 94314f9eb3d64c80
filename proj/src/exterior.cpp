#include "frobmark/exterior.hpp"

#include <bit>

#include "frobmark/error.hpp"
#include "frobmark/linalg.hpp"

namespace frobmark {

Cyclo exterior_char(const MatrixRep& rep, int k, int g) {
  if (k < 0 || k > rep.dim) {
    throw Error(ErrorKind::InvalidParameter, "exterior power " + std::to_string(k) + " outside 0.." +
                                                 std::to_string(rep.dim));
  }
  if (g < 0 || g >= rep.group->order()) throw Error(ErrorKind::InvalidParameter, "element index out of range");
  const auto& m = rep.mats[static_cast<std::size_t>(g)];
  Cyclo acc;
  for (std::uint32_t s = 0; s < (1U << rep.dim); ++s) {
    if (std::popcount(s) != k) continue;
    std::vector<int> idx;
    for (int i = 0; i < rep.dim; ++i) {
      if (s & (1U << i)) idx.push_back(i);
    }
    CycloMatrix minor(k, k);
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < k; ++c) minor(r, c) = m(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(c)]);
    }
    acc += k == 0 ? Cyclo(1) : det_subsets(minor);
  }
  return acc;
}

Cyclo diagonal_theta(KCharacter& chi, int k, int g) {
  if (k < 0) throw Error(ErrorKind::InvalidParameter, "diagonal theta needs k >= 0");
  if (k == 0) return Cyclo(1);
  const std::vector<int> diag(static_cast<std::size_t>(k), g);
  return chi(diag) * Cyclo(Rat(Int(1), factorial(static_cast<unsigned>(k))));
}

Cyclo diagonal_theta(const ClassFunction& chi, int k, int g) {
  KCharacter eval(chi);
  return diagonal_theta(eval, k, g);
}

MultiPoly lambda_polynomial(const MatrixRep& rep, int g) {
  PolyMatrix m(rep.dim, 0);
  const auto& rho = rep.mats.at(static_cast<std::size_t>(g));
  for (int i = 0; i < rep.dim; ++i) {
    for (int j = 0; j < rep.dim; ++j) {
      m(i, j) = MultiPoly::constant(0, rho(i, j));
      if (i == j) m(i, j) += MultiPoly::u(0);
    }
  }
  return det_poly_matrix(m);
}

Cyclo waring_e_from_s(std::span<const Cyclo> s) {
  const int n = static_cast<int>(s.size());
  if (n > kMaxSymbolicDeterminant) throw Error(ErrorKind::SizeLimit, "Waring determinant limited to n <= 8");
  if (n == 0) return Cyclo(1);
  CycloMatrix m = CycloMatrix::Constant(n, n, Cyclo(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) m(i, j) = s[static_cast<std::size_t>(i - j)];
    if (i + 1 < n) m(i, i + 1) = Cyclo(i + 1);
  }
  return det_subsets(m) * Cyclo(Rat(Int(1), factorial(static_cast<unsigned>(n))));
}

Verdict exterior_power_check(const MatrixRep& rep) {
  Verdict v{"exterior-power", true, "exhaustive"};
  v.details["dim"] = rep.dim;
  v.details["group"] = rep.group->name();
  const auto& grp = *rep.group;
  const ClassFunction chi = rep.character();
  KCharacter chik(chi);
  for (int g = 0; g < grp.order(); ++g) {
    const MultiPoly lambda = lambda_polynomial(rep, g);
    std::vector<Cyclo> power_sums;
    int power = g;
    for (int k = 0; k <= rep.dim; ++k) {
      const Cyclo theta = diagonal_theta(chik, k, g);
      const Cyclo ext = exterior_char(rep, k, g);
      const Cyclo coeff = lambda.coeff(Monomial{{}, static_cast<std::uint8_t>(rep.dim - k)});
      const Cyclo waring = waring_e_from_s(power_sums);
      ++v.checked;
      const std::string where = "g=" + std::to_string(g) + " k=" + std::to_string(k);
      if (!(theta == ext)) v.fail(where + ": theta " + theta.str() + " vs exterior " + ext.str());
      if (!(theta == coeff)) v.fail(where + ": theta " + theta.str() + " vs det(uI+rho) coefficient " + coeff.str());
      if (!(theta == waring)) v.fail(where + ": theta " + theta.str() + " vs Waring " + waring.str());
      power_sums.push_back(chi(power));
      power = grp.mul(power, g);
    }
    if (lambda.total_degree() != rep.dim) v.fail("g=" + std::to_string(g) + ": det(uI+rho) has wrong degree");
  }
  return v;
}

std::uint64_t shuffle_term_count(int k) { return std::uint64_t{1} << k; }

Verdict direct_sum_kchar_check(const ClassFunction& chi1, const ClassFunction& chi2, int k,
                               const CoverageOptions& opts) {
  if (!(*chi1.group == *chi2.group)) throw Error(ErrorKind::InvalidParameter, "characters of different groups");
  if (k < 1 || k > 16) throw Error(ErrorKind::InvalidParameter, "shuffle check needs 1 <= k <= 16");
  Verdict v{"direct-sum-shuffle"};
  v.details["k"] = k;
  KCharacter sum(chi1 + chi2);
  KCharacter first(chi1);
  KCharacter second(chi2);
  std::uint64_t terms = 0;
  std::vector<int> a, b;
  v.mode = for_each_tuple(chi1.order(), k, opts, [&](std::span<const int> h) {
    Cyclo rhs;
    terms = 0;
    // subsets of positions in increasing order are exactly the (m, k-m)-shuffles
    for (std::uint32_t s = 0; s < (1U << k); ++s) {
      a.clear();
      b.clear();
      for (int i = 0; i < k; ++i) ((s & (1U << i)) ? a : b).push_back(h[static_cast<std::size_t>(i)]);
      rhs += first(a) * second(b);
      ++terms;
    }
    const Cyclo lhs = sum(h);
    if (!(lhs == rhs)) {
      v.fail(tuple_string(h) + ": " + lhs.str() + " vs " + rhs.str());
      return false;
    }
    ++v.checked;
    return true;
  });
  v.details["terms"] = terms;
  if (terms != shuffle_term_count(k)) v.fail("shuffle expansion has " + std::to_string(terms) + " terms");
  return v;
}

Verdict whitney_check(const MatrixRep& rep1, const MatrixRep& rep2, int k) {
  const MatrixRep sum = direct_sum(rep1, rep2);
  if (k < 0 || k > sum.dim) throw Error(ErrorKind::InvalidParameter, "Whitney check needs 0 <= k <= dim");
  Verdict v{"whitney", true, "exhaustive"};
  v.details["k"] = k;
  KCharacter chi_sum(sum.character());
  KCharacter chi1(rep1.character());
  KCharacter chi2(rep2.character());
  for (int g = 0; g < sum.group->order(); ++g) {
    Cyclo rhs;
    for (int m = 0; m <= k; ++m) rhs += diagonal_theta(chi1, m, g) * diagonal_theta(chi2, k - m, g);
    const Cyclo ext = exterior_char(sum, k, g);
    const Cyclo diag = diagonal_theta(chi_sum, k, g);
    ++v.checked;
    if (!(ext == rhs) || !(diag == rhs)) {
      v.fail("g=" + std::to_string(g) + ": exterior " + ext.str() + ", diagonal " + diag.str() + ", Whitney sum " +
             rhs.str());
    }
  }
  return v;
}

}  // namespace frobmark
