#include "frobmark/factorization.hpp"

#include <sstream>

#include "frobmark/error.hpp"
#include "frobmark/linalg.hpp"

namespace frobmark {
namespace {

// Calls visit(multiset, 1/prod(mult!)) for every non-decreasing k-tuple over [0, n).
template <typename Visit>
void for_each_multiset(int n, int k, Visit&& visit) {
  std::vector<int> ms(static_cast<std::size_t>(k), 0);
  while (true) {
    Int weight = 1;
    int run = 1;
    for (std::size_t i = 1; i <= ms.size(); ++i) {
      if (i < ms.size() && ms[i] == ms[i - 1]) {
        ++run;
      } else {
        weight *= factorial(static_cast<unsigned>(run));
        run = 1;
      }
    }
    visit(std::span<const int>(ms), Rat(Int(1), weight));
    int i = k - 1;
    while (i >= 0 && ms[static_cast<std::size_t>(i)] == n - 1) --i;
    if (i < 0) return;
    const int v = ms[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < k; ++j) ms[static_cast<std::size_t>(j)] = v;
  }
}

}  // namespace

MultiPoly phi_k(KCharacter& chi, int k) {
  const int n = chi.chi().order();
  if (k < 0) throw Error(ErrorKind::InvalidParameter, "phi_k needs k >= 0");
  if (k == 0) return MultiPoly::constant(n, Cyclo(1));
  MultiPoly out(n);
  for_each_multiset(n, k, [&](std::span<const int> ms, const Rat& weight) {
    const Cyclo value = chi(ms);
    if (value.is_zero()) return;
    Monomial m{std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0), 0};
    for (int h : ms) ++m.exps[static_cast<std::size_t>(h)];
    out.add_term(m, value * Cyclo(weight));
  });
  return out;
}

MultiPoly phi_k(const ClassFunction& chi, int k) {
  KCharacter eval(chi);
  return phi_k(eval, k);
}

Cyclo phi_k_at(KCharacter& chi, int k, std::span<const Cyclo> point) {
  const int n = chi.chi().order();
  if (static_cast<int>(point.size()) != n) throw Error(ErrorKind::DimensionError, "point length differs from |G|");
  if (k == 0) return Cyclo(1);
  Cyclo acc;
  for_each_multiset(n, k, [&](std::span<const int> ms, const Rat& weight) {
    Cyclo term = Cyclo(weight);
    for (int h : ms) {
      term *= point[static_cast<std::size_t>(h)];
      if (term.is_zero()) return;
    }
    acc += term * chi(ms);
  });
  return acc;
}

PolyMatrix group_matrix(const FiniteGroup& g) {
  const int n = g.order();
  PolyMatrix x(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) x(i, j) = MultiPoly::variable(n, g.mul(i, g.inv(j)));
  }
  return x;
}

MultiPoly group_det(const FiniteGroup& g) {
  if (g.order() > kMaxSymbolicDeterminant) {
    throw Error(ErrorKind::SizeLimit, "symbolic group determinant needs |G| <= 8 (got " + std::to_string(g.order()) +
                                          "); use evaluation mode");
  }
  return det_poly_matrix(group_matrix(g));
}

namespace {

// Differing monomial between two polynomials, rendered for a witness.
std::string first_difference(const MultiPoly& a, const MultiPoly& b) {
  const MultiPoly d = a - b;
  if (d.is_zero()) return {};
  const auto& [m, c] = *d.terms().begin();
  MultiPoly single(d.nvars());
  single.add_term(m, c);
  return "lhs - rhs contains " + single.str();
}

// Rationals p/q with |p| <= 9, 1 <= q <= 5 from a splitmix64 stream.
struct PointStream {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  Rat rational() {
    const auto p = static_cast<long>(next() % 19) - 9;
    const auto q = static_cast<long>(next() % 5) + 1;
    return Rat(Int(p), Int(q));
  }
};

}  // namespace

FactorizationReport verify_factorization(const FiniteGroup& g, const CharTable& table,
                                         const FactorizationOptions& opts) {
  FactorizationReport report;
  report.verdict.check = "factorization";
  long square_sum = 0;
  for (const auto& row : table.rows) {
    square_sum += static_cast<long>(row.degree) * row.degree;
    report.degrees.push_back(row.degree);
  }
  if (square_sum != g.order() || !(*table.group == g)) {
    throw Error(ErrorKind::TableInvalid, "character degrees square-sum to " + std::to_string(square_sum) +
                                             " for a group of order " + std::to_string(g.order()));
  }

  FactorMode mode = opts.mode;
  if (mode == FactorMode::Auto) mode = g.order() <= kMaxSymbolicDeterminant ? FactorMode::Symbolic : FactorMode::Eval;
  if (mode == FactorMode::Symbolic && g.order() > kMaxSymbolicDeterminant) {
    throw Error(ErrorKind::SizeLimit, "symbolic mode needs |G| <= 8 (got " + std::to_string(g.order()) +
                                          "); rerun with --mode eval");
  }
  if (mode == FactorMode::Eval && g.order() > kMaxEvalOrder) {
    throw Error(ErrorKind::SizeLimit, "evaluation mode needs |G| <= 24");
  }
  auto& v = report.verdict;
  v.details["group"] = g.name();
  v.details["degrees"] = report.degrees;

  if (mode == FactorMode::Symbolic) {
    v.mode = "symbolic";
    report.theta = group_det(g);
    MultiPoly rhs = MultiPoly::constant(g.order(), Cyclo(1));
    for (const auto& row : table.rows) {
      report.factors.push_back(phi_k(row.chi, row.degree));
      rhs = rhs * p_pow(report.factors.back(), static_cast<unsigned>(row.degree));
    }
    v.checked = report.theta.term_count();
    v.details["theta_terms"] = report.theta.term_count();
    v.details["product_terms"] = rhs.term_count();
    v.details["homogeneous"] = report.theta.is_homogeneous(g.order());
    if (!(report.theta == rhs)) v.fail(first_difference(report.theta, rhs));
    if (!report.theta.is_homogeneous(g.order())) v.fail("group determinant is not homogeneous of degree |G|");
    return report;
  }

  v.mode = "eval";
  v.details["seed"] = opts.seed;
  v.details["points"] = opts.eval_points;
  std::vector<KCharacter> chars;
  chars.reserve(table.rows.size());
  for (const auto& row : table.rows) chars.emplace_back(row.chi);
  PointStream stream{opts.seed};
  const int n = g.order();
  for (int p = 0; p < opts.eval_points; ++p) {
    std::vector<Rat> point(static_cast<std::size_t>(n));
    for (auto& x : point) x = stream.rational();
    RatMatrix xg(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) xg(i, j) = point[static_cast<std::size_t>(g.mul(i, g.inv(j)))];
    }
    const Cyclo lhs(det_elimination(xg));
    const std::vector<Cyclo> cpoint(point.begin(), point.end());
    Cyclo rhs(1);
    for (std::size_t r = 0; r < chars.size(); ++r) {
      rhs *= phi_k_at(chars[r], table.rows[r].degree, cpoint).pow(table.rows[r].degree);
    }
    ++v.checked;
    if (!(lhs == rhs)) {
      std::ostringstream os;
      os << "point " << p << ": det " << lhs << " vs product " << rhs;
      v.fail(os.str());
      break;
    }
  }
  return report;
}

Verdict u_expansion_check(const ClassFunction& chi) {
  const int n = chi.degree();
  if (chi.order() > kMaxSymbolicDeterminant) {
    throw Error(ErrorKind::SizeLimit, "u-expansion check needs |G| <= 8");
  }
  Verdict v{"u-expansion", true, "symbolic"};
  v.details["dim"] = n;
  KCharacter eval(chi);
  const MultiPoly shifted = substitute_u(phi_k(eval, n));
  for (int j = 0; j <= n; ++j) {
    // coefficient of u^(n-j) must be Phi_j (Phi_0 = 1)
    const MultiPoly expected = phi_k(eval, j);
    const MultiPoly got = extract_u_coeff(shifted, static_cast<unsigned>(n - j));
    ++v.checked;
    if (!(got == expected)) v.fail("u^" + std::to_string(n - j) + " coefficient: " + got.str());
  }
  // nothing beyond u^n
  if (shifted.total_degree() > n) v.fail("terms above degree n");
  return v;
}

}  // namespace frobmark
