#include <gtest/gtest.h>

#include "frobmark/error.hpp"
#include "frobmark/linalg.hpp"
#include "frobmark/poly.hpp"
#include "oracles.hpp"

using namespace frobmark;

namespace {

MultiPoly random_poly(oracle::Rng& rng, int nvars, int terms, int max_deg) {
  MultiPoly p(nvars);
  for (int t = 0; t < terms; ++t) {
    Monomial m{std::vector<std::uint8_t>(static_cast<std::size_t>(nvars), 0), 0};
    const int deg = static_cast<int>(rng.range(0, max_deg));
    for (int d = 0; d < deg; ++d) ++m.exps[static_cast<std::size_t>(rng.range(0, nvars - 1))];
    p.add_term(m, Cyclo(static_cast<int>(rng.range(-3, 3))) + Cyclo(static_cast<int>(rng.range(-1, 1))) * zeta(3, 1));
  }
  return p;
}

std::vector<Cyclo> random_point(oracle::Rng& rng, int n) {
  std::vector<Cyclo> pt;
  for (int i = 0; i < n; ++i) pt.emplace_back(Rat(Int(rng.range(-6, 6)), Int(rng.range(1, 3))));
  return pt;
}

}  // namespace

TEST(Poly, Rendering) {
  const MultiPoly x = MultiPoly::variable(3, 0);
  const MultiPoly y = MultiPoly::variable(3, 1);
  EXPECT_EQ((x * x - MultiPoly::constant(3, Cyclo(2)) * y).str(), "x1^2 - 2*x2");
  EXPECT_EQ(MultiPoly(2).str(), "0");
}

TEST(Poly, NvarsMismatchIsDimensionError) {
  try {
    (void)(MultiPoly::variable(2, 0) + MultiPoly::variable(3, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionError);
  }
  const std::vector<Cyclo> pt(2, Cyclo(1));
  EXPECT_THROW(eval(MultiPoly::variable(3, 0), pt), Error);
}

TEST(Poly, SubstituteU) {
  // (x1 + x2)^2 with x1 -> x1 + u
  const MultiPoly s = MultiPoly::variable(2, 0) + MultiPoly::variable(2, 1);
  const MultiPoly q = substitute_u(p_pow(s, 2));
  EXPECT_EQ(extract_u_coeff(q, 2), MultiPoly::constant(2, Cyclo(1)));
  EXPECT_EQ(extract_u_coeff(q, 1), MultiPoly::constant(2, Cyclo(2)) * s);
  EXPECT_EQ(extract_u_coeff(q, 0), p_pow(s, 2));
  EXPECT_THROW(substitute_u(q), Error);
}

TEST(Poly, DeterminantSizeGuard) {
  PolyMatrix m(9, 1);
  try {
    (void)det_poly_matrix(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeLimit);
    EXPECT_NE(std::string(e.what()).find("evaluation mode"), std::string::npos);
  }
}

TEST(Poly, CirculantDeterminant) {
  // det [[x,y,z],[z,x,y],[y,z,x]] = x^3 + y^3 + z^3 - 3xyz
  PolyMatrix m(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m(i, j) = MultiPoly::variable(3, ((j - i) % 3 + 3) % 3);
  }
  const MultiPoly x = MultiPoly::variable(3, 0), y = MultiPoly::variable(3, 1), z = MultiPoly::variable(3, 2);
  EXPECT_EQ(det_poly_matrix(m), p_pow(x, 3) + p_pow(y, 3) + p_pow(z, 3) - MultiPoly::constant(3, Cyclo(3)) * x * y * z);
}

// Laplace-subset and elimination determinants against the Leibniz oracle.
TEST(DetProperty, MatchesLeibniz) {
  oracle::Rng rng{7};
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(rng.range(1, 6));
    RatMatrix r(n, n);
    CycloMatrix c(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        r(i, j) = Rat(Int(rng.range(-4, 4)), Int(rng.range(1, 3)));
        c(i, j) = Cyclo(r(i, j)) + Cyclo(static_cast<int>(rng.range(-1, 1))) * zeta(4, 1);
      }
    }
    const Rat lr = oracle::leibniz_det<Rat>(n, [&](int i, int j) { return r(i, j); });
    const Cyclo lc = oracle::leibniz_det<Cyclo>(n, [&](int i, int j) { return c(i, j); });
    EXPECT_EQ(det_subsets(r), lr);
    EXPECT_EQ(det_elimination(r), lr);
    EXPECT_EQ(det_subsets(c), lc);
  }
}

TEST(DetProperty, PolyDeterminantEvaluates) {
  oracle::Rng rng{11};
  for (int trial = 0; trial < 20; ++trial) {
    const int n = static_cast<int>(rng.range(1, 4));
    PolyMatrix m(n, 3);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = random_poly(rng, 3, 3, 2);
    }
    const auto pt = random_point(rng, 3);
    const Cyclo expected = oracle::leibniz_det<Cyclo>(n, [&](int i, int j) { return eval(m(i, j), pt); });
    EXPECT_EQ(eval(det_poly_matrix(m), pt), expected);
  }
}

// Ring axioms and evaluation as a homomorphism.
TEST(PolyProperty, RingAxioms) {
  oracle::Rng rng{3};
  for (int trial = 0; trial < 100; ++trial) {
    const MultiPoly a = random_poly(rng, 3, 4, 3);
    const MultiPoly b = random_poly(rng, 3, 4, 3);
    const MultiPoly c = random_poly(rng, 3, 3, 2);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a - a).is_zero());
    const auto pt = random_point(rng, 3);
    EXPECT_EQ(eval(a * b, pt), eval(a, pt) * eval(b, pt));
    EXPECT_EQ(eval(a + b, pt), eval(a, pt) + eval(b, pt));
  }
}
