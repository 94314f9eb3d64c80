#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "frobmark/char_table.hpp"
#include "frobmark/error.hpp"
#include "frobmark/exterior.hpp"
#include "frobmark/factorization.hpp"
#include "frobmark/kchar.hpp"
#include "frobmark/linalg.hpp"
#include "oracles.hpp"

using namespace frobmark;

namespace {

const ClassFunction& irrep(const CharTable& t, int degree) {
  for (const auto& row : t.rows) {
    if (row.degree == degree) return row.chi;
  }
  throw std::runtime_error("no row of that degree");
}

std::string what_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

// --- tables ---------------------------------------------------------------------

TEST(CharTable, BuiltinTablesValidate) {
  for (const char* name : {"Z1", "Z2", "Z3", "Z5", "Z8", "S3", "S4", "D4", "Q8", "V4", "Z2xZ2", "Z2xS3", "Z3xZ3"}) {
    const CharTable t = builtin_char_table(name);
    EXPECT_NO_THROW(validate_char_table(t)) << name;
    EXPECT_EQ(t.rows.size(), t.classes.size()) << name;
    int squares = 0;
    for (const auto& r : t.rows) squares += r.degree * r.degree;
    EXPECT_EQ(squares, t.group->order()) << name;
  }
}

TEST(CharTable, CyclicTableIsRootsOfUnity) {
  const CharTable t = builtin_char_table("Z3");
  for (int j = 0; j < 3; ++j) {
    for (int g = 0; g < 3; ++g) EXPECT_EQ(t.rows[static_cast<std::size_t>(j)].chi(g), zeta(3, j * g));
  }
}

TEST(CharTable, S3Degrees) {
  std::vector<int> d;
  for (const auto& r : builtin_char_table("S3").rows) d.push_back(r.degree);
  EXPECT_EQ(d, (std::vector<int>{1, 1, 2}));
}

TEST(CharTable, D4AndQ8Coincide) {
  EXPECT_TRUE(tables_coincide(builtin_char_table("D4"), builtin_char_table("Q8")));
  EXPECT_FALSE(tables_coincide(builtin_char_table("S3"), builtin_char_table("Z6")));
}

TEST(CharTable, CorruptedTablesAreRejected) {
  const CharTable good = builtin_char_table("S3");
  nlohmann::json j = char_table_to_json(good);
  EXPECT_NO_THROW(char_table_from_json(j));

  nlohmann::json wrong_value = j;
  wrong_value["chars"][2]["values"][1] = Cyclo(1);  // breaks class constancy
  EXPECT_NE(what_of([&] { char_table_from_json(wrong_value); }).find("class"), std::string::npos);

  nlohmann::json missing_row = j;
  missing_row["chars"].erase(1);
  EXPECT_NE(what_of([&] { char_table_from_json(missing_row); }), "");

  nlohmann::json not_orthogonal = j;
  for (int g = 0; g < 6; ++g) not_orthogonal["chars"][1]["values"][g] = Cyclo(1);
  const std::string msg = what_of([&] { char_table_from_json(not_orthogonal); });
  EXPECT_NE(msg.find("orthogonal"), std::string::npos) << msg;
}

TEST(CharTable, JsonRoundTrip) {
  const CharTable t = builtin_char_table("Z4");
  const CharTable back = char_table_from_json(char_table_to_json(t));
  EXPECT_TRUE(tables_coincide(t, back));
}

// --- k-characters ----------------------------------------------------------------

TEST(KChar, EmptyTupleRejectedByRecursion) {
  const CharTable t = builtin_char_table("S3");
  try {
    (void)kchar_recursive(t.rows[0].chi, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidParameter);
  }
}

TEST(KChar, TwoAndThreeTermForms) {
  const CharTable t = builtin_char_table("S3");
  const ClassFunction& chi = irrep(t, 2);
  const FiniteGroup& g = *chi.group;
  KCharacter k(chi);
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      EXPECT_EQ(k({a, b}), chi(a) * chi(b) - chi(g.mul(a, b)));
      for (int c = 0; c < 6; ++c) {
        const Cyclo six = chi(a) * chi(b) * chi(c) - chi(a) * chi(g.mul(b, c)) - chi(b) * chi(g.mul(a, c)) -
                          chi(c) * chi(g.mul(a, b)) + chi(g.mul(g.mul(a, b), c)) + chi(g.mul(g.mul(a, c), b));
        EXPECT_EQ(k({a, b, c}), six);
      }
    }
  }
}

TEST(KChar, TrivialCharacterHasZeroChi2) {
  const ClassFunction one = trivial_character(std::make_shared<const FiniteGroup>(builtin_group("D4")));
  EXPECT_TRUE(vanishing_check(one, 2).pass);
  EXPECT_THROW(vanishing_check(one, 1), Error);
}

TEST(KChar, CyclicSumSizeGuard) {
  const ClassFunction chi = builtin_char_table("S3").rows[0].chi;
  const std::vector<int> seven(7, 0);
  try {
    (void)kchar_cyclic(chi, seven);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeLimit);
  }
  const std::vector<int> one{3};
  EXPECT_EQ(kchar_cyclic(chi, one), chi(3));
}

// Library k-characters against the floating-point oracle that walks cycles in
// the opposite direction.
TEST(KCharProperty, MatchesNumericOracle) {
  oracle::Rng rng{5};
  for (const char* name : {"S3", "Q8", "D4", "S4", "Z5"}) {
    const CharTable t = builtin_char_table(name);
    for (const auto& row : t.rows) {
      KCharacter k(row.chi);
      const auto numeric = oracle::embed(row.chi.values);
      for (int trial = 0; trial < 40; ++trial) {
        std::vector<int> h(static_cast<std::size_t>(rng.range(1, 5)));
        for (auto& x : h) x = static_cast<int>(rng.range(0, t.group->order() - 1));
        const auto expected = oracle::kchar_numeric(*t.group, numeric, h);
        EXPECT_LT(std::abs(k(h).embed_complex() - expected), 1e-8) << name << " " << tuple_string(h);
      }
    }
  }
}

TEST(KCharProperty, SymmetricUnderReordering) {
  for (const char* name : {"S3", "Q8", "D4"}) {
    for (const auto& row : builtin_char_table(name).rows) EXPECT_TRUE(kchar_symmetry_check(row.chi, 3).pass) << name;
  }
}

TEST(KChar, SymmetryNegativeControl) {
  const CharTable t = builtin_char_table("S3");
  ClassFunction bad = irrep(t, 2);
  bad.values[1] = Cyclo(5);  // no longer constant on the class of transpositions
  EXPECT_FALSE(is_trace_like(bad));
  const Verdict v = kchar_symmetry_check(bad, 2);
  EXPECT_FALSE(v.pass);
  EXPECT_FALSE(v.witness.empty());
}

TEST(KChar, EquivalenceAndExplicitForms) {
  for (const char* name : {"S3", "Q8"}) {
    for (const auto& row : builtin_char_table(name).rows) {
      for (int k = 1; k <= 4; ++k) EXPECT_TRUE(kchar_equivalence_check(row.chi, k).pass) << name << " k=" << k;
      EXPECT_TRUE(explicit_formula_check(row.chi).pass);
    }
  }
}

TEST(KChar, Vanishing) {
  const CharTable s4 = builtin_char_table("S4");
  const Verdict v = vanishing_check(irrep(s4, 3), 4);
  EXPECT_TRUE(v.pass);
  EXPECT_EQ(v.checked, 331776U);
  EXPECT_EQ(v.mode, "exhaustive");
  const ClassFunction two = irrep(builtin_char_table("S3"), 2);
  EXPECT_TRUE(vanishing_check(two, 3).pass);
  // at j = n the k-character does not vanish: chi_2(e, e) = 2 * 2 - 2
  KCharacter k(two);
  EXPECT_EQ(k({0, 0}), Cyclo(2));
  EXPECT_THROW(vanishing_check(two, 2), Error);
}

TEST(KChar, SampledCoverageIsSeeded) {
  const ClassFunction chi = irrep(builtin_char_table("S4"), 3);
  CoverageOptions opts;
  opts.exhaustive_limit = 1000;
  opts.samples = 500;
  const Verdict a = vanishing_check(chi, 5, opts);
  const Verdict b = vanishing_check(chi, 5, opts);
  EXPECT_EQ(a.mode, "sampled");
  EXPECT_EQ(a.checked, 500U);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(nlohmann::json(a).dump(), nlohmann::json(b).dump());
}

TEST(KChar, IdentityReduction) {
  for (const char* name : {"S3", "Q8", "S4"}) {
    for (const auto& row : builtin_char_table(name).rows) {
      for (int j = 0; j <= row.degree + 1; ++j) EXPECT_TRUE(identity_reduction_check(row.chi, j).pass) << name;
    }
  }
  const ClassFunction chi = irrep(builtin_char_table("S3"), 2);
  KCharacter k(chi);
  for (int h = 0; h < 6; ++h) EXPECT_EQ(k({0, h}), chi(h));
}

// --- determinant factorization ---------------------------------------------------

TEST(Factorization, Z3MatchesPaper) {
  const FiniteGroup g = builtin_group("Z3");
  const MultiPoly theta = group_det(g);
  const MultiPoly x1 = MultiPoly::variable(3, 0), x2 = MultiPoly::variable(3, 1), x3 = MultiPoly::variable(3, 2);
  EXPECT_EQ(theta, p_pow(x1, 3) + p_pow(x2, 3) + p_pow(x3, 3) - MultiPoly::constant(3, Cyclo(3)) * x1 * x2 * x3);
  const Cyclo e = zeta(3, 1);
  const MultiPoly f1 = x1 + x2 + x3;
  const MultiPoly f2 = x1 + e * x2 + e * e * x3;
  const MultiPoly f3 = x1 + e * e * x2 + e * x3;
  EXPECT_EQ(theta, f1 * f2 * f3);
  const CharTable t = builtin_char_table("Z3");
  EXPECT_EQ(phi_k(t.rows[1].chi, 1), f2);
}

TEST(Factorization, Z2) {
  const MultiPoly x1 = MultiPoly::variable(2, 0), x2 = MultiPoly::variable(2, 1);
  EXPECT_EQ(group_det(builtin_group("Z2")), x1 * x1 - x2 * x2);
}

TEST(Factorization, GroupMatrixAgreesWithLeibniz) {
  oracle::Rng rng{9};
  for (const char* name : {"S3", "Z4", "V4"}) {
    const FiniteGroup g = builtin_group(name);
    const MultiPoly theta = group_det(g);
    std::vector<Cyclo> pt;
    for (int i = 0; i < g.order(); ++i) pt.emplace_back(static_cast<int>(rng.range(-3, 3)));
    const Cyclo expected = oracle::leibniz_det<Cyclo>(g.order(), [&](int i, int j) {
      int jinv = 0;
      while (g.mul(j, jinv) != 0) ++jinv;
      return pt[static_cast<std::size_t>(g.mul(i, jinv))];
    });
    EXPECT_EQ(eval(theta, pt), expected) << name;
    std::vector<Cyclo> unit(static_cast<std::size_t>(g.order()), Cyclo(0));
    unit[0] = Cyclo(1);
    EXPECT_EQ(eval(theta, unit), Cyclo(1));
  }
}

TEST(Factorization, SymbolicForSmallGroups) {
  for (const char* name : {"Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "Z7", "Z8", "S3", "D4", "Q8"}) {
    const FiniteGroup g = builtin_group(name);
    const auto rep = verify_factorization(g, builtin_char_table(name));
    EXPECT_TRUE(rep.verdict.pass) << name << ": " << rep.verdict.witness;
    EXPECT_EQ(rep.verdict.mode, "symbolic");
    EXPECT_TRUE(rep.theta.is_homogeneous(g.order()));
  }
}

TEST(Factorization, EvaluationModeForS4) {
  const auto rep = verify_factorization(builtin_group("S4"), builtin_char_table("S4"));
  EXPECT_TRUE(rep.verdict.pass) << rep.verdict.witness;
  EXPECT_EQ(rep.verdict.mode, "eval");
  EXPECT_EQ(rep.verdict.checked, 50U);
}

TEST(Factorization, SizeLimitsAndBookkeeping) {
  FactorizationOptions sym;
  sym.mode = FactorMode::Symbolic;
  const std::string msg = what_of([&] { verify_factorization(builtin_group("Z9"), builtin_char_table("Z9"), sym); });
  EXPECT_NE(msg.find("--mode eval"), std::string::npos) << msg;
  EXPECT_THROW(group_det(builtin_group("Z9")), Error);

  CharTable broken = builtin_char_table("S3");
  broken.rows.pop_back();
  try {
    verify_factorization(builtin_group("S3"), broken);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TableInvalid);
  }
}

TEST(Factorization, PhiNormalization) {
  const ClassFunction chi = irrep(builtin_char_table("S3"), 2);
  const MultiPoly phi2 = phi_k(chi, 2);
  EXPECT_TRUE(phi2.is_homogeneous(2));
  std::vector<Cyclo> unit(6, Cyclo(0));
  unit[0] = Cyclo(1);
  EXPECT_EQ(eval(phi2, unit), Cyclo(1));
  MultiPoly phi1(6);
  for (int g = 0; g < 6; ++g) phi1 = phi1 + chi(g) * MultiPoly::variable(6, g);
  EXPECT_EQ(phi_k(chi, 1), phi1);
}

TEST(Factorization, D4AndQ8Distinguished) {
  const MultiPoly d4 = group_det(builtin_group("D4"));
  const MultiPoly q8 = group_det(builtin_group("Q8"));
  EXPECT_FALSE(d4 == q8);
  EXPECT_TRUE(verify_factorization(builtin_group("D4"), builtin_char_table("D4")).verdict.pass);
  EXPECT_TRUE(verify_factorization(builtin_group("Q8"), builtin_char_table("Q8")).verdict.pass);
}

TEST(Factorization, UExpansion) {
  for (const char* name : {"S3", "Q8", "Z4"}) {
    for (const auto& row : builtin_char_table(name).rows) EXPECT_TRUE(u_expansion_check(row.chi).pass) << name;
  }
  const ClassFunction chi = irrep(builtin_char_table("S3"), 2);
  const MultiPoly q = substitute_u(phi_k(chi, 2));
  EXPECT_EQ(extract_u_coeff(q, 1), phi_k(chi, 1));
  EXPECT_EQ(extract_u_coeff(q, 2), MultiPoly::constant(6, Cyclo(1)));
}

// --- exterior powers and direct sums ---------------------------------------------

TEST(Exterior, TranspositionDeterminant) {
  const MatrixRep rho = builtin_matrix_rep("S3");
  const FiniteGroup& g = *rho.group;
  int transposition = -1;
  for (int x = 1; x < 6; ++x) {
    if (g.element_order(x) == 2) {
      transposition = x;
      break;
    }
  }
  ASSERT_GE(transposition, 0);
  EXPECT_EQ(exterior_char(rho, 2, transposition), Cyclo(-1));
  EXPECT_EQ(diagonal_theta(rho.character(), 2, transposition), Cyclo(-1));
  EXPECT_EQ(exterior_char(rho, 0, transposition), Cyclo(1));
  EXPECT_THROW(exterior_char(rho, 3, 0), Error);
}

TEST(Exterior, PowerIdentities) {
  for (const char* name : {"S3", "Q8", "D4", "S4"}) {
    const Verdict v = exterior_power_check(builtin_matrix_rep(name));
    EXPECT_TRUE(v.pass) << name << ": " << v.witness;
  }
}

TEST(Exterior, Waring) {
  const std::vector<Cyclo> ones{Cyclo(2), Cyclo(2)};
  EXPECT_EQ(waring_e_from_s(ones), Cyclo(1));
  // eigenvalues 1, 2, 3: e3 = 6
  const std::vector<Cyclo> s{Cyclo(6), Cyclo(14), Cyclo(36)};
  EXPECT_EQ(waring_e_from_s(s), Cyclo(6));
  const std::vector<Cyclo> s2{Cyclo(6), Cyclo(14)};
  EXPECT_EQ(waring_e_from_s(s2), Cyclo(11));
}

TEST(Exterior, RepresentationsAreHomomorphisms) {
  for (const char* name : {"S3", "Q8", "D4", "S4"}) {
    const MatrixRep rho = builtin_matrix_rep(name);
    const FiniteGroup& g = *rho.group;
    for (int a = 0; a < g.order(); ++a) {
      for (int b = 0; b < g.order(); ++b) {
        EXPECT_TRUE(multiply(rho.mats[static_cast<std::size_t>(a)], rho.mats[static_cast<std::size_t>(b)]) ==
                    rho.mats[static_cast<std::size_t>(g.mul(a, b))]);
      }
    }
    // the shipped rep's character is an irreducible row of the table
    const CharTable t = builtin_char_table(name);
    bool found = false;
    for (const auto& row : t.rows) found = found || row.chi.values == rho.character().values;
    EXPECT_TRUE(found) << name;
  }
}

TEST(DirectSum, ShuffleFormula) {
  const CharTable t = builtin_char_table("S3");
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    for (std::size_t j = 0; j < t.rows.size(); ++j) {
      for (int k = 1; k <= 3; ++k) {
        const Verdict v = direct_sum_kchar_check(t.rows[i].chi, t.rows[j].chi, k);
        EXPECT_TRUE(v.pass) << v.witness;
        EXPECT_EQ(v.details["terms"].get<std::uint64_t>(), shuffle_term_count(k));
      }
    }
  }
  EXPECT_EQ(shuffle_term_count(3), 8U);
  EXPECT_THROW(direct_sum_kchar_check(t.rows[0].chi, builtin_char_table("Z6").rows[0].chi, 2), Error);
}

TEST(DirectSum, TwoTermDisplay) {
  const CharTable t = builtin_char_table("S3");
  const ClassFunction& a = t.rows[1].chi;
  const ClassFunction& b = t.rows[2].chi;
  KCharacter sum(a + b), ka(a), kb(b);
  for (int h1 = 0; h1 < 6; ++h1) {
    for (int h2 = 0; h2 < 6; ++h2) {
      EXPECT_EQ(sum({h1, h2}), ka({h1, h2}) + a(h1) * b(h2) + a(h2) * b(h1) + kb({h1, h2}));
    }
  }
}

TEST(DirectSum, Whitney) {
  const MatrixRep two = builtin_matrix_rep("S3");
  const MatrixRep sign = rep_from_linear_character(builtin_char_table("S3").rows[1].chi);
  for (int k = 0; k <= 4; ++k) EXPECT_TRUE(whitney_check(two, two, k).pass);
  for (int k = 0; k <= 3; ++k) EXPECT_TRUE(whitney_check(two, sign, k).pass);
}
