#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "bicomm/algebra.hpp"
#include "bicomm/algebra_io.hpp"
#include "bicomm/two_dim.hpp"
#include "support.hpp"

namespace {

using namespace bicomm;
using testsupport::Rng;

StructureAlgebra family(long pi, long rho) {
  return make_two_dim({Rational(pi), Rational(rho)});
}

StructureAlgebra family(const Rational& pi, const Rational& rho) {
  return make_two_dim({pi, rho});
}

TEST(TwoDimFamily, StructureConstantsFollowTheParameters) {
  StructureAlgebra a = family(2, 3);
  EXPECT_EQ(a.dim(), 2);
  EXPECT_EQ(a.label(0), "r");
  EXPECT_EQ(a.label(1), "r^2");
  // every product lands on the r^2 axis
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) EXPECT_TRUE(a.c(i, j, 0).is_zero());
  }
  EXPECT_EQ(a.c(0, 0, 1), Rational(1));
  EXPECT_EQ(a.c(0, 1, 1), Rational(2));
  EXPECT_EQ(a.c(1, 0, 1), Rational(3));
  EXPECT_EQ(a.c(1, 1, 1), Rational(6));
}

TEST(TwoDimFamily, EveryMemberSatisfiesBothIdentities) {
  Rng rng(5001);
  for (int it = 0; it < 250; ++it) {
    StructureAlgebra a =
        family(testsupport::random_rational(rng), testsupport::random_rational(rng));
    EXPECT_TRUE(is_bicommutative(a));
    EXPECT_FALSE(a.violation().has_value());
  }
}

TEST(StructureAlgebra, ReportsAViolationWitness) {
  // e1*e1 = e2 and e1*e2 = e1 break right commutativity
  std::vector<Rational> table(8, Rational(0));
  table[(0 * 2 + 0) * 2 + 1] = Rational(1);
  table[(0 * 2 + 1) * 2 + 0] = Rational(1);
  StructureAlgebra a({"e1", "e2"}, table);
  EXPECT_FALSE(a.bicommutative());
  ASSERT_TRUE(a.violation().has_value());
  auto [i, j, k, which] = *a.violation();
  // replay the witness: the named triple really does separate the two sides
  auto ei = a.basis_vector(i), ej = a.basis_vector(j), ek = a.basis_vector(k);
  if (which == 'R') {
    EXPECT_NE(a.mul(a.mul(ei, ej), ek), a.mul(a.mul(ei, ek), ej));
  } else {
    ASSERT_EQ(which, 'L');
    EXPECT_NE(a.mul(ei, a.mul(ej, ek)), a.mul(ej, a.mul(ei, ek)));
  }
  EXPECT_THROW(codimension(a, 3), DomainError);
  EXPECT_THROW(cocharacter_multiplicity(a, Partition2(2, 0)), DomainError);
}

TEST(Evaluation, WordsOnBasisVectors) {
  StructureAlgebra a = family(2, 3);
  std::vector<std::vector<Rational>> assign{a.basis_vector(0), a.basis_vector(1)};
  // x1*x2 with x1 = r, x2 = r^2
  Monomial w = Monomial::var(yvar(1)).times(Monomial::var(zvar(2)));
  EXPECT_EQ(evaluate_monomial(a, w, assign), (std::vector<Rational>{Rational(0), Rational(2)}));
  // literal bracketings disagree on non-associative members
  std::vector<std::vector<Rational>> rr{a.basis_vector(0), a.basis_vector(0)};
  EXPECT_EQ(evaluate_term(a, parse_term("((x1*x1)*x1)"), rr),
            (std::vector<Rational>{Rational(0), Rational(3)}));
  EXPECT_EQ(evaluate_term(a, parse_term("(x1*(x1*x1))"), rr),
            (std::vector<Rational>{Rational(0), Rational(2)}));
}

TEST(Evaluation, FactorsThroughTheNormalForm) {
  // On members of the family, a bracketed term and the canonical bracketing
  // of its normal word always evaluate alike: evaluation only sees the word.
  Rng rng(9119);
  for (int it = 0; it < 200; ++it) {
    StructureAlgebra a =
        family(testsupport::random_rational(rng), testsupport::random_rational(rng));
    int n = testsupport::uniform_int(rng, 2, 4);
    Term t = testsupport::random_term(rng, n, testsupport::uniform_int(rng, 2, 5));
    Element image = psi(t, n);
    ASSERT_EQ(image.higher().terms().size(), 1u);
    ASSERT_EQ(image.higher().terms().begin()->second, Rational(1));
    const Monomial& w = image.higher().terms().begin()->first;
    std::vector<std::vector<Rational>> assign;
    for (int v = 0; v < n; ++v) {
      assign.push_back({testsupport::random_rational(rng), testsupport::random_rational(rng)});
    }
    std::vector<Rational> direct = evaluate_term(a, t, assign);
    EXPECT_EQ(direct, evaluate_term(a, canonical_term(to_normal_word(w)), assign));
    EXPECT_EQ(direct, evaluate_monomial(a, w, assign));
  }
}

TEST(Codimension, GenericMemberMatchesTheFreeCount) {
  StructureAlgebra a = family(1, -1);
  EXPECT_EQ(codimension(a, 1), 1);
  for (int n = 2; n <= 6; ++n) {
    Integer expect = (Integer(1) << n) - 2;
    EXPECT_EQ(codimension(a, n), expect) << "n=" << n;
  }
  EXPECT_THROW(codimension(a, 11), DomainError);  // default evaluation cap
  EXPECT_EQ(codimension(a, 1, 20), 1);
}

TEST(Codimension, DegreeTwoEvaluationMatrixIsTheSignPattern) {
  // rows x1*x2 and x2*x1, columns the four basis tuples with the second
  // variable varying fastest; only the r^2 coordinate is ever hit
  StructureAlgebra a = family(1, -1);
  std::vector<Monomial> words = multilinear_basis(2);
  ASSERT_EQ(words.size(), 2u);
  std::vector<std::vector<Rational>> rows(2);
  for (int t1 = 0; t1 < 2; ++t1) {
    for (int t2 = 0; t2 < 2; ++t2) {
      std::vector<std::vector<Rational>> assign{a.basis_vector(t1), a.basis_vector(t2)};
      for (std::size_t r = 0; r < 2; ++r) {
        std::vector<Rational> val = evaluate_monomial(a, words[r], assign);
        EXPECT_TRUE(val[0].is_zero());
        rows[r].push_back(val[1]);
      }
    }
  }
  auto rational_row = [](std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) out.push_back(Rational(x));
    return out;
  };
  // degree-two words come out as y1*z2 then y2*z1
  EXPECT_EQ(rows[0], rational_row({1, 1, -1, -1}));
  EXPECT_EQ(rows[1], rational_row({1, -1, 1, -1}));
}

TEST(Codimension, DegenerateMembersGrowLinearlyOrStall) {
  StructureAlgebra a01 = family(0, 1);
  StructureAlgebra a10 = family(1, 0);
  StructureAlgebra a11 = family(1, 1);
  EXPECT_EQ(codimension(a01, 1), 1);
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(codimension(a01, n), n) << "n=" << n;
    EXPECT_EQ(codimension(a10, n), n) << "n=" << n;
    EXPECT_EQ(codimension(a11, n), 1) << "n=" << n;
  }
}

TEST(Codimension, RankRespectsTheEvaluationMatrixBounds) {
  // the matrix has 2^n - 2 rows and m^{n+1} columns; with every product on
  // a single line the usable columns shrink to 2^n
  Rng rng(7207);
  for (int it = 0; it < 40; ++it) {
    StructureAlgebra a =
        family(testsupport::random_rational(rng), testsupport::random_rational(rng));
    for (int n = 2; n <= 5; ++n) {
      Integer c = codimension(a, n);
      Integer rows = (Integer(1) << n) - 2;
      Integer cols = Integer(1) << (n + 1);
      EXPECT_LE(c, rows < cols ? rows : cols) << "n=" << n;
      EXPECT_LE(c, Integer(1) << n) << "n=" << n;
    }
  }
  // a one-dimensional member pins the column bound m^{n+1} at 1
  StructureAlgebra line({"e1"}, {Rational(1)});
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(codimension(line, n), 1) << "n=" << n;
}

TEST(Multiplicity, DegenerateMembersConcentrateOnHooksAndRows) {
  StructureAlgebra a01 = family(0, 1);
  EXPECT_EQ(cocharacter_multiplicity(a01, Partition2(3, 1)), 1);
  EXPECT_EQ(cocharacter_multiplicity(a01, Partition2(4, 0)), 1);
  EXPECT_EQ(cocharacter_multiplicity(a01, Partition2(2, 2)), 0);
  EXPECT_EQ(cocharacter_multiplicity(a01, Partition2(2, 0)), 1);
  EXPECT_EQ(cocharacter_multiplicity(a01, Partition2(1, 1)), 1);
  StructureAlgebra a11 = family(1, 1);
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(cocharacter_multiplicity(a11, Partition2(n, 0)), 1);
  }
  EXPECT_EQ(cocharacter_multiplicity(a11, Partition2(1, 1)), 0);
  EXPECT_EQ(cocharacter_multiplicity(a11, Partition2(2, 2)), 0);
  EXPECT_THROW(cocharacter_multiplicity(a11, Partition2(1, 0)), DomainError);
}

TEST(Multiplicity, GenericMemberMatchesTheAmbientVariety) {
  StructureAlgebra a = family(1, -1);
  for (int n = 2; n <= 5; ++n) {
    Integer total = 0;
    for (const Partition2& la : two_row_partitions(n)) {
      Integer m = cocharacter_multiplicity(a, la);
      EXPECT_EQ(m, cocharacter_multiplicity(la)) << la.str();
      total += m * hook_degree(la);
    }
    EXPECT_EQ(total, codimension(a, n)) << "n=" << n;
  }
}

TEST(Multiplicity, SampledLowerBoundAgreesOnSmallShapes) {
  Rng rng(5002);
  for (int it = 0; it < 40; ++it) {
    StructureAlgebra a = family(testsupport::uniform_int(rng, -3, 3),
                                testsupport::uniform_int(rng, -3, 3));
    int n = testsupport::uniform_int(rng, 2, 5);
    for (const Partition2& la : two_row_partitions(n)) {
      Integer exact = cocharacter_multiplicity(a, la);
      Integer sampled = cocharacter_multiplicity_lower_bound(a, la, 1);
      EXPECT_LE(sampled, exact) << la.str();
      EXPECT_EQ(sampled, exact) << la.str();
    }
  }
}

TEST(OneVariableWords, IndependenceSeparatesTheMembers) {
  StructureAlgebra gen = family(1, -1);
  for (int n = 2; n <= 6; ++n) EXPECT_TRUE(one_variable_identity_free(gen, n));
  EXPECT_TRUE(one_variable_identity_free(family(0, 1), 2));
  for (int n = 3; n <= 5; ++n) {
    EXPECT_FALSE(one_variable_identity_free(family(0, 1), n)) << n;
    EXPECT_FALSE(one_variable_identity_free(family(1, 0), n)) << n;
    EXPECT_FALSE(one_variable_identity_free(family(1, 1), n)) << n;
    EXPECT_FALSE(one_variable_identity_free(family(0, 0), n)) << n;
  }
}

TEST(Classification, CanonicalRepresentativesAndWitnesses) {
  Classification c = classify_two_dim({Rational(2), Rational(3)});
  EXPECT_EQ(c.canonical, (TwoDimParams{Rational(1), Rational(-1)}));
  EXPECT_EQ(c.witness.xi, Rational(-2));
  EXPECT_EQ(c.witness.eta, Rational(5) / Rational(6));
  EXPECT_EQ(c.witness.kind(), "affine");

  Classification id = classify_two_dim({Rational(0), Rational(0)});
  EXPECT_EQ(id.canonical, (TwoDimParams{Rational(0), Rational(0)}));
  EXPECT_EQ(id.witness.kind(), "identity");

  // Scale witnesses are reciprocal: r1 = 7r would multiply the parameter by
  // 49, not normalize it.
  Classification sc = classify_two_dim({Rational(7), Rational(7)});
  EXPECT_EQ(sc.canonical, (TwoDimParams{Rational(1), Rational(1)}));
  EXPECT_EQ(sc.witness.xi, Rational(1) / Rational(7));
  EXPECT_EQ(sc.witness.kind(), "scale");

  EXPECT_EQ(classify_two_dim({Rational(0), Rational(5)}).canonical,
            (TwoDimParams{Rational(0), Rational(1)}));
  EXPECT_EQ(classify_two_dim({Rational(0), Rational(5)}).witness.xi,
            Rational(1) / Rational(5));
  EXPECT_EQ(classify_two_dim({Rational(5), Rational(0)}).canonical,
            (TwoDimParams{Rational(1), Rational(0)}));
  EXPECT_EQ(classify_two_dim({Rational(5), Rational(0)}).witness.xi,
            Rational(1) / Rational(5));
}

TEST(Classification, WitnessesVerifyRandomized) {
  Rng rng(5003);
  for (int it = 0; it < 250; ++it) {
    TwoDimParams p{testsupport::random_rational(rng), testsupport::random_rational(rng)};
    Classification c = classify_two_dim(p);
    EXPECT_TRUE(verify_isomorphism(make_two_dim(p), make_two_dim(c.canonical), c.witness))
        << p.str();
  }
}

TEST(Classification, VerificationRejectsWrongTargetsAndDegenerateMaps) {
  StructureAlgebra a01 = family(0, 1);
  StructureAlgebra a10 = family(1, 0);
  EXPECT_FALSE(verify_isomorphism(a01, a10, {Rational(1), Rational(0)}));
  EXPECT_THROW(verify_isomorphism(a01, a01, {Rational(0), Rational(1)}), DomainError);
}

TEST(Classification, FingerprintsSeparateTheCanonicalMembers) {
  auto fp = [&](long pi, long rho) { return structural_fingerprint(family(pi, rho)); };
  EXPECT_EQ(fp(0, 0), (std::array<bool, 5>{true, true, true, true, true}));
  EXPECT_EQ(fp(1, 1), (std::array<bool, 5>{false, false, false, true, true}));
  EXPECT_EQ(fp(0, 1), (std::array<bool, 5>{false, true, false, false, false}));
  EXPECT_EQ(fp(1, 0), (std::array<bool, 5>{false, false, true, false, false}));
  EXPECT_EQ(fp(1, -1), (std::array<bool, 5>{false, false, false, false, false}));
  std::set<std::array<bool, 5>> all{fp(0, 0), fp(1, 1), fp(0, 1), fp(1, 0), fp(1, -1)};
  EXPECT_EQ(all.size(), 5u);
}

TEST(AlgebraIo, ParsesAndRoundTrips) {
  nlohmann::json j = nlohmann::json::parse(R"({
    "dim": 2,
    "basis": ["r", "r^2"],
    "table": [[[0, 1], ["0", "0"]], [["0", "1/1"], [0, 0]]]
  })");
  StructureAlgebra a = algebra_from_json(j);
  EXPECT_EQ(a.c(0, 0, 1), Rational(1));
  EXPECT_EQ(a.c(1, 0, 1), Rational(1));
  EXPECT_TRUE(a.c(1, 1, 1).is_zero());
  // full round trip through the serializer
  StructureAlgebra b = algebra_from_json(algebra_to_json(family(2, 3)));
  for (int i = 0; i < 2; ++i) {
    for (int jj = 0; jj < 2; ++jj) {
      for (int k = 0; k < 2; ++k) EXPECT_EQ(b.c(i, jj, k), family(2, 3).c(i, jj, k));
    }
  }
  EXPECT_EQ(b.label(1), "r^2");
}

TEST(AlgebraIo, RejectsBadDescriptions) {
  EXPECT_THROW(algebra_from_json(nlohmann::json::parse("[]")), ParseError);
  EXPECT_THROW(algebra_from_json(nlohmann::json::parse(R"({"dim": 2})")), ParseError);
  EXPECT_THROW(algebra_from_json(nlohmann::json::parse(
                   R"({"dim": 1, "table": [[[0.5]]]})")),
               ParseError);
  EXPECT_THROW(algebra_from_json(nlohmann::json::parse(
                   R"({"dim": 2, "table": [[[0, 1]]]})")),
               ParseError);
  EXPECT_THROW(load_algebra_file("/nonexistent/nothing.json"), ParseError);
}

TEST(AlgebraIo, LoadsFromDisk) {
  std::string path = ::testing::TempDir() + "two_dim_roundtrip.json";
  {
    std::ofstream out(path);
    out << algebra_to_json(family(1, -1)).dump(2) << "\n";
  }
  StructureAlgebra a = load_algebra_file(path);
  EXPECT_EQ(a.c(1, 0, 1), Rational(-1));
  EXPECT_TRUE(is_bicommutative(a));
  std::remove(path.c_str());
}

TEST(SymbolicEvaluation, MatchesConcretePointsRandomized) {
  Rng rng(5004);
  for (int it = 0; it < 60; ++it) {
    StructureAlgebra a = family(testsupport::uniform_int(rng, -2, 2),
                                testsupport::uniform_int(rng, -2, 2));
    int n = testsupport::uniform_int(rng, 2, 4);
    auto parts = two_row_partitions(n);
    const Partition2& la = parts[static_cast<std::size_t>(
        testsupport::uniform_int(rng, 0, static_cast<int>(parts.size()) - 1))];
    if (hwv_count(la) == 0) continue;
    std::vector<std::vector<Poly>> symbolic = detail::hwv_evaluations(a, la);
    // a concrete point: coordinates for the two generic elements
    std::vector<Rational> point;
    for (int v = 0; v < 2 * a.dim(); ++v) point.push_back(testsupport::random_rational(rng));
    std::vector<std::vector<Rational>> assign{
        {point[0], point[1]}, {point[2], point[3]}};
    for (int j = hwv_index_min(la); j <= hwv_index_max(la); ++j) {
      Element w = hwv(HwvSpec(la, j));
      std::vector<Rational> direct(2, Rational(0));
      for (const auto& [mono, coeff] : w.higher().terms()) {
        std::vector<Rational> term = evaluate_word(a, to_normal_word(mono), assign);
        for (std::size_t k = 0; k < 2; ++k) direct[k] += term[k] * coeff;
      }
      const std::vector<Poly>& sym = symbolic[static_cast<std::size_t>(j - hwv_index_min(la))];
      for (std::size_t k = 0; k < 2; ++k) {
        EXPECT_EQ(testsupport::poly_value(sym[k], point, {}), direct[k]);
      }
    }
  }
}

}  // namespace
