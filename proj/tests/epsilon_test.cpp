#include "knotconc/certificate_check.hpp"
#include "knotconc/epsilon.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace knotconc;
using Atoms = std::vector<Bracket>;

namespace {

ClassExpr single(const Bracket& b, std::int64_t c) {
  ClassExpr e;
  e.add(b, c);
  return e;
}

}  // namespace

TEST(Split, Examples) {
  EXPECT_EQ(split(Bracket{1, 3, 1, 2, 2}).atoms, (Atoms{{1, 3}, {1, 2}, {2}}));
  EXPECT_EQ(split(Bracket{1, 4, 1, 2, 1, 1, 1, 2, 1}).atoms, (Atoms{{1, 4}, {1, 2}, {1, 1, 1, 2, 1}}));
  EXPECT_EQ(split(Bracket{1}).atoms, (Atoms{{1}}));
  EXPECT_EQ(split(bracket_of(7, 10)).atoms, (Atoms{{1, 6}, {1, 2, 1, 3}, {1, 2, 1, 2}, {2, 2, 1, 2}}));
}

TEST(Split, TailOfTheSecondExampleIsStillSplittableFinely) {
  // The coarse splitter keeps [1,1,1,2,1] whole; the interval rule does apply.
  EXPECT_TRUE(concat_sum(Bracket{1, 1, 1, 2}, Bracket{1}));
  EXPECT_EQ(fine_split(Bracket{1, 1, 1, 2, 1}).atoms, (Atoms{{1, 1, 1, 2}, {1}}));
}

TEST(SplitProperty, SoundOnAllSmallTorusKnots) {
  for (std::int64_t p = 2; p <= 40; ++p) {
    for (std::int64_t q = p + 1; q <= 40; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const Bracket b = bracket_of(p, q);
      const Decomposition d = split(b);
      // Rejoin the atoms right to left exactly as the certificate tree does.
      std::vector<std::int64_t> flat;
      for (const auto& a : d.atoms) flat.insert(flat.end(), a.entries().begin(), a.entries().end());
      ASSERT_EQ(Bracket(flat), b) << p << "," << q;
      const auto check = check_certificate(d.certificate);
      ASSERT_TRUE(check.holds) << p << "," << q << ": " << check.report;
      ASSERT_TRUE(check_certificate(fine_split(b).certificate).holds) << p << "," << q;
    }
  }
}

TEST(SplitProperty, AdjacentAtomsOfCertifiedJoinsRecombine) {
  // Each internal node of the certificate is a concat_sum application that
  // succeeds again when replayed on its two children.
  std::function<void(const Certificate&)> walk = [&](const Certificate& c) {
    if (c.rule == rule::kConcat || c.rule == rule::kConcatLadder) {
      const Bracket l = Bracket::from_json(c.children[0].conclusion["bracket"]);
      const Bracket r = Bracket::from_json(c.children[1].conclusion["bracket"]);
      const auto again = concat_sum(l, r);
      ASSERT_TRUE(again);
      EXPECT_EQ(again->certificate.inputs, c.inputs);
    }
    for (const auto& k : c.children) walk(k);
  };
  for (std::int64_t p = 2; p <= 25; ++p) {
    for (std::int64_t q = p + 1; q <= 40; ++q) {
      if (std::gcd(p, q) == 1) walk(split(bracket_of(p, q)).certificate);
    }
  }
}

TEST(ClassOf, Examples) {
  EXPECT_EQ(class_of(parse_formula("T(3,4)")).expr, single({1, 2}, 1));
  EXPECT_TRUE(class_of(family_W(0)).expr.is_zero());
  EXPECT_EQ(class_of(family_W(0)).certificate.rule, rule::kRefine);
  const ClassExpr w1 = class_of(family_W(1)).expr;
  EXPECT_EQ(w1.coefficient({1, 2, 1, 7}), 1);
  for (const auto& [b, c] : w1.terms()) EXPECT_NE(b.size(), 2u) << b.render();
}

TEST(ClassOf, CoarseW0DoesNotCancelWithoutRefinement) {
  EXPECT_FALSE(atom_class(family_W(0)).expr.is_zero());
}

TEST(ClassOfProperty, NoLengthTwoSurvivorsInFamily) {
  for (std::int64_t n = 1; n <= 4; ++n) {
    for (const auto& [b, c] : class_of(family_W(n)).expr.terms()) {
      EXPECT_FALSE(b.size() == 2 && b[0] == 1) << "n=" << n << " " << b.render();
    }
  }
}

TEST(ClassOfProperty, Homomorphism) {
  const std::vector<KnotFormula> fs = {parse_formula("T(3,4) - T(2,5)"), family_W(1), family_J(2),
                                       parse_formula("2*T(5,8) - T(7,9)"), -family_L(1)};
  for (const auto& f : fs) {
    for (const auto& g : fs) {
      EXPECT_EQ(atom_class(f + g).expr, atom_class(f).expr + atom_class(g).expr);
    }
    EXPECT_EQ(atom_class(-f).expr, -atom_class(f).expr);
  }
}

TEST(ClassOf, CertificatesReplay) {
  for (std::int64_t n = 0; n <= 3; ++n) {
    const auto r = check_certificate(class_of(family_W(n)).certificate);
    EXPECT_TRUE(r.holds) << r.report;
  }
}

TEST(DominantForm, FamilyLeaders) {
  for (std::int64_t n = 1; n <= 4; ++n) {
    const DominantForm d = dominant_form(class_of(family_W(n)));
    ASSERT_TRUE(d.certified) << n;
    EXPECT_EQ(d.leader, make_ladder(2, 1, 6 * n + 1));
    EXPECT_EQ(d.coefficient, 1);
    EXPECT_EQ(d.sign(), 1);
    EXPECT_TRUE(check_certificate(d.certificate).holds);
  }
}

TEST(DominantForm, SingletonWithLargeCoefficient) {
  const DominantForm d = dominant_form(single({1, 2}, 5));
  EXPECT_TRUE(d.certified);
  EXPECT_EQ(d.leader, (Bracket{1, 2}));
  EXPECT_EQ(d.coefficient, 5);
  EXPECT_EQ(d.certificate.children.size(), 1u);
  EXPECT_TRUE(check_certificate(d.certificate).holds);
}

TEST(DominantForm, NegativeLeaderGivesNegativeSign) {
  ClassExpr e = single({1, 5}, -2);
  e.add({2, 2}, 7);
  const DominantForm d = dominant_form(e);
  ASSERT_TRUE(d.certified);
  EXPECT_EQ(d.leader, (Bracket{1, 5}));
  EXPECT_EQ(d.sign(), -1);
}

TEST(DominantForm, UndecidedReportsThePair) {
  ClassExpr e = single({1, 2, 1, 3}, 1);
  e.add({1, 2, 1, 3, 1, 1}, -1);
  const DominantForm d = dominant_form(e);
  EXPECT_FALSE(d.certified);
  ASSERT_TRUE(d.unresolved);
  EXPECT_THROW(dominant_form(ClassExpr()), std::invalid_argument);
}

TEST(EpsilonSign, Examples) {
  EXPECT_EQ(epsilon_sign(family_W(0)).sign, EpsilonResult::Sign::kZero);
  EXPECT_EQ(epsilon_sign(family_W(2)).sign, EpsilonResult::Sign::kPositive);
  EXPECT_EQ(epsilon_sign(-family_W(2)).sign, EpsilonResult::Sign::kNegative);
  EXPECT_EQ(epsilon_sign(parse_formula("T(2,3)")).sign, EpsilonResult::Sign::kPositive);
  EXPECT_EQ(epsilon_sign(parse_formula("T(2,5) - 2*T(2,3)")).sign, EpsilonResult::Sign::kZero);
  EXPECT_EQ(epsilon_sign(KnotFormula()).sign, EpsilonResult::Sign::kZero);
}

TEST(EpsilonSign, CombinationOfFamilyMembers) {
  const KnotFormula f = BigInt(3) * family_W(1) - BigInt(2) * family_W(2) + family_W(3);
  const EpsilonResult e = epsilon_sign(f);
  EXPECT_EQ(e.sign, EpsilonResult::Sign::kPositive);
  EXPECT_EQ(e.dominant->leader, make_ladder(2, 1, 19));
  ASSERT_TRUE(e.certificate);
  EXPECT_TRUE(check_certificate(*e.certificate).holds);
}

TEST(Independence, Chains) {
  for (const auto& ns : std::vector<std::vector<std::int64_t>>{{1}, {1, 2}, {1, 2, 3, 4}, {2, 5}}) {
    const Certificate c = independence_certify(ns);
    EXPECT_EQ(c.rule, rule::kChain);
    EXPECT_EQ(c.children.size(), 2 * ns.size() - 1);
    const auto r = check_certificate(c);
    EXPECT_TRUE(r.holds) << r.report;
  }
  EXPECT_THROW(independence_certify({}), std::invalid_argument);
  EXPECT_THROW(independence_certify({2, 1}), std::invalid_argument);
  EXPECT_THROW(independence_certify({0, 1}), std::invalid_argument);
}

TEST(HeadDecomposition, Examples) {
  const HeadCheck a = check_head_decomposition(HeadFamily::kPlus3, 7);
  EXPECT_TRUE(a.holds) << a.report;
  EXPECT_EQ(a.cls.expr.coefficient({1, 6}), 1);
  EXPECT_EQ(a.cls.expr.coefficient({1, 2, 1, 3}), 1);

  const HeadCheck b = check_head_decomposition(HeadFamily::kPlus2, 5);
  EXPECT_TRUE(b.holds) << b.report;
  EXPECT_GT(b.cls.expr.terms().size(), 1u);

  const HeadCheck c = check_head_decomposition(HeadFamily::kPlus1, 3);
  EXPECT_TRUE(c.holds) << c.report;
  EXPECT_EQ(c.cls.expr, single({1, 2}, 1));
}

TEST(HeadDecomposition, Ranges) {
  for (std::int64_t m : {7, 8, 10, 11, 13, 14, 16, 17}) EXPECT_TRUE(check_head_decomposition(HeadFamily::kPlus3, m).holds) << m;
  for (std::int64_t m = 5; m <= 15; m += 2) EXPECT_TRUE(check_head_decomposition(HeadFamily::kPlus2, m).holds) << m;
  for (std::int64_t m = 3; m <= 15; ++m) {
    const HeadCheck h = check_head_decomposition(HeadFamily::kPlus1, m);
    EXPECT_TRUE(h.holds) << m;
    EXPECT_TRUE(check_certificate(*h.certificate).holds) << m;
  }
}

TEST(HeadDecomposition, HypothesesEnforced) {
  EXPECT_THROW(check_head_decomposition(HeadFamily::kPlus3, 9), std::invalid_argument);
  EXPECT_THROW(check_head_decomposition(HeadFamily::kPlus3, 5), std::invalid_argument);
  EXPECT_THROW(check_head_decomposition(HeadFamily::kPlus2, 6), std::invalid_argument);
  EXPECT_THROW(check_head_decomposition(HeadFamily::kPlus2, 3), std::invalid_argument);
  EXPECT_THROW(check_head_decomposition(HeadFamily::kPlus1, 2), std::invalid_argument);
}

TEST(ConcatSorted, ThreeTermExample) {
  const std::vector<Bracket> parts{{1, 2, 1, 2, 1, 3}, {1, 9}, {1, 2, 1, 6}};
  const auto r = concat_sorted(parts);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->sum, (Bracket{1, 9, 1, 2, 1, 6, 1, 2, 1, 2, 1, 3}));
  EXPECT_EQ(r->sum.render(), "[1,9,1,2,1,6,(1,2)^2,1,3]");
  const auto chk = check_certificate(r->certificate);
  EXPECT_TRUE(chk.holds) << chk.report;
}

TEST(ConcatSorted, UnorderablePartsAreInapplicable) {
  EXPECT_FALSE(concat_sorted({{1, 2, 1, 3}, {1, 2, 1, 3, 1, 1}}));
  EXPECT_EQ(concat_sorted({{1, 4}})->sum, (Bracket{1, 4}));
}

TEST(ClassExprRender, Signs) {
  ClassExpr e = single({1, 4}, -1);
  e.add({1, 2, 1, 7}, 1);
  e.add({2}, 2);
  EXPECT_EQ(e.render(), "2*[2] - [1,4] + [1,2,1,7]");
  EXPECT_EQ(ClassExpr().render(), "0");
  EXPECT_EQ(single({1, 2}, -3).render(), "-3*[1,2]");
}
