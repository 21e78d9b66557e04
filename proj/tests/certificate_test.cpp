#include "knotconc/certificate_check.hpp"
#include "knotconc/epsilon.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace knotconc;

namespace {

Certificate leader_certificate(std::int64_t n) { return dominant_form(class_of(family_W(n))).certificate; }

/// Applies every single-leaf mutation (or a sample of `limit` of them) and
/// returns the number the checker failed to reject.
std::size_t surviving_mutations(const Certificate& cert, std::size_t limit, std::size_t* tried) {
  const Json doc = cert.to_json();
  std::vector<oracle::Leaf> leaves;
  oracle::collect_leaves(doc, Json::json_pointer(), leaves);
  std::mt19937 rng(2024);
  std::shuffle(leaves.begin(), leaves.end(), rng);
  if (leaves.size() > limit) leaves.resize(limit);
  std::size_t survived = 0;
  for (const auto& leaf : leaves) {
    const Json bad = oracle::mutate(doc, leaf, rng);
    if (check_certificate(Certificate::from_json(bad)).holds) {
      ++survived;
      ADD_FAILURE() << "mutation at " << leaf.where.to_string() << " was accepted";
    }
  }
  *tried = leaves.size();
  return survived;
}

}  // namespace

TEST(Certificate, JsonRoundTrip) {
  const Certificate c = leader_certificate(1);
  const Json j = c.to_json();
  const Certificate back = Certificate::from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.to_json(), j);
  EXPECT_EQ(back.node_count(), c.node_count());
  EXPECT_TRUE(check_certificate(back).holds);
}

TEST(Certificate, BigIntegersSerializeAsStrings) {
  const BigInt big = boost::multiprecision::pow(BigInt(10), 30);
  EXPECT_TRUE(bigint_to_json(big).is_string());
  EXPECT_EQ(bigint_from_json(bigint_to_json(big)), big);
  EXPECT_TRUE(bigint_to_json(BigInt(-7)).is_number_integer());
  EXPECT_THROW(bigint_from_json(Json("x")), std::invalid_argument);
}

TEST(Certificate, HugeCoefficientsReplay) {
  KnotFormula f = family_W(1);
  f *= boost::multiprecision::pow(BigInt(10), 25);
  const EpsilonResult e = epsilon_sign(f);
  ASSERT_EQ(e.sign, EpsilonResult::Sign::kPositive);
  EXPECT_TRUE(check_certificate(Certificate::from_json(Json::parse(e.certificate->to_json().dump()))).holds);
}

TEST(Certificate, MalformedInputIsRejected) {
  EXPECT_THROW(Certificate::from_json(Json::parse("[]")), std::invalid_argument);
  EXPECT_THROW(Certificate::from_json(Json::parse(R"({"rule": 3})")), std::invalid_argument);
  Certificate c;
  c.rule = "NO-SUCH-RULE";
  EXPECT_FALSE(check_certificate(c).holds);
  c.rule = rule::kAtom;
  EXPECT_FALSE(check_certificate(c).holds);  // missing conclusion
}

TEST(Checker, RejectsWrongStaircase) {
  Certificate c = class_of(parse_formula("T(3,4)")).certificate;
  ASSERT_TRUE(check_certificate(c).holds);
  c.children[0].inputs["q"] = 5;  // claims the [1,2] decomposition belongs to T(3,5)
  const auto r = check_certificate(c);
  EXPECT_FALSE(r.holds);
}

TEST(Checker, RejectsFalseOrdering) {
  Certificate c = *compare(Bracket{1, 3}, Bracket{1, 4}).certificate;
  std::swap(c.conclusion["lesser"], c.conclusion["greater"]);
  EXPECT_FALSE(check_certificate(c).holds);
}

TEST(Checker, RejectsChainForOtherFamilyMember) {
  Certificate c = independence_certify({1, 2});
  ASSERT_TRUE(check_certificate(c).holds);
  c.inputs["ns"] = {1, 3};
  c.conclusion["independent"] = {1, 3};
  EXPECT_FALSE(check_certificate(c).holds);
}

TEST(Checker, GivenClassIsAcceptedOnlyInCanonicalForm) {
  Certificate c;
  c.rule = rule::kGiven;
  c.conclusion = {{"class", Json::parse("[[[1,2],5]]")}};
  EXPECT_TRUE(check_certificate(c).holds);
  c.conclusion = {{"class", Json::parse("[[[1,2],0]]")}};
  EXPECT_FALSE(check_certificate(c).holds);
  c.conclusion = {{"class", Json::parse("[[[1,4],1],[[1,2],1]]")}};
  EXPECT_FALSE(check_certificate(c).holds);
}

TEST(MutationProperty, LeaderCertificateRejectsEveryTamperedValue) {
  std::size_t tried = 0;
  EXPECT_EQ(surviving_mutations(leader_certificate(1), 400, &tried), 0u);
  EXPECT_GE(tried, 20u);
}

TEST(MutationProperty, OtherCertificateKindsRejectTampering) {
  std::size_t tried = 0;
  EXPECT_EQ(surviving_mutations(*epsilon_sign(family_W(0)).certificate, 150, &tried), 0u);
  EXPECT_GE(tried, 20u);
  EXPECT_EQ(surviving_mutations(independence_certify({1, 2}), 150, &tried), 0u);
  EXPECT_EQ(surviving_mutations(*check_head_decomposition(HeadFamily::kPlus3, 8).certificate, 150, &tried), 0u);
  EXPECT_EQ(surviving_mutations(concat_sorted({{1, 2, 1, 2, 1, 3}, {1, 9}, {1, 2, 1, 6}})->certificate, 150, &tried), 0u);
}
