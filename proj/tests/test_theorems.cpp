#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "theorems/verify.hpp"

using namespace theorems;
using fps::Int;
using fps::RingSpec;
using groupkit::AbelianType;

namespace {
const RingSpec F2 = RingSpec::f2();

void check_all_pass(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    CAPTURE(r.claim);
    CAPTURE(r.computed);
    CHECK_MESSAGE(r.pass, r.claim, ": predicted ", r.predicted, " computed ", r.computed);
  }
}
}  // namespace

TEST_CASE("closed-form invariant factors reproduce the table") {
  const std::vector<std::vector<std::uint64_t>> table{
      {2},          {4},           {4, 2},        {8, 2},          {8, 2, 2},
      {8, 4, 2},    {8, 4, 2, 2},  {16, 4, 2, 2}, {16, 4, 2, 2, 2}, {16, 4, 4, 2, 2}};
  for (std::size_t n = 1; n <= table.size(); ++n)
    CHECK(appell_invariant_factors(n) == AbelianType{table[n - 1]});
  CHECK_THROWS(appell_invariant_factors(0));
}

TEST_CASE("generator orders") {
  CHECK(appell_generator_order(4, 1) == 8);
  CHECK(appell_generator_order(7, 3) == 4);
  for (int k = 1; k <= 5; ++k)
    CHECK(appell_generator_order(std::uint64_t{1} << k, 1) == (std::uint64_t{2} << k));
  CHECK_THROWS_WITH(appell_generator_order(7, 4), "generators are odd-indexed");
}

TEST_CASE("lcs quotient prediction") {
  CHECK(lcs_quotient_prediction(1) == AbelianType{{4, 2, 2, 2}});
  CHECK(lcs_quotient_prediction(2) == AbelianType{{2, 2, 2, 2}});
  CHECK(lcs_quotient_prediction(3) == AbelianType{{2, 2, 2, 2, 2, 2}});
  CHECK(lcs_quotient_prediction(4) == AbelianType{{2, 2, 2, 2}});
}

TEST_CASE("appell classification and parity") {
  const auto reports = verify_appell_classification(12);
  check_all_pass(reports);
  int split = 0, nonsplit = 0;
  for (const auto& r : reports) {
    if (r.claim != "appell.parity") continue;
    (r.computed == "split" ? split : nonsplit)++;
  }
  CHECK(split == 5);     // n = 2, 4, 6, 8, 10
  CHECK(nonsplit == 6);  // n = 1, 3, 5, 7, 9, 11
}

TEST_CASE("generator order oracle sweep") { check_all_pass(verify_generator_orders(64)); }

TEST_CASE("snake corollary") {
  check_all_pass(verify_snake_corollary(1, 5));
  check_all_pass(verify_snake_corollary(2, 7));
  check_all_pass(verify_snake_corollary(1));
  CHECK_THROWS(verify_snake_corollary(2, 5));
}

TEST_CASE("lcs analysis of small levels") {
  const auto a2 = analyze_lcs(2);
  CHECK(a2.series.size() == 3);
  CHECK(a2.quotients[0] == AbelianType{{2, 2}});
  CHECK(a2.quotients[1] == AbelianType{{2}});
  CHECK_THROWS_WITH(analyze_lcs(11), "level cap exceeded (n <= 10)");

  const auto a5 = analyze_lcs(5);
  const auto a6 = analyze_lcs(6);
  const auto v = verify_lcs_quotients(a5, a6);
  for (const auto& r : v.reports) {
    if (r.claim == "lcs.width") CHECK(r.pass);
  }
  check_all_pass(verify_appell_gamma_intersection(a6, v.stable_prefix));
}

TEST_CASE("oracle equivalence at small levels") {
  check_all_pass(verify_oracle_equivalence(5));
}

TEST_CASE("abelianization splitting at small levels") {
  CHECK(verify_abelianization_splitting(F2, 4).pass);
  CHECK(verify_abelianization_splitting(RingSpec::prime_field(3), 3).pass);
  CHECK(verify_abelianization_splitting(RingSpec::mod_ring(4), 2).pass);
  // level 1: the substitution part is trivial, quotient is the ring itself
  CHECK(verify_abelianization_splitting(F2, 1).pass);
  CHECK(verify_abelianization_splitting(RingSpec::mod_ring(4), 1).pass);
}

TEST_CASE("nottingham abelianization values") {
  const auto at9 = verify_nottingham_abelianization(9);
  check_all_pass(at9);
  bool found = false;
  for (const auto& r : at9)
    if (r.claim == "ab.nottingham") {
      CHECK(r.computed == "{4,2,2}");
      found = true;
    }
  CHECK(found);
  const auto at2 = verify_nottingham_abelianization(2);
  for (const auto& r : at2)
    if (r.claim == "ab.nottingham") CHECK(r.computed == "{2}");
}

TEST_CASE("shapiro membership") {
  CHECK(shapiro_membership({1, 0}, {0, 1, 0, 0, 0, 0, 0, 0}).member);
  const auto a1 = shapiro_membership({1, 1}, {0, 1, 0, 0, 0, 0, 0, 0});
  CHECK(!a1.member);
  CHECK(a1.failures == std::vector<std::string>{"c1 != 0"});
  CHECK(shapiro_membership({1, 0, 1}, {0, 1, 0, 0, 1, 1, 0, 1}).member);

  const auto parity = shapiro_membership({1, 0}, {0, 1, 0, 0, 1, 1, 0, 0});
  CHECK(!parity.member);
  CHECK(parity.failures == std::vector<std::string>{"alpha6 parity"});

  CHECK_THROWS_WITH(shapiro_membership({1}, {0, 1, 0, 0, 0, 0, 0, 0}),
                    "need alpha1..alpha6 and c1");
  CHECK_THROWS_WITH(shapiro_membership({1, 0}, {0, 1, 0}), "need alpha1..alpha6 and c1");
  CHECK_THROWS(shapiro_membership({2, 0}, {0, 1, 0, 0, 0, 0, 0, 0}));

  check_all_pass(verify_shapiro_vectors());
  CHECK(verify_shapiro_closure().pass);
}

TEST_CASE("dihedral embeddings") {
  for (int n = 1; n <= 3; ++n) {
    const auto embedding = dihedral_embedding(n);
    check_all_pass(embedding.reports);
    CHECK(embedding.rotation == riordan::appell_gen(1, 1, F2, 1 << n));
  }
  const auto d8 = dihedral_embedding(2);
  bool matrices = false;
  for (const auto& r : d8.reports)
    if (r.claim == "dihedral.matrices") matrices = r.pass;
  CHECK(matrices);
  // relations-only checks run beyond the enumerable range
  check_all_pass(dihedral_embedding(5).reports);
  CHECK_THROWS(dihedral_embedding(7));
  CHECK(infinite_dihedral_relations(10).pass);
  CHECK_THROWS(infinite_dihedral_relations(1));
}

TEST_CASE("structure censuses and group orders") {
  check_all_pass(verify_structure_censuses());
  check_all_pass(verify_group_orders(6));
  check_all_pass(verify_identity_sweeps(12));
}

TEST_CASE("suite driver") {
  const auto reports = run_suites({"shapiro", "dihedral"}, 6);
  check_all_pass(reports);
  CHECK(std::is_sorted(reports.begin(), reports.end(),
                       [](const VerificationReport& a, const VerificationReport& b) {
                         return std::tie(a.claim, a.parameters) < std::tie(b.claim, b.parameters);
                       }));
  CHECK_THROWS_WITH(run_suites({"bogus"}, 6), "unknown suite: bogus");
}
