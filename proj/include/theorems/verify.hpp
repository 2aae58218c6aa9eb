#ifndef THEOREMS_VERIFY_HPP
#define THEOREMS_VERIFY_HPP

#include <optional>

#include "groupkit/abelian.hpp"
#include "riordan/matrix.hpp"
#include "theorems/closed_form.hpp"
#include "theorems/report.hpp"

namespace theorems {

// ---------------------------------------------------------------------
// Appell classification

/// Closed form vs engine census for levels 1..max_index, plus the
/// split/non-split parity of each level-raising extension (splits iff the
/// lower index is even, detected by invariant-type comparison).
std::vector<VerificationReport> verify_appell_classification(int max_index);

/// Generator orders against the power oracle ((1+t^m)^q mod t^(N+1)) and
/// the factor-sum identity sum r_j = N, both through table index 64.
std::vector<VerificationReport> verify_generator_orders(int max_index);

/// Tail quotient A_(2n-1)/A_(2n+1) has type {2,2} at a level where both
/// tails are visible; level 0 picks 2n+3.
std::vector<VerificationReport> verify_snake_corollary(int n, int level = 0);

// ---------------------------------------------------------------------
// Lower central series

struct LcsAnalysis {
  int level = 0;
  std::vector<groupkit::SubgroupTable> series;     // gamma_1 = G, gamma_2, ...
  std::vector<groupkit::AbelianType> quotients;    // type of gamma_i/gamma_(i+1)
};

LcsAnalysis analyze_lcs(int level, std::size_t max_depth = 32);

struct LcsVerification {
  std::vector<VerificationReport> reports;
  std::size_t stable_prefix = 0;  // quotients 1..K agree between the two levels
};

/// Quotient types at the higher level checked against the prediction on
/// the window where two consecutive levels agree; also checks that every
/// computed quotient needs at most 6 generators.
LcsVerification verify_lcs_quotients(const LcsAnalysis& prev, const LcsAnalysis& cur);

/// Appell elements of gamma_(i+1) are exactly the tail of depth 2i-1,
/// checked inside the stable window.
std::vector<VerificationReport> verify_appell_gamma_intersection(const LcsAnalysis& cur,
                                                                 std::size_t stable_prefix);

/// Generator-based commutator subgroups against brute-force pairwise
/// closures for every group chain used with |G| <= 2^15.
std::vector<VerificationReport> verify_oracle_equivalence(int max_f2_level,
                                                          int max_subst_level = 10);

/// Desk-scale evidence for the quotient formula beyond the faithful range
/// of the full group: (a) gamma_i(TR_n) factors set-wise as the depth-
/// (2i-3) Appell tail times gamma_i(TJ_n); (b) the tail quotients are
/// {2,2}; (c) the substitution-side quotients reach their limit values on
/// the small group TJ_n at levels where TR_n is out of budget.
std::vector<VerificationReport> verify_lcs_split_structure(int max_level,
                                                           int max_subst_level = 16);

// ---------------------------------------------------------------------
// Abelianizations

/// Quotient split: the abelianization of the full unit-diagonal group is
/// the ring's additive group times the substitution abelianization.
VerificationReport verify_abelianization_splitting(fps::RingSpec ring, int level);

/// Substitution-group abelianization invariants plus the relation orders
/// of the images of e1, e1*e2 and e4 (divide 4, 2, 2).
std::vector<VerificationReport> verify_nottingham_abelianization(int level);

/// Discovers the stabilization level n0 <= max_level from which the full
/// and substitution abelianizations stay {4,2,2,2} and {4,2,2}.
std::vector<VerificationReport> verify_stabilized_abelianizations(int max_level);

// ---------------------------------------------------------------------
// Membership predicate over the integers

struct ShapiroVerdict {
  bool member;
  std::vector<std::string> failures;  // empty iff member
};

/// Commutator-subgroup membership for a unit-diagonal integer pair,
/// decided by c1 = 0, alpha1 = alpha2 = 0 and alpha3 = alpha4 = alpha6
/// mod 2. Needs g through degree 1 and f through degree 7.
ShapiroVerdict shapiro_membership(const std::vector<fps::Int>& g_coeffs,
                                  const std::vector<fps::Int>& f_coeffs);

std::vector<VerificationReport> verify_shapiro_vectors();

/// Random integer commutators must satisfy the predicate, and multiplying
/// by a member never changes membership.
VerificationReport verify_shapiro_closure();

// ---------------------------------------------------------------------
// Dihedral embeddings and structure spot checks

struct DihedralEmbedding {
  riordan::Pair rotation;
  riordan::Pair reflection;
  std::vector<VerificationReport> reports;
};

/// r = (1+t, t) and s = (1, t+...+t^(2^n)) at level 2^n generate a
/// dihedral group of order 2^(n+2); the element census runs when the
/// level is enumerable (n <= 3), relations alone up to level 64.
DihedralEmbedding dihedral_embedding(int n);

/// r = (1+t, t), s = (1, t/(1+t)) truncated: s^2 = 1 and rsr = s hold at
/// every level, reproducing the finite embeddings by truncation.
VerificationReport infinite_dihedral_relations(int level);

std::vector<VerificationReport> verify_structure_censuses();

std::vector<VerificationReport> verify_group_orders(int max_level);

std::vector<VerificationReport> verify_identity_sweeps(int max_order);

// ---------------------------------------------------------------------
// Suite driver

/// Known suites: appell, lcs, abelianization, dihedral, shapiro,
/// identities, all. Reports come back sorted by claim identifier.
std::vector<VerificationReport> run_suites(const std::vector<std::string>& suites, int n_max);

}  // namespace theorems

#endif
