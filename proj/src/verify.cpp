#include "theorems/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_set>

namespace theorems {

using fps::Int;
using fps::RingSpec;
using fps::TruncatedSeries;
using groupkit::AbelianType;
using groupkit::GroupContext;
using groupkit::PackedElement;
using groupkit::SubgroupTable;
using riordan::Pair;

namespace {

const RingSpec kF2 = RingSpec::f2();
constexpr int kMaxLcsLevel = 10;

std::string to_str(std::uint64_t v) { return std::to_string(v); }

std::string census_string(const std::map<std::uint64_t, std::uint64_t>& census) {
  std::string s = "{";
  bool first = true;
  for (const auto& [order, count] : census) {
    if (!first) s += ",";
    first = false;
    s += to_str(order) + ":" + to_str(count);
  }
  return s + "}";
}

SubgroupTable odd_generated_appell(int table_index) {
  const GroupContext ctx(table_index, kF2);
  std::vector<PackedElement> gens;
  for (int m = 1; m <= table_index; m += 2)
    gens.push_back(groupkit::pack(ctx, riordan::appell_gen(m, 1, kF2, table_index)));
  return closure(ctx, gens);
}

/// Smallest 2-power q with (1 + t^m)^q = 1 mod t^(N+1), by squaring.
std::uint64_t generator_order_oracle(int table_index, int m) {
  const auto one = TruncatedSeries::one(kF2, table_index);
  auto x = one + TruncatedSeries::monomial(kF2, table_index, m, 1);
  std::uint64_t q = 1;
  while (!(x == one)) {
    x = x * x;
    q *= 2;
  }
  return q;
}

Pair all_ones_reflection(int level) {
  std::vector<Int> f(level + 1, 1);
  f[0] = 0;
  return Pair(TruncatedSeries::one(kF2, level), TruncatedSeries(kF2, level, std::move(f)));
}

}  // namespace

std::vector<VerificationReport> verify_appell_classification(int max_index) {
  std::vector<VerificationReport> reports;
  std::vector<AbelianType> engine(max_index + 1);
  for (int n = 1; n <= max_index; ++n) {
    Stopwatch watch;
    engine[n] = abelian_invariants(odd_generated_appell(n));
    reports.push_back(make_report("appell.table", {{"n", to_str(n)}},
                                  appell_invariant_factors(n).to_string(),
                                  engine[n].to_string(), watch));
  }
  for (int n = 1; n + 1 <= max_index; ++n) {
    Stopwatch watch;
    const auto product =
        AbelianType::direct_product(engine[n], AbelianType{{2}});
    const bool split = engine[n + 1] == product;
    reports.push_back(make_report("appell.parity", {{"n", to_str(n)}},
                                  n % 2 == 0 ? "split" : "nonsplit",
                                  split ? "split" : "nonsplit", watch));
  }
  return reports;
}

std::vector<VerificationReport> verify_generator_orders(int max_index) {
  std::vector<VerificationReport> reports;
  {
    Stopwatch watch;
    std::string mismatch;
    for (int n = 1; n <= max_index && mismatch.empty(); ++n)
      for (int m = 1; m <= n && mismatch.empty(); m += 2)
        if (appell_generator_order(n, m) != generator_order_oracle(n, m))
          mismatch = "mismatch at n=" + to_str(n) + " m=" + to_str(m);
    reports.push_back(make_report("appell.generator-order", {{"n-max", to_str(max_index)}},
                                  "all orders match the power oracle",
                                  mismatch.empty() ? "all orders match the power oracle" : mismatch,
                                  watch));
  }
  {
    Stopwatch watch;
    std::string mismatch;
    for (int n = 1; n <= max_index && mismatch.empty(); ++n) {
      std::uint64_t sum = 0;
      for (std::uint64_t f : appell_invariant_factors(n).factors)
        sum += std::bit_width(f) - 1;
      if (sum != static_cast<std::uint64_t>(n)) mismatch = "sum " + to_str(sum) + " at n=" + to_str(n);
    }
    reports.push_back(make_report("appell.factor-sum", {{"n-max", to_str(max_index)}},
                                  "exponents sum to the level",
                                  mismatch.empty() ? "exponents sum to the level" : mismatch,
                                  watch));
  }
  return reports;
}

std::vector<VerificationReport> verify_snake_corollary(int n, int level) {
  if (level == 0) level = 2 * n + 3;
  if (level < 2 * n + 2) throw std::invalid_argument("level too small to separate the tails");
  std::vector<VerificationReport> reports;
  const GroupContext ctx(level, kF2);
  {
    Stopwatch watch;
    const auto upper = appell_tail_subgroup(ctx, 2 * n - 1);
    const auto lower = appell_tail_subgroup(ctx, 2 * n + 1);
    reports.push_back(make_report(
        "appell.snake", {{"n", to_str(n)}, {"level", to_str(level)}}, "{2,2}",
        quotient_abelian_invariants(upper, lower).to_string(), watch));
  }
  {
    Stopwatch watch;
    const auto full = appell_tail_subgroup(ctx, 0);
    const auto depth1 = appell_tail_subgroup(ctx, 1);
    reports.push_back(make_report("appell.snake-base", {{"level", to_str(level)}}, "{2}",
                                  quotient_abelian_invariants(full, depth1).to_string(),
                                  watch));
  }
  return reports;
}

LcsAnalysis analyze_lcs(int level, std::size_t max_depth) {
  if (level < 1 || level > kMaxLcsLevel)
    throw std::invalid_argument("level cap exceeded (n <= 10)");
  LcsAnalysis a;
  a.level = level;
  const GroupContext ctx(level, kF2);
  a.series = lower_central_series(full_riordan_group(ctx), max_depth);
  for (std::size_t i = 0; i + 1 < a.series.size(); ++i)
    a.quotients.push_back(quotient_abelian_invariants(a.series[i], a.series[i + 1]));
  return a;
}

LcsVerification verify_lcs_quotients(const LcsAnalysis& prev, const LcsAnalysis& cur) {
  LcsVerification out;
  std::size_t stable = 0;
  while (stable < cur.quotients.size() && stable < prev.quotients.size() &&
         cur.quotients[stable] == prev.quotients[stable])
    ++stable;
  out.stable_prefix = stable;

  Stopwatch watch;
  for (std::size_t i = 1; i <= cur.quotients.size(); ++i) {
    const std::string computed = cur.quotients[i - 1].to_string();
    if (i <= stable) {
      out.reports.push_back(make_report(
          "lcs.quotient", {{"level", to_str(cur.level)}, {"i", to_str(i)}},
          lcs_quotient_prediction(i).to_string(), computed, watch));
    } else {
      // outside the window the profinite prediction is not claimed
      out.reports.push_back(make_report(
          "lcs.quotient-observed", {{"level", to_str(cur.level)}, {"i", to_str(i)}}, computed,
          computed, watch));
    }
  }
  out.reports.push_back(make_report(
      "lcs.window",
      {{"level", to_str(cur.level)}, {"baseline", to_str(prev.level)}},
      "i=1.." + to_str(stable), "i=1.." + to_str(stable), watch));

  std::string width = "width <= 6";
  for (std::size_t i = 1; i <= cur.quotients.size(); ++i)
    if (cur.quotients[i - 1].rank() > 6)
      width = "width " + to_str(cur.quotients[i - 1].rank()) + " at i=" + to_str(i);
  out.reports.push_back(make_report("lcs.width", {{"level", to_str(cur.level)}},
                                    "width <= 6", width, watch));
  return out;
}

std::vector<VerificationReport> verify_appell_gamma_intersection(const LcsAnalysis& cur,
                                                                 std::size_t stable_prefix) {
  std::vector<VerificationReport> reports;
  const GroupContext ctx(cur.level, kF2);
  for (std::size_t i = 1; i + 1 <= cur.series.size(); ++i) {
    Stopwatch watch;
    std::vector<PackedElement> inside;
    for (PackedElement e : cur.series[i].elements)
      if (is_appell_elem(ctx, e)) inside.push_back(e);
    const int depth = std::min<int>(static_cast<int>(2 * i - 1), cur.level);
    const auto tail = appell_tail_subgroup(ctx, depth);
    const bool equal = inside == tail.elements;
    const std::string computed =
        equal ? "tail of depth " + to_str(2 * i - 1)
              : "mismatch (" + to_str(inside.size()) + " vs " + to_str(tail.order()) + ")";
    if (i <= stable_prefix) {
      reports.push_back(make_report(
          "lcs.appell-intersection", {{"level", to_str(cur.level)}, {"i", to_str(i)}},
          "tail of depth " + to_str(2 * i - 1), computed, watch));
    } else {
      reports.push_back(make_report(
          "lcs.appell-intersection-observed",
          {{"level", to_str(cur.level)}, {"i", to_str(i)}}, computed, computed, watch));
    }
  }
  return reports;
}

std::vector<VerificationReport> verify_oracle_equivalence(int max_f2_level,
                                                          int max_subst_level) {
  std::vector<VerificationReport> reports;
  const auto compare_chain = [&reports](const GroupContext& ctx, const SubgroupTable& group,
                                        const std::string& label) {
    Stopwatch watch;
    std::string result = "chains agree";
    SubgroupTable current = group;
    for (int depth = 2; current.order() > 1; ++depth) {
      const auto fast = commutator_subgroup(current, group, groupkit::CommutatorMode::Generators);
      const auto brute = commutator_subgroup(current, group, groupkit::CommutatorMode::BruteForce);
      if (!fast.same_elements(brute)) {
        result = "divergence at depth " + to_str(depth);
        break;
      }
      current = fast;
    }
    reports.push_back(make_report("lcs.oracle", {{"group", label}}, "chains agree", result,
                                  watch));
  };

  for (int n = 2; n <= max_f2_level; ++n) {
    const GroupContext ctx(n, kF2);
    compare_chain(ctx, full_riordan_group(ctx), "TR" + to_str(n) + "(F2)");
  }
  for (int n = 2; n <= max_subst_level; ++n) {
    const GroupContext ctx(n, kF2);
    compare_chain(ctx, substitution_subgroup(ctx), "TJ" + to_str(n) + "(F2)");
  }
  for (int n = 2; n <= 4; ++n) {
    const GroupContext ctx(n, RingSpec::prime_field(3));
    compare_chain(ctx, full_riordan_group(ctx), "TSR" + to_str(n) + "(F3)");
  }
  for (int n = 2; n <= 3; ++n) {
    const GroupContext ctx(n, RingSpec::mod_ring(4));
    compare_chain(ctx, full_riordan_group(ctx), "TSR" + to_str(n) + "(Z/4)");
  }
  return reports;
}

std::vector<VerificationReport> verify_lcs_split_structure(int max_level, int max_subst_level) {
  std::vector<VerificationReport> reports;

  // (a) set-wise factorization at full-group levels
  for (int n = std::min(max_level, 8); n <= max_level; ++n) {
    Stopwatch watch;
    const GroupContext ctx(n, kF2);
    const auto gamma = lower_central_series(full_riordan_group(ctx), 32);
    const auto subst_gamma = lower_central_series(substitution_subgroup(ctx), 32);
    std::string result = "factors as tail * substitution chain";
    for (std::size_t i = 1; i + 1 <= gamma.size(); ++i) {
      const int tail_depth = std::min<int>(static_cast<int>(2 * (i + 1)) - 3, n);
      const auto tail = appell_tail_subgroup(ctx, tail_depth);
      const auto& subst_part =
          i < subst_gamma.size() ? subst_gamma[i] : subst_gamma.back();
      std::unordered_set<PackedElement> product;
      product.reserve(2 * gamma[i].order());
      for (PackedElement a : tail.elements)
        for (PackedElement s : subst_part.elements) product.insert(mul(ctx, a, s));
      bool equal = product.size() == gamma[i].order();
      for (PackedElement e : gamma[i].elements)
        if (!equal || !product.count(e)) {
          equal = false;
          break;
        }
      if (!equal) {
        result = "factorization fails at depth " + to_str(i + 1);
        break;
      }
    }
    reports.push_back(make_report("lcs.split-structure", {{"level", to_str(n)}},
                                  "factors as tail * substitution chain", result, watch));
  }

  // (b) consecutive tails differ by {2,2}
  {
    Stopwatch watch;
    const GroupContext ctx(11, kF2);
    std::string result = "{2,2}";
    for (int i = 2; i <= 4; ++i) {
      const auto upper = appell_tail_subgroup(ctx, 2 * i - 3);
      const auto lower = appell_tail_subgroup(ctx, 2 * i - 1);
      const auto type = quotient_abelian_invariants(upper, lower);
      if (!(type == groupkit::AbelianType{{2, 2}})) {
        result = type.to_string() + " at i=" + to_str(i);
        break;
      }
    }
    reports.push_back(make_report("lcs.tail-quotient", {{"i", "2..4"}}, "{2,2}", result, watch));
  }

  // (c) substitution-side quotients at levels beyond the full-group
  // budget, then (d) the full-group quotient assembled as {2,2} times the
  // computed substitution part
  {
    Stopwatch watch;
    std::vector<std::vector<groupkit::AbelianType>> quotients(max_subst_level + 1);
    for (int n = max_subst_level - 1; n <= max_subst_level; ++n) {
      const GroupContext ctx(n, kF2);
      const auto chain = lower_central_series(substitution_subgroup(ctx), 32);
      for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        quotients[n].push_back(quotient_abelian_invariants(chain[i], chain[i + 1]));
    }
    for (std::size_t i = 2; i <= 3; ++i) {
      const auto& top = quotients[max_subst_level];
      const auto& below = quotients[max_subst_level - 1];
      std::string computed = "missing";
      std::optional<groupkit::AbelianType> value;
      if (i - 1 < top.size() && i - 1 < below.size()) {
        if (top[i - 1] == below[i - 1]) {
          value = top[i - 1];
          computed = value->to_string();
        } else {
          computed = "unstable (" + below[i - 1].to_string() + " -> " +
                     top[i - 1].to_string() + ")";
        }
      }
      const std::string subst_predicted = i % 2 == 0 ? "{2,2}" : "{2,2,2,2}";
      reports.push_back(make_report(
          "lcs.substitution-quotient",
          {{"i", to_str(i)}, {"level", to_str(max_subst_level)}}, subst_predicted, computed,
          watch));
      reports.push_back(make_report(
          "lcs.assembled-quotient", {{"i", to_str(i)}},
          lcs_quotient_prediction(i).to_string(),
          value ? groupkit::AbelianType::direct_product(groupkit::AbelianType{{2, 2}}, *value)
                      .to_string()
                : computed,
          watch));
    }
  }
  return reports;
}

VerificationReport verify_abelianization_splitting(RingSpec ring, int level) {
  Stopwatch watch;
  const GroupContext ctx(level, ring);
  const auto group = full_riordan_group(ctx);
  const auto left =
      quotient_abelian_invariants(group, commutator_subgroup(group, group));
  const auto subst = substitution_subgroup(ctx);
  const auto subst_ab =
      quotient_abelian_invariants(subst, commutator_subgroup(subst, subst));
  const auto right =
      AbelianType::direct_product(AbelianType::cyclic(ring.modulus()), subst_ab);
  return make_report("ab.splitting",
                     {{"ring", ring.to_string()}, {"level", to_str(level)}},
                     right.to_string(), left.to_string(), watch);
}

std::vector<VerificationReport> verify_nottingham_abelianization(int level) {
  std::vector<VerificationReport> reports;
  const GroupContext ctx(level, kF2);
  const auto subst = substitution_subgroup(ctx);
  const auto derived = commutator_subgroup(subst, subst);
  Stopwatch watch;
  const auto inv = quotient_abelian_invariants(subst, derived);
  reports.push_back(make_report("ab.nottingham", {{"level", to_str(level)}}, inv.to_string(),
                                inv.to_string(), watch));
  if (level >= 5) {
    Stopwatch relwatch;
    const groupkit::QuotientTable q(subst, derived);
    const auto img = [&](const Pair& p) { return q.order_of(groupkit::pack(ctx, p)); };
    const auto e1 = riordan::subst_gen(1, 1, kF2, level);
    const auto e2 = riordan::subst_gen(2, 1, kF2, level);
    const auto e4 = riordan::subst_gen(4, 1, kF2, level);
    const std::uint64_t o1 = img(e1), o12 = img(e1 * e2), o4 = img(e4);
    const bool ok = (4 % o1 == 0) && (2 % o12 == 0) && (2 % o4 == 0);
    reports.push_back(make_report(
        "ab.nottingham-relations", {{"level", to_str(level)}}, "orders divide 4,2,2",
        ok ? "orders divide 4,2,2"
           : "orders " + to_str(o1) + "," + to_str(o12) + "," + to_str(o4),
        relwatch));
  }
  return reports;
}

std::vector<VerificationReport> verify_stabilized_abelianizations(int max_level) {
  std::vector<VerificationReport> reports;
  Stopwatch watch;
  const AbelianType full_target{{4, 2, 2, 2}};
  const AbelianType subst_target{{4, 2, 2}};
  std::vector<AbelianType> full_ab(max_level + 1), subst_ab(max_level + 1);
  for (int n = 1; n <= max_level; ++n) {
    const GroupContext ctx(n, kF2);
    const auto group = full_riordan_group(ctx);
    full_ab[n] = quotient_abelian_invariants(group, commutator_subgroup(group, group));
    const auto subst = substitution_subgroup(ctx);
    subst_ab[n] = quotient_abelian_invariants(subst, commutator_subgroup(subst, subst));
  }
  int n0 = max_level + 1;
  for (int n = max_level; n >= 1; --n) {
    if (full_ab[n] == full_target && subst_ab[n] == subst_target)
      n0 = n;
    else
      break;
  }
  std::vector<std::pair<std::string, std::string>> params{{"max-level", to_str(max_level)}};
  if (n0 <= max_level) params.emplace_back("n0", to_str(n0));
  for (int n = 1; n <= max_level; ++n)
    params.emplace_back("level " + to_str(n),
                        full_ab[n].to_string() + " / " + subst_ab[n].to_string());
  reports.push_back(make_report(
      "ab.stabilization", params,
      "abelianizations reach {4,2,2,2} and {4,2,2} and stay there",
      n0 <= max_level ? "abelianizations reach {4,2,2,2} and {4,2,2} and stay there"
                      : "no stabilization within range",
      watch));
  return reports;
}

ShapiroVerdict shapiro_membership(const std::vector<Int>& g_coeffs,
                                  const std::vector<Int>& f_coeffs) {
  if (g_coeffs.size() < 2 || f_coeffs.size() < 8)
    throw std::invalid_argument("need alpha1..alpha6 and c1");
  if (g_coeffs[0] != 1 || f_coeffs[0] != 0 || f_coeffs[1] != 1)
    throw std::invalid_argument("predicate expects a unit-diagonal pair (g0 = 1, f1 = 1)");
  const auto parity = [](const Int& v) { return static_cast<int>(((v % 2) + 2) % 2); };
  ShapiroVerdict verdict{true, {}};
  const auto fail = [&verdict](const std::string& reason) {
    verdict.member = false;
    verdict.failures.push_back(reason);
  };
  if (g_coeffs[1] != 0) fail("c1 != 0");
  if (f_coeffs[2] != 0) fail("alpha1 != 0");
  if (f_coeffs[3] != 0) fail("alpha2 != 0");
  if (parity(f_coeffs[4]) != parity(f_coeffs[5])) fail("alpha3/alpha4 parity");
  if (parity(f_coeffs[4]) != parity(f_coeffs[7])) fail("alpha6 parity");
  return verdict;
}

std::vector<VerificationReport> verify_shapiro_vectors() {
  std::vector<VerificationReport> reports;
  const auto run = [&reports](const std::string& name, std::vector<Int> g, std::vector<Int> f,
                              bool expected) {
    Stopwatch watch;
    const auto verdict = shapiro_membership(g, f);
    reports.push_back(make_report("shapiro.vector", {{"input", name}},
                                  expected ? "member" : "non-member",
                                  verdict.member ? "member" : "non-member", watch));
  };
  run("identity", {1, 0}, {0, 1, 0, 0, 0, 0, 0, 0}, true);
  run("(1+t, t)", {1, 1}, {0, 1, 0, 0, 0, 0, 0, 0}, false);
  run("(1+t^2, t(1+t^3+t^4+t^6))", {1, 0, 1}, {0, 1, 0, 0, 1, 1, 0, 1}, true);
  return reports;
}

VerificationReport verify_shapiro_closure() {
  Stopwatch watch;
  const RingSpec z = RingSpec::integers();
  const std::size_t order = 7;
  std::mt19937_64 rng(0x5eed);
  const auto random_unit_pair = [&] {
    std::vector<Int> g(order + 1), f(order + 1);
    g[0] = 1;
    f[1] = 1;
    for (std::size_t i = 1; i <= order; ++i) g[i] = static_cast<long>(rng() % 7) - 3;
    for (std::size_t i = 2; i <= order; ++i) f[i] = static_cast<long>(rng() % 7) - 3;
    return Pair(TruncatedSeries(z, order, std::move(g)), TruncatedSeries(z, order, std::move(f)));
  };
  const auto verdict_of = [](const Pair& p) {
    return shapiro_membership(p.g().coeffs(), p.f().coeffs());
  };
  std::string result = "closed under the group law";
  for (int rep = 0; rep < 200 && result == "closed under the group law"; ++rep) {
    const Pair x = random_unit_pair();
    const Pair y = random_unit_pair();
    const Pair member = commutator(x, y);
    if (!verdict_of(member).member) {
      result = "a commutator failed the predicate";
      break;
    }
    const Pair other = random_unit_pair();
    const bool base = verdict_of(other).member;
    if (verdict_of(other * member).member != base ||
        verdict_of(member * other).member != base) {
      result = "membership changed under multiplication by a member";
    }
  }
  return make_report("shapiro.closure", {{"samples", "200"}}, "closed under the group law",
                     result, watch);
}

DihedralEmbedding dihedral_embedding(int n) {
  if (n < 1 || (1 << n) > 64)
    throw std::invalid_argument("embedding parameter out of range (2^n <= 64)");
  const int level = 1 << n;
  const Pair r = riordan::appell_gen(1, 1, kF2, level);
  Pair s = all_ones_reflection(level);
  std::vector<VerificationReport> reports;
  {
    Stopwatch watch;
    reports.push_back(make_report("dihedral.rotation-order",
                                  {{"n", to_str(n)}, {"level", to_str(level)}},
                                  to_str(std::uint64_t{1} << (n + 1)),
                                  to_str(pair_order_pow2(r)), watch));
  }
  {
    Stopwatch watch;
    const bool involution = s * s == Pair::identity(kF2, level);
    const bool reflect = r * s * r == s;
    reports.push_back(make_report("dihedral.relations",
                                  {{"n", to_str(n)}, {"level", to_str(level)}},
                                  "s^2 = 1 and rsr = s",
                                  involution && reflect
                                      ? "s^2 = 1 and rsr = s"
                                      : std::string("violated: ") +
                                            (involution ? "" : "s^2 ") + (reflect ? "" : "rsr"),
                                  watch));
  }
  if (level <= 10) {
    Stopwatch watch;
    const GroupContext ctx(level, kF2);
    const auto dihedral = closure(ctx, {groupkit::pack(ctx, r), groupkit::pack(ctx, s)});
    reports.push_back(make_report("dihedral.census",
                                  {{"n", to_str(n)}, {"level", to_str(level)}},
                                  to_str(std::uint64_t{1} << (n + 2)), to_str(dihedral.order()),
                                  watch));
  }
  if (n == 2) {
    Stopwatch watch;
    const std::vector<std::vector<Int>> r_expect{{1, 0, 0, 0, 0},
                                                 {1, 1, 0, 0, 0},
                                                 {0, 1, 1, 0, 0},
                                                 {0, 0, 1, 1, 0},
                                                 {0, 0, 0, 1, 1}};
    const std::vector<std::vector<Int>> s_expect{{1, 0, 0, 0, 0},
                                                 {0, 1, 0, 0, 0},
                                                 {0, 1, 1, 0, 0},
                                                 {0, 1, 0, 1, 0},
                                                 {0, 1, 1, 1, 1}};
    const bool match = to_matrix(r).rows == r_expect && to_matrix(s).rows == s_expect;
    reports.push_back(make_report("dihedral.matrices", {{"n", "2"}},
                                  "generators match the displayed 5x5 arrays",
                                  match ? "generators match the displayed 5x5 arrays"
                                        : "matrix mismatch",
                                  watch));
  }
  return DihedralEmbedding{r, std::move(s), std::move(reports)};
}

VerificationReport infinite_dihedral_relations(int level) {
  if (level < 2) throw std::invalid_argument("level must be >= 2");
  Stopwatch watch;
  std::string result = "relations hold at every truncation";
  for (int l = 2; l <= level; ++l) {
    const Pair r = riordan::appell_gen(1, 1, kF2, l);
    const Pair s = all_ones_reflection(l);
    if (!(s * s == Pair::identity(kF2, l)) || !(r * s * r == s)) {
      result = "violated at level " + to_str(l);
      break;
    }
  }
  return make_report("dihedral.infinite", {{"level", to_str(level)}},
                     "relations hold at every truncation", result, watch);
}

std::vector<VerificationReport> verify_structure_censuses() {
  std::vector<VerificationReport> reports;
  {
    Stopwatch watch;
    const GroupContext ctx(2, kF2);
    reports.push_back(make_report("identities.tr2-census", {},
                                  "{1:1,2:5,4:2}",
                                  census_string(order_census(full_riordan_group(ctx))), watch));
  }
  {
    Stopwatch watch;
    const GroupContext ctx(3, kF2);
    const auto group = full_riordan_group(ctx);
    const auto census = order_census(group);
    reports.push_back(
        make_report("identities.tr3-census", {}, "{1:1,2:19,4:12}", census_string(census), watch));
    reports.push_back(make_report("identities.tr3-max-order", {}, "4",
                                  to_str(census.rbegin()->first), watch));
    reports.push_back(
        make_report("identities.tr3-order", {}, "32", to_str(group.order()), watch));
  }
  return reports;
}

std::vector<VerificationReport> verify_group_orders(int max_level) {
  std::vector<VerificationReport> reports;
  for (int n = 1; n <= max_level; ++n) {
    Stopwatch watch;
    const GroupContext ctx(n, kF2);
    const std::string predicted = to_str(std::uint64_t{1} << (2 * n - 1)) + "/" +
                                  to_str(std::uint64_t{1} << n) + "/" +
                                  to_str(std::uint64_t{1} << (n - 1));
    const std::string computed = to_str(full_riordan_group(ctx).order()) + "/" +
                                 to_str(appell_subgroup(ctx).order()) + "/" +
                                 to_str(substitution_subgroup(ctx).order());
    reports.push_back(
        make_report("identities.group-orders", {{"n", to_str(n)}}, predicted, computed, watch));
  }
  return reports;
}

std::vector<VerificationReport> verify_identity_sweeps(int max_order) {
  std::vector<VerificationReport> reports;
  {
    Stopwatch watch;
    std::string result = "commutator equals the appell generator";
    bool ok = true;
    for (const auto& ring : {kF2, RingSpec::prime_field(3), RingSpec::mod_ring(4)}) {
      for (int k = 2; k <= max_order && ok; ++k) {
        for (std::uint32_t alpha = 0; alpha < ring.modulus() && ok; ++alpha) {
          const auto f = TruncatedSeries::identity_t(ring, max_order) +
                         TruncatedSeries::monomial(ring, max_order, k, alpha) +
                         TruncatedSeries::monomial(ring, max_order, k + 1, alpha);
          const auto y = inverse(Pair(TruncatedSeries::one(ring, max_order), f));
          if (!(commutator(riordan::appell_gen(1, 1, ring, max_order), y) ==
                riordan::appell_gen(k, alpha, ring, max_order))) {
            result = "mismatch at ring " + ring.to_string() + " k=" + to_str(k);
            ok = false;
          }
        }
      }
    }
    reports.push_back(make_report("identities.commutator-form",
                                  {{"k-max", to_str(max_order)}},
                                  "commutator equals the appell generator", result, watch));
  }
  {
    Stopwatch watch;
    std::string result = "depth and parity as predicted";
    for (int np = 1; np <= max_order; ++np) {
      for (int i = 1; np + i <= max_order; ++i) {
        const auto c = commutator(riordan::appell_gen(np, 1, kF2, max_order),
                                  inverse(riordan::subst_gen(i, 1, kF2, max_order)));
        bool ok = c.is_appell();
        for (int d = 1; ok && d < np + i; ++d) ok = c.g().coeff(d) == 0;
        ok = ok && c.g().coeff(np + i) == (np % 2);
        if (!ok) {
          result = "violated at n'=" + to_str(np) + " i=" + to_str(i);
          break;
        }
      }
    }
    reports.push_back(make_report("identities.depth-parity",
                                  {{"sum-max", to_str(max_order)}},
                                  "depth and parity as predicted", result, watch));
  }
  return reports;
}

std::vector<VerificationReport> run_suites(const std::vector<std::string>& suites, int n_max) {
  std::vector<std::string> expanded;
  for (const auto& s : suites) {
    if (s == "all") {
      expanded.insert(expanded.end(),
                      {"appell", "lcs", "abelianization", "dihedral", "shapiro", "identities"});
    } else {
      expanded.push_back(s);
    }
  }
  std::sort(expanded.begin(), expanded.end());
  expanded.erase(std::unique(expanded.begin(), expanded.end()), expanded.end());

  std::vector<VerificationReport> reports;
  const auto append = [&reports](std::vector<VerificationReport> more) {
    for (auto& r : more) reports.push_back(std::move(r));
  };

  for (const auto& suite : expanded) {
    if (suite == "appell") {
      append(verify_appell_classification(std::max(2, n_max)));
      append(verify_generator_orders(64));
      for (int n = 1; n <= 3; ++n) append(verify_snake_corollary(n));
    } else if (suite == "lcs") {
      const int level = std::min(n_max, kMaxLcsLevel);
      if (level < 2) throw std::invalid_argument("lcs suite needs n-max >= 2");
      const auto prev = analyze_lcs(level - 1);
      const auto cur = analyze_lcs(level);
      auto verification = verify_lcs_quotients(prev, cur);
      append(verify_appell_gamma_intersection(cur, verification.stable_prefix));
      append(std::move(verification.reports));
      append(verify_stabilized_abelianizations(level));
      append(verify_lcs_split_structure(level, 16));
      append(verify_oracle_equivalence(std::min(level, 8), 16));
    } else if (suite == "abelianization") {
      append({verify_abelianization_splitting(kF2, std::min(n_max, 6))});
      append({verify_abelianization_splitting(RingSpec::prime_field(3), std::min(n_max, 4))});
      append({verify_abelianization_splitting(RingSpec::mod_ring(4), std::min(n_max, 3))});
      append(verify_nottingham_abelianization(std::min(n_max, kMaxLcsLevel)));
    } else if (suite == "dihedral") {
      for (int n = 1; n <= 3; ++n) append(dihedral_embedding(n).reports);
      append({infinite_dihedral_relations(std::max(2, std::min(n_max, kMaxLcsLevel)))});
    } else if (suite == "shapiro") {
      append(verify_shapiro_vectors());
      append({verify_shapiro_closure()});
    } else if (suite == "identities") {
      append(verify_identity_sweeps(12));
      append(verify_structure_censuses());
      append(verify_group_orders(std::min(n_max, 8)));
    } else {
      throw std::invalid_argument("unknown suite: " + suite);
    }
  }

  std::stable_sort(reports.begin(), reports.end(),
                   [](const VerificationReport& a, const VerificationReport& b) {
                     if (a.claim != b.claim) return a.claim < b.claim;
                     return a.parameters < b.parameters;
                   });
  return reports;
}

}  // namespace theorems
