#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "groupkit/abelian.hpp"
#include "groupkit/parallel.hpp"
#include "groupkit/subgroup.hpp"

using namespace groupkit;
using fps::Int;
using fps::RingSpec;
using riordan::Pair;

namespace {

const RingSpec F2 = RingSpec::f2();
const RingSpec F3 = RingSpec::prime_field(3);
const RingSpec Z4 = RingSpec::mod_ring(4);

PackedElement gen_a(const GroupContext& ctx, int k, std::uint32_t beta = 1) {
  return pack(ctx, riordan::appell_gen(k, beta, ctx.ring(), ctx.level()));
}

PackedElement gen_e(const GroupContext& ctx, int i, std::uint32_t alpha = 1) {
  return pack(ctx, riordan::subst_gen(i, alpha, ctx.ring(), ctx.level()));
}

std::vector<PackedElement> all_elements(const GroupContext& ctx) {
  std::uint64_t count = 1;
  for (int i = 0; i < ctx.digit_count(); ++i) count *= ctx.modulus();
  std::vector<PackedElement> out;
  out.reserve(count);
  const int w = ctx.digit_bits();
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    PackedElement e = 0;
    std::uint64_t rest = idx;
    for (int d = 0; d < ctx.digit_count(); ++d) {
      e |= (rest % ctx.modulus()) << (d * w);
      rest /= ctx.modulus();
    }
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("context bounds") {
  CHECK_THROWS(GroupContext(0, F2));
  CHECK_THROWS(GroupContext(33, F2));  // 65 bits
  CHECK_THROWS(GroupContext(4, RingSpec::integers()));
  CHECK_THROWS(GroupContext(4, RingSpec::mod_ring(17)));
  CHECK(GroupContext(32, F2).digit_count() == 63);
  CHECK(GroupContext(10, Z4).digit_bits() == 2);
}

TEST_CASE("pack and unpack") {
  const GroupContext c3(3, F2);
  CHECK(pack(c3, Pair::identity(F2, 3)) == 0);

  const GroupContext c2(2, F2);
  CHECK(pack(c2, riordan::appell_gen(1, 1, F2, 2)) == 1);

  // exhaustive round trip on all of level 4 over F2
  const GroupContext c4(4, F2);
  for (PackedElement e : all_elements(c4)) REQUIRE(pack(c4, unpack(c4, e)) == e);

  const GroupContext z3(3, Z4);
  for (PackedElement e : all_elements(z3)) REQUIRE(pack(z3, unpack(z3, e)) == e);

  const GroupContext f3(2, F3);
  CHECK_THROWS_WITH(
      pack(f3, Pair(fps::TruncatedSeries(F3, 2, {Int(2)}),
                    fps::TruncatedSeries(F3, 2, {Int(0), Int(1)}))),
      doctest::Contains("unit diagonal"));
  // wrong level
  CHECK_THROWS(pack(c3, Pair::identity(F2, 2)));
}

TEST_CASE("packed ops agree with pair ops") {
  for (const auto& ring : {F2, F3, Z4}) {
    for (int level : {1, 2, 3}) {
      const GroupContext ctx(level, ring);
      const auto elems = all_elements(ctx);
      for (PackedElement x : elems) {
        REQUIRE(pack(ctx, inverse(unpack(ctx, x))) == inverse_elem(ctx, x));
        for (PackedElement y : elems)
          REQUIRE(pack(ctx, unpack(ctx, x) * unpack(ctx, y)) == mul(ctx, x, y));
      }
    }
  }
  // spot checks at a larger F2 level
  const GroupContext c7(7, F2);
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 300; ++rep) {
    const PackedElement x = rng() & ((1u << 13) - 1);
    const PackedElement y = rng() & ((1u << 13) - 1);
    REQUIRE(pack(c7, unpack(c7, x) * unpack(c7, y)) == mul(c7, x, y));
    REQUIRE(mul(c7, x, inverse_elem(c7, x)) == 0);
    REQUIRE(mul(c7, inverse_elem(c7, x), x) == 0);
  }
}

TEST_CASE("closure sizes and basic subgroups") {
  // <a_1> in the level-2 Appell group is cyclic of order 4
  const GroupContext c2(2, F2);
  const auto cyc = closure(c2, {gen_a(c2, 1)});
  CHECK(cyc.order() == 4);

  // a_1 and e_1 generate the whole level-2 group (dihedral of order 8)
  const auto d4 = closure(c2, {gen_a(c2, 1), gen_e(c2, 1)});
  CHECK(d4.order() == 8);

  for (int n = 1; n <= 6; ++n) {
    const GroupContext ctx(n, F2);
    CHECK(full_riordan_group(ctx).order() == (std::uint64_t{1} << (2 * n - 1)));
    CHECK(appell_subgroup(ctx).order() == (std::uint64_t{1} << n));
    CHECK(substitution_subgroup(ctx).order() == (std::uint64_t{1} << (n - 1)));
  }
  // the same counts over other small rings: m^(2n-1), m^n, m^(n-1)
  const GroupContext f3(3, F3);
  CHECK(full_riordan_group(f3).order() == 243);
  CHECK(appell_subgroup(f3).order() == 27);
  CHECK(substitution_subgroup(f3).order() == 9);
  const GroupContext z4(2, Z4);
  CHECK(full_riordan_group(z4).order() == 64);

  // empty generating set gives the trivial subgroup
  CHECK(closure(c2, {}).order() == 1);
  CHECK(closure(c2, {}).elements == std::vector<PackedElement>{0});
}

TEST_CASE("closure is order independent and idempotent") {
  const GroupContext ctx(5, F2);
  auto gens = riordan_generators(ctx);
  const auto base = closure(ctx, gens);
  std::mt19937_64 rng(43);
  for (int rep = 0; rep < 5; ++rep) {
    std::shuffle(gens.begin(), gens.end(), rng);
    REQUIRE(closure(ctx, gens).elements == base.elements);
  }
  CHECK(closure(ctx, base.generators).elements == base.elements);
  CHECK(closure(ctx, base.elements).elements == base.elements);
}

TEST_CASE("closure size cap") {
  const GroupContext ctx(8, F2);
  CHECK_THROWS_AS(closure(ctx, riordan_generators(ctx), 1000), std::length_error);
}

TEST_CASE("normal closure") {
  const GroupContext c4(4, F2);
  const auto full = full_riordan_group(c4);

  CHECK(normal_closure(c4, {0}, full.generators).order() == 1);

  // the normal closure of a_2 at level 4 is the cyclic group <a_2>;
  // conjugation only reaches a_2's powers (a_4 = a_2^2), never a_3
  const auto nc = normal_closure(c4, {gen_a(c4, 2)}, full.generators);
  const auto a2cyc = closure(c4, {gen_a(c4, 2)});
  CHECK(nc.elements == a2cyc.elements);
  CHECK(nc.order() == 4);
  CHECK(nc.contains(gen_a(c4, 4)));
  CHECK(!nc.contains(gen_a(c4, 3)));
  CHECK(is_normal(nc, full.generators));

  // fixed point: already-normal subgroups are unchanged
  const auto appell = appell_subgroup(c4);
  CHECK(normal_closure(c4, appell.generators, full.generators).elements == appell.elements);
}

TEST_CASE("commutator subgroup modes agree") {
  for (int n = 2; n <= 5; ++n) {
    const GroupContext ctx(n, F2);
    const auto g = full_riordan_group(ctx);
    const auto gen_based = commutator_subgroup(g, g, CommutatorMode::Generators);
    const auto brute = commutator_subgroup(g, g, CommutatorMode::BruteForce);
    REQUIRE(gen_based.elements == brute.elements);
    const auto deeper_gen = commutator_subgroup(gen_based, g, CommutatorMode::Generators);
    const auto deeper_brute = commutator_subgroup(brute, g, CommutatorMode::BruteForce);
    REQUIRE(deeper_gen.elements == deeper_brute.elements);
  }
  const GroupContext f3(3, F3);
  const auto g3 = full_riordan_group(f3);
  CHECK(commutator_subgroup(g3, g3, CommutatorMode::Generators).elements ==
        commutator_subgroup(g3, g3, CommutatorMode::BruteForce).elements);
}

TEST_CASE("commutator subgroup basics") {
  const GroupContext c2(2, F2);
  const auto g = full_riordan_group(c2);
  const auto trivial = closure(c2, {});
  CHECK(commutator_subgroup(trivial, g).order() == 1);
  const auto derived = commutator_subgroup(g, g);
  CHECK(derived.order() == 2);

  // non-normal first argument is rejected: <s> inside the dihedral group
  const auto refl = closure(c2, {gen_e(c2, 1)});
  CHECK_THROWS_WITH(commutator_subgroup(refl, g), "commutator requires normal first argument");
}

TEST_CASE("lower central series of small groups") {
  const GroupContext c1(1, F2);
  const auto s1 = lower_central_series(full_riordan_group(c1), 10);
  CHECK(s1.size() == 2);
  CHECK(s1[0].order() == 2);
  CHECK(s1[1].order() == 1);

  const GroupContext c2(2, F2);
  const auto s2 = lower_central_series(full_riordan_group(c2), 10);
  CHECK(s2.size() == 3);
  CHECK(s2[0].order() == 8);
  CHECK(s2[1].order() == 2);
  CHECK(s2[2].order() == 1);

  for (int n = 3; n <= 6; ++n) {
    const GroupContext ctx(n, F2);
    const auto series = lower_central_series(full_riordan_group(ctx), 32);
    REQUIRE(series.back().order() == 1);  // nilpotent: descends to trivial
    for (std::size_t i = 0; i + 1 < series.size(); ++i) {
      REQUIRE(series[i + 1].order() < series[i].order());
      // [gamma_i, G] inside gamma_{i+1}, element-wise on generators
      for (PackedElement x : series[i].generators)
        for (PackedElement y : series[0].generators)
          REQUIRE(series[i + 1].contains(commutator_elem(ctx, x, y)));
    }
  }
}

TEST_CASE("element orders") {
  const GroupContext c4(4, F2);
  CHECK(element_order(c4, 0) == 1);
  CHECK(element_order(c4, gen_a(c4, 1)) == 8);
  for (int n = 1; n <= 4; ++n) {
    const GroupContext ctx(1 << n, F2);
    CHECK(element_order(ctx, gen_a(ctx, 1)) == (std::uint64_t{1} << (n + 1)));
  }
  const GroupContext z4(2, Z4);
  CHECK(element_order(z4, gen_a(z4, 1)) == 8);  // (1+t)^k cycles mod 4, t^3
}

TEST_CASE("order census") {
  const GroupContext c2(2, F2);
  const auto d4 = order_census(full_riordan_group(c2));
  CHECK(d4 == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 5}, {4, 2}});

  const GroupContext c3(3, F2);
  const auto t3 = order_census(full_riordan_group(c3));
  CHECK(t3 == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 19}, {4, 12}});

  const GroupContext a4(4, F2);
  const auto ta4 = order_census(appell_subgroup(a4));
  CHECK(ta4 == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 3}, {4, 4}, {8, 8}});
}

TEST_CASE("census is deterministic across worker counts") {
  const GroupContext ctx(6, F2);
  const auto g = full_riordan_group(ctx);
  set_worker_count(1);
  const auto serial = order_census(g);
  set_worker_count(4);
  const auto parallel = order_census(g);
  set_worker_count(0);
  CHECK(serial == parallel);
}

TEST_CASE("abelian invariants") {
  const GroupContext c2(2, F2);
  CHECK(abelian_invariants(appell_subgroup(c2)) == AbelianType{{4}});

  const GroupContext c8(8, F2);
  const auto ta8 = appell_subgroup(c8);
  const auto inv8 = abelian_invariants(ta8);
  CHECK(inv8 == AbelianType{{16, 4, 2, 2}});
  CHECK(inv8.total() == ta8.order());
  CHECK(inv8.census() == order_census(ta8));

  CHECK(abelian_invariants(closure(c2, {})) == AbelianType{});
  CHECK_THROWS(abelian_invariants(full_riordan_group(c2)));

  // 3-group and a Z/4 additive check
  const GroupContext f3(4, F3);
  const auto ta3 = abelian_invariants(appell_subgroup(f3));
  CHECK(ta3.total() == 81);
  const GroupContext z4(1, Z4);
  CHECK(abelian_invariants(full_riordan_group(z4)) == AbelianType{{4}});
}

TEST_CASE("abelian type helpers") {
  CHECK(AbelianType::cyclic(12) == AbelianType{{4, 3}});
  CHECK(AbelianType::cyclic(2) == AbelianType{{2}});
  CHECK(AbelianType::direct_product(AbelianType{{4, 2}}, AbelianType{{8}}) ==
        AbelianType{{8, 4, 2}});
  CHECK(AbelianType{{8, 2}}.census() ==
        std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 3}, {4, 4}, {8, 8}});
  CHECK(AbelianType{}.to_string() == "{}");
  CHECK(AbelianType{{16, 4, 2, 2}}.to_string() == "{16,4,2,2}");
}

TEST_CASE("quotient invariants") {
  const GroupContext c2(2, F2);
  const auto g = full_riordan_group(c2);
  CHECK(quotient_abelian_invariants(g, g) == AbelianType{});
  const auto derived = commutator_subgroup(g, g);
  CHECK(quotient_abelian_invariants(g, derived) == AbelianType{{2, 2}});

  // representation independence: same element set, different generators
  SubgroupTable relabeled = derived;
  relabeled.generators = derived.elements;
  CHECK(quotient_abelian_invariants(g, relabeled) == AbelianType{{2, 2}});

  const auto refl = closure(c2, {gen_e(c2, 1)});
  CHECK_THROWS(quotient_abelian_invariants(g, refl));  // not normal

  const GroupContext c4(4, F2);
  const auto g4 = full_riordan_group(c4);
  const auto a2cyc = closure(c4, {gen_a(c4, 2)});
  CHECK_THROWS_WITH(quotient_abelian_invariants(g4, a2cyc), "quotient is not abelian");
}

TEST_CASE("appell tail subgroups") {
  const GroupContext c5(5, F2);
  const auto tail2 = appell_tail_subgroup(c5, 2);
  CHECK(tail2.order() == 8);  // degrees 3,4,5 free
  for (PackedElement e : tail2.elements) {
    CHECK(is_appell_elem(c5, e));
    CHECK(c5.g_digit(e, 1) == 0);
    CHECK(c5.g_digit(e, 2) == 0);
  }
  CHECK(appell_tail_subgroup(c5, 0).elements == appell_subgroup(c5).elements);
  CHECK(appell_tail_subgroup(c5, 5).order() == 1);
  // closed under the group operation by construction; verify anyway
  for (PackedElement x : tail2.elements)
    for (PackedElement y : tail2.elements)
      REQUIRE(tail2.contains(mul(c5, x, y)));
}

TEST_CASE("projection to the substitution part is a split homomorphism") {
  for (int n = 2; n <= 6; ++n) {
    const GroupContext ctx(n, F2);
    const auto elems = all_elements(ctx);
    const PackedElement fpart_mask = ~fps::gf2::low_mask(n - 1);
    const auto rho = [&](PackedElement e) { return e & fpart_mask; };
    for (PackedElement x : elems) {
      for (PackedElement y : elems) {
        REQUIRE(rho(mul(ctx, x, y)) == mul(ctx, rho(x), rho(y)));
      }
      // kernel is exactly the Appell part
      REQUIRE((rho(x) == 0) == is_appell_elem(ctx, x));
      // the section multiplies substitution elements without touching g
      REQUIRE(is_subst_elem(ctx, rho(x)));
    }
  }
}

TEST_CASE("matrix homomorphism, exhaustive at levels 5 and 6") {
  // bit-packed matrices: rows[i] has bit j = entry (i, j)
  for (int n = 5; n <= 6; ++n) {
    const GroupContext ctx(n, F2);
    const auto to_bits = [&](PackedElement e) {
      const auto m = f2::split(e, n);
      std::array<std::uint16_t, 16> rows{};
      fps::gf2::word col = m.g;
      for (int j = 0; j <= n; ++j) {
        for (int i = 0; i <= n; ++i)
          if ((col >> i) & 1) rows[i] |= std::uint16_t(1u << j);
        col = fps::gf2::mul_trunc(col, m.f, n);
      }
      return rows;
    };
    const auto matmul_bits = [&](const std::array<std::uint16_t, 16>& a,
                                 const std::array<std::uint16_t, 16>& b) {
      std::array<std::uint16_t, 16> r{};
      for (int i = 0; i <= n; ++i) {
        std::uint16_t row = a[i];
        while (row) {
          const int k = std::countr_zero(row);
          row &= row - 1;
          r[i] ^= b[k];
        }
      }
      return r;
    };
    const auto elems = all_elements(ctx);
    std::vector<std::array<std::uint16_t, 16>> mats(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) mats[i] = to_bits(elems[i]);
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j)
        REQUIRE(to_bits(mul(ctx, elems[i], elems[j])) == matmul_bits(mats[i], mats[j]));
  }
}
