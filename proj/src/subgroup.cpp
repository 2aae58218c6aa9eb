#include "groupkit/subgroup.hpp"

#include <algorithm>
#include <stdexcept>

#include "groupkit/parallel.hpp"

namespace groupkit {

bool SubgroupTable::contains(PackedElement e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

ClosureBuilder::ClosureBuilder(const GroupContext& ctx, std::size_t max_size)
    : ctx_(ctx), max_size_(max_size) {
  seen_.insert(0);
  bfs_order_.push_back(0);
}

PackedElement ClosureBuilder::apply(std::size_t gen_idx, PackedElement x) const {
  if (ctx_.f2()) return f2::join(f2::left_mul(tables_[gen_idx], f2::split(x, ctx_.level())), ctx_.level());
  return mul(ctx_, gens_[gen_idx], x);
}

bool ClosureBuilder::add_generator(PackedElement g) {
  if (contains(g)) return false;
  gens_.push_back(g);
  if (ctx_.f2()) tables_.push_back(f2::make_left_table(f2::split(g, ctx_.level()), ctx_.level()));
  const std::size_t existing = bfs_order_.size();
  const std::size_t gi = gens_.size() - 1;
  // expand all old elements by the new generator, then close the tail
  for (std::size_t i = 0; i < existing; ++i) {
    const PackedElement y = apply(gi, bfs_order_[i]);
    if (seen_.insert(y).second) {
      bfs_order_.push_back(y);
      if (bfs_order_.size() > max_size_) throw std::length_error("subgroup size cap exceeded");
    }
  }
  expand_tail(existing);
  return true;
}

void ClosureBuilder::expand_tail(std::size_t from) {
  for (std::size_t i = from; i < bfs_order_.size(); ++i) {
    const PackedElement x = bfs_order_[i];
    for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
      const PackedElement y = apply(gi, x);
      if (seen_.insert(y).second) {
        bfs_order_.push_back(y);
        if (bfs_order_.size() > max_size_) throw std::length_error("subgroup size cap exceeded");
      }
    }
  }
}

SubgroupTable ClosureBuilder::freeze() const {
  std::vector<PackedElement> sorted(bfs_order_.begin(), bfs_order_.end());
  std::sort(sorted.begin(), sorted.end());
  return SubgroupTable{ctx_, gens_, std::move(sorted)};
}

SubgroupTable closure(const GroupContext& ctx, const std::vector<PackedElement>& gens,
                      std::size_t max_size) {
  ClosureBuilder b(ctx, max_size);
  for (PackedElement g : gens) b.add_generator(g);
  return b.freeze();
}

SubgroupTable normal_closure(const GroupContext& ctx, const std::vector<PackedElement>& seed,
                             const std::vector<PackedElement>& ambient_gens,
                             std::size_t max_size) {
  ClosureBuilder b(ctx, max_size);
  std::vector<PackedElement> pending;
  for (PackedElement s : seed) {
    b.add_generator(s);
    pending.push_back(s);
  }
  // Conjugating the generating set by the ambient generators suffices:
  // once every w^a lands inside, K^a = K for each ambient a.
  for (std::size_t i = 0; i < pending.size(); ++i) {
    for (PackedElement a : ambient_gens) {
      const PackedElement c = conjugate(ctx, pending[i], a);
      if (b.add_generator(c)) pending.push_back(c);
    }
  }
  return b.freeze();
}

bool is_normal(const SubgroupTable& h, const std::vector<PackedElement>& ambient_gens) {
  for (PackedElement w : h.generators)
    for (PackedElement a : ambient_gens)
      if (!h.contains(conjugate(h.ctx, w, a))) return false;
  return true;
}

std::vector<PackedElement> reduce_generators(const SubgroupTable& table) {
  ClosureBuilder b(table.ctx);
  std::vector<PackedElement> reduced;
  for (PackedElement e : table.elements) {
    if (b.contains(e)) continue;
    b.add_generator(e);
    reduced.push_back(e);
    if (b.size() == table.order()) break;
  }
  return reduced;
}

namespace {

void require_subgroup_pair(const SubgroupTable& h, const SubgroupTable& g) {
  if (!(h.ctx == g.ctx)) throw std::invalid_argument("ring/order mismatch");
  for (PackedElement e : h.generators)
    if (!g.contains(e)) throw std::invalid_argument("first argument is not inside the second");
  if (!is_normal(h, g.generators))
    throw std::invalid_argument("commutator requires normal first argument");
}

std::vector<PackedElement> distinct_pairwise_commutators(const SubgroupTable& h,
                                                         const SubgroupTable& g) {
  const GroupContext& ctx = h.ctx;
  const int n = ctx.level();
  // commutators take values in a small subgroup, so per-thread dedup keeps
  // the result sets tiny even when |H| x |G| is large
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(worker_count(), h.order()));
  std::vector<std::unordered_set<PackedElement>> found(workers);

  if (ctx.f2()) {
    // [h, g] = (h^-1 g^-1) (h g): both inner products are left
    // multiplications by a fixed factor, served from power tables.
    std::vector<PackedElement> ginv(g.order());
    parallel_chunks(g.order(), [&](std::size_t lo, std::size_t hi, std::size_t) {
      for (std::size_t i = lo; i < hi; ++i) ginv[i] = inverse_elem(ctx, g.elements[i]);
    });
    parallel_chunks(h.order(), [&](std::size_t lo, std::size_t hi, std::size_t w) {
      auto& sink = found[w];
      for (std::size_t i = lo; i < hi; ++i) {
        const PackedElement hh = h.elements[i];
        const auto th = f2::make_left_table(f2::split(hh, n), n);
        const auto thI = f2::make_left_table(f2::split(inverse_elem(ctx, hh), n), n);
        for (std::size_t j = 0; j < g.order(); ++j) {
          const f2::Masks hg = f2::left_mul(th, f2::split(g.elements[j], n));
          const f2::Masks hIgI = f2::left_mul(thI, f2::split(ginv[j], n));
          sink.insert(f2::join(f2::mul(hIgI, hg, n), n));
        }
      }
    });
  } else {
    parallel_chunks(h.order(), [&](std::size_t lo, std::size_t hi, std::size_t w) {
      auto& sink = found[w];
      for (std::size_t i = lo; i < hi; ++i)
        for (std::size_t j = 0; j < g.order(); ++j)
          sink.insert(commutator_elem(ctx, h.elements[i], g.elements[j]));
    });
  }

  std::unordered_set<PackedElement> all;
  for (auto& s : found) all.insert(s.begin(), s.end());
  std::vector<PackedElement> result(all.begin(), all.end());
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace

SubgroupTable commutator_subgroup(const SubgroupTable& h, const SubgroupTable& g,
                                  CommutatorMode mode) {
  require_subgroup_pair(h, g);
  SubgroupTable result{h.ctx, {}, {}};
  if (mode == CommutatorMode::BruteForce) {
    // every pairwise commutator is present, so plain closure generates [H,G]
    result = closure(h.ctx, distinct_pairwise_commutators(h, g));
  } else {
    std::vector<PackedElement> seeds;
    for (PackedElement a : h.generators)
      for (PackedElement b : g.generators) seeds.push_back(commutator_elem(h.ctx, a, b));
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    result = normal_closure(h.ctx, seeds, g.generators);
  }
  result.generators = reduce_generators(result);
  return result;
}

std::vector<SubgroupTable> lower_central_series(const SubgroupTable& g, std::size_t max_depth) {
  std::vector<SubgroupTable> series{g};
  while (series.size() < max_depth && series.back().order() > 1) {
    SubgroupTable next = commutator_subgroup(series.back(), g);
    if (next.order() >= series.back().order())
      throw std::logic_error("lower central series failed to descend");
    series.push_back(std::move(next));
  }
  return series;
}

std::map<std::uint64_t, std::uint64_t> order_census(const SubgroupTable& g) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(worker_count(), g.order()));
  std::vector<std::map<std::uint64_t, std::uint64_t>> partial(workers);
  parallel_chunks(g.order(), [&](std::size_t lo, std::size_t hi, std::size_t w) {
    for (std::size_t i = lo; i < hi; ++i) ++partial[w][element_order(g.ctx, g.elements[i])];
  });
  std::map<std::uint64_t, std::uint64_t> census;
  for (const auto& p : partial)
    for (const auto& [order, count] : p) census[order] += count;
  return census;
}

bool is_abelian(const SubgroupTable& g) {
  for (std::size_t i = 0; i < g.generators.size(); ++i)
    for (std::size_t j = i + 1; j < g.generators.size(); ++j)
      if (commutator_elem(g.ctx, g.generators[i], g.generators[j]) != 0) return false;
  return true;
}

namespace {

std::vector<std::uint32_t> nonzero_ring_values(const GroupContext& ctx) {
  std::vector<std::uint32_t> vals;
  for (std::uint32_t v = 1; v < ctx.modulus(); ++v) vals.push_back(v);
  return vals;
}

PackedElement packed_appell_gen(const GroupContext& ctx, int k, std::uint32_t beta) {
  return PackedElement{beta} << ((k - 1) * ctx.digit_bits());
}

PackedElement packed_subst_gen(const GroupContext& ctx, int i, std::uint32_t alpha) {
  return PackedElement{alpha} << ((ctx.level() + i - 1) * ctx.digit_bits());
}

}  // namespace

std::vector<PackedElement> appell_generators(const GroupContext& ctx) {
  std::vector<PackedElement> gens;
  if (ctx.f2()) {
    for (int k = 1; k <= ctx.level(); k += 2) gens.push_back(packed_appell_gen(ctx, k, 1));
  } else {
    for (int k = 1; k <= ctx.level(); ++k)
      for (std::uint32_t beta : nonzero_ring_values(ctx))
        gens.push_back(packed_appell_gen(ctx, k, beta));
  }
  return gens;
}

std::vector<PackedElement> substitution_generators(const GroupContext& ctx) {
  std::vector<PackedElement> gens;
  for (int i = 1; i <= ctx.level() - 1; ++i)
    for (std::uint32_t alpha : nonzero_ring_values(ctx))
      gens.push_back(packed_subst_gen(ctx, i, alpha));
  return gens;
}

std::vector<PackedElement> riordan_generators(const GroupContext& ctx) {
  std::vector<PackedElement> gens = appell_generators(ctx);
  const auto subst = substitution_generators(ctx);
  gens.insert(gens.end(), subst.begin(), subst.end());
  return gens;
}

SubgroupTable appell_subgroup(const GroupContext& ctx) {
  return closure(ctx, appell_generators(ctx));
}

SubgroupTable substitution_subgroup(const GroupContext& ctx) {
  return closure(ctx, substitution_generators(ctx));
}

SubgroupTable full_riordan_group(const GroupContext& ctx) {
  return closure(ctx, riordan_generators(ctx));
}

SubgroupTable appell_tail_subgroup(const GroupContext& ctx, int k) {
  if (k < 0 || k > ctx.level()) throw std::invalid_argument("tail depth out of range");
  const int free_digits = ctx.level() - k;  // g coefficients in degrees k+1..level
  std::uint64_t count = 1;
  for (int i = 0; i < free_digits; ++i) {
    count *= ctx.modulus();
    if (count > kMaxSubgroupSize) throw std::length_error("subgroup size cap exceeded");
  }
  std::vector<PackedElement> gens;
  for (int j = k + 1; j <= ctx.level(); ++j)
    for (std::uint32_t beta : nonzero_ring_values(ctx))
      gens.push_back(packed_appell_gen(ctx, j, beta));
  std::vector<PackedElement> elems;
  elems.reserve(count);
  const int w = ctx.digit_bits();
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    PackedElement e = 0;
    std::uint64_t rest = idx;
    for (int j = k + 1; j <= ctx.level(); ++j) {
      e |= PackedElement{rest % ctx.modulus()} << ((j - 1) * w);
      rest /= ctx.modulus();
    }
    elems.push_back(e);
  }
  std::sort(elems.begin(), elems.end());
  return SubgroupTable{ctx, std::move(gens), std::move(elems)};
}

}  // namespace groupkit
