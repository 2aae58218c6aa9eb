#ifndef GROUPKIT_SUBGROUP_HPP
#define GROUPKIT_SUBGROUP_HPP

#include <map>
#include <unordered_set>
#include <vector>

#include "groupkit/packed.hpp"

namespace groupkit {

/// A fully enumerated subgroup: a generator list plus the sorted element
/// set (identity included). Immutable once built.
struct SubgroupTable {
  GroupContext ctx;
  std::vector<PackedElement> generators;
  std::vector<PackedElement> elements;  // ascending, unique

  std::size_t order() const { return elements.size(); }
  bool contains(PackedElement e) const;
  bool same_elements(const SubgroupTable& other) const { return elements == other.elements; }
};

/// Incremental breadth-first closure; generators may be added after
/// elements have been enumerated and only the new work is done.
class ClosureBuilder {
 public:
  explicit ClosureBuilder(const GroupContext& ctx, std::size_t max_size = kMaxSubgroupSize);

  /// Returns false if the generator was already inside the closure.
  bool add_generator(PackedElement g);
  bool contains(PackedElement e) const { return seen_.count(e) != 0; }
  std::size_t size() const { return bfs_order_.size(); }
  const std::vector<PackedElement>& generators() const { return gens_; }

  SubgroupTable freeze() const;

 private:
  void expand_tail(std::size_t from);
  PackedElement apply(std::size_t gen_idx, PackedElement x) const;

  GroupContext ctx_;
  std::size_t max_size_;
  std::vector<PackedElement> gens_;
  std::vector<f2::LeftTable> tables_;  // F2 only, parallel to gens_
  std::unordered_set<PackedElement> seen_;
  std::vector<PackedElement> bfs_order_;
};

SubgroupTable closure(const GroupContext& ctx, const std::vector<PackedElement>& gens,
                      std::size_t max_size = kMaxSubgroupSize);

/// Smallest subgroup containing the seed and closed under conjugation by
/// the ambient generators.
SubgroupTable normal_closure(const GroupContext& ctx, const std::vector<PackedElement>& seed,
                             const std::vector<PackedElement>& ambient_gens,
                             std::size_t max_size = kMaxSubgroupSize);

bool is_normal(const SubgroupTable& h, const std::vector<PackedElement>& ambient_gens);

/// Greedy minimal generating sequence, deterministic (elements scanned in
/// encoding order).
std::vector<PackedElement> reduce_generators(const SubgroupTable& table);

enum class CommutatorMode {
  Generators,  // normal closure of generator-pair commutators
  BruteForce,  // closure of all pairwise commutators (the oracle)
};

/// [H, G]; requires H <= G and H normal in G.
SubgroupTable commutator_subgroup(const SubgroupTable& h, const SubgroupTable& g,
                                  CommutatorMode mode = CommutatorMode::Generators);

/// [g1 = G, g2, ...] with g_{i+1} = [g_i, G], descending until trivial or
/// max_depth entries.
std::vector<SubgroupTable> lower_central_series(const SubgroupTable& g, std::size_t max_depth);

/// Exact element count per order.
std::map<std::uint64_t, std::uint64_t> order_census(const SubgroupTable& g);

bool is_abelian(const SubgroupTable& g);

// Standard generating sets. Over F2 the Appell part uses the odd-index
// generators (even indices arise as their squares); over other rings
// every index and every nonzero ring element appears.
std::vector<PackedElement> appell_generators(const GroupContext& ctx);
std::vector<PackedElement> substitution_generators(const GroupContext& ctx);
std::vector<PackedElement> riordan_generators(const GroupContext& ctx);

SubgroupTable appell_subgroup(const GroupContext& ctx);
SubgroupTable substitution_subgroup(const GroupContext& ctx);
SubgroupTable full_riordan_group(const GroupContext& ctx);

/// Appell elements whose g coefficients vanish in degrees 1..k: the level-n
/// image of the depth-k Appell kernel. Enumerated directly.
SubgroupTable appell_tail_subgroup(const GroupContext& ctx, int k);

}  // namespace groupkit

#endif
