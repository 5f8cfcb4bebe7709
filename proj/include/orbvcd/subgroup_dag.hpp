#ifndef ORBVCD_SUBGROUP_DAG_HPP
#define ORBVCD_SUBGROUP_DAG_HPP

#include "orbvcd/enumeration.hpp"
#include "orbvcd/formulas.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace orbvcd {

/// lower -> higher: the quotient by the smaller subgroup covers the quotient
/// by the larger one with degree higher.order / lower.order.
struct CoverEdge {
    std::size_t lower = 0;
    std::size_t higher = 0;
    CoverPair cover;
};

/// Per-genus poset of admissible (order, signature) candidates for finite
/// subgroups of the genus-g mapping class group.
///
/// Nodes are sorted by (order, signature); node 0 is the trivial subgroup.
/// Every order-dividing pair of nodes related by an admissible orbifold cover
/// is joined by an edge. Admissibility over-approximates realizability: no
/// check is made that a group action with the given data exists.
class SubgroupDag {
public:
    int ambient_genus() const { return genus_; }
    const EnumOptions& options() const { return options_; }
    int max_order() const { return options_.resolved_max_order(genus_); }

    std::span<const AmbientNode> nodes() const { return nodes_; }
    std::span<const CoverEdge> edges() const { return edges_; }
    const AmbientNode& node(std::size_t i) const { return nodes_.at(i); }
    static constexpr std::size_t root() { return 0; }

    std::optional<std::size_t> index_of(const AmbientNode& node) const;

    /// Indices into edges() of the edges ending at node i, in edge order.
    std::span<const std::size_t> in_edges(std::size_t i) const { return in_edges_.at(i); }

    bool reachable(std::size_t i) const { return longest_.at(i).has_value(); }
    /// Longest root-to-node path length; nullopt for nodes with no path from
    /// the root (possible only when periods need not divide the order).
    std::optional<int> longest_path(std::size_t i) const { return longest_.at(i); }
    /// Lower end of the first in-edge attaining longest_path(i), if any.
    std::optional<std::size_t> longest_predecessor(std::size_t i) const { return predecessor_.at(i); }

    friend SubgroupDag build_subgroup_dag(int g, const EnumOptions& opts, unsigned workers);

private:
    int genus_ = 2;
    EnumOptions options_;
    std::vector<AmbientNode> nodes_;
    std::vector<CoverEdge> edges_;
    std::vector<std::vector<std::size_t>> in_edges_;
    std::vector<std::optional<int>> longest_;
    std::vector<std::optional<std::size_t>> predecessor_;
};

/// Builds the DAG for ambient genus g over orders 1..opts.resolved_max_order(g).
/// Work is split across `workers` threads; the result does not depend on it.
/// Throws std::invalid_argument if g < 2 or the order bound is < 2.
SubgroupDag build_subgroup_dag(int g, const EnumOptions& opts = {}, unsigned workers = 1);

/// Length of the longest chain of cover edges from the trivial subgroup to
/// `node`. This bounds the subgroup-chain length of every subgroup realizing
/// the node, and never exceeds lambda_upper(node.order). A node that no chain
/// reaches gets lambda_upper(node.order).
/// Throws std::invalid_argument if the node is not in the DAG.
int tower_lambda(const SubgroupDag& dag, const AmbientNode& node);

} // namespace orbvcd

#endif
