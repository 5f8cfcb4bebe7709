#include "orbvcd/oracle.hpp"
#include "orbvcd/subgroup_dag.hpp"

#include <doctest.h>

using namespace orbvcd;

namespace {

Signature sig(int g, PeriodMultiset p)
{
    return Signature(g, std::move(p));
}

EnumOptions bounded(int max_order)
{
    EnumOptions opts;
    opts.max_order = max_order;
    return opts;
}

bool same_dag(const SubgroupDag& a, const SubgroupDag& b)
{
    if (a.nodes().size() != b.nodes().size() || a.edges().size() != b.edges().size()) return false;
    for (std::size_t i = 0; i < a.nodes().size(); ++i)
        if (a.node(i) != b.node(i) || a.longest_path(i) != b.longest_path(i)) return false;
    for (std::size_t i = 0; i < a.edges().size(); ++i) {
        const auto &x = a.edges()[i], &y = b.edges()[i];
        if (x.lower != y.lower || x.higher != y.higher || !(x.cover == y.cover)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("genus-2 DAG contains the hyperelliptic node and its root edge")
{
    const SubgroupDag dag = build_subgroup_dag(2);
    CHECK(dag.max_order() == 84);
    CHECK(dag.node(SubgroupDag::root()) == AmbientNode{2, 1, sig(2, {})});
    const AmbientNode hyper{2, 2, sig(0, {2, 2, 2, 2, 2, 2})};
    const auto idx = dag.index_of(hyper);
    REQUIRE(idx.has_value());
    bool root_edge = false;
    for (std::size_t e : dag.in_edges(*idx)) {
        const CoverEdge& edge = dag.edges()[e];
        if (edge.lower != SubgroupDag::root()) continue;
        root_edge = true;
        CHECK(edge.cover.degree == 2);
        CHECK(edge.cover.total == sig(2, {}));
        CHECK(edge.cover.branch_data == std::vector<BranchDatum>(6, BranchDatum{2, {1}}));
    }
    CHECK(root_edge);
    CHECK(tower_lambda(dag, hyper) == 1);
    CHECK(tower_lambda(dag, dag.node(SubgroupDag::root())) == 0);
}

TEST_CASE("DAG preconditions")
{
    CHECK_THROWS_AS(build_subgroup_dag(2, bounded(1)), std::invalid_argument);
    CHECK_THROWS_AS(build_subgroup_dag(1), std::invalid_argument);
    const SubgroupDag dag = build_subgroup_dag(2, bounded(8));
    CHECK_THROWS_AS(tower_lambda(dag, AmbientNode{2, 84, sig(0, {2, 3, 7})}), std::invalid_argument);
}

TEST_CASE("genus-3 node count matches the brute-force fiber scan at max_order 12")
{
    const SubgroupDag dag = build_subgroup_dag(3, bounded(12));
    std::size_t expected = 0;
    for (int order = 1; order <= 12; ++order)
        expected += oracle::brute_signatures(3, order, true, {std::max(order, 2), 8, order}).size();
    CHECK(dag.nodes().size() == expected);
}

TEST_CASE("DAG structure")
{
    const SubgroupDag dag = build_subgroup_dag(3, bounded(48));
    for (std::size_t i = 1; i < dag.nodes().size(); ++i) {
        const AmbientNode& n = dag.node(i);
        CHECK(dag.node(i - 1) < n);
        CHECK(rh_admissible(3, n.order, n.signature));
    }
    for (const CoverEdge& e : dag.edges()) {
        const AmbientNode &lo = dag.node(e.lower), &hi = dag.node(e.higher);
        CHECK(e.lower < e.higher);
        CHECK(hi.order % lo.order == 0);
        CHECK(e.cover.degree == hi.order / lo.order);
        CHECK(e.cover.base == hi.signature);
        CHECK(e.cover.total == lo.signature);
    }
}

TEST_CASE("tower_lambda examples and bounds")
{
    const SubgroupDag dag = build_subgroup_dag(3);
    CHECK(tower_lambda(dag, AmbientNode{3, 4, sig(1, {2, 2})}) == 2);
    CHECK(tower_lambda(dag, AmbientNode{3, 2, sig(2, {})}) == 1);
    for (const AmbientNode& n : dag.nodes())
        CHECK(tower_lambda(dag, n) <= lambda_upper(n.order));
}

TEST_CASE("oracle: tower_lambda agrees with the unmemoized recursion on g <= 3, max_order 24")
{
    for (int g = 2; g <= 3; ++g) {
        const SubgroupDag dag = build_subgroup_dag(g, bounded(24));
        const oracle::OracleBudget budget{24, 2 * g + 2, 24};
        for (const AmbientNode& n : dag.nodes())
            CHECK_MESSAGE(tower_lambda(dag, n) == oracle::brute_tower_lambda(g, n, budget), n.to_string());
    }
    CHECK(oracle::brute_tower_lambda(2, AmbientNode{2, 2, sig(0, {2, 2, 2, 2, 2, 2})}, {24, 6, 24}) == 1);
    CHECK(oracle::brute_tower_lambda(3, AmbientNode{3, 4, sig(1, {2, 2})}, {24, 8, 24}) == 2);
}

TEST_CASE("unconstrained periods can leave nodes off every chain")
{
    EnumOptions opts = bounded(12);
    opts.periods_divide_order = false;
    const SubgroupDag dag = build_subgroup_dag(2, opts);
    std::size_t unreached = 0;
    for (std::size_t i = 0; i < dag.nodes().size(); ++i) {
        if (dag.reachable(i)) continue;
        ++unreached;
        CHECK(tower_lambda(dag, dag.node(i)) == lambda_upper(dag.node(i).order));
    }
    CHECK(unreached > 0);
}

TEST_CASE("builds are deterministic and independent of the worker count")
{
    const SubgroupDag a = build_subgroup_dag(4, {}, 1);
    const SubgroupDag b = build_subgroup_dag(4, {}, 1);
    const SubgroupDag c = build_subgroup_dag(4, {}, 4);
    CHECK(same_dag(a, b));
    CHECK(same_dag(a, c));
}
