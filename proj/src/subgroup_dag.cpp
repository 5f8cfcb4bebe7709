#include "orbvcd/subgroup_dag.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace orbvcd {

namespace {

/// Runs task(i) for i in [0, count) on up to `workers` threads.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& task)
{
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i)
            task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    task(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
}

} // namespace

std::optional<std::size_t> SubgroupDag::index_of(const AmbientNode& node) const
{
    if (node.ambient_genus != genus_) return std::nullopt;
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), node);
    if (it == nodes_.end() || *it != node) return std::nullopt;
    return static_cast<std::size_t>(it - nodes_.begin());
}

SubgroupDag build_subgroup_dag(int g, const EnumOptions& opts, unsigned workers)
{
    if (g < 2)
        throw std::invalid_argument("build_subgroup_dag: ambient genus must be >= 2");
    const int max_order = opts.resolved_max_order(g);
    if (max_order < 2)
        throw std::invalid_argument("build_subgroup_dag: max_order must be >= 2, got " + std::to_string(max_order));

    SubgroupDag dag;
    dag.genus_ = g;
    dag.options_ = opts;

    // Signature fibers per order.
    std::vector<std::vector<Signature>> fibers(static_cast<std::size_t>(max_order) + 1);
    parallel_for(static_cast<std::size_t>(max_order), workers, [&](std::size_t i) {
        const int order = static_cast<int>(i) + 1;
        fibers[static_cast<std::size_t>(order)] = enumerate_signatures(g, order, opts);
    });

    std::vector<std::size_t> first_of_order(static_cast<std::size_t>(max_order) + 2, 0);
    for (int order = 1; order <= max_order; ++order) {
        first_of_order[static_cast<std::size_t>(order)] = dag.nodes_.size();
        for (auto& sig : fibers[static_cast<std::size_t>(order)])
            dag.nodes_.push_back(AmbientNode{g, order, std::move(sig)});
    }
    first_of_order[static_cast<std::size_t>(max_order) + 1] = dag.nodes_.size();

    // In-edges per higher node, computed independently and merged in node order.
    const std::size_t n = dag.nodes_.size();
    std::vector<std::vector<CoverEdge>> incoming(n);
    parallel_for(n, workers, [&](std::size_t h) {
        const AmbientNode& higher = dag.nodes_[h];
        for (int lower_order : divisors(higher.order)) {
            if (lower_order == higher.order) continue;
            const int degree = higher.order / lower_order;
            for (std::size_t l = first_of_order[static_cast<std::size_t>(lower_order)];
                 l < first_of_order[static_cast<std::size_t>(lower_order) + 1]; ++l) {
                if (auto cover = cover_admissible(higher.signature, degree, dag.nodes_[l].signature))
                    incoming[h].push_back(CoverEdge{l, h, std::move(*cover)});
            }
        }
    });

    dag.in_edges_.assign(n, {});
    for (std::size_t h = 0; h < n; ++h) {
        for (auto& edge : incoming[h]) {
            dag.in_edges_[h].push_back(dag.edges_.size());
            dag.edges_.push_back(std::move(edge));
        }
    }

    // Edges strictly increase the order, so index order is topological.
    dag.longest_.assign(n, std::nullopt);
    dag.predecessor_.assign(n, std::nullopt);
    dag.longest_[SubgroupDag::root()] = 0;
    for (std::size_t h = 1; h < n; ++h) {
        for (std::size_t e : dag.in_edges_[h]) {
            const std::size_t l = dag.edges_[e].lower;
            if (!dag.longest_[l]) continue;
            const int candidate = *dag.longest_[l] + 1;
            if (!dag.longest_[h] || candidate > *dag.longest_[h]) {
                dag.longest_[h] = candidate;
                dag.predecessor_[h] = l;
            }
        }
    }
    return dag;
}

int tower_lambda(const SubgroupDag& dag, const AmbientNode& node)
{
    const auto index = dag.index_of(node);
    if (!index)
        throw std::invalid_argument("tower_lambda: node " + node.to_string() + " is not in the DAG");
    if (auto length = dag.longest_path(*index)) return *length;
    return lambda_upper(node.order);
}

} // namespace orbvcd
