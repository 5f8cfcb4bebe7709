#include "orbvcd/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace orbvcd::oracle {

void OracleBudget::validate() const
{
    if (max_period < 2 || max_terms < 1 || max_order < 1)
        throw std::invalid_argument("OracleBudget: need max_period >= 2, max_terms >= 1, max_order >= 1");
}

namespace {

/// Calls visit(multiset, sum(1 - 1/p)) for every nondecreasing multiset over
/// `values` with at most max_terms entries, including the empty one.
template <class Visit>
void for_each_multiset(const std::vector<int>& values, int max_terms, Visit visit)
{
    PeriodMultiset current;
    auto rec = [&](auto&& self, std::size_t start, const Rational& sum) -> void {
        visit(current, sum);
        if (static_cast<int>(current.size()) == max_terms) return;
        for (std::size_t i = start; i < values.size(); ++i) {
            current.push_back(values[i]);
            self(self, i, sum + Rational(values[i] - 1, values[i]));
            current.pop_back();
        }
    };
    rec(rec, 0, Rational(0));
}

std::vector<int> period_values(int max_period, std::optional<int> divisor_of)
{
    std::vector<int> values;
    for (int p = 2; p <= max_period; ++p)
        if (!divisor_of || *divisor_of % p == 0) values.push_back(p);
    return values;
}

/// Multisets of divisors of p whose local degrees p/q add up to degree.
std::vector<std::vector<int>> brute_branch_options(int p, int degree)
{
    std::vector<int> qs;
    for (int q = 1; q <= p; ++q)
        if (p % q == 0) qs.push_back(q);
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, std::size_t start, int local_sum) -> void {
        if (local_sum == degree) out.push_back(current);
        if (local_sum >= degree) return;
        for (std::size_t i = start; i < qs.size(); ++i) {
            current.push_back(qs[i]);
            self(self, i, local_sum + p / qs[i]);
            current.pop_back();
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// Calls visit(assignment, total) for every product of per-period options
/// that gives a non-negative integer total genus, in lexicographic order.
/// Stops early when visit returns true.
template <class Visit>
void for_each_assignment(const Signature& base, int degree, Visit visit)
{
    const auto& periods = base.periods();
    std::vector<std::vector<std::vector<int>>> options;
    for (int p : periods)
        options.push_back(brute_branch_options(p, degree));

    std::vector<std::size_t> pick(periods.size(), 0);
    for (const auto& o : options)
        if (o.empty()) return;
    while (true) {
        std::vector<BranchDatum> data;
        PeriodMultiset upstairs;
        long preimages = 0;
        for (std::size_t i = 0; i < periods.size(); ++i) {
            const auto& qs = options[i][pick[i]];
            data.push_back(BranchDatum{periods[i], qs});
            preimages += static_cast<long>(qs.size());
            for (int q : qs)
                if (q > 1) upstairs.push_back(q);
        }
        // Underlying surfaces: 2 - 2 g_total - preimages == degree (2 - 2 g_base - k_base).
        const long twice_genus = 2 - preimages - static_cast<long>(degree) * (2 - 2L * base.genus() - base.k());
        if (twice_genus >= 0 && twice_genus % 2 == 0) {
            if (visit(data, Signature(static_cast<int>(twice_genus / 2), std::move(upstairs)))) return;
        }
        // Odometer, last period fastest.
        std::size_t i = periods.size();
        while (i > 0) {
            --i;
            if (++pick[i] < options[i].size()) break;
            pick[i] = 0;
            if (i == 0) return;
        }
        if (periods.empty()) return;
    }
}

} // namespace

std::vector<PeriodMultiset> brute_multisets(const Rational& target, const OracleBudget& budget, std::optional<int> divisor_of)
{
    budget.validate();
    std::vector<PeriodMultiset> out;
    for_each_multiset(period_values(budget.max_period, divisor_of), budget.max_terms,
                      [&](const PeriodMultiset& m, const Rational& sum) {
                          if (sum == target) out.push_back(m);
                      });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Signature> brute_signatures(int g, int order, bool periods_divide_order, const OracleBudget& budget)
{
    budget.validate();
    if (order == 1) return {Signature(g, {})};
    std::vector<Signature> out;
    const auto values = period_values(budget.max_period, periods_divide_order ? std::optional<int>(order) : std::nullopt);
    for_each_multiset(values, budget.max_terms, [&](const PeriodMultiset& m, const Rational&) {
        for (int gl = 0; gl <= g; ++gl) {
            Signature sig(gl, m);
            if (rh_admissible(g, order, sig)) out.push_back(std::move(sig));
        }
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CoverPair> brute_covers(const Signature& base, int degree)
{
    std::map<Signature, CoverPair> found;
    for_each_assignment(base, degree, [&](const std::vector<BranchDatum>& data, Signature total) {
        if (!found.count(total)) found.emplace(total, CoverPair{base, degree, total, data});
        return false;
    });
    std::vector<CoverPair> out;
    for (auto& [total, cover] : found)
        out.push_back(std::move(cover));
    return out;
}

bool brute_cover_exists(const Signature& base, int degree, const Signature& total)
{
    bool hit = false;
    for_each_assignment(base, degree, [&](const std::vector<BranchDatum>&, const Signature& candidate) {
        hit = candidate == total;
        return hit;
    });
    return hit;
}

namespace {

std::optional<int> longest_chain(int g, const AmbientNode& node, const OracleBudget& budget, bool periods_divide_order)
{
    if (node.order == 1) return 0;
    std::optional<int> best;
    for (int lower_order = 1; lower_order < node.order; ++lower_order) {
        if (node.order % lower_order != 0) continue;
        const int degree = node.order / lower_order;
        for (const Signature& sig : brute_signatures(g, lower_order, periods_divide_order, budget)) {
            if (!brute_cover_exists(node.signature, degree, sig)) continue;
            const auto below = longest_chain(g, AmbientNode{g, lower_order, sig}, budget, periods_divide_order);
            if (below && (!best || *below + 1 > *best)) best = *below + 1;
        }
    }
    return best;
}

} // namespace

int brute_tower_lambda(int g, const AmbientNode& node, const OracleBudget& budget, bool periods_divide_order)
{
    budget.validate();
    if (node.order > budget.max_order)
        throw std::invalid_argument("brute_tower_lambda: node order exceeds budget");
    if (auto length = longest_chain(g, node, budget, periods_divide_order)) return *length;
    return lambda_upper(node.order);
}

} // namespace orbvcd::oracle
