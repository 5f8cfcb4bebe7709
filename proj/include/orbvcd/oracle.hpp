#ifndef ORBVCD_ORACLE_HPP
#define ORBVCD_ORACLE_HPP

// Naive reference implementations. They share no search code with the
// pruned engine and exist to cross-check it (tests and `--oracle`).

#include "orbvcd/enumeration.hpp"
#include "orbvcd/formulas.hpp"

#include <optional>
#include <vector>

namespace orbvcd::oracle {

struct OracleBudget {
    int max_period = 2;
    int max_terms = 1;
    int max_order = 1;

    /// Throws std::invalid_argument if any bound is below its minimum.
    void validate() const;
};

/// Every nondecreasing multiset with periods in [2, max_period] and at most
/// max_terms entries (optionally all dividing divisor_of) whose
/// sum(1 - 1/p) equals target.
std::vector<PeriodMultiset> brute_multisets(const Rational& target, const OracleBudget& budget,
                                            std::optional<int> divisor_of = std::nullopt);

/// Fiber scan: every (genus in [0, g]; multiset within budget) that passes
/// rh_admissible. Order 1 yields (g;) only.
std::vector<Signature> brute_signatures(int g, int order, bool periods_divide_order, const OracleBudget& budget);

/// Every per-period branch choice, multiplied out. Returns the totals reached,
/// each with the lexicographically least assignment.
std::vector<CoverPair> brute_covers(const Signature& base, int degree);

bool brute_cover_exists(const Signature& base, int degree, const Signature& total);

/// Longest chain of admissible covers from the trivial subgroup up to node,
/// by plain recursion over every smaller order and every brute-force fiber.
/// Nodes with no chain get lambda_upper(order), matching tower_lambda.
int brute_tower_lambda(int g, const AmbientNode& node, const OracleBudget& budget, bool periods_divide_order = true);

} // namespace orbvcd::oracle

#endif
