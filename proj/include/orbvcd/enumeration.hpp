#ifndef ORBVCD_ENUMERATION_HPP
#define ORBVCD_ENUMERATION_HPP

#include "orbvcd/rational.hpp"
#include "orbvcd/signature.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbvcd {

struct EnumOptions {
    /// Restrict periods to divisors of the subgroup order. Point stabilizers
    /// of a finite action are cyclic subgroups, so this holds for every
    /// actual subgroup; switching it off widens the search.
    bool periods_divide_order = true;
    /// Largest subgroup order considered. Unset means the Hurwitz bound
    /// 84(g - 1) on |Aut| of a closed genus-g surface.
    std::optional<int> max_order;
    /// Largest r reported for the ((1,r),(0,r+3)) exception family.
    int max_exception_r = 16;

    int resolved_max_order(int g) const { return max_order ? *max_order : 84 * (g - 1); }

    /// Canonical text of the fields that affect enumerate_signatures output.
    std::string signature_key() const;
};

/// Every multiset {p_i >= 2} with sum(1 - 1/p_i) == target, restricted to
/// divisors of `divisor_of` when given. Each multiset sorted, list sorted
/// lexicographically. Throws std::invalid_argument on a negative target.
///
/// Without a divisor bound the solution set is finite but can be very large
/// (and overflow 64-bit intermediates) for targets much above 2.
std::vector<PeriodMultiset> enumerate_period_multisets(const Rational& target, std::optional<int> divisor_of);

/// All quotient signatures of an order-`order` action on a genus-g surface
/// allowed by Riemann-Hurwitz, ordered by genus and then periods.
std::vector<Signature> enumerate_signatures(int g, int order, const EnumOptions& opts = {});

/// Upstairs picture of one base cone point of order base_period under a
/// degree-d cover: the orders q | base_period of its preimages (q = 1 for a
/// smooth preimage). Local degrees base_period / q sum to d.
struct BranchDatum {
    int base_period = 2;
    std::vector<int> upstairs_orders;

    friend bool operator==(const BranchDatum&, const BranchDatum&) = default;
    friend auto operator<=>(const BranchDatum&, const BranchDatum&) = default;
};

/// All multisets of divisors q of base_period with sum(base_period / q) == degree.
std::vector<BranchDatum> branch_data_solutions(int base_period, int degree);

/// Orbifold cover total -> base of the given degree, witnessed by one branch
/// datum per base period (in base period order).
struct CoverPair {
    Signature base;
    int degree = 2;
    Signature total;
    std::vector<BranchDatum> branch_data;

    /// Number of preimages of base cone points, smooth ones included.
    int preimage_count() const;

    friend bool operator==(const CoverPair&, const CoverPair&) = default;
};

std::string format_branch_data(const std::vector<BranchDatum>& data);

/// Lexicographically least branch assignment realizing total over base with
/// the given degree, or nullopt. Throws std::invalid_argument if degree < 2.
std::optional<CoverPair> cover_admissible(const Signature& base, int degree, const Signature& total);

/// One cover per distinct total signature (lexicographically least witness),
/// sorted by total. Throws std::invalid_argument if degree < 2.
std::vector<CoverPair> enumerate_covers(const Signature& base, int degree);

/// Positive divisors of n in increasing order.
std::vector<int> divisors(int n);

} // namespace orbvcd

#endif
