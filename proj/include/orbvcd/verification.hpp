#ifndef ORBVCD_VERIFICATION_HPP
#define ORBVCD_VERIFICATION_HPP

#include "orbvcd/certificate.hpp"
#include "orbvcd/subgroup_dag.hpp"

#include <utility>
#include <vector>

namespace orbvcd {

// Every check below runs over admissible signature data, a superset of what
// actual finite subgroups realize, and substitutes tower_lambda (an upper
// bound) for the unknown subgroup-chain length. A pass therefore covers every
// realizable case.

/// A cover edge along which the quotient genus drops but the Weyl-group vcd
/// does not: upper is (g_L, k_L) of the smaller subgroup, lower is (g_T, k_T).
struct ExceptionPair {
    int ambient_genus = 2;
    std::pair<int, int> upper;
    std::pair<int, int> lower;
    CoverPair witness;
};

struct ExceptionScan {
    /// Distinct (total, base, degree) witnesses in scan order; family (ii)
    /// members with r > max_exception_r are left out.
    std::vector<ExceptionPair> exceptions;
    /// One certificate per DAG edge.
    std::vector<Certificate> certificates;
};

/// Genus decrease along every edge of the DAG: a strictly larger subgroup has
/// strictly smaller quotient genus when that genus exceeds 1, and otherwise
/// no larger genus, with fewer cone points on a tie.
std::vector<Certificate> check_gendec(const SubgroupDag& dag);
std::vector<Certificate> check_gendec(int g_max, const EnumOptions& opts = {}, unsigned workers = 1);

/// Weyl-group vcd along each edge: never increases, and when the quotient
/// genus drops it strictly decreases except on the families
/// ((2,0),(0,6)) and ((1,r),(0,r+3)), where it must stay equal.
ExceptionScan find_vcd_exceptions(const SubgroupDag& dag);
ExceptionScan find_vcd_exceptions(int g_max, const EnumOptions& opts = {}, unsigned workers = 1);

/// vcd(W T) + lambda(T) + 1 <= vcd(Gamma_g) for every nontrivial node with
/// positive quotient genus. Requires g >= 3.
std::vector<Certificate> verify_claim_uno(const SubgroupDag& dag);
std::vector<Certificate> verify_claim_uno(int g, const EnumOptions& opts = {}, unsigned workers = 1);

/// vcd(W T) + lambda(T) <= vcd(Gamma_g) for every node. Requires g >= 3.
std::vector<Certificate> verify_prop5(const SubgroupDag& dag);
std::vector<Certificate> verify_prop5(int g, const EnumOptions& opts = {}, unsigned workers = 1);

struct IntRange {
    int lo = 0;
    int hi = 0;
};

/// harer_vcd(g, k) against the nu-based three-case formula on every pair of
/// the grid with 2g + k > 2.
std::vector<Certificate> check_eq5_consistency(IntRange genus, IntRange k);

} // namespace orbvcd

#endif
