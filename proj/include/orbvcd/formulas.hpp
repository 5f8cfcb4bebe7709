#ifndef ORBVCD_FORMULAS_HPP
#define ORBVCD_FORMULAS_HPP

#include "orbvcd/rational.hpp"
#include "orbvcd/signature.hpp"

#include <compare>
#include <ostream>

namespace orbvcd {

/// Virtual cohomological dimension of a mapping class group (or of a group
/// commensurable with one).
struct VcdValue {
    int value = 0;

    friend bool operator==(const VcdValue&, const VcdValue&) = default;
    friend auto operator<=>(const VcdValue&, const VcdValue&) = default;
};

std::ostream& operator<<(std::ostream& os, VcdValue v);

/// A candidate finite subgroup of the genus-g mapping class group, known
/// only through its order and the signature of the quotient orbifold.
struct AmbientNode {
    int ambient_genus = 2;
    int order = 1;
    Signature signature;

    /// Throws std::invalid_argument unless the triple satisfies Riemann-Hurwitz
    /// (and order 1 carries the trivial signature (g;)).
    static AmbientNode make(int ambient_genus, int order, Signature signature);

    std::string to_string() const;

    friend bool operator==(const AmbientNode&, const AmbientNode&) = default;
    friend auto operator<=>(const AmbientNode&, const AmbientNode&) = default;
};

/// Sum over periods of (1 - 1/p).
Rational l_sum(const Signature& sig);

/// 2 - 2g - l_sum(sig).
Rational orbifold_euler(const Signature& sig);

/// vcd of the mapping class group of genus g with n marked points, total on
/// g, n >= 0: Harer's piecewise formula when 2g + n > 2, and the trivial /
/// infinite-cyclic / SL2(Z) values for (0,0), (0,1), (0,2), (1,0).
/// Throws std::invalid_argument for negative arguments.
VcdValue harer_vcd(int g, int n);

/// 4 * genus + k - 4. Negative for small signatures.
int nu(const Signature& sig);

/// vcd of the Weyl group of a finite subgroup with quotient signature sig,
/// which is commensurable with the mapping class group of (genus, k).
///
/// For spherical signatures (positive orbifold Euler characteristic), which
/// never occur as quotients of a genus >= 2 surface, this still returns
/// harer_vcd(genus, k) by convention.
VcdValue weyl_vcd(const Signature& sig);

/// Number of prime factors of n counted with multiplicity; n >= 1.
int big_omega(long n);

/// Upper bound on the subgroup-chain length of any group of this order:
/// min(order - 1, big_omega(order)). Each strict step 1 = L_0 < ... < L_i
/// multiplies the order by an index >= 2 and so consumes at least one
/// prime factor.
int lambda_upper(long order);

/// Riemann-Hurwitz: (2g - 2)/order == 2 * genus - 2 + l_sum(sig) exactly.
bool rh_admissible(int g, long order, const Signature& sig);

} // namespace orbvcd

#endif
