#include "orbvcd/formulas.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace orbvcd {

std::ostream& operator<<(std::ostream& os, VcdValue v)
{
    return os << v.value;
}

AmbientNode AmbientNode::make(int ambient_genus, int order, Signature signature)
{
    if (ambient_genus < 2 || order < 1)
        throw std::invalid_argument("ambient node requires genus >= 2 and order >= 1");
    if (order == 1 && signature != Signature(ambient_genus, {}))
        throw std::invalid_argument("the trivial subgroup has signature (g;)");
    if (!rh_admissible(ambient_genus, order, signature))
        throw std::invalid_argument("signature " + signature.to_string() + " is not Riemann-Hurwitz admissible for g=" +
                                    std::to_string(ambient_genus) + ", order " + std::to_string(order));
    return AmbientNode{ambient_genus, order, std::move(signature)};
}

std::string AmbientNode::to_string() const
{
    return "g=" + std::to_string(ambient_genus) + " order=" + std::to_string(order) + " sig=" + signature.to_string();
}

Rational l_sum(const Signature& sig)
{
    Rational sum;
    for (int p : sig.periods())
        sum += Rational(p - 1, p);
    return sum;
}

Rational orbifold_euler(const Signature& sig)
{
    return Rational(2 - 2 * static_cast<std::int64_t>(sig.genus())) - l_sum(sig);
}

VcdValue harer_vcd(int g, int n)
{
    if (g < 0 || n < 0)
        throw std::invalid_argument("harer_vcd: g and n must be non-negative");
    if (2 * g + n > 2) {
        if (g > 0 && n > 0) return {4 * g + n - 4};
        if (n == 0) return {4 * g - 5};
        return {n - 3};
    }
    // (0,0), (0,1): trivial group. (0,2): Z. (1,0): SL2(Z).
    if (g == 0 && n <= 1) return {0};
    return {1};
}

int nu(const Signature& sig)
{
    return 4 * sig.genus() + sig.k() - 4;
}

VcdValue weyl_vcd(const Signature& sig)
{
    return harer_vcd(sig.genus(), sig.k());
}

int big_omega(long n)
{
    if (n < 1)
        throw std::invalid_argument("big_omega: argument must be positive");
    int count = 0;
    for (long p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            n /= p;
            ++count;
        }
    }
    if (n > 1) ++count;
    return count;
}

int lambda_upper(long order)
{
    if (order < 1)
        throw std::invalid_argument("lambda_upper: order must be positive");
    return static_cast<int>(std::min<long>(order - 1, big_omega(order)));
}

bool rh_admissible(int g, long order, const Signature& sig)
{
    if (g < 2 || order < 1)
        throw std::invalid_argument("rh_admissible: requires g >= 2 and order >= 1");
    const Rational lhs(2 * static_cast<std::int64_t>(g) - 2, order);
    const Rational rhs = Rational(2 * static_cast<std::int64_t>(sig.genus()) - 2) + l_sum(sig);
    return lhs == rhs;
}

} // namespace orbvcd
