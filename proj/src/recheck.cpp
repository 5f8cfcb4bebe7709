// Certificate re-checker. Deliberately self-contained: nothing here calls the
// formulas or verification code that produced the certificates.

#include "orbvcd/certificate.hpp"

#include <stdexcept>

namespace orbvcd {

namespace {

std::int64_t integer_operand(const Certificate& cert, std::string_view name)
{
    const Rational& r = cert.operand(name);
    if (!r.is_integer())
        throw std::invalid_argument("operand '" + std::string(name) + "' must be an integer");
    return r.numerator();
}

// Mapping class group vcd, written out case by case.
std::int64_t mcg_vcd(std::int64_t genus, std::int64_t marked)
{
    if (genus == 0) {
        if (marked <= 1) return 0;
        if (marked == 2) return 1;
        return marked - 3;
    }
    if (genus == 1 && marked == 0) return 1;
    if (marked == 0) return 4 * genus - 5;
    return 4 * genus + marked - 4;
}

std::int64_t chain_bound(std::int64_t order)
{
    std::int64_t factors = 0;
    std::int64_t rest = order;
    for (std::int64_t p = 2; p <= rest / p; ++p)
        for (; rest % p == 0; rest /= p)
            ++factors;
    if (rest > 1) ++factors;
    return std::min(order - 1, factors);
}

Verdict check_gendec(const Certificate& c)
{
    const auto gT = integer_operand(c, "g_T"), gL = integer_operand(c, "g_L");
    const auto kT = integer_operand(c, "k_T"), kL = integer_operand(c, "k_L");
    if (gT > 1) return gT < gL ? Verdict::pass : Verdict::fail;
    if (gT > gL) return Verdict::fail;
    if (gT == gL && !(kT < kL)) return Verdict::fail;
    return Verdict::pass;
}

Verdict check_prop4(const Certificate& c)
{
    const auto gT = integer_operand(c, "g_T"), gL = integer_operand(c, "g_L");
    const auto kT = integer_operand(c, "k_T"), kL = integer_operand(c, "k_L");
    const auto wT = integer_operand(c, "vcd_WT"), wL = integer_operand(c, "vcd_WL");
    if (wT != mcg_vcd(gT, kT) || wL != mcg_vcd(gL, kL)) return Verdict::fail;
    if (wT > wL) return Verdict::fail;
    if (gT < gL && wT == wL) {
        const bool family_i = gL == 2 && kL == 0 && gT == 0 && kT == 6;
        const bool family_ii = gL == 1 && kL >= 1 && gT == 0 && kT == kL + 3;
        return family_i || family_ii ? Verdict::exception : Verdict::fail;
    }
    return Verdict::pass;
}

Verdict check_claim_uno(const Certificate& c)
{
    const auto g = integer_operand(c, "g");
    const auto order = integer_operand(c, "order");
    const auto wT = integer_operand(c, "vcd_WT");
    const auto upper = integer_operand(c, "lambda_upper");
    const auto tower = integer_operand(c, "tower_lambda");
    const auto lambda = integer_operand(c, "lambda");
    const auto vG = integer_operand(c, "vcd_G");
    if (wT != mcg_vcd(integer_operand(c, "g_T"), integer_operand(c, "k_T"))) return Verdict::fail;
    if (vG != mcg_vcd(g, 0) || upper != chain_bound(order) || lambda != std::min(upper, tower)) return Verdict::fail;
    return wT + lambda + 1 <= vG ? Verdict::pass : Verdict::fail;
}

Verdict check_prop5(const Certificate& c)
{
    const auto g = integer_operand(c, "g");
    const auto order = integer_operand(c, "order");
    const auto kT = integer_operand(c, "k_T");
    const auto wT = integer_operand(c, "vcd_WT");
    const auto lambda = integer_operand(c, "lambda");
    const auto vG = integer_operand(c, "vcd_G");
    if (wT != mcg_vcd(integer_operand(c, "g_T"), kT)) return Verdict::fail;
    if (vG != mcg_vcd(g, 0) || lambda > chain_bound(order)) return Verdict::fail;
    return wT + lambda <= vG ? Verdict::pass : Verdict::fail;
}

Verdict check_eq5(const Certificate& c)
{
    const auto g = integer_operand(c, "g"), k = integer_operand(c, "k");
    const auto nu = integer_operand(c, "nu"), vcd = integer_operand(c, "vcd");
    if (nu != 4 * g + k - 4) return Verdict::fail;
    std::int64_t expected = nu;
    if (k == 0)
        expected = nu - 1;
    else if (g == 0)
        expected = nu + 1;
    return vcd == expected ? Verdict::pass : Verdict::fail;
}

} // namespace

Verdict recheck(const Certificate& cert)
{
    try {
        switch (cert.claim) {
        case ClaimId::gendec: return check_gendec(cert);
        case ClaimId::prop4: return check_prop4(cert);
        case ClaimId::claim_uno: return check_claim_uno(cert);
        case ClaimId::prop5: return check_prop5(cert);
        case ClaimId::eq5: return check_eq5(cert);
        }
    } catch (const std::out_of_range& e) {
        throw std::invalid_argument(e.what());
    }
    throw std::invalid_argument("unknown claim");
}

} // namespace orbvcd
