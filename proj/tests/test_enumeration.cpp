#include "generators.hpp"
#include "orbvcd/enumeration.hpp"
#include "orbvcd/formulas.hpp"
#include "orbvcd/oracle.hpp"

#include <doctest.h>

using namespace orbvcd;

namespace {

Signature sig(int g, PeriodMultiset p)
{
    return Signature(g, std::move(p));
}

PeriodMultiset twos(int k)
{
    return PeriodMultiset(static_cast<std::size_t>(k), 2);
}

std::vector<Signature> totals(const std::vector<CoverPair>& covers)
{
    std::vector<Signature> out;
    for (const auto& c : covers)
        out.push_back(c.total);
    return out;
}

// Euler bookkeeping and ramification identities every cover must satisfy.
void check_cover_identities(const CoverPair& c)
{
    REQUIRE(c.branch_data.size() == c.base.periods().size());
    PeriodMultiset upstairs;
    Rational inverse_q_sum(0), inverse_p_sum(0);
    int preimages = 0;
    for (std::size_t i = 0; i < c.branch_data.size(); ++i) {
        const BranchDatum& b = c.branch_data[i];
        CHECK(b.base_period == c.base.periods()[i]);
        int local = 0;
        for (int q : b.upstairs_orders) {
            CHECK(b.base_period % q == 0);
            local += b.base_period / q;
            inverse_q_sum += Rational(1, q);
            ++preimages;
            if (q > 1) upstairs.push_back(q);
        }
        CHECK(local == c.degree);
        inverse_p_sum += Rational(1, b.base_period);
    }
    std::sort(upstairs.begin(), upstairs.end());
    CHECK(upstairs == c.total.periods());
    CHECK(preimages == c.preimage_count());
    CHECK(2 - 2 * c.total.genus() - preimages == c.degree * (2 - 2 * c.base.genus() - c.base.k()));
    CHECK(inverse_q_sum == Rational(c.degree) * inverse_p_sum);
    CHECK(orbifold_euler(c.total) == Rational(c.degree) * orbifold_euler(c.base));
}

} // namespace

TEST_CASE("enumerate_period_multisets examples")
{
    CHECK(enumerate_period_multisets(Rational(0), std::nullopt) == std::vector<PeriodMultiset>{{}});
    CHECK(enumerate_period_multisets(Rational(0), 6) == std::vector<PeriodMultiset>{{}});
    CHECK(enumerate_period_multisets(Rational(3), 2) == std::vector<PeriodMultiset>{twos(6)});
    // k = 1 is impossible and k = 2 forces 1/p + 1/q = 1.
    CHECK(enumerate_period_multisets(Rational(1), std::nullopt) == std::vector<PeriodMultiset>{{2, 2}});
    CHECK(enumerate_period_multisets(Rational(1), std::nullopt) ==
          oracle::brute_multisets(Rational(1), {6, 4, 1}));
    CHECK_THROWS_AS(enumerate_period_multisets(Rational(-1, 2), std::nullopt), std::invalid_argument);
}

TEST_CASE("enumerate_period_multisets respects the k range")
{
    for (int n = 0; n <= 24; ++n) {
        const Rational t(n, 6);
        for (const auto& m : enumerate_period_multisets(t, 12)) {
            CHECK(Rational(static_cast<std::int64_t>(m.size())) >= Rational(t.ceil()));
            CHECK(static_cast<std::int64_t>(m.size()) <= (t * Rational(2)).floor());
            CHECK(std::is_sorted(m.begin(), m.end()));
        }
    }
}

TEST_CASE("oracle: period multisets agree with brute force (divisor bound)")
{
    for (int d = 2; d <= 12; ++d) {
        for (int den = 1; den <= 12; ++den) {
            for (int num = 0; num <= 12; ++num) {
                const Rational t(num, den);
                const int terms = static_cast<int>((t * Rational(2)).floor());
                if (terms > 12) continue;
                const auto engine = enumerate_period_multisets(t, d);
                const auto brute = oracle::brute_multisets(t, {d, std::max(terms, 1), 1}, d);
                CHECK_MESSAGE(engine == brute, "target " << t << " divisor " << d);
            }
        }
    }
}

TEST_CASE("oracle: period multisets agree with brute force (no divisor bound)")
{
    // Periods of a solution with k terms are bounded by the greedy argument,
    // so a generous period budget catches every solution for small targets.
    for (int den = 1; den <= 6; ++den) {
        for (int num = 0; num <= 2 * den; ++num) {
            const Rational t(num, den);
            const int terms = static_cast<int>((t * Rational(2)).floor());
            if (terms > 3) continue;
            const auto engine = enumerate_period_multisets(t, std::nullopt);
            const auto brute = oracle::brute_multisets(t, {90, std::max(terms, 1), 1});
            CHECK_MESSAGE(engine == brute, "target " << t);
        }
    }
}

TEST_CASE("enumerate_signatures examples")
{
    CHECK(enumerate_signatures(2, 2) == std::vector<Signature>{sig(0, twos(6)), sig(1, {2, 2})});
    CHECK(enumerate_signatures(3, 1) == std::vector<Signature>{sig(3, {})});
    CHECK(enumerate_signatures(3, 2) == std::vector<Signature>{sig(0, twos(8)), sig(1, twos(4)), sig(2, {})});
    CHECK(enumerate_signatures(2, 1000).empty());
    CHECK(enumerate_signatures(3, 168) == std::vector<Signature>{sig(0, {2, 3, 7})});
}

TEST_CASE("oracle: signatures agree with the brute-force fiber scan for g <= 4, order <= 12")
{
    for (int g = 2; g <= 4; ++g) {
        for (int order = 1; order <= 12; ++order) {
            const oracle::OracleBudget budget{std::max(order, 2), 2 * g + 2, order};
            for (bool divide : {true, false}) {
                EnumOptions opts;
                opts.periods_divide_order = divide;
                const auto engine = enumerate_signatures(g, order, opts);
                for (const auto& s : engine)
                    CHECK(rh_admissible(g, order, s));
                if (divide)
                    CHECK_MESSAGE(engine == oracle::brute_signatures(g, order, true, budget), "g=" << g << " order=" << order);
            }
        }
    }
}

TEST_CASE("oracle: unconstrained signatures agree with brute force inside its budget")
{
    // Without the divisor bound periods can be large (an Egyptian-fraction
    // tail), so compare the engine output restricted to the brute budget.
    for (int g = 2; g <= 3; ++g) {
        for (int order = 2; order <= 4; ++order) {
            EnumOptions opts;
            opts.periods_divide_order = false;
            const oracle::OracleBudget budget{20, 6, order};
            std::vector<Signature> engine;
            for (const auto& s : enumerate_signatures(g, order, opts))
                if (s.k() <= budget.max_terms && (s.periods().empty() || s.periods().back() <= budget.max_period))
                    engine.push_back(s);
            CHECK_MESSAGE(engine == oracle::brute_signatures(g, order, false, budget), "g=" << g << " order=" << order);
        }
    }
}

TEST_CASE("branch_data_solutions examples")
{
    using V = std::vector<BranchDatum>;
    CHECK(branch_data_solutions(2, 2) == V{{2, {1}}, {2, {2, 2}}});
    CHECK(branch_data_solutions(3, 2) == V{{3, {3, 3}}});
    CHECK(branch_data_solutions(5, 1) == V{{5, {5}}});
    for (int p = 2; p <= 12; ++p)
        for (int d = 1; d <= 8; ++d)
            for (const auto& b : branch_data_solutions(p, d)) {
                int local = 0;
                for (int q : b.upstairs_orders) {
                    CHECK(p % q == 0);
                    local += p / q;
                }
                CHECK(local == d);
            }
}

TEST_CASE("cover_admissible examples")
{
    const auto hyper = cover_admissible(sig(0, twos(6)), 2, sig(2, {}));
    REQUIRE(hyper.has_value());
    CHECK(hyper->branch_data == std::vector<BranchDatum>(6, BranchDatum{2, {1}}));
    check_cover_identities(*hyper);

    const auto r2 = cover_admissible(sig(0, twos(5)), 2, sig(1, {2, 2}));
    REQUIRE(r2.has_value());
    CHECK(format_branch_data(r2->branch_data) == "2:{1} 2:{1} 2:{1} 2:{1} 2:{2,2}");
    check_cover_identities(*r2);

    CHECK_FALSE(cover_admissible(sig(0, twos(6)), 2, sig(1, {2, 2})).has_value());
    CHECK_THROWS_AS(cover_admissible(sig(0, twos(6)), 1, sig(0, twos(6))), std::invalid_argument);
}

TEST_CASE("enumerate_covers examples")
{
    CHECK(totals(enumerate_covers(sig(0, twos(6)), 2)) ==
          std::vector<Signature>{sig(0, twos(8)), sig(1, twos(4)), sig(2, {})});
    const auto over_torus = enumerate_covers(sig(1, {2, 2}), 2);
    const auto it = std::find_if(over_torus.begin(), over_torus.end(),
                                 [](const CoverPair& c) { return c.total == sig(2, {}); });
    REQUIRE(it != over_torus.end());
    CHECK(it->branch_data == std::vector<BranchDatum>(2, BranchDatum{2, {1}}));
    CHECK(totals(enumerate_covers(sig(3, {}), 2)) == std::vector<Signature>{sig(5, {})});
    CHECK_THROWS_AS(enumerate_covers(sig(3, {}), 1), std::invalid_argument);
}

TEST_CASE("property: covers satisfy the Euler and ramification identities")
{
    testing::Gen gen(17);
    for (int i = 0; i < 300; ++i) {
        const Signature base = gen.signature(2, 5, 12);
        const int degree = gen.between(2, 6);
        for (const auto& c : enumerate_covers(base, degree))
            check_cover_identities(c);
    }
}

TEST_CASE("property: enumerate_covers matches the brute-force product and cover_admissible")
{
    testing::Gen gen(19);
    for (int i = 0; i < 200; ++i) {
        const Signature base = gen.signature(2, 4, 12);
        const int degree = gen.between(2, 6);
        const auto engine = enumerate_covers(base, degree);
        const auto brute = oracle::brute_covers(base, degree);
        REQUIRE_MESSAGE(engine.size() == brute.size(), base << " d=" << degree);
        for (std::size_t j = 0; j < engine.size(); ++j) {
            CHECK(engine[j] == brute[j]);
            const auto witness = cover_admissible(base, degree, engine[j].total);
            REQUIRE(witness.has_value());
            CHECK(*witness == engine[j]);
        }
        // A random non-total is rejected by both sides.
        const Signature other = gen.signature(3, 6, 12);
        CHECK(cover_admissible(base, degree, other).has_value() == oracle::brute_cover_exists(base, degree, other));
    }
}

TEST_CASE("divisors")
{
    CHECK(divisors(1) == std::vector<int>{1});
    CHECK(divisors(12) == std::vector<int>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(13) == std::vector<int>{1, 13});
}
