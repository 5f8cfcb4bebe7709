#ifndef ORBVCD_TESTS_GENERATORS_HPP
#define ORBVCD_TESTS_GENERATORS_HPP

// Small seeded generators for property tests.

#include "orbvcd/signature.hpp"

#include <random>
#include <vector>

namespace orbvcd::testing {

class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    int between(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    PeriodMultiset periods(int max_terms, int max_period)
    {
        PeriodMultiset out(static_cast<std::size_t>(between(0, max_terms)));
        for (int& p : out)
            p = between(2, max_period);
        return out;
    }

    Signature signature(int max_genus, int max_terms, int max_period)
    {
        return Signature(between(0, max_genus), periods(max_terms, max_period));
    }

    template <class T>
    const T& pick(const std::vector<T>& items)
    {
        return items[static_cast<std::size_t>(between(0, static_cast<int>(items.size()) - 1))];
    }

private:
    std::mt19937 rng_;
};

} // namespace orbvcd::testing

#endif
