#include "orbvcd/enumeration.hpp"

#include "orbvcd/formulas.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace orbvcd {

std::string EnumOptions::signature_key() const
{
    return periods_divide_order ? "divide=1" : "divide=0";
}

std::vector<int> divisors(int n)
{
    if (n < 1)
        throw std::invalid_argument("divisors: argument must be positive");
    std::vector<int> small, large;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// ---------------------------------------------------------------------------
// Period multisets

namespace {

/// Depth-first search over nondecreasing periods for sum(1/p_i) == remaining
/// with exactly `slots` terms. The smallest remaining period carries the
/// largest term, so it lies in [ceil(1/remaining), floor(slots/remaining)].
class UnitFractionSearch {
public:
    UnitFractionSearch(const std::vector<int>* allowed, std::vector<PeriodMultiset>& out)
        : allowed_(allowed), out_(out)
    {
    }

    void run(const Rational& remaining, int slots)
    {
        current_.clear();
        extend(remaining, slots, 2);
    }

private:
    bool permitted(std::int64_t p) const
    {
        return !allowed_ || std::binary_search(allowed_->begin(), allowed_->end(), p);
    }

    void extend(const Rational& remaining, int slots, std::int64_t min_period)
    {
        if (slots == 0) {
            if (remaining == Rational(0)) out_.push_back(current_);
            return;
        }
        if (remaining <= Rational(0)) return;
        if (slots == 1) {
            if (remaining.numerator() == 1 && remaining.denominator() >= min_period && permitted(remaining.denominator())) {
                current_.push_back(static_cast<int>(remaining.denominator()));
                out_.push_back(current_);
                current_.pop_back();
            }
            return;
        }
        const std::int64_t lo = std::max(min_period, remaining.reciprocal().ceil());
        const std::int64_t hi = (Rational(slots) / remaining).floor();
        if (allowed_) {
            for (auto it = std::lower_bound(allowed_->begin(), allowed_->end(), lo);
                 it != allowed_->end() && *it <= hi; ++it)
                step(remaining, slots, *it);
        } else {
            for (std::int64_t p = lo; p <= hi; ++p)
                step(remaining, slots, p);
        }
    }

    void step(const Rational& remaining, int slots, std::int64_t p)
    {
        current_.push_back(static_cast<int>(p));
        extend(remaining - Rational(1, p), slots - 1, p);
        current_.pop_back();
    }

    const std::vector<int>* allowed_;
    std::vector<PeriodMultiset>& out_;
    PeriodMultiset current_;
};

} // namespace

std::vector<PeriodMultiset> enumerate_period_multisets(const Rational& target, std::optional<int> divisor_of)
{
    if (target < Rational(0))
        throw std::invalid_argument("enumerate_period_multisets: negative target " + target.to_string());
    if (divisor_of && *divisor_of < 1)
        throw std::invalid_argument("enumerate_period_multisets: divisor bound must be positive");

    std::vector<int> allowed;
    if (divisor_of) {
        for (int d : divisors(*divisor_of))
            if (d >= 2) allowed.push_back(d);
    }

    std::vector<PeriodMultiset> out;
    UnitFractionSearch search(divisor_of ? &allowed : nullptr, out);
    // k/2 <= target <= k bounds the number of periods.
    const std::int64_t k_min = target.ceil();
    const std::int64_t k_max = (target * Rational(2)).floor();
    for (std::int64_t k = k_min; k <= k_max; ++k) {
        if (k == 0) {
            out.emplace_back();
            continue;
        }
        // sum(1 - 1/p_i) == target  <=>  sum(1/p_i) == k - target
        search.run(Rational(k) - target, static_cast<int>(k));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Signature> enumerate_signatures(int g, int order, const EnumOptions& opts)
{
    if (g < 2)
        throw std::invalid_argument("enumerate_signatures: ambient genus must be >= 2");
    if (order < 1)
        throw std::invalid_argument("enumerate_signatures: order must be positive");
    if (order == 1) return {Signature(g, {})};

    // (2g - 2)/order == 2 g_L - 2 + l  with l >= 0 bounds the quotient genus.
    const Rational scaled(2 * static_cast<std::int64_t>(g) - 2, order);
    const std::int64_t genus_max = ((scaled + Rational(2)) / Rational(2)).floor();
    const std::optional<int> divisor_of = opts.periods_divide_order ? std::optional<int>(order) : std::nullopt;

    std::vector<Signature> out;
    for (std::int64_t gl = 0; gl <= genus_max; ++gl) {
        const Rational target = scaled + Rational(2 - 2 * gl);
        for (auto& periods : enumerate_period_multisets(target, divisor_of))
            out.emplace_back(static_cast<int>(gl), std::move(periods));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Branch data and covers

std::vector<BranchDatum> branch_data_solutions(int base_period, int degree)
{
    if (base_period < 2)
        throw std::invalid_argument("branch_data_solutions: base period must be >= 2");
    if (degree < 1)
        throw std::invalid_argument("branch_data_solutions: degree must be positive");
    const std::vector<int> qs = divisors(base_period);
    std::vector<BranchDatum> out;
    std::vector<int> current;
    // Nondecreasing q; a completed multiset is never a prefix of another,
    // so depth-first emission is already lexicographic.
    auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(BranchDatum{base_period, current});
            return;
        }
        for (std::size_t i = start; i < qs.size(); ++i) {
            const int local = base_period / qs[i];
            if (local > remaining) continue;
            current.push_back(qs[i]);
            self(self, i, remaining - local);
            current.pop_back();
        }
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end());
    return out;
}

int CoverPair::preimage_count() const
{
    int count = 0;
    for (const auto& datum : branch_data)
        count += static_cast<int>(datum.upstairs_orders.size());
    return count;
}

std::string format_branch_data(const std::vector<BranchDatum>& data)
{
    std::string out;
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(data[i].base_period) + ":{";
        for (std::size_t j = 0; j < data[i].upstairs_orders.size(); ++j) {
            if (j) out += ',';
            out += std::to_string(data[i].upstairs_orders[j]);
        }
        out += '}';
    }
    return out;
}

namespace {

/// Euler bookkeeping for underlying surfaces: 2 - 2 g_total - K == d (2 - 2 g_base - k_base),
/// with K the number of preimages of base cone points.
long base_euler_term(const Signature& base, int degree)
{
    return static_cast<long>(degree) * (2 - 2L * base.genus() - base.k());
}

/// Backtracking search for a branch assignment whose ramified preimages use
/// up exactly the total signature's periods and whose smooth preimages use up
/// exactly `ones` points. Options for each base period are generated in
/// lexicographic order, so the first hit is the lexicographically least.
class AssignmentSearch {
public:
    AssignmentSearch(const Signature& base, int degree, const Signature& total, int ones)
        : base_(base.periods()), degree_(degree), ones_left_(ones)
    {
        for (int q : total.periods()) {
            if (values_.empty() || values_.back() != q) {
                values_.push_back(q);
                counts_.push_back(0);
            }
            ++counts_.back();
        }
        for (int p : base_)
            divisor_table_.push_back(divisors(p));
    }

    std::optional<std::vector<BranchDatum>> run()
    {
        chosen_.assign(base_.size(), {});
        if (assign(0)) return chosen_;
        return std::nullopt;
    }

private:
    bool assign(std::size_t index)
    {
        if (index == base_.size()) {
            if (ones_left_ != 0) return false;
            return std::all_of(counts_.begin(), counts_.end(), [](int c) { return c == 0; });
        }
        chosen_[index] = BranchDatum{base_[index], {}};
        return build(index, 0, degree_);
    }

    bool build(std::size_t index, std::size_t start, int remaining)
    {
        if (remaining == 0) return assign(index + 1);
        const int p = base_[index];
        const auto& qs = divisor_table_[index];
        for (std::size_t i = start; i < qs.size(); ++i) {
            const int q = qs[i];
            const int local = p / q;
            if (local > remaining) continue;
            int* slot = nullptr;
            if (q == 1) {
                if (ones_left_ == 0) continue;
                slot = &ones_left_;
            } else {
                auto it = std::lower_bound(values_.begin(), values_.end(), q);
                if (it == values_.end() || *it != q) continue;
                slot = &counts_[static_cast<std::size_t>(it - values_.begin())];
                if (*slot == 0) continue;
            }
            --*slot;
            chosen_[index].upstairs_orders.push_back(q);
            if (build(index, i, remaining - local)) return true;
            chosen_[index].upstairs_orders.pop_back();
            ++*slot;
        }
        return false;
    }

    const PeriodMultiset& base_;
    int degree_;
    int ones_left_;
    std::vector<int> values_;
    std::vector<int> counts_;
    std::vector<std::vector<int>> divisor_table_;
    std::vector<BranchDatum> chosen_;
};

} // namespace

std::optional<CoverPair> cover_admissible(const Signature& base, int degree, const Signature& total)
{
    if (degree < 2)
        throw std::invalid_argument("cover_admissible: degree must be >= 2");
    if (orbifold_euler(total) != Rational(degree) * orbifold_euler(base)) return std::nullopt;

    const long preimages = 2 - 2L * total.genus() - base_euler_term(base, degree);
    const long ones = preimages - total.k();
    if (ones < 0) return std::nullopt;
    // Each upstairs order must divide some base period.
    for (int q : total.periods()) {
        const bool divides = std::any_of(base.periods().begin(), base.periods().end(), [q](int p) { return p % q == 0; });
        if (!divides) return std::nullopt;
    }

    AssignmentSearch search(base, degree, total, static_cast<int>(ones));
    auto data = search.run();
    if (!data) return std::nullopt;
    return CoverPair{base, degree, total, std::move(*data)};
}

std::vector<CoverPair> enumerate_covers(const Signature& base, int degree)
{
    if (degree < 2)
        throw std::invalid_argument("enumerate_covers: degree must be >= 2");

    const auto& periods = base.periods();
    const long euler_term = base_euler_term(base, degree);
    // g_total >= 0 caps the preimage count.
    const long preimage_cap = 2 - euler_term;

    std::map<int, std::vector<BranchDatum>> options;
    std::vector<long> min_tail(periods.size() + 1, 0);
    for (std::size_t i = periods.size(); i-- > 0;) {
        const int p = periods[i];
        if (!options.count(p)) options.emplace(p, branch_data_solutions(p, degree));
        min_tail[i] = min_tail[i + 1] + (degree + p - 1) / p;
    }

    std::map<Signature, CoverPair> by_total;
    std::vector<BranchDatum> chosen(periods.size());
    // Assignments are visited in lexicographic order; the first one reaching
    // a given total is its least witness.
    auto rec = [&](auto&& self, std::size_t index, long preimages) -> void {
        if (preimages + min_tail[index] > preimage_cap) return;
        if (index == periods.size()) {
            const long twice_genus = 2 - preimages - euler_term;
            if (twice_genus < 0 || twice_genus % 2 != 0) return;
            PeriodMultiset upstairs;
            for (const auto& datum : chosen)
                for (int q : datum.upstairs_orders)
                    if (q >= 2) upstairs.push_back(q);
            Signature total(static_cast<int>(twice_genus / 2), std::move(upstairs));
            if (!by_total.count(total)) by_total.emplace(total, CoverPair{base, degree, total, chosen});
            return;
        }
        for (const auto& datum : options.at(periods[index])) {
            chosen[index] = datum;
            self(self, index + 1, preimages + static_cast<long>(datum.upstairs_orders.size()));
        }
    };
    rec(rec, 0, 0);

    std::vector<CoverPair> out;
    out.reserve(by_total.size());
    for (auto& [total, cover] : by_total)
        out.push_back(std::move(cover));
    return out;
}

} // namespace orbvcd
