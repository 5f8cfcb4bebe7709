#ifndef ORBVCD_SIGNATURE_HPP
#define ORBVCD_SIGNATURE_HPP

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace orbvcd {

/// Sorted multiset of cone-point orders, each >= 2.
using PeriodMultiset = std::vector<int>;

/// Quotient orbifold datum (genus; p_1, ..., p_k) of a finite group action.
///
/// Periods are kept sorted nondecreasing, so equality and ordering are
/// structural: genus first, then the period list lexicographically.
class Signature {
public:
    Signature() = default;
    /// Throws std::invalid_argument on a negative genus or a period < 2.
    Signature(int genus, PeriodMultiset periods);

    int genus() const { return genus_; }
    const PeriodMultiset& periods() const { return periods_; }
    int k() const { return static_cast<int>(periods_.size()); }

    /// Text form `g;p1,p2,...`; an empty period list keeps the semicolon (`2;`).
    std::string to_string() const;
    /// Inverse of to_string(). Unsorted periods are re-sorted; periods < 2,
    /// stray whitespace and empty fields are rejected with std::invalid_argument.
    static Signature parse(std::string_view text);

    friend bool operator==(const Signature&, const Signature&) = default;
    friend auto operator<=>(const Signature&, const Signature&) = default;

private:
    int genus_ = 0;
    PeriodMultiset periods_;
};

std::ostream& operator<<(std::ostream& os, const Signature& sig);

} // namespace orbvcd

#endif
