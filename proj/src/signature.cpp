#include "orbvcd/signature.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace orbvcd {

namespace {

int parse_field(std::string_view field, std::string_view whole)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
        throw std::invalid_argument("malformed signature '" + std::string(whole) + "'");
    return value;
}

} // namespace

Signature::Signature(int genus, PeriodMultiset periods) : genus_(genus), periods_(std::move(periods))
{
    if (genus_ < 0)
        throw std::invalid_argument("signature genus must be non-negative");
    for (int p : periods_)
        if (p < 2)
            throw std::invalid_argument("signature periods must be >= 2, got " + std::to_string(p));
    std::sort(periods_.begin(), periods_.end());
}

std::string Signature::to_string() const
{
    std::string out = std::to_string(genus_) + ";";
    for (std::size_t i = 0; i < periods_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(periods_[i]);
    }
    return out;
}

Signature Signature::parse(std::string_view text)
{
    const auto semi = text.find(';');
    if (semi == std::string_view::npos)
        throw std::invalid_argument("malformed signature '" + std::string(text) + "': missing ';'");
    const int genus = parse_field(text.substr(0, semi), text);
    PeriodMultiset periods;
    std::string_view rest = text.substr(semi + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        periods.push_back(parse_field(rest.substr(0, comma), text));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
        if (rest.empty())
            throw std::invalid_argument("malformed signature '" + std::string(text) + "': trailing ','");
    }
    return Signature(genus, std::move(periods));
}

std::ostream& operator<<(std::ostream& os, const Signature& sig)
{
    return os << sig.to_string();
}

} // namespace orbvcd
