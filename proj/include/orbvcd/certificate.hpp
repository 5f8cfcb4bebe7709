#ifndef ORBVCD_CERTIFICATE_HPP
#define ORBVCD_CERTIFICATE_HPP

#include "orbvcd/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbvcd {

enum class ClaimId { gendec, prop4, claim_uno, prop5, eq5 };
enum class Verdict { pass, fail, exception };

std::string_view to_string(ClaimId id);
std::string_view to_string(Verdict v);
std::optional<ClaimId> parse_claim_id(std::string_view text);
std::optional<Verdict> parse_verdict(std::string_view text);

struct Operand {
    std::string name;
    Rational value;

    friend bool operator==(const Operand&, const Operand&) = default;
    friend auto operator<=>(const Operand& a, const Operand& b)
    {
        if (auto c = a.name <=> b.name; c != 0) return c;
        return a.value <=> b.value;
    }
};

/// One checked inequality instance. The verdict is a function of claim,
/// case label and operands alone (see recheck()).
struct Certificate {
    ClaimId claim = ClaimId::eq5;
    std::string subject;
    std::string case_label;
    std::vector<Operand> operands;
    Verdict verdict = Verdict::pass;

    /// Throws std::out_of_range if absent.
    const Rational& operand(std::string_view name) const;

    friend bool operator==(const Certificate&, const Certificate&) = default;
    friend auto operator<=>(const Certificate& a, const Certificate& b)
    {
        if (auto c = a.claim <=> b.claim; c != 0) return c;
        if (auto c = a.subject <=> b.subject; c != 0) return c;
        if (auto c = a.case_label <=> b.case_label; c != 0) return c;
        if (auto c = a.operands <=> b.operands; c != 0) return c;
        return a.verdict <=> b.verdict;
    }
};

std::size_t count_verdict(const std::vector<Certificate>& certs, Verdict v);

// Line formats. Text: five tab-separated fields
//   claim_id  subject  case_label  name=value name=value ...  verdict
// JSON: one object per line with keys claim_id, subject, case_label,
// operands ([[name, value], ...]; integers as numbers, fractions as "a/b"),
// verdict. CSV: the same five columns, operands joined by ';'.

std::string to_text_line(const Certificate& cert);
std::string to_json_line(const Certificate& cert);
std::string to_csv_line(const Certificate& cert);
std::string csv_header();

/// Throws std::invalid_argument on malformed input.
Certificate parse_text_line(std::string_view line);
Certificate parse_json_line(std::string_view line);
Certificate parse_csv_line(std::string_view line);

/// Recomputes the verdict from the certificate's operands with formulas
/// implemented independently of the verification engine. Throws
/// std::invalid_argument when a required operand is missing.
Verdict recheck(const Certificate& cert);

struct RecheckReport {
    std::size_t records = 0;
    std::size_t agreements = 0;
    /// "line N: ..." messages for disagreements and malformed records.
    std::vector<std::string> problems;

    bool ok() const { return problems.empty(); }
};

/// Reads a certificate stream in text, JSON-lines or CSV form (detected per
/// line; blank lines, '#' comments, the CSV header and JSON lines without a
/// claim_id are skipped) and re-checks every record.
RecheckReport recheck_stream(std::istream& in);

} // namespace orbvcd

#endif
