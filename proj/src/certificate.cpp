#include "orbvcd/certificate.hpp"

#include <json.hpp>

#include <algorithm>
#include <istream>
#include <stdexcept>

namespace orbvcd {

using nlohmann::json;

std::string_view to_string(ClaimId id)
{
    switch (id) {
    case ClaimId::gendec: return "gendec";
    case ClaimId::prop4: return "prop4";
    case ClaimId::claim_uno: return "claim_uno";
    case ClaimId::prop5: return "prop5";
    case ClaimId::eq5: return "eq5";
    }
    return "?";
}

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::exception: return "exception";
    }
    return "?";
}

std::optional<ClaimId> parse_claim_id(std::string_view text)
{
    for (ClaimId id : {ClaimId::gendec, ClaimId::prop4, ClaimId::claim_uno, ClaimId::prop5, ClaimId::eq5})
        if (to_string(id) == text) return id;
    return std::nullopt;
}

std::optional<Verdict> parse_verdict(std::string_view text)
{
    for (Verdict v : {Verdict::pass, Verdict::fail, Verdict::exception})
        if (to_string(v) == text) return v;
    return std::nullopt;
}

const Rational& Certificate::operand(std::string_view name) const
{
    for (const auto& op : operands)
        if (op.name == name) return op.value;
    throw std::out_of_range("certificate has no operand '" + std::string(name) + "'");
}

std::size_t count_verdict(const std::vector<Certificate>& certs, Verdict v)
{
    return static_cast<std::size_t>(std::count_if(certs.begin(), certs.end(), [v](const Certificate& c) { return c.verdict == v; }));
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

ClaimId require_claim(std::string_view text)
{
    auto id = parse_claim_id(text);
    if (!id) throw std::invalid_argument("unknown claim id '" + std::string(text) + "'");
    return *id;
}

Verdict require_verdict(std::string_view text)
{
    auto v = parse_verdict(text);
    if (!v) throw std::invalid_argument("unknown verdict '" + std::string(text) + "'");
    return *v;
}

std::string join_operands(const std::vector<Operand>& operands, char sep)
{
    std::string out;
    for (std::size_t i = 0; i < operands.size(); ++i) {
        if (i) out += sep;
        out += operands[i].name + "=" + operands[i].value.to_string();
    }
    return out;
}

std::vector<Operand> parse_operands(std::string_view text, char sep)
{
    std::vector<Operand> operands;
    if (text.empty()) return operands;
    for (auto item : split(text, sep)) {
        const auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw std::invalid_argument("malformed operand '" + std::string(item) + "'");
        operands.push_back(Operand{std::string(item.substr(0, eq)), Rational::parse(item.substr(eq + 1))});
    }
    return operands;
}

std::string csv_quote(std::string_view field)
{
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> split_csv(std::string_view line)
{
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    fields.back() += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    if (quoted) throw std::invalid_argument("unterminated quote in CSV record");
    return fields;
}

} // namespace

std::string to_text_line(const Certificate& cert)
{
    std::string out;
    out += to_string(cert.claim);
    out += '\t' + cert.subject + '\t' + cert.case_label + '\t' + join_operands(cert.operands, ' ') + '\t';
    out += to_string(cert.verdict);
    return out;
}

Certificate parse_text_line(std::string_view line)
{
    const auto fields = split(line, '\t');
    if (fields.size() != 5)
        throw std::invalid_argument("text certificate needs 5 tab-separated fields, got " + std::to_string(fields.size()));
    return Certificate{require_claim(fields[0]), std::string(fields[1]), std::string(fields[2]),
                       parse_operands(fields[3], ' '), require_verdict(fields[4])};
}

std::string to_json_line(const Certificate& cert)
{
    json operands = json::array();
    for (const auto& op : cert.operands) {
        if (op.value.is_integer())
            operands.push_back(json::array({op.name, op.value.numerator()}));
        else
            operands.push_back(json::array({op.name, op.value.to_string()}));
    }
    json record = {
        {"claim_id", std::string(to_string(cert.claim))},
        {"subject", cert.subject},
        {"case_label", cert.case_label},
        {"operands", std::move(operands)},
        {"verdict", std::string(to_string(cert.verdict))},
    };
    return record.dump();
}

Certificate parse_json_line(std::string_view line)
{
    json record;
    try {
        record = json::parse(line);
        Certificate cert;
        cert.claim = require_claim(record.at("claim_id").get<std::string>());
        cert.subject = record.at("subject").get<std::string>();
        cert.case_label = record.at("case_label").get<std::string>();
        for (const auto& item : record.at("operands")) {
            if (!item.is_array() || item.size() != 2)
                throw std::invalid_argument("operand entries must be [name, value] pairs");
            const auto& value = item[1];
            Rational r = value.is_number_integer() ? Rational(value.get<std::int64_t>())
                                                   : Rational::parse(value.get<std::string>());
            cert.operands.push_back(Operand{item[0].get<std::string>(), r});
        }
        cert.verdict = require_verdict(record.at("verdict").get<std::string>());
        return cert;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON certificate: ") + e.what());
    }
}

std::string csv_header()
{
    return "claim_id,subject,case_label,operands,verdict";
}

std::string to_csv_line(const Certificate& cert)
{
    return csv_quote(to_string(cert.claim)) + ',' + csv_quote(cert.subject) + ',' + csv_quote(cert.case_label) + ',' +
           csv_quote(join_operands(cert.operands, ';')) + ',' + csv_quote(to_string(cert.verdict));
}

Certificate parse_csv_line(std::string_view line)
{
    const auto fields = split_csv(line);
    if (fields.size() != 5)
        throw std::invalid_argument("CSV certificate needs 5 fields, got " + std::to_string(fields.size()));
    return Certificate{require_claim(fields[0]), fields[1], fields[2], parse_operands(fields[3], ';'),
                       require_verdict(fields[4])};
}

RecheckReport recheck_stream(std::istream& in)
{
    RecheckReport report;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#' || line == csv_header()) continue;
        try {
            Certificate cert;
            if (line[0] == '{') {
                if (!json::parse(line).contains("claim_id")) continue;
                cert = parse_json_line(line);
            } else if (line.find('\t') != std::string::npos) {
                cert = parse_text_line(line);
            } else {
                cert = parse_csv_line(line);
            }
            ++report.records;
            const Verdict recomputed = recheck(cert);
            if (recomputed == cert.verdict) {
                ++report.agreements;
            } else {
                report.problems.push_back("line " + std::to_string(line_no) + ": recorded " +
                                          std::string(to_string(cert.verdict)) + ", recomputed " +
                                          std::string(to_string(recomputed)) + " (" + cert.subject + ")");
            }
        } catch (const std::exception& e) {
            report.problems.push_back("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return report;
}

} // namespace orbvcd
