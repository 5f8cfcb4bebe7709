#include "orbvcd/cache.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <random>
#include <tuple>

namespace orbvcd {

namespace fs = std::filesystem;

namespace {

std::string fnv1a_hex(std::string_view text)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string payload(const SignatureCache::Record& r)
{
    std::string sigs;
    for (std::size_t i = 0; i < r.signatures.size(); ++i) {
        if (i) sigs += '|';
        sigs += r.signatures[i].to_string();
    }
    return "g=" + std::to_string(r.g) + "\torder=" + std::to_string(r.order) + "\topts=" + r.options_hash +
           "\tsigs=" + sigs;
}

std::string_view field_value(std::string_view field, std::string_view key, const std::string& id)
{
    if (field.size() <= key.size() || field.substr(0, key.size()) != key || field[key.size()] != '=')
        throw CacheCorruption(id, "expected field '" + std::string(key) + "'");
    return field.substr(key.size() + 1);
}

int parse_int_field(std::string_view text, const std::string& id)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw CacheCorruption(id, "malformed integer '" + std::string(text) + "'");
    return v;
}

SignatureCache::Record parse_record(const std::string& line, std::size_t line_no)
{
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    while (true) {
        auto tab = rest.find('\t');
        fields.push_back(rest.substr(0, tab));
        if (tab == std::string_view::npos) break;
        rest = rest.substr(tab + 1);
    }
    // Best-effort identifier before the record is known to be sound.
    std::string id = "line " + std::to_string(line_no);
    if (fields.size() >= 3) id = std::string(fields[0]) + " " + std::string(fields[1]) + " " + std::string(fields[2]);
    if (fields.size() != 5) throw CacheCorruption(id, "expected 5 fields");

    SignatureCache::Record r;
    r.g = parse_int_field(field_value(fields[0], "g", id), id);
    r.order = parse_int_field(field_value(fields[1], "order", id), id);
    r.options_hash = std::string(field_value(fields[2], "opts", id));
    const std::string_view sigs = field_value(fields[3], "sigs", id);
    const std::string_view sum = field_value(fields[4], "sum", id);
    const std::string_view body(line.data(), static_cast<std::size_t>(fields[4].data() - line.data() - 1));
    if (fnv1a_hex(body) != sum) throw CacheCorruption(id, "checksum mismatch");

    std::string_view s = sigs;
    while (!s.empty()) {
        auto bar = s.find('|');
        try {
            r.signatures.push_back(Signature::parse(s.substr(0, bar)));
        } catch (const std::invalid_argument& e) {
            throw CacheCorruption(id, e.what());
        }
        if (bar == std::string_view::npos) break;
        s = s.substr(bar + 1);
    }
    return r;
}

} // namespace

std::string SignatureCache::Record::id() const
{
    return "g=" + std::to_string(g) + " order=" + std::to_string(order) + " opts=" + options_hash;
}

SignatureCache::SignatureCache(fs::path dir) : dir_(std::move(dir)) {}

std::string SignatureCache::options_hash(const EnumOptions& opts)
{
    return fnv1a_hex(opts.signature_key());
}

std::vector<SignatureCache::Record> SignatureCache::load() const
{
    std::vector<Record> records;
    std::ifstream in(file());
    if (!in) return records;
    std::string line;
    if (!std::getline(in, line)) return records;
    if (line != header) throw CacheCorruption("header", "unsupported cache format '" + line + "'");
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        records.push_back(parse_record(line, line_no));
    }
    return records;
}

std::optional<std::vector<Signature>> SignatureCache::lookup(int g, int order, const EnumOptions& opts) const
{
    const std::string hash = options_hash(opts);
    for (auto& r : load())
        if (r.g == g && r.order == order && r.options_hash == hash) return std::move(r.signatures);
    return std::nullopt;
}

void SignatureCache::store(int g, int order, const EnumOptions& opts, const std::vector<Signature>& signatures)
{
    auto records = load();
    const std::string hash = options_hash(opts);
    std::erase_if(records, [&](const Record& r) { return r.g == g && r.order == order && r.options_hash == hash; });
    records.push_back(Record{g, order, hash, signatures});
    std::sort(records.begin(), records.end(), [](const Record& a, const Record& b) {
        return std::tie(a.g, a.order, a.options_hash) < std::tie(b.g, b.order, b.options_hash);
    });
    write_all(records);
}

void SignatureCache::write_all(const std::vector<Record>& records)
{
    fs::create_directories(dir_);
    const fs::path tmp = dir_ / (std::string(file_name) + ".tmp");
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << header << '\n';
        for (const auto& r : records) {
            const std::string body = payload(r);
            out << body << "\tsum=" << fnv1a_hex(body) << '\n';
        }
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    fs::rename(tmp, file());
}

void SignatureCache::clear()
{
    std::error_code ec;
    fs::remove(file(), ec);
    fs::remove(dir_ / (std::string(file_name) + ".tmp"), ec);
}

SignatureCache::VerifyReport SignatureCache::verify(std::optional<std::size_t> sample_size) const
{
    auto records = load();
    if (sample_size && *sample_size < records.size()) {
        std::mt19937 rng(20240601u);
        std::shuffle(records.begin(), records.end(), rng);
        records.resize(*sample_size);
    }

    VerifyReport report;
    for (const auto& r : records) {
        ++report.checked;
        std::optional<EnumOptions> opts;
        for (bool divide : {true, false}) {
            EnumOptions candidate;
            candidate.periods_divide_order = divide;
            if (options_hash(candidate) == r.options_hash) opts = candidate;
        }
        bool ok = false;
        if (opts && r.g >= 2 && r.order >= 1) ok = enumerate_signatures(r.g, r.order, *opts) == r.signatures;
        if (ok)
            ++report.valid;
        else
            report.invalid_ids.push_back(r.id());
    }
    return report;
}

} // namespace orbvcd
