#include "orbvcd/cli.hpp"

#include "orbvcd/cache.hpp"
#include "orbvcd/oracle.hpp"
#include "orbvcd/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace orbvcd::cli {

namespace {

using nlohmann::json;

enum class Format { text, json, csv };

struct RunConfig {
    std::string command;
    std::string subcommand; // check claim, cache action, recheck path
    Format format = Format::text;
    std::optional<std::string> cache_dir;
    EnumOptions options;
    bool oracle_crosscheck = false;
    unsigned workers = 1;

    std::optional<int> genus;
    std::optional<int> punctures;
    std::optional<int> order;
    std::optional<int> genus_max;
    int k_max = 20;
    std::optional<std::string> base;
    std::optional<std::size_t> sample;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Oracle cross-checks during `check` stay on nodes up to this order; the
/// brute-force fiber scan grows too fast beyond it.
constexpr int oracle_order_limit = 24;

std::optional<std::string> resolve_cache_dir(const RunConfig& cfg)
{
    if (cfg.cache_dir) return cfg.cache_dir;
    if (const char* env = std::getenv(cache_dir_env); env && *env) return std::string(env);
    return std::nullopt;
}

oracle::OracleBudget fiber_budget(int g, int order)
{
    return oracle::OracleBudget{std::max(order, 2), 2 * g + 2, std::max(order, 1)};
}

json signature_list_json(const std::vector<Signature>& sigs)
{
    json arr = json::array();
    for (const auto& s : sigs)
        arr.push_back(s.to_string());
    return arr;
}

json cover_json(const CoverPair& c)
{
    json data = json::array();
    for (const auto& d : c.branch_data)
        data.push_back(json::array({d.base_period, d.upstairs_orders}));
    return json{{"base", c.base.to_string()}, {"degree", c.degree}, {"total", c.total.to_string()}, {"branch_data", data}};
}

std::string csv_field(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// ---------------------------------------------------------------------------

int cmd_vcd(const RunConfig& cfg, std::ostream& out)
{
    if (!cfg.genus || !cfg.punctures) throw UsageError("vcd needs -g/--genus and -n/--punctures");
    if (*cfg.genus < 0 || *cfg.punctures < 0) throw UsageError("vcd: genus and punctures must be non-negative");
    const int v = harer_vcd(*cfg.genus, *cfg.punctures).value;
    switch (cfg.format) {
    case Format::text: out << v << '\n'; break;
    case Format::json: out << json{{"g", *cfg.genus}, {"n", *cfg.punctures}, {"vcd", v}}.dump() << '\n'; break;
    case Format::csv: out << "g,n,vcd\n" << *cfg.genus << ',' << *cfg.punctures << ',' << v << '\n'; break;
    }
    return exit_ok;
}

int cmd_signatures(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (!cfg.genus || *cfg.genus < 2) throw UsageError("signatures needs -g/--genus >= 2");
    if (!cfg.order || *cfg.order < 1) throw UsageError("signatures needs -d/--order >= 1");
    if (cfg.oracle_crosscheck && !cfg.options.periods_divide_order)
        throw UsageError("--oracle needs the divisor constraint (the unconstrained fiber has no finite brute-force budget)");
    const int g = *cfg.genus, order = *cfg.order;

    std::optional<std::vector<Signature>> sigs;
    std::optional<SignatureCache> cache;
    if (auto dir = resolve_cache_dir(cfg)) {
        cache.emplace(*dir);
        sigs = cache->lookup(g, order, cfg.options);
    }
    if (!sigs) {
        sigs = enumerate_signatures(g, order, cfg.options);
        if (cache) cache->store(g, order, cfg.options, *sigs);
    }

    int code = exit_ok;
    if (cfg.oracle_crosscheck) {
        if (oracle::brute_signatures(g, order, true, fiber_budget(g, order)) != *sigs) {
            err << "oracle mismatch: brute-force fiber differs for g=" << g << " order=" << order << '\n';
            code = exit_check_failed;
        }
    }

    switch (cfg.format) {
    case Format::text:
        for (const auto& s : *sigs)
            out << s << '\n';
        break;
    case Format::json: out << signature_list_json(*sigs).dump() << '\n'; break;
    case Format::csv:
        out << "signature\n";
        for (const auto& s : *sigs)
            out << csv_field(s.to_string()) << '\n';
        break;
    }
    return code;
}

int cmd_covers(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (!cfg.base) throw UsageError("covers needs --base SIGNATURE");
    if (!cfg.order || *cfg.order < 2) throw UsageError("covers needs -d/--order (the cover degree) >= 2");
    Signature base;
    try {
        base = Signature::parse(*cfg.base);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto covers = enumerate_covers(base, *cfg.order);

    int code = exit_ok;
    if (cfg.oracle_crosscheck && oracle::brute_covers(base, *cfg.order) != covers) {
        err << "oracle mismatch: brute-force covers differ\n";
        code = exit_check_failed;
    }

    switch (cfg.format) {
    case Format::text:
        for (const auto& c : covers)
            out << c.total << '\t' << format_branch_data(c.branch_data) << '\n';
        break;
    case Format::json: {
        json arr = json::array();
        for (const auto& c : covers)
            arr.push_back(cover_json(c));
        out << arr.dump() << '\n';
        break;
    }
    case Format::csv:
        out << "total,branch_data\n";
        for (const auto& c : covers)
            out << csv_field(c.total.to_string()) << ',' << csv_field(format_branch_data(c.branch_data)) << '\n';
        break;
    }
    return code;
}

void write_certificate(const Certificate& c, Format f, std::ostream& out)
{
    switch (f) {
    case Format::text: out << to_text_line(c) << '\n'; break;
    case Format::json: out << to_json_line(c) << '\n'; break;
    case Format::csv: out << to_csv_line(c) << '\n'; break;
    }
}

struct GenusStats {
    int g = 0;
    std::size_t nodes = 0;
    std::size_t edges = 0;
    int max_order = 0;
};

/// Compares the DAG's low-order fibers and tower lengths with the oracle.
std::size_t oracle_crosscheck_dag(const SubgroupDag& dag, std::ostream& err)
{
    std::size_t mismatches = 0;
    const int g = dag.ambient_genus();
    const int limit = std::min(dag.max_order(), oracle_order_limit);
    for (int order = 1; order <= limit; ++order) {
        std::vector<Signature> fiber;
        for (const auto& n : dag.nodes())
            if (n.order == order) fiber.push_back(n.signature);
        if (oracle::brute_signatures(g, order, true, fiber_budget(g, order)) != fiber) {
            err << "oracle mismatch: fiber g=" << g << " order=" << order << '\n';
            ++mismatches;
        }
    }
    for (const auto& n : dag.nodes()) {
        if (n.order > limit) break;
        if (oracle::brute_tower_lambda(g, n, fiber_budget(g, limit)) != tower_lambda(dag, n)) {
            err << "oracle mismatch: tower length of " << n.to_string() << '\n';
            ++mismatches;
        }
    }
    return mismatches;
}

std::string order_bound_note(const EnumOptions& opts)
{
    return opts.max_order ? " (--max-order)" : " (84(g-1))";
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const auto started = std::chrono::steady_clock::now();
    const std::string& claim = cfg.subcommand;

    std::vector<Certificate> certs;
    std::vector<ExceptionPair> exceptions;
    std::vector<GenusStats> stats;
    std::size_t oracle_mismatches = 0;

    if (claim == "eq5") {
        const int g_max = cfg.genus_max.value_or(10);
        if (g_max < 0 || cfg.k_max < 0) throw UsageError("check eq5: --genus-max and --k-max must be non-negative");
        certs = check_eq5_consistency({0, g_max}, {0, cfg.k_max});
    } else {
        const bool needs_three = claim == "prop5" || claim == "claim-uno";
        int lo = 0, hi = 0;
        if (needs_three && cfg.genus) {
            lo = hi = *cfg.genus;
        } else if (cfg.genus_max) {
            lo = needs_three ? 3 : 2;
            hi = *cfg.genus_max;
        } else if (cfg.genus) {
            lo = hi = *cfg.genus;
        } else {
            throw UsageError("check " + claim + " needs -g/--genus or --genus-max");
        }
        if (needs_three && (lo < 3 || hi < 3))
            throw UsageError("check " + claim + ": the inequality vcd(WT) + lambda(T) <= vcd(Gamma_g) is only claimed for g >= 3, got g=" +
                             std::to_string(std::min(lo, hi)));
        if (lo < 2 || hi < lo) throw UsageError("check " + claim + ": ambient genus range must start at g >= 2");
        if (cfg.options.max_order && *cfg.options.max_order < 2) throw UsageError("--max-order must be >= 2");

        for (int g = lo; g <= hi; ++g) {
            const SubgroupDag dag = build_subgroup_dag(g, cfg.options, cfg.workers);
            stats.push_back(GenusStats{g, dag.nodes().size(), dag.edges().size(), dag.max_order()});
            std::vector<Certificate> part;
            if (claim == "gendec") {
                part = check_gendec(dag);
            } else if (claim == "prop4") {
                ExceptionScan scan = find_vcd_exceptions(dag);
                part = std::move(scan.certificates);
                for (auto& ex : scan.exceptions) {
                    const bool dup = std::any_of(exceptions.begin(), exceptions.end(), [&](const ExceptionPair& e) {
                        return e.witness.base == ex.witness.base && e.witness.total == ex.witness.total &&
                               e.witness.degree == ex.witness.degree;
                    });
                    if (!dup) exceptions.push_back(std::move(ex));
                }
            } else if (claim == "claim-uno") {
                part = verify_claim_uno(dag);
            } else {
                part = verify_prop5(dag);
            }
            certs.insert(certs.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
            if (cfg.oracle_crosscheck) {
                if (!cfg.options.periods_divide_order)
                    throw UsageError("--oracle needs the divisor constraint");
                oracle_mismatches += oracle_crosscheck_dag(dag, err);
            }
        }
    }

    if (cfg.format == Format::csv) out << csv_header() << '\n';
    for (const auto& c : certs)
        write_certificate(c, cfg.format, out);
    if (claim == "prop4") {
        if (cfg.format == Format::json) {
            json arr = json::array();
            for (const auto& ex : exceptions)
                arr.push_back(json{{"ambient_genus", ex.ambient_genus},
                                   {"upper", json::array({ex.upper.first, ex.upper.second})},
                                   {"lower", json::array({ex.lower.first, ex.lower.second})},
                                   {"witness", cover_json(ex.witness)}});
            out << json{{"exceptions", arr}}.dump() << '\n';
        } else {
            for (const auto& ex : exceptions)
                out << "# exception g=" << ex.ambient_genus << " upper=(" << ex.upper.first << ',' << ex.upper.second
                    << ") lower=(" << ex.lower.first << ',' << ex.lower.second << ") total=" << ex.witness.total
                    << " base=" << ex.witness.base << " d=" << ex.witness.degree << " branch="
                    << format_branch_data(ex.witness.branch_data) << '\n';
        }
    }

    const std::size_t fails = count_verdict(certs, Verdict::fail);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    err << claim << ": " << certs.size() << " certificates, " << fails << " fails";
    if (claim == "prop4") err << ", " << exceptions.size() << " exceptions";
    for (const auto& s : stats)
        err << "; g=" << s.g << " nodes=" << s.nodes << " edges=" << s.edges << " max_order=" << s.max_order
            << order_bound_note(cfg.options);
    if (cfg.oracle_crosscheck) err << "; oracle mismatches=" << oracle_mismatches;
    err << "; wall " << std::fixed << std::setprecision(3) << wall << " s\n";
    return fails == 0 && oracle_mismatches == 0 ? exit_ok : exit_check_failed;
}

int cmd_cache(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const auto dir = resolve_cache_dir(cfg);
    if (!dir) throw UsageError(std::string("cache needs --cache-dir or ") + cache_dir_env);
    SignatureCache cache(*dir);
    const std::string& action = cfg.subcommand;
    if (action == "info") {
        const auto records = cache.load();
        out << records.size() << " records\n";
        return exit_ok;
    }
    if (action == "clear") {
        cache.clear();
        out << "cache cleared\n";
        return exit_ok;
    }
    const auto report = cache.verify(cfg.sample);
    out << report.valid << "/" << report.checked << " records valid\n";
    for (const auto& id : report.invalid_ids)
        err << "stale or invalid cache record " << id << '\n';
    return report.invalid_ids.empty() ? exit_ok : exit_cache_corrupt;
}

int cmd_recheck(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    RecheckReport report;
    if (cfg.subcommand == "-") {
        report = recheck_stream(std::cin);
    } else {
        std::ifstream in(cfg.subcommand);
        if (!in) throw UsageError("cannot open certificate file " + cfg.subcommand);
        report = recheck_stream(in);
    }
    for (const auto& p : report.problems)
        err << p << '\n';
    out << report.agreements << "/" << report.records << " certificates re-checked\n";
    return report.ok() ? exit_ok : exit_check_failed;
}

void add_options(CLI::App& app, RunConfig& cfg)
{
    app.add_option("-g,--genus", cfg.genus, "Ambient genus (or quotient genus for vcd)");
    app.add_option("-n,--punctures", cfg.punctures, "Number of marked points (vcd)");
    app.add_option("-d,--order", cfg.order, "Subgroup order (signatures) or cover degree (covers)");
    app.add_option("--genus-max", cfg.genus_max, "Largest ambient genus to check");
    app.add_option("--k-max", cfg.k_max, "Largest period count in the eq5 grid")->capture_default_str();
    app.add_option("--max-order", cfg.options.max_order, "Largest subgroup order (default 84(g-1))");
    app.add_flag("--no-divisor-constraint", "Allow periods that do not divide the subgroup order")
        ->each([&cfg](const std::string&) { cfg.options.periods_divide_order = false; });
    app.add_option("--max-exception-r", cfg.options.max_exception_r, "Largest r reported for the (1,r)/(0,r+3) family")
        ->capture_default_str();
    app.add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}}));
    app.add_option("--cache-dir", cfg.cache_dir, std::string("Signature cache directory (default $") + cache_dir_env + ")");
    app.add_flag("--oracle", cfg.oracle_crosscheck, "Cross-check against the brute-force oracle");
    app.add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--base", cfg.base, "Base signature for covers, e.g. '0;2,2,2,2,2,2'");
    app.add_option("--sample", cfg.sample, "Records to re-validate in cache verify (default all)");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Mapping class group vcd, orbifold signature enumeration and inequality certificates", "orbvcd"};
    app.fallthrough();
    app.require_subcommand(1);
    add_options(app, cfg);

    auto* vcd = app.add_subcommand("vcd", "vcd of the genus-g mapping class group with n marked points");
    auto* sigs = app.add_subcommand("signatures", "Riemann-Hurwitz admissible quotient signatures");
    auto* covers = app.add_subcommand("covers", "Orbifold covers of a base signature");
    auto* check = app.add_subcommand("check", "Run a verification and emit certificates");
    check->add_option("claim", cfg.subcommand, "gendec | prop4 | claim-uno | prop5 | eq5")
        ->required()
        ->check(CLI::IsMember({"gendec", "prop4", "claim-uno", "prop5", "eq5"}));
    auto* cache = app.add_subcommand("cache", "Inspect, clear or re-validate the signature cache");
    cache->add_option("action", cfg.subcommand, "info | clear | verify")
        ->required()
        ->check(CLI::IsMember({"info", "clear", "verify"}));
    auto* recheck = app.add_subcommand("recheck", "Independently re-check a certificate stream");
    recheck->add_option("file", cfg.subcommand, "Certificate file, or - for stdin")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (vcd->parsed()) return cmd_vcd(cfg, out);
        if (sigs->parsed()) return cmd_signatures(cfg, out, err);
        if (covers->parsed()) return cmd_covers(cfg, out, err);
        if (check->parsed()) return cmd_check(cfg, out, err);
        if (cache->parsed()) return cmd_cache(cfg, out, err);
        if (recheck->parsed()) return cmd_recheck(cfg, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const CacheCorruption& e) {
        err << e.what() << '\n';
        return exit_cache_corrupt;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace orbvcd::cli
