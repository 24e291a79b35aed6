/* Command-line front end: counting, enumeration, mapping, series dumps,
 * theorem sweeps, b-file cross-checks, and count-cache persistence. */

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semifib/bfile.hpp"
#include "semifib/bijection.hpp"
#include "semifib/budget.hpp"
#include "semifib/count_cache.hpp"
#include "semifib/json_io.hpp"
#include "semifib/power_partitions.hpp"
#include "semifib/semifib.hpp"
#include "semifib/series.hpp"
#include "semifib/verify.hpp"

namespace {

using namespace semifib;

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("range must look like A..B");
    std::size_t used_a = 0, used_b = 0;
    std::uint64_t a, b;
    try {
        a = std::stoull(text.substr(0, dots), &used_a);
        b = std::stoull(text.substr(dots + 2), &used_b);
    } catch (const std::exception&) {
        throw std::invalid_argument("range must look like A..B with integer bounds");
    }
    if (used_a != dots || used_b != text.size() - dots - 2)
        throw std::invalid_argument("range must look like A..B with integer bounds");
    if (a > b)
        throw std::invalid_argument("range bounds must satisfy A <= B");
    return {a, b};
}

void preload_from_cache(ModulusContext& ctx, const std::string& path) {
    for (const CacheEntry& e : cache_import(path))
        if (e.m == ctx.modulus()) ctx.preload(e.n, e.value);
}

void print_report_text(const VerificationReport& rep) {
    std::cout << rep.theorem << ": " << (rep.passed ? "pass" : "fail")
              << " cases=" << rep.cases_checked << " elapsed_ms=" << rep.elapsed_ms;
    if (!rep.note.empty()) std::cout << " note=\"" << rep.note << "\"";
    std::cout << '\n';
    if (rep.first_counterexample) {
        std::cout << "  first_counterexample:";
        for (const auto& [key, value] : *rep.first_counterexample)
            std::cout << ' ' << key << '=' << value;
        std::cout << '\n';
    }
}

int run(int argc, char** argv) {
    CLI::App app{"semi-m-Fibonacci partition toolkit"};
    app.require_subcommand(1);
    const Budget budget = Budget::from_env();

    // count
    auto* count_cmd = app.add_subcommand("count", "count the partitions of n");
    std::uint64_t count_m = 0;
    long long count_n = -1;
    std::string count_range, count_format = "text", count_cache_path;
    count_cmd->add_option("--m", count_m, "modulus (>= 2)")->required();
    count_cmd->add_option("--n", count_n, "single argument");
    count_cmd->add_option("--range", count_range, "sweep A..B (inclusive)");
    count_cmd->add_option("--format", count_format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    count_cmd->add_option("--cache", count_cache_path, "preload counts from a cache file");

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "list the partitions of n");
    std::uint64_t enum_m = 0, enum_n = 0;
    std::string enum_format = "text";
    enum_cmd->add_option("--m", enum_m, "modulus (>= 2)")->required();
    enum_cmd->add_option("--n", enum_n, "weight")->required();
    enum_cmd->add_option("--format", enum_format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    // map
    auto* map_cmd = app.add_subcommand("map", "apply the bijection to one partition");
    std::uint64_t map_m = 0;
    std::string map_direction, map_partition_text, map_format = "text";
    map_cmd->add_option("--m", map_m, "modulus (>= 2)")->required();
    map_cmd->add_option("--direction", map_direction, "sf2nd|nd2sf")
        ->required()
        ->check(CLI::IsMember({"sf2nd", "nd2sf"}));
    map_cmd->add_option("--partition", map_partition_text,
                        "comma-separated parts, e.g. \"9,2\"")
        ->required();
    map_cmd->add_option("--format", map_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    // series
    auto* series_cmd = app.add_subcommand("series", "dump generating-series coefficients");
    std::uint64_t series_m = 0, series_order = 0;
    std::string series_which = "g", series_format = "csv";
    series_cmd->add_option("--m", series_m, "modulus (>= 2)")->required();
    series_cmd->add_option("--order", series_order, "truncation degree")->required();
    series_cmd->add_option("--which", series_which, "g|j")
        ->check(CLI::IsMember({"g", "j"}));
    series_cmd->add_option("--format", series_format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "sweep-check the stated identities");
    std::vector<std::string> verify_theorems;
    std::string verify_profile = "quick";
    bool verify_json = false, verify_exhaustive = false;
    verify_cmd->add_option("--theorem", verify_theorems,
                           "theorem id (repeatable; default: all)");
    verify_cmd->add_option("--profile", verify_profile, "quick|full")
        ->check(CLI::IsMember({"quick", "full"}));
    verify_cmd->add_flag("--json", verify_json, "emit a JSON report array");
    verify_cmd->add_flag("--exhaustive", verify_exhaustive,
                         "keep sweeping after a failure and list every counterexample");

    // oeis
    auto* oeis_cmd = app.add_subcommand("oeis", "cross-check counts against a b-file");
    std::string oeis_bfile, oeis_offset = "AUTO";
    std::uint64_t oeis_m = 2, oeis_max_n = 0;
    bool oeis_json = false;
    oeis_cmd->add_option("--bfile", oeis_bfile, "path to the b-file")->required();
    oeis_cmd->add_option("--m", oeis_m, "modulus (default 2)");
    oeis_cmd->add_option("--offset", oeis_offset, "AUTO or a fixed integer shift");
    oeis_cmd->add_option("--max-n", oeis_max_n, "compare only entries with n <= this");
    oeis_cmd->add_flag("--json", oeis_json, "emit a JSON report");

    // cache
    auto* cache_cmd = app.add_subcommand("cache", "persist or validate memoized counts");
    std::string cache_path;
    cache_cmd->add_option("--path", cache_path, "cache file")->required();
    auto* cache_export_cmd = cache_cmd->add_subcommand("export", "compute and write counts");
    std::uint64_t cache_m = 0;
    std::string cache_range;
    cache_export_cmd->add_option("--m", cache_m, "modulus (>= 2)")->required();
    cache_export_cmd->add_option("--range", cache_range, "populate counts for A..B")
        ->required();
    auto* cache_import_cmd = cache_cmd->add_subcommand("import", "read and validate a file");
    cache_cmd->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (count_cmd->parsed()) {
        ModulusContext ctx(count_m);
        if (!count_cache_path.empty()) preload_from_cache(ctx, count_cache_path);
        const bool have_n = count_cmd->count("--n") > 0;
        const bool have_range = !count_range.empty();
        if (have_n == have_range)
            throw std::invalid_argument("count needs exactly one of --n and --range");
        if (have_n) {
            if (count_n < 0) throw std::invalid_argument("--n must be nonnegative");
            CountValue v = ctx.sf_count(count_n);
            if (count_format == "text")
                std::cout << v.get_str() << '\n';
            else if (count_format == "csv")
                std::cout << count_n << ',' << v.get_str() << '\n';
            else
                std::cout << count_json(count_m, static_cast<std::uint64_t>(count_n), v)
                          << '\n';
            return 0;
        }
        const auto [a, b] = parse_range(count_range);
        if (b - a + 1 > budget.sweep_limit)
            throw BudgetError("range of " + std::to_string(b - a + 1) +
                              " arguments exceeds the sweep limit of " +
                              std::to_string(budget.sweep_limit));
        std::vector<std::pair<std::uint64_t, CountValue>> counts;
        counts.reserve(b - a + 1);
        for (std::uint64_t n = a; n <= b; ++n) {
            counts.emplace_back(n, ctx.sf_count(static_cast<long long>(n)));
            if (n == b) break;  // unsigned wrap guard for b = UINT64_MAX
        }
        if (count_format == "json") {
            std::cout << counts_json(count_m, counts) << '\n';
        } else {
            const char sep = count_format == "csv" ? ',' : ' ';
            for (const auto& [n, v] : counts) std::cout << n << sep << v.get_str() << '\n';
        }
        return 0;
    }

    if (enum_cmd->parsed()) {
        ModulusContext ctx(enum_m);
        PartitionSet set = enumerate_sf(ctx, enum_n, budget);
        if (enum_format == "json") {
            std::cout << partition_set_json(set, enum_m, true) << '\n';
        } else if (enum_format == "csv") {
            for (const Partition& p : set.elements()) {
                const auto& parts = p.parts();
                for (std::size_t i = 0; i < parts.size(); ++i)
                    std::cout << (i ? "," : "") << parts[i];
                std::cout << '\n';
            }
        } else {
            for (const Partition& p : set.elements()) std::cout << p.to_text() << '\n';
        }
        return 0;
    }

    if (map_cmd->parsed()) {
        const Partition source = Partition::parse(map_partition_text);
        const MapDirection dir =
            map_direction == "sf2nd" ? MapDirection::sf_to_nd : MapDirection::nd_to_sf;
        BijectionRecord record = map_partition(source, map_m, dir, budget);
        if (map_format == "json")
            std::cout << bijection_json(record) << '\n';
        else
            std::cout << record.image.to_text() << '\n';
        return 0;
    }

    if (series_cmd->parsed()) {
        PowerSeries s = series_which == "g" ? series_G(series_m, series_order)
                                            : series_J(series_m, series_order);
        if (series_format == "json")
            std::cout << series_json(s) << '\n';
        else
            std::cout << series_csv(s);
        return 0;
    }

    if (verify_cmd->parsed()) {
        const Profile profile = profile_from_string(verify_profile);
        Verifier verifier(budget, verify_exhaustive);
        std::vector<VerificationReport> reports;
        if (verify_theorems.empty()) {
            reports = verifier.verify_all(profile);
        } else {
            for (const std::string& name : verify_theorems)
                reports.push_back(
                    verifier.verify(default_params(theorem_from_string(name), profile)));
        }
        bool all_pass = true;
        for (const VerificationReport& rep : reports) all_pass = all_pass && rep.passed;
        if (verify_json) {
            std::cout << reports_json(reports) << '\n';
        } else {
            for (const VerificationReport& rep : reports) print_report_text(rep);
            if (verify_exhaustive && !verifier.failures().empty()) {
                std::cout << "all_counterexamples:\n";
                for (const Counterexample& ce : verifier.failures()) {
                    std::cout << " ";
                    for (const auto& [key, value] : ce) std::cout << ' ' << key << '=' << value;
                    std::cout << '\n';
                }
            }
        }
        return all_pass ? 0 : 1;
    }

    if (oeis_cmd->parsed()) {
        BFile bfile = BFile::parse_file(oeis_bfile);
        long long shift = offset_auto;
        if (oeis_offset != "AUTO" && oeis_offset != "auto") {
            try {
                std::size_t used = 0;
                shift = std::stoll(oeis_offset, &used);
                if (used != oeis_offset.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw std::invalid_argument("--offset must be AUTO or an integer");
            }
        }
        VerificationReport rep = oeis_check(bfile, oeis_m, shift, oeis_max_n);
        if (oeis_json)
            std::cout << report_json(rep) << '\n';
        else
            print_report_text(rep);
        return rep.passed ? 0 : 1;
    }

    if (cache_cmd->parsed()) {
        if (cache_export_cmd->parsed()) {
            ModulusContext ctx(cache_m);
            const auto [a, b] = parse_range(cache_range);
            if (b - a + 1 > budget.sweep_limit)
                throw BudgetError("range of " + std::to_string(b - a + 1) +
                                  " arguments exceeds the sweep limit of " +
                                  std::to_string(budget.sweep_limit));
            for (std::uint64_t n = a; n <= b; ++n) {
                ctx.sf_count(static_cast<long long>(n));
                if (n == b) break;
            }
            const std::size_t rows = cache_export({&ctx}, cache_path);
            std::cout << "exported " << rows << " rows to " << cache_path << '\n';
        } else if (cache_import_cmd->parsed()) {
            const std::size_t rows = cache_import(cache_path).size();
            std::cout << "imported " << rows << " rows from " << cache_path << '\n';
        }
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
