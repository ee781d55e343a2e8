// zuck: count and enumerate base-b Zuckerman numbers, compute the growth
// exponents, and run the 2-adic lower-bound search.

#include <fcntl.h>
#include <sys/file.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zuck/baseline.hpp"
#include "zuck/exponents.hpp"
#include "zuck/lowerbound.hpp"
#include "zuck/zc.hpp"
#include "zuck/zc10.hpp"

using json = nlohmann::ordered_json;
using namespace zuck;

namespace {

// truncated (not rounded) fixed-point rendering; table digits in the
// literature are truncated, so comparisons must be too
std::string trunc_digits(double x, int digits) {
    double scale = std::pow(10.0, digits);
    double t = std::floor(x * scale + 1e-9) / scale;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, t);
    return buf;
}

std::string iso_now() {
    char buf[32];
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string cache_path() {
    if (const char* p = std::getenv("ZUCK_CACHE")) return p;
    std::string dir;
    if (const char* x = std::getenv("XDG_DATA_HOME"))
        dir = std::string(x) + "/zuckerman";
    else if (const char* h = std::getenv("HOME"))
        dir = std::string(h) + "/.local/share/zuckerman";
    else
        dir = ".zuckerman";
    return dir + "/cache.jsonl";
}

void append_cache(int base, int digits, const std::string& algo, u128 count,
                  double wall_ms, uint64_t nodes) {
    std::string path = cache_path();
    size_t slash = path.rfind('/');
    if (slash != std::string::npos) {
        std::string dir = path.substr(0, slash);
        std::string cmd;
        for (size_t i = 0; i < dir.size(); ++i) {
            if (dir[i] == '/' && i > 0)
                mkdir(dir.substr(0, i).c_str(), 0755);
        }
        mkdir(dir.c_str(), 0755);
    }
    json rec;
    rec["base"] = base;
    rec["digits"] = digits;
    rec["algorithm"] = algo;
    rec["count"] = to_string(count);
    rec["wall_ms"] = static_cast<int64_t>(wall_ms);
    rec["node_count"] = nodes;
    rec["created_at"] = iso_now();
    std::string line = rec.dump() + "\n";

    int fd = ::open(path.c_str(), O_WRONLY | O_APPEND | O_CREAT, 0644);
    if (fd < 0) return; // cache is best effort
    ::flock(fd, LOCK_EX);
    ssize_t ignored = ::write(fd, line.data(), line.size());
    (void)ignored;
    ::flock(fd, LOCK_UN);
    ::close(fd);
}

struct CacheEntry {
    int base, digits;
    std::string algorithm, count;
};

std::vector<CacheEntry> load_cache() {
    std::vector<CacheEntry> out;
    std::ifstream in(cache_path());
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            json rec = json::parse(line);
            out.push_back({rec["base"].get<int>(), rec["digits"].get<int>(),
                           rec["algorithm"].get<std::string>(),
                           rec["count"].get<std::string>()});
        } catch (...) {
            // skip corrupt lines
        }
    }
    return out;
}

// one cross-check: any two cache rows for the same (base, digits) must agree
int cache_inconsistencies(const std::vector<CacheEntry>& entries,
                          bool print = false) {
    int bad = 0;
    for (size_t i = 0; i < entries.size(); ++i)
        for (size_t j = i + 1; j < entries.size(); ++j)
            if (entries[i].base == entries[j].base &&
                entries[i].digits == entries[j].digits &&
                entries[i].count != entries[j].count) {
                ++bad;
                if (print)
                    std::fprintf(stderr,
                                 "cache conflict: base=%d digits=%d %s(%s) vs %s(%s)\n",
                                 entries[i].base, entries[i].digits,
                                 entries[i].algorithm.c_str(),
                                 entries[i].count.c_str(),
                                 entries[j].algorithm.c_str(),
                                 entries[j].count.c_str());
            }
    return bad;
}

CountResult run_algo(const std::string& algo, int base, int digits,
                     double alpha, CountMode mode, unsigned threads,
                     const Budget& budget,
                     const std::function<void(const JobReport&)>& sink = {}) {
    Base b(base);
    if (algo == "brute") return count_brute(b, digits, mode, budget);
    if (algo == "multiples")
        return count_multiples(b, digits, alpha > 0 ? alpha : 0.5, mode,
                               threads, budget);
    if (algo == "dp") {
        if (mode == CountMode::Enumerate)
            throw std::invalid_argument("dp is a counting-only algorithm");
        return count_dp(b, digits, alpha > 0 ? alpha : 0.5, threads, budget);
    }
    if (algo == "mitm") return count_mitm(b, digits, mode, threads, budget);
    if (algo == "zc") {
        ZcOptions opt;
        opt.mode = mode;
        opt.alpha = alpha;
        opt.threads = threads;
        opt.budget = budget;
        opt.job_sink = sink;
        return zuckerman_count(b, digits, opt);
    }
    if (algo == "zc10") {
        if (base != 10)
            throw std::invalid_argument("zc10 requires --base 10");
        ZcOptions opt;
        opt.mode = mode;
        opt.alpha = alpha;
        opt.threads = threads;
        opt.budget = budget;
        opt.job_sink = sink;
        return zuckerman_count_10(digits, opt);
    }
    throw std::invalid_argument("unknown algorithm: " + algo);
}

// desk-scale caps used by `table counts` when no explicit cap is given
int default_cap(int base) {
    switch (base) {
        case 3: return 24;
        case 4: return 28;
        case 5: return 14;
        case 6: return 16;
        case 7: return 12;
        case 8: return 18;
        case 9: return 11;
        case 10: return 12;
        case 11: return 9;
        case 12: return 11;
        default: return 8;
    }
}

struct Config {
    Budget budget;
    std::map<int, int> caps; // per-base row caps for `table counts`
};

// optional budgets file: ZUCK_BUDGET_FILE, or zuck.budgets.json in the
// working directory; missing or malformed files fall back to defaults
Config load_config() {
    Config cfg;
    std::string path = "zuck.budgets.json";
    if (const char* p = std::getenv("ZUCK_BUDGET_FILE")) path = p;
    std::ifstream in(path);
    if (!in) return cfg;
    try {
        json doc = json::parse(in);
        if (doc.contains("max_nodes"))
            cfg.budget.max_nodes = doc["max_nodes"].get<uint64_t>();
        if (doc.contains("max_dp_states"))
            cfg.budget.max_dp_states = doc["max_dp_states"].get<uint64_t>();
        if (doc.contains("table_caps"))
            for (auto& [key, value] : doc["table_caps"].items())
                cfg.caps[std::stoi(key)] = value.get<int>();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "ignoring budget file %s: %s\n", path.c_str(),
                     e.what());
    }
    return cfg;
}

int cmd_count(int base, int digits, const std::string& algo, double alpha,
              bool enumerate, unsigned threads, uint64_t max_nodes,
              bool emit_jobs, bool as_json,
              const std::string& render = "value") {
    Budget budget = load_config().budget;
    if (max_nodes) budget.max_nodes = max_nodes;
    CountMode mode = enumerate ? CountMode::Enumerate : CountMode::Count;
    std::function<void(const JobReport&)> sink;
    if (emit_jobs)
        sink = [&](const JobReport& report) {
            json line;
            json counts = json::array();
            for (int d = 1; d < base; ++d)
                counts.push_back(report.job->comp.counts[d]);
            line["counts"] = counts;
            line["P"] = to_string(report.job->product);
            line["branch"] = report.job->large ? "large" : "small";
            line["count"] = to_string(report.count);
            std::cout << line.dump() << "\n";
        };
    CountResult result =
        run_algo(algo, base, digits, alpha, mode, threads, budget, sink);
    append_cache(base, digits, algo, result.count, result.stats.wall_ms,
                 result.stats.nodes);
    if (as_json) {
        json out;
        out["base"] = base;
        out["digits"] = digits;
        out["algorithm"] = algo;
        out["count"] = to_string(result.count);
        out["wall_ms"] = static_cast<int64_t>(result.stats.wall_ms);
        out["node_count"] = result.stats.nodes;
        if (enumerate) {
            json ws = json::array();
            for (u128 w : result.witnesses) ws.push_back(to_string(w));
            out["witnesses"] = ws;
        }
        std::cout << out.dump() << "\n";
    } else if (enumerate) {
        for (size_t i = 0; i < result.witnesses.size(); ++i) {
            std::cout << (i ? " " : "");
            if (render == "value") {
                std::cout << to_string(result.witnesses[i]);
            } else {
                DigitString ds;
                ds.base = base;
                ds.digits = to_digits_u128(result.witnesses[i], base);
                std::cout << ds.str(render == "digits-verbose");
            }
        }
        std::cout << "\n";
    } else {
        std::cout << to_string(result.count) << "\n";
    }
    return 0;
}

json exponent_row(int base) {
    ExponentReport report = exponent_report(Base(base));
    json row;
    row["base"] = base;
    row["z"] = trunc_digits(report.z, 8);
    row["z_plus"] = trunc_digits(report.z_plus, 8);
    row["z_star"] = trunc_digits(report.z_star, 8);
    json sets = json::array();
    for (const SetExponents& e : report.per_set) {
        json s;
        json members = json::array();
        for (int d : e.set.members()) members.push_back(d);
        s["digits"] = members;
        s["s1"] = trunc_digits(e.s1, 8);
        s["s2"] = trunc_digits(e.s2, 8);
        s["z"] = trunc_digits(e.z, 8);
        s["z_plus"] = trunc_digits(e.z_plus, 8);
        s["z_star"] = trunc_digits(e.z_star, 8);
        s["alpha"] = trunc_digits(alpha_beta_gamma(Base(base), e.set, e.s2).alpha, 8);
        sets.push_back(s);
    }
    row["sets"] = sets;
    return row;
}

int cmd_exponents(int lo, int hi, const std::string& format) {
    if (format == "json") {
        json out = json::array();
        for (int b = lo; b <= hi; ++b) out.push_back(exponent_row(b));
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    // csv mirrors the published layout: one row per exponent
    std::ostringstream z, zp, zs;
    std::cout << "exponent";
    for (int b = lo; b <= hi; ++b) std::cout << "," << b;
    std::cout << "\n";
    for (const char* which : {"z", "z_plus", "z_star"}) {
        std::cout << which;
        for (int b = lo; b <= hi; ++b) {
            ExponentReport r = exponent_report(Base(b));
            double v = std::string(which) == "z"
                           ? r.z
                           : (std::string(which) == "z_plus" ? r.z_plus
                                                             : r.z_star);
            std::cout << "," << trunc_digits(v, 8);
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_omega(int base) {
    json out;
    out["base"] = base;
    json sets = json::array();
    for (const DigitSet& set : omega_star(Base(base)).sets) {
        json members = json::array();
        for (int d : set.members()) members.push_back(d);
        sets.push_back(members);
    }
    out["omega_star"] = sets;
    out["w_b"] = w_b(Base(base));
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_delta(int ell, const std::string& method, const std::string& dump) {
    DeltaMethod m = method == "dfs"    ? DeltaMethod::dfs
                    : method == "brute" ? DeltaMethod::brute
                                        : DeltaMethod::dp;
    DeltaResult result = compute_delta(ell, m, /*with_witnesses=*/false);
    json out;
    out["ell"] = ell;
    out["method"] = method;
    if (result.infinite) {
        out["delta"] = "inf";
    } else {
        out["delta"] = std::to_string(result.delta_num) + "/" +
                       std::to_string(result.delta_den);
        out["delta_value"] = trunc_digits(
            static_cast<double>(result.delta_num) / result.delta_den, 8);
    }
    out["nodes"] = result.nodes;
    std::cout << out.dump() << "\n";
    if (!dump.empty()) {
        std::ofstream f(dump, std::ios::binary);
        f.write(reinterpret_cast<const char*>(result.table.min_nu.data()),
                static_cast<std::streamsize>(result.table.min_nu.size()));
    }
    return result.infinite ? 1 : 0;
}

int cmd_witness(int digits, int count, int ell) {
    DeltaResult result = compute_delta(ell, DeltaMethod::dp, true);
    for (const BigInt& w : generate_witness_zuckermans(
             digits, result.table, result, static_cast<size_t>(count)))
        std::cout << w.get_str() << "\n";
    return 0;
}

int cmd_table(const std::string& which, const std::string& format, int cap,
              unsigned threads, uint64_t max_nodes) {
    if (which == "exponents") return cmd_exponents(3, 12, format);

    Config cfg = load_config();
    Budget budget = cfg.budget;
    if (max_nodes) budget.max_nodes = max_nodes;

    if (which == "counts") {
        int max_rows = 0;
        std::vector<int> caps(13, 0);
        for (int b = 3; b <= 12; ++b) {
            int c = cap > 0 ? cap : default_cap(b);
            auto it = cfg.caps.find(b);
            if (cap <= 0 && it != cfg.caps.end()) c = it->second;
            caps[static_cast<size_t>(b)] = c;
            max_rows = std::max(max_rows, c);
        }
        auto cached = load_cache();
        std::vector<std::vector<std::string>> cells(
            static_cast<size_t>(max_rows) + 1,
            std::vector<std::string>(13));
        for (int b = 3; b <= 12; ++b)
            for (int n = 1; n <= caps[static_cast<size_t>(b)]; ++n) {
                std::string got;
                for (const CacheEntry& e : cached)
                    if (e.base == b && e.digits == n) { got = e.count; break; }
                if (got.empty()) {
                    try {
                        ZcOptions opt;
                        opt.threads = threads;
                        opt.budget = budget;
                        CountResult r = zuckerman_count(Base(b), n, opt);
                        got = to_string(r.count);
                        append_cache(b, n, "zc", r.count, r.stats.wall_ms,
                                     r.stats.nodes);
                    } catch (const std::exception&) {
                        got = ""; // over budget: leave the cell absent
                    }
                }
                cells[static_cast<size_t>(n)][static_cast<size_t>(b)] = got;
            }
        if (format == "json") {
            json out = json::array();
            for (int n = 1; n <= max_rows; ++n) {
                json row;
                row["N"] = n;
                for (int b = 3; b <= 12; ++b)
                    if (!cells[static_cast<size_t>(n)][static_cast<size_t>(b)].empty())
                        row[std::to_string(b)] =
                            cells[static_cast<size_t>(n)][static_cast<size_t>(b)];
                out.push_back(row);
            }
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "N";
            for (int b = 3; b <= 12; ++b) std::cout << "," << b;
            std::cout << "\n";
            for (int n = 1; n <= max_rows; ++n) {
                std::cout << n;
                for (int b = 3; b <= 12; ++b)
                    std::cout << ","
                              << cells[static_cast<size_t>(n)][static_cast<size_t>(b)];
                std::cout << "\n";
            }
        }
        return 0;
    }

    if (which == "errors") {
        auto cached = load_cache();
        if (format == "csv")
            std::cout << "base,N,count,empirical_z,z,rel_error\n";
        json rows = json::array();
        for (int b = 3; b <= 12; ++b) {
            int best_n = 0;
            std::string count;
            for (const CacheEntry& e : cached)
                if (e.base == b && e.digits > best_n) {
                    best_n = e.digits;
                    count = e.count;
                }
            if (best_n == 0) {
                // nothing cached: compute at the desk-scale cap
                int n = cap > 0 ? cap : default_cap(b);
                try {
                    ZcOptions opt;
                    opt.threads = threads;
                    opt.budget = budget;
                    CountResult r = zuckerman_count(Base(b), n, opt);
                    best_n = n;
                    count = to_string(r.count);
                    append_cache(b, n, "zc", r.count, r.stats.wall_ms,
                                 r.stats.nodes);
                } catch (const std::exception&) {
                    continue; // cell absent
                }
            }
            u128 c = u128_from_string(count);
            double ez = empirical_z(Base(b), best_n, c);
            double err = rel_error(Base(b), best_n, c);
            if (format == "csv") {
                std::cout << b << "," << best_n << "," << count << ","
                          << trunc_digits(ez, 8) << ","
                          << trunc_digits(z_heuristic(Base(b)), 8) << ","
                          << std::scientific << err << std::defaultfloat
                          << "\n";
            } else {
                json row;
                row["base"] = b;
                row["N"] = best_n;
                row["count"] = count;
                row["empirical_z"] = trunc_digits(ez, 8);
                row["z"] = trunc_digits(z_heuristic(Base(b)), 8);
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.1e", err);
                row["rel_error"] = buf;
                rows.push_back(row);
            }
        }
        if (format != "csv") std::cout << rows.dump(2) << "\n";
        return 0;
    }
    throw std::invalid_argument("unknown table: " + which);
}

int cmd_selftest(unsigned threads) {
    int failures = 0;
    auto fail = [&](const std::string& what) {
        ++failures;
        std::cout << "FAIL " << what << "\n";
    };

    // cross-algorithm equivalence matrix
    for (int b = 3; b <= 12; ++b)
        for (int n = 1; n <= 6; ++n) {
            Base base(b);
            u128 want = count_brute(base, n).count;
            if (count_multiples(base, n, 0.5, CountMode::Count, threads).count != want)
                fail("multiples b=" + std::to_string(b) + " N=" + std::to_string(n));
            if (count_dp(base, n, 0.5, threads).count != want)
                fail("dp b=" + std::to_string(b) + " N=" + std::to_string(n));
            if (count_mitm(base, n, CountMode::Count, threads).count != want)
                fail("mitm b=" + std::to_string(b) + " N=" + std::to_string(n));
            ZcOptions opt;
            opt.threads = threads;
            if (zuckerman_count(base, n, opt).count != want)
                fail("zc b=" + std::to_string(b) + " N=" + std::to_string(n));
            if (b == 10 && zuckerman_count_10(n, opt).count != want)
                fail("zc10 N=" + std::to_string(n));
        }
    std::cout << "cross-algorithm matrix: " << (failures ? "FAIL" : "ok") << "\n";

    // exponent identities
    int id_fail = 0;
    for (int b = 3; b <= 12; ++b) {
        for (const SetExponents& e : exponent_report(Base(b)).per_set) {
            auto at1 = alpha_beta_gamma(Base(b), e.set, e.s1);
            if (std::abs(at1.beta - at1.gamma) > 1e-9) ++id_fail;
            if (b >= 6) {
                auto at2 = alpha_beta_gamma(Base(b), e.set, e.s2);
                if (std::abs(at2.beta - at2.gamma / 2) > 1e-9) ++id_fail;
            }
        }
    }
    if (id_fail) fail("exponent identities (" + std::to_string(id_fail) + ")");
    std::cout << "exponent identities: " << (id_fail ? "FAIL" : "ok") << "\n";

    // delta methods agreement
    int delta_fail = 0;
    for (int ell = 1; ell <= 8; ++ell) {
        auto a = compute_delta(ell, DeltaMethod::brute, false);
        auto b2 = compute_delta(ell, DeltaMethod::dfs, false);
        auto c = compute_delta(ell, DeltaMethod::dp, false);
        if (a.table.min_nu != b2.table.min_nu || a.table.min_nu != c.table.min_nu)
            ++delta_fail;
    }
    if (delta_fail) fail("delta methods (" + std::to_string(delta_fail) + ")");
    std::cout << "delta methods ell<=8: " << (delta_fail ? "FAIL" : "ok") << "\n";

    int cache_bad = cache_inconsistencies(load_cache(), true);
    std::cout << "cache consistency: " << (cache_bad ? "FAIL" : "ok") << "\n";
    failures += cache_bad;

    std::cout << (failures ? "SELFTEST FAILED\n" : "selftest passed\n");
    return failures ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"base-b Zuckerman number workbench"};
    app.require_subcommand(1);

    int base = 10, digits = 1;
    std::string algo = "zc";
    double alpha = -1;
    unsigned threads = 1;
    uint64_t max_nodes = 0;
    bool enumerate_flag = false, emit_jobs = false, as_json = false;

    auto add_common = [&](CLI::App* cmd, bool with_algo) {
        cmd->add_option("--base,-b", base, "radix, 3..16")->required();
        cmd->add_option("--digits,-N", digits, "digit length")->required();
        if (with_algo)
            cmd->add_option("--algo,-a", algo,
                            "brute|multiples|dp|mitm|zc|zc10");
        cmd->add_option("--alpha", alpha, "product-size split in (0,1)");
        cmd->add_option("--threads,-t", threads, "worker threads");
        cmd->add_option("--max-nodes", max_nodes, "node budget override");
    };

    CLI::App* count = app.add_subcommand("count", "count Zuckerman numbers");
    add_common(count, true);
    count->add_flag("--enumerate", enumerate_flag, "list them instead");
    count->add_flag("--emit-jobs", emit_jobs, "stream per-composition counts");
    count->add_flag("--json", as_json, "JSON output");

    std::string render = "value";
    CLI::App* enumerate = app.add_subcommand("enumerate", "list Zuckerman numbers");
    add_common(enumerate, true);
    enumerate->add_flag("--json", as_json, "JSON output");
    enumerate->add_option("--render", render,
                          "value|digits|digits-verbose");

    int range_lo = 3, range_hi = 12;
    std::string format = "csv", base_range = "3..12";
    CLI::App* exponents = app.add_subcommand("exponents", "growth exponent table");
    exponents->add_option("--base-range", base_range, "for example 3..12");
    exponents->add_option("--format", format, "csv|json");

    int omega_base = 10;
    CLI::App* omega = app.add_subcommand("omega", "maximal digit-set family");
    omega->add_option("--base,-b", omega_base, "radix")->required();

    int ell = 24;
    std::string method = "dp", dump;
    CLI::App* delta = app.add_subcommand("delta", "2-adic min-max search");
    delta->add_option("--ell,-l", ell, "block length")->required();
    delta->add_option("--method", method, "dp|dfs|brute");
    delta->add_option("--dump", dump, "write min-nu bytes to a file");

    int wit_count = 1, wit_ell = 24;
    CLI::App* witness = app.add_subcommand("witness", "construct witness numbers");
    witness->add_option("--digits,-N", digits, "digit length")->required();
    witness->add_option("--count,-c", wit_count, "how many");
    witness->add_option("--ell,-l", wit_ell, "block length");

    std::string which = "counts";
    int cap = 0;
    CLI::App* table = app.add_subcommand("table", "reproduce a data table");
    table->add_option("--which", which, "exponents|counts|errors")->required();
    table->add_option("--format", format, "csv|json");
    table->add_option("--cap", cap, "row cap override");
    table->add_option("--threads,-t", threads, "worker threads");
    table->add_option("--max-nodes", max_nodes, "node budget override");

    CLI::App* selftest = app.add_subcommand("selftest", "cross-check everything");
    selftest->add_option("--threads,-t", threads, "worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (count->parsed())
            return cmd_count(base, digits, algo, alpha, enumerate_flag, threads,
                             max_nodes, emit_jobs, as_json);
        if (enumerate->parsed())
            return cmd_count(base, digits, algo, alpha, /*enumerate=*/true,
                             threads, max_nodes, false, as_json, render);
        if (exponents->parsed()) {
            size_t dots = base_range.find("..");
            if (dots == std::string::npos)
                throw std::invalid_argument("--base-range wants lo..hi");
            range_lo = std::stoi(base_range.substr(0, dots));
            range_hi = std::stoi(base_range.substr(dots + 2));
            return cmd_exponents(range_lo, range_hi, format);
        }
        if (omega->parsed()) return cmd_omega(omega_base);
        if (delta->parsed()) return cmd_delta(ell, method, dump);
        if (witness->parsed()) return cmd_witness(digits, wit_count, wit_ell);
        if (table->parsed())
            return cmd_table(which, format, cap, threads, max_nodes);
        if (selftest->parsed()) return cmd_selftest(threads);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
