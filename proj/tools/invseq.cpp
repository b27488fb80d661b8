#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "invseq/catalog.hpp"
#include "invseq/gentree.hpp"
#include "invseq/io.hpp"

using namespace invseq;

namespace {

constexpr int kExitOk = 0, kExitMismatch = 1, kExitUsage = 2;

struct Config {
    std::string patterns;
    int n_max = 10;
    std::string method = "auto";
    std::string format = "plain";
    std::uint64_t budget = oracle::kDefaultBudget;
};

catalog::Options options_for(const PatternSet& P, const Config& cfg) {
    catalog::Options o;
    o.budget = cfg.budget;
    if (cfg.method == "auto") {
        if (!catalog::find(P)) o.method = catalog::kBrute;
    } else {
        o.method = cfg.method;
    }
    return o;
}

int cmd_terms(const Config& cfg) {
    const PatternSet P = PatternSet::parse(cfg.patterns);
    const catalog::Family* fam = catalog::find(P);
    std::vector<Int> terms;
    try {
        terms = catalog::fast_terms(P, cfg.n_max, options_for(P, cfg));
    } catch (const BudgetExceeded& e) {
        if (fam || cfg.method != "auto") throw;
        throw BudgetExceeded(std::string(e.what()) + "; no fast method for {" + P.key() +
                             "}, nearest registered family: {" + catalog::nearest_key(P) + "}");
    }
    if (cfg.format == "bfile") std::cout << io::emit_bfile(terms, fam ? fam->oeis_offset : 1);
    else if (cfg.format == "json") std::cout << io::emit_json(P.key(), terms) << "\n";
    else std::cout << io::emit_plain(terms) << "\n";
    return kExitOk;
}

void print_report(const catalog::CrosscheckReport& rep) {
    for (const auto& c : rep.comparisons) {
        std::cout << rep.key << "\t" << c.lhs << " vs " << c.rhs << "\tn<=" << c.n_max << "\t";
        if (c.mismatch) std::cout << "MISMATCH at n=" << *c.mismatch << "\n";
        else std::cout << "agree\n";
    }
}

int check_bfile(const PatternSet& P, const std::string& path, const Config& cfg) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open b-file '" + path + "'");
    const catalog::Family* fam = catalog::find(P);
    const int offset = fam ? fam->oeis_offset : 1;
    const auto expected = io::terms_from_bfile(io::parse_bfile(in), offset);
    const int n = static_cast<int>(expected.size()) - 1;
    bool ok = true;
    const std::vector<std::string> methods =
        fam ? fam->methods : std::vector<std::string>{catalog::kBrute};
    for (const auto& m : methods) {
        catalog::Options o;
        o.method = m;
        o.budget = cfg.budget;
        const auto got = catalog::fast_terms(P, n, o);
        const auto bad = catalog::first_mismatch(expected, got);
        std::cout << P.key() << "\tb-file vs " << m << "\tn<=" << n << "\t";
        if (bad) std::cout << "MISMATCH at n=" << *bad << " (file " << expected[*bad] << ", computed " << got[*bad] << ")\n";
        else std::cout << "agree\n";
        ok = ok && !bad;
    }
    return ok ? kExitOk : kExitMismatch;
}

int cmd_crosscheck(const Config& cfg, bool all, int n_small, int n_large, const std::string& bfile) {
    std::vector<PatternSet> sets;
    if (all) {
        for (const auto& f : catalog::registry()) sets.push_back(PatternSet::parse(f.key));
    } else {
        if (cfg.patterns.empty()) throw CLI::ValidationError("crosscheck", "give a pattern set or --all");
        sets.push_back(PatternSet::parse(cfg.patterns));
    }
    if (!bfile.empty()) {
        if (sets.size() != 1) throw CLI::ValidationError("crosscheck", "--bfile needs a single pattern set");
        return check_bfile(sets.front(), bfile, cfg);
    }
    bool ok = true;
    for (const auto& P : sets) {
        const auto rep = catalog::crosscheck(P, n_small, n_large, cfg.budget);
        print_report(rep);
        ok = ok && rep.ok();
    }
    return ok ? kExitOk : kExitMismatch;
}

int cmd_bench(const Config& cfg, bool all, double timeout_s) {
    std::vector<PatternSet> sets;
    if (all) {
        for (const auto& f : catalog::registry()) sets.push_back(PatternSet::parse(f.key));
    } else {
        if (cfg.patterns.empty()) throw CLI::ValidationError("bench", "give a pattern set or --all");
        sets.push_back(PatternSet::parse(cfg.patterns));
    }
    std::printf("%-10s %-11s %6s %10s %12s %s\n", "patterns", "method", "n", "seconds", "terms/min", "status");
    for (const auto& P : sets) {
        catalog::Options o = options_for(P, cfg);
        o.deadline = tables::Deadline::after(std::chrono::milliseconds(static_cast<long>(timeout_s * 1000)));
        const catalog::Family* fam = catalog::find(P);
        const std::string method = o.method.value_or(fam ? fam->methods.front() : catalog::kBrute);
        const auto t0 = std::chrono::steady_clock::now();
        int reached = cfg.n_max;
        std::string status = "ok";
        try {
            catalog::fast_terms(P, cfg.n_max, o);
        } catch (const tables::DeadlineExceeded& e) {
            reached = e.reached();
            status = "timeout";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const double per_min = secs > 0 ? reached / secs * 60.0 : 0.0;
        std::printf("%-10s %-11s %6d %10.3f %12.0f %s\n", P.key().c_str(), method.c_str(), reached, secs,
                    per_min, status.c_str());
        std::fflush(stdout);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration of pattern-avoiding inversion sequences"};
    app.require_subcommand(1);
    Config cfg;
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget", cfg.budget, "Candidate budget for brute force")->envname("INVSEQ_BUDGET");
    };

    auto* terms = app.add_subcommand("terms", "Print t_0..t_n for a pattern set");
    terms->add_option("patterns", cfg.patterns, "Comma-separated patterns, e.g. 010 or 102,201")->required();
    terms->add_option("--n", cfg.n_max, "Largest size")->required()->check(CLI::NonNegativeNumber);
    terms->add_option("--method", cfg.method, "auto, brute, or a registered method");
    terms->add_option("--format", cfg.format)->check(CLI::IsMember({"plain", "bfile", "json"}));
    add_budget(terms);

    bool all = false;
    int n_small = 8, n_large = 100;
    std::string bfile;
    auto* cross = app.add_subcommand("crosscheck", "Compare brute force and every registered method");
    cross->add_option("patterns", cfg.patterns);
    cross->add_flag("--all", all, "Every registered family");
    cross->add_option("--small", n_small, "Largest size for brute force")->check(CLI::NonNegativeNumber);
    cross->add_option("--large", n_large, "Largest size for method agreement")->check(CLI::NonNegativeNumber);
    cross->add_option("--bfile", bfile, "Compare against a local b-file instead");
    add_budget(cross);

    double timeout_s = 60.0;
    auto* bench = app.add_subcommand("bench", "Time the preferred method");
    bench->add_option("patterns", cfg.patterns);
    bench->add_flag("--all", all, "Every registered family");
    bench->add_option("--n", cfg.n_max, "Target size")->check(CLI::NonNegativeNumber);
    bench->add_option("--method", cfg.method);
    bench->add_option("--timeout", timeout_s, "Seconds per family");
    add_budget(bench);

    std::string rule_id;
    bool list_rules = false;
    auto* rule = app.add_subcommand("rule", "Run a succession rule by id");
    rule->add_option("id", rule_id, "Rule id, e.g. omega.102_201")->check(CLI::IsMember(gentree::rule_ids()));
    rule->add_flag("--list", list_rules, "Print the known rule ids");
    rule->add_option("--n", cfg.n_max, "Largest size")->check(CLI::NonNegativeNumber);

    std::string manifest_format = "text";
    auto* manifest = app.add_subcommand("manifest", "List registered families");
    manifest->add_option("--format", manifest_format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*terms) return cmd_terms(cfg);
        if (*cross) return cmd_crosscheck(cfg, all, n_small, n_large, bfile);
        if (*bench) return cmd_bench(cfg, all, timeout_s);
        if (*rule) {
            if (list_rules) {
                for (const auto& id : gentree::rule_ids()) std::cout << id << "\n";
                return kExitOk;
            }
            if (rule_id.empty()) throw CLI::ValidationError("rule", "give a rule id or --list");
            std::cout << io::emit_plain(gentree::run_rule(gentree::rule_by_id(rule_id), cfg.n_max)) << "\n";
            return kExitOk;
        }
        if (*manifest) {
            std::cout << (manifest_format == "json" ? catalog::manifest_json() + "\n" : catalog::manifest_text());
            return kExitOk;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const catalog::NotImplemented& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
