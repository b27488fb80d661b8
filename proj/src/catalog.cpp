#include "invseq/catalog.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "invseq/gentree.hpp"
#include "invseq/series.hpp"

namespace invseq::catalog {

namespace {

using tables::MaxRec;
using tables::Shifted;
using tables::SplitMax;

const std::string kRule = "rule";
const std::string kRecurrence = "recurrence";
const std::string kGf = "gf";
const std::string kClosedSum = "closed_sum";

std::vector<Family> build_registry() {
    const std::string maxrec = "unique-maximum recurrence by (size, max, position)";
    const std::string split = "split at the first maximum, word tables on the right";
    return {
        {"010", {kRecurrence}, "A263779", 1, "split at the first maximum, refined by distinct values", {}},
        {"000,100", {kRule}, "A279564", 1, "two-parameter succession rule", {}},
        {"102,201", {kRecurrence, kRule, kGf, kClosedSum}, "A279566", 1,
         "unimodal and 101-containing recurrences; rule; algebraic GF; closed sums", {}},
        {"000,102", {kRule}, "A374541", 1, "one-parameter succession rule on sites", {}},
        {"102,210", {kRule, kGf}, "A374542", 1, "descent-based succession rule; algebraic GF", {}},
        {"000,201", {kRecurrence}, "A374543", 1, maxrec, {"000,210"}},
        {"100,110", {kRecurrence}, "A374544", 1, maxrec, {}},
        {"100,101", {kRecurrence}, "A374545", 1, maxrec, {}},
        {"110,201", {kRecurrence}, "A374546", 1, maxrec, {}},
        {"101,210", {kRecurrence}, "A374547", 1, maxrec, {}},
        {"011,120", {kRecurrence}, "A374548", 1, split, {}},
        {"100,120", {kRecurrence}, "A374549", 1, split, {}},
        {"120,201", {kRecurrence}, "A374550", 1, split, {}},
        {"110,120", {kRecurrence}, "A279570", 1, split, {}},
        {"010,120", {kRecurrence}, "A279559", 1, split, {}},
        {"101,120", {kRecurrence}, "A374551", 1, split, {}},
        {"000,120", {kRecurrence}, "A374552", 1, "split at the first maximum, refined by multiplicity of the maximum", {}},
        {"000,010", {kRecurrence}, "A279552", 1, "split at the first maximum, refined by distinct values", {}},
        {"010,210", {kRecurrence}, "A360052", 1, "split at the first maximum, refined by forbidden values", {"010,201"}},
        {"010,110", {kRecurrence}, "A359191", 1, "split at the first maximum, refined by forbidden values", {}},
        {"010,102", {kRecurrence}, "A374553", 1, "split at the first minimum over shifted sequences", {}},
        {"100,102", {kRecurrence}, "A374554", 1, "split at the first minimum over shifted sequences", {}},
    };
}

std::vector<Int> to_ints(const std::vector<std::uint64_t>& v) {
    std::vector<Int> out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(static_cast<unsigned long>(x));
    return out;
}

std::vector<Int> run_recurrence(const std::string& key, int n, const tables::Deadline& dl) {
    using namespace tables;
    if (key == "102,201") return terms_102_201_recurrence(n, dl);
    if (key == "000,201") return terms_maxrec(MaxRec::p000_201, n, dl);
    if (key == "100,110") return terms_maxrec(MaxRec::p100_110, n, dl);
    if (key == "100,101") return terms_maxrec(MaxRec::p100_101, n, dl);
    if (key == "110,201") return terms_maxrec(MaxRec::p110_201, n, dl);
    if (key == "101,210") return terms_maxrec(MaxRec::p101_210, n, dl);
    if (key == "011,120") return terms_splitmax(SplitMax::p011_120, n, dl);
    if (key == "100,120") return terms_splitmax(SplitMax::p100_120, n, dl);
    if (key == "120,201") return terms_splitmax(SplitMax::p120_201, n, dl);
    if (key == "110,120") return terms_splitmax(SplitMax::p110_120, n, dl);
    if (key == "010,120") return terms_splitmax(SplitMax::p010_120, n, dl);
    if (key == "101,120") return terms_splitmax(SplitMax::p101_120, n, dl);
    if (key == "000,120") return terms_splitmax(SplitMax::p000_120, n, dl);
    if (key == "010") return terms_splitmax(SplitMax::p010, n, dl);
    if (key == "000,010") return terms_splitmax(SplitMax::p000_010, n, dl);
    if (key == "010,210") return terms_splitmax(SplitMax::p010_210, n, dl);
    if (key == "010,110") return terms_splitmax(SplitMax::p010_110, n, dl);
    if (key == "010,102") return terms_shifted(Shifted::p010_102, n, dl);
    if (key == "100,102") return terms_shifted(Shifted::p100_102, n, dl);
    throw NotImplemented("no recurrence registered for " + key);
}

std::vector<Int> run_rule(const std::string& key, int n) {
    if (key == "000,100") return gentree::run_rule(gentree::rule_000_100(), n);
    if (key == "102,201") return gentree::run_rule(gentree::rule_102_201(), n);
    if (key == "000,102") return gentree::run_rule(gentree::rule_000_102(), n);
    if (key == "102,210") return gentree::run_rule(gentree::rule_102_210(), n);
    throw NotImplemented("no succession rule registered for " + key);
}

}  // namespace

const std::vector<Family>& registry() {
    static const std::vector<Family> reg = build_registry();
    return reg;
}

const Family* find(const PatternSet& P) {
    const std::string key = P.key();
    for (const auto& f : registry()) {
        if (f.key == key) return &f;
        if (std::find(f.aliases.begin(), f.aliases.end(), key) != f.aliases.end()) return &f;
    }
    return nullptr;
}

std::string nearest_key(const PatternSet& P) {
    std::set<std::string> mine;
    for (const auto& p : P.patterns()) mine.insert(p.str());
    std::string best;
    int best_score = -1;
    for (const auto& f : registry()) {
        std::vector<std::string> keys{f.key};
        keys.insert(keys.end(), f.aliases.begin(), f.aliases.end());
        for (const auto& k : keys) {
            int score = 0;
            const PatternSet other = PatternSet::parse(k);
            for (const auto& p : other.patterns()) score += static_cast<int>(mine.count(p.str()));
            if (score > best_score) best_score = score, best = k;
        }
    }
    return best;
}

std::vector<Int> fast_terms(const PatternSet& P, int n_max, const Options& opt) {
    if (n_max < 0) throw ParseError("n_max must be non-negative");
    if (opt.method && *opt.method == kBrute) return to_ints(oracle::inv_seq_terms(P, n_max, opt.budget));

    const Family* fam = find(P);
    if (!fam)
        throw NotImplemented("no fast method for {" + P.key() + "}; nearest registered family: {" +
                             nearest_key(P) + "}; use method 'brute'");
    const std::string method = opt.method.value_or(fam->methods.front());
    if (std::find(fam->methods.begin(), fam->methods.end(), method) == fam->methods.end())
        throw NotImplemented("method '" + method + "' is not registered for {" + fam->key + "}");

    opt.deadline.check(0);
    if (method == kRecurrence) return run_recurrence(fam->key, n_max, opt.deadline);
    if (method == kRule) return run_rule(fam->key, n_max);
    if (method == kGf) {
        if (fam->key == "102,201") return series::gf_102_201_terms(n_max);
        return series::gf_102_210_terms(n_max);
    }
    return tables::closed_sums_102_201(n_max, opt.deadline);
}

std::optional<int> first_mismatch(const std::vector<Int>& a, const std::vector<Int>& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return static_cast<int>(i);
    return std::nullopt;
}

bool CrosscheckReport::ok() const {
    return std::all_of(comparisons.begin(), comparisons.end(), [](const Comparison& c) { return !c.mismatch; });
}

CrosscheckReport crosscheck(const PatternSet& P, int n_small, int n_large, std::uint64_t budget) {
    const Family* fam = find(P);
    if (!fam) throw NotImplemented("no fast method for {" + P.key() + "}; nearest registered family: {" +
                                   nearest_key(P) + "}");
    CrosscheckReport rep{fam->key, {}};
    const auto brute = to_ints(oracle::inv_seq_terms(P, n_small, budget));
    std::vector<std::vector<Int>> large;
    for (const auto& m : fam->methods) {
        Options o;
        o.method = m;
        large.push_back(fast_terms(P, n_large, o));
        std::vector<Int> prefix(large.back().begin(), large.back().begin() + std::min<std::size_t>(n_small + 1, large.back().size()));
        rep.comparisons.push_back({kBrute, m, n_small, first_mismatch(brute, prefix)});
    }
    for (std::size_t i = 1; i < large.size(); ++i)
        rep.comparisons.push_back({fam->methods[0], fam->methods[i], n_large, first_mismatch(large[0], large[i])});
    return rep;
}

std::string manifest_text() {
    std::ostringstream os;
    for (const auto& f : registry()) {
        os << f.key << "\t" << f.oeis << "\t";
        for (std::size_t i = 0; i < f.methods.size(); ++i) os << (i ? "," : "") << f.methods[i];
        os << "\t";
        for (std::size_t i = 0; i < f.aliases.size(); ++i) os << (i ? "," : "") << f.aliases[i];
        if (f.aliases.empty()) os << "-";
        os << "\t" << f.construction << "\n";
    }
    return os.str();
}

std::string manifest_json() {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& f : registry())
        j.push_back({{"patterns", f.key},
                     {"methods", f.methods},
                     {"oeis", f.oeis},
                     {"oeis_offset", f.oeis_offset},
                     {"aliases", f.aliases},
                     {"construction", f.construction}});
    return j.dump(2);
}

}  // namespace invseq::catalog
