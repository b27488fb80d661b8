#include "invseq/core.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace invseq {

namespace {

int sgn(int x) { return (x > 0) - (x < 0); }

// Extends a partial occurrence of rho. `chosen[u]` holds the value matched to
// pattern position u for u < t. When `last` is set, pattern position k-1 is
// pinned to the final entry of seq and only positions < limit are searched.
bool extend(std::span<const int> seq, const IntSeq& rho, std::size_t t, std::size_t from,
            std::size_t limit, std::vector<int>& chosen, const int* last) {
    const std::size_t k = last ? rho.size() - 1 : rho.size();
    if (t == k) return true;
    // Need k - t more entries from [from, limit).
    for (std::size_t i = from; i + (k - t) <= limit; ++i) {
        const int x = seq[i];
        bool ok = true;
        for (std::size_t u = 0; u < t && ok; ++u)
            ok = sgn(x - chosen[u]) == sgn(rho[t] - rho[u]);
        if (ok && last) ok = sgn(x - *last) == sgn(rho[t] - rho.back());
        if (!ok) continue;
        chosen[t] = x;
        if (extend(seq, rho, t + 1, i + 1, limit, chosen, last)) return true;
    }
    return false;
}

}  // namespace

Pattern Pattern::canonicalize(std::span<const int> seq) {
    if (seq.empty()) throw ParseError("cannot canonicalize an empty sequence");
    std::vector<int> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    IntSeq out;
    out.reserve(seq.size());
    for (int v : seq)
        out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()));
    return Pattern(std::move(out));
}

Pattern Pattern::parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty pattern");
    IntSeq digits;
    for (char c : text) {
        if (c < '0' || c > '9') throw ParseError("pattern must be a digit string: '" + std::string(text) + "'");
        digits.push_back(c - '0');
    }
    Pattern p = canonicalize(digits);
    if (p.terms_ != digits)
        throw ParseError("pattern '" + std::string(text) + "' is not canonical (expected '" + p.str() + "')");
    return p;
}

std::string Pattern::str() const {
    std::string s;
    for (int v : terms_) {
        if (v > 9) return to_string(terms_);
        s.push_back(static_cast<char>('0' + v));
    }
    return s;
}

PatternSet::PatternSet(std::vector<Pattern> patterns) : patterns_(std::move(patterns)) {
    std::sort(patterns_.begin(), patterns_.end(),
              [](const Pattern& a, const Pattern& b) { return a.str() < b.str(); });
    patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

PatternSet PatternSet::parse(std::string_view text) {
    std::vector<Pattern> ps;
    if (text.empty()) return PatternSet{};
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view part = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
        ps.push_back(Pattern::parse(part));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return PatternSet(std::move(ps));
}

std::string PatternSet::key() const {
    std::string k;
    for (const auto& p : patterns_) {
        if (!k.empty()) k.push_back(',');
        k += p.str();
    }
    return k;
}

bool contains(std::span<const int> seq, const Pattern& rho) {
    if (rho.size() > seq.size()) return false;
    std::vector<int> chosen(rho.size());
    return extend(seq, rho.terms(), 0, 0, seq.size(), chosen, nullptr);
}

bool contains_any(std::span<const int> seq, const PatternSet& P) {
    for (const auto& p : P.patterns())
        if (contains(seq, p)) return true;
    return false;
}

bool avoids(std::span<const int> seq, const PatternSet& P) { return !contains_any(seq, P); }

bool contains_ending_at_last(std::span<const int> seq, const Pattern& rho) {
    if (rho.size() > seq.size() || seq.empty()) return false;
    std::vector<int> chosen(rho.size());
    const int last = seq.back();
    return extend(seq, rho.terms(), 0, 0, seq.size() - 1, chosen, &last);
}

bool is_shifted_inv_seq(std::span<const int> seq, int s) {
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq[i] < 0 || seq[i] >= static_cast<int>(i) + 1 + s) return false;
    return true;
}

Stats stats(std::span<const int> seq) {
    Stats st;
    if (seq.empty()) return st;
    std::map<int, int> mult;
    const int n = static_cast<int>(seq.size());
    for (int i = 0; i < n; ++i) {
        const int v = seq[i];
        ++mult[v];
        if (v > st.max) {
            st.max = v;
            st.firstmax = i + 1;
        }
        if (v == st.max) st.lastmax = i + 1;
        if (i + 1 < n && v > seq[i + 1]) st.des.push_back(i + 1);
    }
    st.min = mult.begin()->first;
    st.dist = static_cast<int>(mult.size());
    for (const auto& [v, c] : mult) {
        st.vals.push_back(v);
        if (c >= 2) st.rep = v;
    }
    for (const auto& [v, c] : mult)
        if (v > st.rep) ++st.top;
    return st;
}

int second_max(std::span<const int> seq) {
    int mx = -1;
    for (int v : seq) mx = std::max(mx, v);
    int sec = -1;
    for (int v : seq)
        if (v < mx) sec = std::max(sec, v);
    return sec;
}

std::vector<int> forbidden_values(std::span<const int> alpha, const PatternSet& P) {
    if (contains_any(alpha, P)) throw std::invalid_argument("forbidden_values: alpha contains a pattern of P");
    int mx = -1;
    for (int v : alpha) mx = std::max(mx, v);
    IntSeq probe(alpha.begin(), alpha.end());
    probe.push_back(mx + 1);
    probe.push_back(0);
    std::vector<int> out;
    for (int v = 0; v <= mx; ++v) {
        probe.back() = v;
        if (contains_any(probe, P)) out.push_back(v);
    }
    return out;
}

std::string to_string(std::span<const int> seq) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < seq.size(); ++i) os << (i ? "," : "") << seq[i];
    os << ')';
    return os.str();
}

Deadline Deadline::after(std::chrono::milliseconds budget) {
    Deadline d;
    d.at_ = std::chrono::steady_clock::now() + budget;
    return d;
}

bool Deadline::expired() const {
    return at_ && std::chrono::steady_clock::now() > *at_;
}

void Deadline::check(int reached) const {
    if (expired()) throw DeadlineExceeded("time budget exhausted after n = " + std::to_string(reached), reached);
}

}  // namespace invseq
