#include "invseq/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace invseq::oracle {

namespace {

std::uint64_t saturating_product(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

[[noreturn]] void over_budget(std::uint64_t budget) {
    throw BudgetExceeded("exhaustive enumeration exceeds budget of " + std::to_string(budget) +
                         " candidates");
}

struct PrunedWalk {
    const PatternSet& P;
    int n;
    int s;
    std::uint64_t budget;
    std::uint64_t visited = 0;
    IntSeq seq;
    // Called on every avoiding prefix, including the empty one.
    std::function<void(const IntSeq&)> on_node;

    void run() {
        seq.clear();
        step();
    }

    void step() {
        if (++visited > budget) over_budget(budget);
        on_node(seq);
        const int d = static_cast<int>(seq.size());
        if (d == n) return;
        for (int v = 0; v < d + 1 + s; ++v) {
            seq.push_back(v);
            bool ok = true;
            for (const auto& p : P.patterns())
                if (contains_ending_at_last(seq, p)) {
                    ok = false;
                    break;
                }
            if (ok) step();
            seq.pop_back();
        }
    }
};

}  // namespace

void enumerate_inv_seqs(int n, int s, const PatternSet& P, const Visitor& visit, std::uint64_t budget) {
    if (n < 0 || s < 0) return;
    std::uint64_t candidates = 1;
    for (int i = 1; i <= n; ++i) candidates = saturating_product(candidates, static_cast<std::uint64_t>(i + s));
    if (candidates > budget) over_budget(budget);
    IntSeq seq(n, 0);
    while (true) {
        if (avoids(seq, P)) visit(seq);
        // Odometer increment, rightmost position fastest (lexicographic).
        int i = n - 1;
        while (i >= 0 && seq[i] == i + s) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
}

void enumerate_avoiders(int n, int s, const PatternSet& P, const Visitor& visit, std::uint64_t budget) {
    if (n < 0 || s < 0) return;
    PrunedWalk w{P, n, s, budget, 0, {}, {}};
    w.on_node = [&](const IntSeq& seq) {
        if (static_cast<int>(seq.size()) == n) visit(seq);
    };
    w.run();
}

std::vector<IntSeq> list_inv_seqs(int n, int s, const PatternSet& P, std::uint64_t budget) {
    std::vector<IntSeq> out;
    enumerate_inv_seqs(n, s, P, [&](std::span<const int> q) { out.emplace_back(q.begin(), q.end()); }, budget);
    return out;
}

std::uint64_t count_inv_seqs(int n, int s, const PatternSet& P, bool pruned, std::uint64_t budget) {
    std::uint64_t c = 0;
    auto inc = [&](std::span<const int>) { ++c; };
    if (pruned)
        enumerate_avoiders(n, s, P, inc, budget);
    else
        enumerate_inv_seqs(n, s, P, inc, budget);
    return c;
}

std::uint64_t count_inv_seqs_if(int n, int s, const PatternSet& P, const Predicate& pred, std::uint64_t budget) {
    std::uint64_t c = 0;
    enumerate_avoiders(n, s, P, [&](std::span<const int> q) { c += pred(q) ? 1 : 0; }, budget);
    return c;
}

std::vector<std::uint64_t> inv_seq_terms(const PatternSet& P, int n_max, std::uint64_t budget) {
    std::vector<std::uint64_t> terms(static_cast<std::size_t>(std::max(n_max, -1) + 1), 0);
    if (n_max < 0) return terms;
    PrunedWalk w{P, n_max, 0, budget, 0, {}, {}};
    w.on_node = [&](const IntSeq& seq) { ++terms[seq.size()]; };
    w.run();
    return terms;
}

void enumerate_words(const WordSpec& spec, const PatternSet& P, const Visitor& visit, std::uint64_t budget) {
    const int n = spec.n, k = spec.k;
    if (n < 0 || k < 0) return;
    if (k == 0) {
        if (n == 0) visit(IntSeq{});
        return;
    }
    std::uint64_t candidates = 1;
    for (int i = 0; i < n; ++i) candidates = saturating_product(candidates, static_cast<std::uint64_t>(k));
    if (candidates > budget) over_budget(budget);
    IntSeq w(n, 0);
    std::vector<int> used(k);
    while (true) {
        bool keep = true;
        if (spec.surjective) {
            std::fill(used.begin(), used.end(), 0);
            for (int v : w) used[v] = 1;
            keep = std::all_of(used.begin(), used.end(), [](int u) { return u != 0; });
        }
        if (keep && avoids(w, P)) visit(w);
        int i = n - 1;
        while (i >= 0 && w[i] == k - 1) w[i--] = 0;
        if (i < 0) break;
        ++w[i];
    }
}

std::uint64_t count_words(const WordSpec& spec, const PatternSet& P, std::uint64_t budget) {
    std::uint64_t c = 0;
    enumerate_words(spec, P, [&](std::span<const int>) { ++c; }, budget);
    return c;
}

std::uint64_t count_words_if(const WordSpec& spec, const PatternSet& P, const Predicate& pred, std::uint64_t budget) {
    std::uint64_t c = 0;
    enumerate_words(spec, P, [&](std::span<const int> w) { c += pred(w) ? 1 : 0; }, budget);
    return c;
}

bool check_binom_reduction(int n, int k, const PatternSet& P, std::uint64_t budget) {
    const std::uint64_t lhs = count_words({n, k, false}, P, budget);
    std::uint64_t rhs = 0;
    std::uint64_t binom = 1;  // C(k, d)
    for (int d = 0; d <= std::min(n, k); ++d) {
        rhs += binom * count_words({n, d, true}, P, budget);
        binom = binom * static_cast<std::uint64_t>(k - d) / static_cast<std::uint64_t>(d + 1);
    }
    return lhs == rhs;
}

}  // namespace invseq::oracle
