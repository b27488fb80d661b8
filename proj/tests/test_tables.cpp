#include <doctest.h>

#include <algorithm>
#include <string>

#include "invseq/gentree.hpp"
#include "invseq/oracle.hpp"
#include "invseq/tables.hpp"

using namespace invseq;
using namespace invseq::tables;

namespace {

using Seq = std::span<const int>;

std::vector<Int> ints(std::initializer_list<long> xs) {
    std::vector<Int> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

std::vector<Int> oracle_terms(const std::string& key, int n) {
    std::vector<Int> v;
    for (auto x : oracle::inv_seq_terms(PatternSet::parse(key), n)) v.emplace_back(static_cast<unsigned long>(x));
    return v;
}

Int brute(int n, const std::string& key, const oracle::Predicate& pred, int shift = 0) {
    return Int(static_cast<unsigned long>(oracle::count_inv_seqs_if(n, shift, PatternSet::parse(key), pred)));
}

int max_of(Seq s) { return s.empty() ? -1 : *std::max_element(s.begin(), s.end()); }
int occ(Seq s, int v) { return static_cast<int>(std::count(s.begin(), s.end(), v)); }
int first_pos(Seq s, int v) { return static_cast<int>(std::find(s.begin(), s.end(), v) - s.begin()) + 1; }

struct MaxRecCase {
    MaxRec family;
    const char* key;
    std::vector<Int> golden;
};

struct SplitCase {
    SplitMax family;
    const char* key;
    std::vector<Int> golden;
};

const std::vector<MaxRecCase> kMaxRec = {
    {MaxRec::p000_201, "000,201", ints({1, 1, 2, 5, 16, 60, 257, 1218})},
    {MaxRec::p100_110, "100,110", ints({1, 1, 2, 6, 22, 93, 437, 2233})},
    {MaxRec::p100_101, "100,101", ints({1, 1, 2, 6, 22, 93, 439, 2267})},
    {MaxRec::p110_201, "110,201", ints({1, 1, 2, 6, 23, 103, 512, 2739})},
    {MaxRec::p101_210, "101,210", ints({1, 1, 2, 6, 23, 103, 513, 2763})},
};

const std::vector<SplitCase> kSplit = {
    {SplitMax::p011_120, "011,120", ints({1, 1, 2, 5, 14, 42, 132, 431})},
    {SplitMax::p100_120, "100,120", ints({1, 1, 2, 6, 22, 92, 421, 2062})},
    {SplitMax::p120_201, "120,201", ints({1, 1, 2, 6, 23, 102, 498, 2607})},
    {SplitMax::p110_120, "110,120", ints({1, 1, 2, 6, 22, 92, 423, 2091})},
    {SplitMax::p010_120, "010,120", ints({1, 1, 2, 5, 15, 52, 201, 845})},
    {SplitMax::p101_120, "101,120", ints({1, 1, 2, 6, 22, 90, 397, 1859})},
    {SplitMax::p000_120, "000,120", ints({1, 1, 2, 5, 15, 50, 185, 737})},
    {SplitMax::p010, "010", ints({1, 1, 2, 5, 15, 53, 215, 979})},
    {SplitMax::p000_010, "000,010", ints({1, 1, 2, 4, 10, 29, 95, 345})},
    {SplitMax::p010_210, "010,210", ints({1, 1, 2, 5, 15, 53, 214, 958})},
    {SplitMax::p010_110, "010,110", ints({1, 1, 2, 5, 15, 52, 201, 847})},
};

constexpr int kOracleN = 9;
constexpr int kCellN = 7;

}  // namespace

TEST_CASE("102,201 recurrence") {
    CHECK(terms_102_201_recurrence(0) == ints({1}));
    CHECK(terms_102_201_recurrence(7) == ints({1, 1, 2, 6, 22, 87, 354, 1465}));
    CHECK(terms_102_201_recurrence(kOracleN) == oracle_terms("102,201", kOracleN));
    CHECK(terms_102_201_recurrence(60) == gentree::run_rule(gentree::rule_102_201(), 60));
}

TEST_CASE("102,201 closed sums") {
    CHECK(closed_sum_102_201(1) == 1);
    CHECK(closed_sum_102_201(4) == 22);
    CHECK_THROWS_AS(closed_sum_102_201(0), std::invalid_argument);
    const auto rec = terms_102_201_recurrence(40);
    for (int n = 1; n <= 40; ++n) CHECK(closed_sum_102_201(n) == rec[n]);
    CHECK(closed_sums_102_201(40) == rec);
    CHECK(closed_sums_102_201(0) == ints({1}));
    CHECK(closed_sums_102_201(200) == terms_102_201_recurrence(200));
}

TEST_CASE("102,201 refined tables") {
    const auto t = tables_102_201(12);
    // Catalan triangle: closed form against its defining recurrence.
    for (int n = 1; n <= 12; ++n)
        for (int m = 0; m < n; ++m) {
            Int s = 0;
            for (int i = 0; i <= m; ++i) s += t.a(n - 1, i);
            CHECK(t.a(n, m) == s);
        }
    const std::string key = "102,201";
    auto has_101 = [](Seq s) { return contains(s, Pattern::parse("101")); };
    for (int n = 1; n <= kCellN; ++n) {
        for (int m = 0; m < n; ++m)
            CHECK(t.a(n, m) == brute(n, key, [&](Seq s) {
                      return std::is_sorted(s.begin(), s.end()) && max_of(s) == m;
                  }));
        for (int s0 = 0; s0 < n; ++s0) {
            CHECK(t.b3(n, s0) == brute(n, key, [&](Seq s) {
                      return has_101(s) && second_max(s) == s0 && s0 <= s.back();
                  }));
            CHECK(t.c(n, s0) == brute(n, key, [&](Seq s) {
                      const int l = s.back();
                      if (has_101(s)) return l == s0 && l < second_max(s);
                      return l == s0 && l < max_of(s);
                  }));
        }
    }
    CHECK(t.b3(5, 0) == brute(5, key, [&](Seq s) { return has_101(s) && second_max(s) == 0; }));
    CHECK(t.b3(5, 0) > 0);
}

TEST_CASE("max-position families") {
    for (const auto& c : kMaxRec) {
        CAPTURE(c.key);
        CHECK(terms_maxrec(c.family, 7) == c.golden);
        CHECK(terms_maxrec(c.family, kOracleN) == oracle_terms(c.key, kOracleN));
        const auto a = maxrec_table(c.family, kCellN);
        for (int n = 1; n <= kCellN; ++n)
            for (int m = 0; m < n; ++m)
                for (int p = 1; p <= n; ++p) {
                    CAPTURE(n);
                    CAPTURE(m);
                    CAPTURE(p);
                    CHECK(a(n, m, p) == brute(n, c.key, [&](Seq s) {
                              return max_of(s) == m && occ(s, m) == 1 && first_pos(s, m) == p;
                          }));
                }
    }
    CHECK(maxrec_table(MaxRec::p100_110, 5)(5, 2, 3) == brute(5, "100,110", [](Seq s) {
              return max_of(s) == 2 && occ(s, 2) == 1 && first_pos(s, 2) == 3;
          }));
    CHECK(terms_maxrec(MaxRec::p000_201, 0) == ints({1}));
    CHECK(terms_maxrec(MaxRec::p101_210, 1) == ints({1, 1}));
}

TEST_CASE("split-at-maximum families: terms") {
    for (const auto& c : kSplit) {
        CAPTURE(c.key);
        CHECK(terms_splitmax(c.family, 7) == c.golden);
        const int n = c.family == SplitMax::p010_110 ? 8 : kOracleN;
        CHECK(terms_splitmax(c.family, n) == oracle_terms(c.key, n));
        CHECK(terms_splitmax(c.family, 0) == ints({1}));
    }
}

TEST_CASE("split-at-maximum families: refined cells") {
    for (const auto& c : kSplit) {
        CAPTURE(c.key);
        const auto t = splitmax_table(c.family, kCellN);
        const PatternSet P = PatternSet::parse(c.key);
        for (int n = 1; n <= kCellN; ++n)
            for (int m = 0; m < n; ++m)
                for (int x = 0; x < t.a.dim2(); ++x) {
                    oracle::Predicate pred;
                    switch (c.family) {
                        case SplitMax::p000_120:
                            pred = [&](Seq s) { return max_of(s) == m && occ(s, m) == x + 1; };
                            break;
                        case SplitMax::p010:
                        case SplitMax::p000_010:
                            pred = [&](Seq s) { return max_of(s) == m && stats(s).dist == x; };
                            break;
                        case SplitMax::p010_210:
                        case SplitMax::p010_110:
                            pred = [&](Seq s) {
                                return max_of(s) == m &&
                                       static_cast<int>(forbidden_values(s, P).size()) == x;
                            };
                            break;
                        default:
                            if (x > 0) continue;
                            pred = [&](Seq s) { return max_of(s) == m; };
                    }
                    CAPTURE(n);
                    CAPTURE(m);
                    CAPTURE(x);
                    CHECK(t.a(n, m, x) == brute(n, c.key, pred));
                }
    }
    const auto t = splitmax_table(SplitMax::p010_110, 5);
    CHECK(t.a(5, 2, 3) == brute(5, "010,110", [](Seq s) {
              return max_of(s) == 2 && forbidden_values(s, PatternSet::parse("010,110")).size() == 3;
          }));
}

TEST_CASE("101,120 auxiliary count") {
    const auto t = splitmax_table(SplitMax::p101_120, kCellN);
    for (int n = 1; n <= kCellN; ++n)
        for (int m = 0; m < n; ++m)
            CHECK(t.aux(n, m) == brute(n, "101,120", [&](Seq s) { return max_of(s) == m && s.back() == m; }));
}

TEST_CASE("shifted families") {
    CHECK(terms_shifted(Shifted::p010_102, 7) == ints({1, 1, 2, 5, 15, 51, 186, 707}));
    CHECK(terms_shifted(Shifted::p100_102, 7) == ints({1, 1, 2, 6, 21, 80, 318, 1305}));
    CHECK(terms_shifted(Shifted::p010_102, kOracleN) == oracle_terms("010,102", kOracleN));
    CHECK(terms_shifted(Shifted::p100_102, kOracleN) == oracle_terms("100,102", kOracleN));
    CHECK(terms_shifted(Shifted::p010_102, 0) == ints({1}));

    const int N = 8;
    const auto t010 = shifted_table(Shifted::p010_102, N);
    const auto t100 = shifted_table(Shifted::p100_102, N);
    const auto P010 = PatternSet::parse("010,102");
    const auto P100 = PatternSet::parse("100,102");
    for (int n = 0; n + 0 <= N; ++n)
        for (int s = 0; n + s <= N; ++s) {
            CAPTURE(n);
            CAPTURE(s);
            CHECK(t010.a(n, s) == Int(static_cast<unsigned long>(oracle::count_inv_seqs(n, s, P010))));
            CHECK(t100.a(n, s) == Int(static_cast<unsigned long>(oracle::count_inv_seqs(n, s, P100))));
            if (n >= 1)
                CHECK(t100.aux(n, s) == brute(n, "100,102", [](Seq q) { return occ(q, 0) > 0 && q[0] != 0; }, s));
        }
    CHECK(t010.a(4, 2) == Int(static_cast<unsigned long>(oracle::count_inv_seqs(4, 2, P010))));
}

TEST_CASE("symmetric pairs share their sequences") {
    CHECK(oracle_terms("000,210", 8) == terms_maxrec(MaxRec::p000_201, 8));
    CHECK(oracle_terms("010,201", 8) == terms_splitmax(SplitMax::p010_210, 8));
}

TEST_CASE("deadline") {
    CHECK_FALSE(Deadline{}.expired());
    const auto dl = Deadline::after(std::chrono::milliseconds(0));
    CHECK_THROWS_AS(terms_splitmax(SplitMax::p010, 50, dl), BudgetExceeded);
    CHECK_THROWS_AS(terms_maxrec(MaxRec::p100_101, 50, dl), BudgetExceeded);
    // The {010,110} word tables are built before the first level and honor it too.
    try {
        terms_splitmax(SplitMax::p010_110, 120, dl);
        FAIL("expected DeadlineExceeded");
    } catch (const DeadlineExceeded& e) {
        CHECK(e.reached() == 0);
    }
}
