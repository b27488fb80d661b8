#pragma once

#include <functional>
#include <vector>

#include "invseq/core.hpp"
#include "invseq/grid.hpp"

// Counting recurrences over refined statistics. Every `terms_*` function
// returns t_0, ..., t_{n_max} and checks the deadline once per size.
namespace invseq::tables {

using invseq::Deadline;
using invseq::DeadlineExceeded;

// {102,201}: a(n,m) unimodal with maximum m at the end, b1/b2/b3 by number of
// 101 occurrences pending, c merged tails; all indexed (n, second statistic).
struct Tables102_201 {
    Grid2<Int> a, b1, b2, b3, c;
    std::vector<Int> terms;
};
Tables102_201 tables_102_201(int n_max, const Deadline& dl = {});
std::vector<Int> terms_102_201_recurrence(int n_max, const Deadline& dl = {});
// Double and triple binomial sums for the same counts.
Int closed_sum_102_201(int n);
// The same sums for every n <= n_max, sharing the inner sum over the
// second largest value between sizes.
std::vector<Int> closed_sums_102_201(int n_max, const Deadline& dl = {});

// Families counted by (size, maximum, position of the unique maximum).
enum class MaxRec { p000_201, p100_110, p100_101, p110_201, p101_210 };

// Called with each finished level n and its plane indexed (m, p).
using PlaneVisitor = std::function<void(int n, const Grid2<Int>&)>;

std::vector<Int> terms_maxrec(MaxRec family, int n_max, const Deadline& dl = {},
                              const PlaneVisitor& visit = {});
// All planes for small n, indexed (n, m, p).
Grid3<Int> maxrec_table(MaxRec family, int n_max);

// Families counted by splitting at the first maximum.
enum class SplitMax {
    p011_120,
    p100_120,
    p120_201,
    p110_120,
    p010_120,
    p101_120,
    p000_120,  // extra index: number of maxima (1 or 2)
    p010,      // extra index: number of distinct values
    p000_010,  // extra index: number of distinct values
    p010_210,  // extra index: number of forbidden values
    p010_110,  // extra index: number of forbidden values
};

struct SplitTable {
    // (n, m, x); x is 0 for the two-index families.
    Grid3<Int> a;
    // Auxiliary count used by {101,120}, indexed (n, m); empty otherwise.
    Grid2<Int> aux;
    std::vector<Int> terms;
};

SplitTable splitmax_table(SplitMax family, int n_max, const Deadline& dl = {});
std::vector<Int> terms_splitmax(SplitMax family, int n_max, const Deadline& dl = {});

// Families counted through s-shifted inversion sequences.
enum class Shifted { p010_102, p100_102 };

struct ShiftedTable {
    // (n, s) for n + s <= n_max.
    Grid2<Int> a;
    Grid2<Int> aux;  // {100,102} only
    std::vector<Int> terms;
};

ShiftedTable shifted_table(Shifted family, int n_max, const Deadline& dl = {});
std::vector<Int> terms_shifted(Shifted family, int n_max, const Deadline& dl = {});

}  // namespace invseq::tables
