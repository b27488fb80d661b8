#pragma once

#include <array>

#include "invseq/core.hpp"
#include "invseq/grid.hpp"

// Counting tables for the word classes that appear on the right of a split
// decomposition. All tables read as zero outside their filled extent.
namespace invseq::words {

// Pascal triangle; C(n,k) is zero for negative arguments or k > n.
class Binomials {
public:
    explicit Binomials(int n_max);
    const Int& operator()(long n, long k) const;
    int n_max() const { return n_max_; }

private:
    int n_max_;
    std::vector<std::vector<Int>> rows_;
};

Int binom(long n, long k);
Int catalan(long n);
Int stirling1_unsigned(int n, int k);

// Distinct-letter 120-avoiders over [0,k-1].
Grid2<Int> table_011_120_b(int n_max, int k_max);
// 120-avoiders over [0,k-1] without repeated nonzero letters.
Grid2<Int> table_011_120_c(int n_max, int k_max);
// 120-avoiders without repeated non-maximal letters (closed form).
Grid2<Int> table_100_120_b(int n_max, int k_max);
Grid2<Int> catalan_triangle(int n_max, int k_max);
// 120-avoiders over [0,k] whose letters below k are nonincreasing.
Grid2<Int> table_120_201_b(int n_max, int k_max);

// Surjective {110,120}-avoiders; the {010,120} class has the same counts.
Grid2<Int> table_110_120_c(int n_max, int k_max);
// Refinement by the length of the leading strictly decreasing factor: (n, k, s).
Grid3<Int> table_110_120_c_refined(int n_max);
// {110,120}-avoiders of length at most n.
Grid2<Int> table_110_120_B(int n_max, int k_max);
// {010,120}-avoiders of length exactly n.
Grid2<Int> table_010_120_B(int n_max, int k_max);

// Integer coefficients of F(x,y) (all {101,120}-avoiders), F/(1-x) and (1-y)F.
Grid2<Int> table_words_F(int n_max, int k_max);
Grid2<Int> table_101_120_b(int n_max, int k_max);
Grid2<Int> table_010_102_b(int n_max, int k_max);

// Surjective 010-avoiders starting with their maximum.
Grid2<Int> table_010_b(int n_max, int k_max);
// Same with 000 also avoided.
Grid2<Int> table_000_010_b(int n_max, int k_max);
// 010-avoiders over [0,k] whose letters below k are nondecreasing with maximum k-1.
Grid2<Int> table_010_210_b(int n_max, int k_max);

struct Tables010_110 {
    // d1/d2 indexed (n, k, s): surjective {010,110}-avoiders with s active sites,
    // split by whether the top letter occurs once.
    Grid3<Int> d1, d2;
    // b indexed (n, k, f): {010,110}-avoiders over [0,k-1] with f forbidden values.
    Grid3<Int> b;
    // c indexed (n, k): avoiders of length at most n.
    Grid2<Int> c;
};
// The deadline is checked with reached = 0 while the tables are built.
Tables010_110 tables_010_110(int n_max, int k_max, const Deadline& dl = {});

struct Tables000_120 {
    Grid2<Int> f;                 // (n, k)
    std::array<Grid2<Int>, 4> d;  // d[2*(a-1)+(b-1)] indexed (n, k)
    Grid2<Int> b, c, b_no00, c_no00;

    const Int& d_at(int n, int k, int a, int b_) const { return d[2 * (a - 1) + (b_ - 1)](n, k); }
};
Tables000_120 tables_000_120(int n_max, int k_max, const Deadline& dl = {});

}  // namespace invseq::words
