#include "invseq/words.hpp"

#include <algorithm>
#include <stdexcept>

#include "invseq/series.hpp"

namespace invseq::words {

namespace {

const Int kZero{};

void check_dims(int n_max, int k_max) {
    if (n_max < 0 || k_max < 0) throw std::invalid_argument("table dimensions must be non-negative");
}

Int divexact(Int num, unsigned long den) {
    mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), den);
    return num;
}

// rising[s][t] = s (s+1) ... (s+t-1)
std::vector<std::vector<Int>> rising_table(int s_max, int t_max) {
    std::vector<std::vector<Int>> r(s_max + 1, std::vector<Int>(t_max + 1));
    for (int s = 0; s <= s_max; ++s) {
        r[s][0] = 1;
        for (int t = 1; t <= t_max; ++t) r[s][t] = r[s][t - 1] * (s + t - 1);
    }
    return r;
}

}  // namespace

Binomials::Binomials(int n_max) : n_max_(n_max), rows_(n_max + 1) {
    for (int n = 0; n <= n_max; ++n) {
        rows_[n].resize(n + 1);
        rows_[n][0] = rows_[n][n] = 1;
        for (int k = 1; k < n; ++k) rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
    }
}

const Int& Binomials::operator()(long n, long k) const {
    if (n < 0 || k < 0 || k > n) return kZero;
    if (n > n_max_) throw std::out_of_range("binomial table too small");
    return rows_[n][k];
}

Int binom(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int catalan(long n) {
    if (n < 0) return 0;
    return divexact(binom(2 * n, n), static_cast<unsigned long>(n + 1));
}

Int stirling1_unsigned(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    std::vector<Int> row{1};  // row for size 0
    for (int m = 1; m <= n; ++m) {
        std::vector<Int> next(m + 1);
        for (int j = 1; j <= m; ++j) next[j] = row.size() > static_cast<std::size_t>(j - 1) ? row[j - 1] : Int(0);
        for (int j = 0; j < m; ++j) next[j] += (m - 1) * row[j];
        row = std::move(next);
    }
    return row[k];
}

Grid2<Int> table_011_120_b(int n_max, int k_max) {
    check_dims(n_max, k_max);
    Grid2<Int> t(n_max + 1, k_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        const Int cat = catalan(n);
        for (int k = n; k <= k_max; ++k) t.at(n, k) = binom(k, n) * cat;
    }
    return t;
}

Grid2<Int> table_011_120_c(int n_max, int k_max) {
    check_dims(n_max, k_max);
    Grid2<Int> c(n_max + 1, k_max + 1);
    for (int k = 0; k <= k_max; ++k) c.at(0, k) = 1;
    for (int n = 1; n <= n_max; ++n) {
        if (k_max >= 1) c.at(n, 1) = 1;  // only 0^n
        const Int cat = catalan(n);
        for (int k = 2; k <= k_max; ++k)
            c.at(n, k) = 2 * c(n, k - 1) + c(n - 1, k) - c(n - 1, k - 1) - binom(k - 2, n) * cat;
    }
    return c;
}

Grid2<Int> table_100_120_b(int n_max, int k_max) {
    check_dims(n_max, k_max);
    Grid2<Int> t(n_max + 1, k_max + 1);
    t.at(0, 0) = 1;
    for (int n = 0; n <= n_max; ++n)
        for (int k = 1; k <= k_max; ++k) {
            Int acc = 0;
            for (int d = 0; d <= std::min(n, k); ++d) acc += binom(k - 1, d) * binom(n + d, n) * (n - d + 1);
            t.at(n, k) = divexact(acc, n + 1);
        }
    return t;
}

Grid2<Int> catalan_triangle(int n_max, int k_max) {
    check_dims(n_max, k_max);
    Grid2<Int> e(n_max + 1, k_max + 1);
    for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= std::min(n, k_max); ++k) e.at(n, k) = divexact(binom(n + k, n) * (n - k + 1), n + 1);
    return e;
}

Grid2<Int> table_120_201_b(int n_max, int k_max) {
    check_dims(n_max, k_max);
    Grid2<Int> t(n_max + 1, k_max + 1);
    for (int k = 0; k <= k_max; ++k) t.at(0, k) = 1;
    for (int n = 1; n <= n_max; ++n) {
        Int pow2;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, n);
        const Int tail = pow2 - 1 - Int(n) * (n + 1) / 2;
        for (int k = 0; k <= k_max; ++k) t.at(n, k) = binom(k + n + 1, n) + k * tail - n;
    }
    return t;
}

Grid2<Int> table_110_120_c(int n_max, int k_max) {
    check_dims(n_max, k_max);
    Grid2<Int> c(n_max + 1, k_max + 1);
    c.at(0, 0) = 1;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= std::min(n, k_max); ++k) c.at(n, k) = divexact(binom(n - 1, k - 1) * binom(n + k, k - 1), k);
    return c;
}

Grid3<Int> table_110_120_c_refined(int n_max) {
    if (n_max < 0) throw std::invalid_argument("table dimensions must be non-negative");
    std::vector<Int> fact(2 * n_max + 1);
    fact[0] = 1;
    for (std::size_t i = 1; i < fact.size(); ++i) fact[i] = fact[i - 1] * static_cast<unsigned long>(i);
    Grid3<Int> c(n_max + 1, n_max + 1, n_max + 1);
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= n; ++k)
            for (int s = 1; s <= k; ++s) {
                Int den = fact[n - k] * fact[k] * fact[k - s];
                Int num = s * fact[n + k - s - 1];
                mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
                c.at(n, k, s) = num;
            }
    return c;
}

Grid2<Int> table_010_120_B(int n_max, int k_max) {
    check_dims(n_max, k_max);
    const auto c = table_110_120_c(n_max, std::min(n_max, k_max));
    const Binomials C(k_max);
    Grid2<Int> w(n_max + 1, k_max + 1);
    for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= k_max; ++k) {
            Int acc = 0;
            for (int d = 0; d <= std::min(n, k); ++d) acc += C(k, d) * c(n, d);
            w.at(n, k) = acc;
        }
    return w;
}

Grid2<Int> table_110_120_B(int n_max, int k_max) {
    Grid2<Int> b = table_010_120_B(n_max, k_max);
    for (int n = 1; n <= n_max; ++n)
        for (int k = 0; k <= k_max; ++k) b.at(n, k) += b(n - 1, k);
    return b;
}

Grid2<Int> table_words_F(int n_max, int k_max) {
    check_dims(n_max, k_max);
    return series::words_F_table(n_max, k_max);
}

Grid2<Int> table_101_120_b(int n_max, int k_max) {
    Grid2<Int> b = table_words_F(n_max, k_max);
    for (int n = 1; n <= n_max; ++n)
        for (int k = 0; k <= k_max; ++k) b.at(n, k) += b(n - 1, k);
    return b;
}

Grid2<Int> table_010_102_b(int n_max, int k_max) {
    const Grid2<Int> F = table_words_F(n_max, k_max);
    Grid2<Int> b(n_max + 1, k_max + 1);
    for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= k_max; ++k) b.at(n, k) = F(n, k) - F(n, k - 1);
    return b;
}

Grid2<Int> table_010_b(int n_max, int k_max) {
    check_dims(n_max, k_max);
    // Stirling triangle s[n][j], then b(n,k) = s[n][n+1-k].
    std::vector<std::vector<Int>> s(n_max + 1);
    s[0] = {1};
    for (int n = 1; n <= n_max; ++n) {
        s[n].assign(n + 1, 0);
        for (int j = 1; j <= n; ++j) {
            if (j - 1 < static_cast<int>(s[n - 1].size())) s[n][j] += s[n - 1][j - 1];
            if (j < static_cast<int>(s[n - 1].size())) s[n][j] += (n - 1) * s[n - 1][j];
        }
    }
    Grid2<Int> b(n_max + 1, k_max + 1);
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= std::min(n, k_max); ++k) b.at(n, k) = s[n][n + 1 - k];
    return b;
}

Grid2<Int> table_000_010_b(int n_max, int k_max) {
    check_dims(n_max, k_max);
    Grid2<Int> b(n_max + 1, k_max + 1);
    if (k_max >= 1) {
        if (n_max >= 1) b.at(1, 1) = 1;
        if (n_max >= 2) b.at(2, 1) = 1;
    }
    for (int n = 2; n <= n_max; ++n)
        for (int k = 2; k <= k_max; ++k) b.at(n, k) = (n - 1) * b(n - 1, k - 1) + (n - 2) * b(n - 2, k - 1);
    return b;
}

Grid2<Int> table_010_210_b(int n_max, int k_max) {
    check_dims(n_max, k_max);
    Grid2<Int> b(n_max + 1, k_max + 1);
    for (int n = 0; n <= n_max; ++n) b.at(n, 0) = 1;
    for (int k = 1; k <= k_max && n_max >= 1; ++k) b.at(1, k) = 1;
    for (int n = 2; n <= n_max; ++n)
        for (int k = 1; k <= k_max; ++k)
            b.at(n, k) = b(n, k - 1) + 2 * b(n - 1, k) - b(n - 2, k) - b(n - 1, k - 1) + b(n - 2, k - 1);
    return b;
}

Tables010_110 tables_010_110(int n_max, int k_max, const Deadline& dl) {
    check_dims(n_max, k_max);
    const int N = n_max;
    Tables010_110 out;
    out.d1 = Grid3<Int>(N + 1, N + 1, N + 2);
    out.d2 = Grid3<Int>(N + 1, N + 1, N + 2);
    auto& d1 = out.d1;
    auto& d2 = out.d2;
    d2.at(0, 0, 1) = 1;
    // Children land one or two levels deeper, so each level is final once reached.
    for (int n = 0; n <= N; ++n) {
        dl.check(0);
        for (int k = 0; k <= n; ++k) {
            // suffix[s] = sum over j >= s of d_{n,k,j}
            std::vector<Int> suffix(n + 3);
            for (int s = n + 1; s >= 1; --s) suffix[s] = suffix[s + 1] + d1(n, k, s) + d2(n, k, s);
            for (int s = 1; s <= n + 1 && n + 1 <= N; ++s) {
                const Int total = d1(n, k, s) + d2(n, k, s);
                if (sgn(total) != 0) d1.at(n + 1, k + 1, s + 1) += s * total;
                if (k > 0) d2.at(n + 1, k, s) += d2(n, k, s);
            }
            // Two copies of the new top letter: the first at site i leaves i+1 sites.
            if (n + 2 <= N)
                for (int i = 1; i <= n + 1; ++i) d2.at(n + 2, k + 1, i + 1) += suffix[i];
        }
    }

    const auto rising = rising_table(N + 1, N);
    // g[n'][k''][t] = sum_s rising(s, t) d2_{n',k'',s}
    std::vector<std::vector<std::vector<Int>>> g(N + 1);
    for (int np = 0; np <= N; ++np) {
        dl.check(0);
        g[np].assign(np + 1, std::vector<Int>(N - np + 1));
        for (int kk = 0; kk <= np; ++kk)
            for (int t = 0; t <= N - np; ++t) {
                Int acc = 0;
                for (int s = 1; s <= np + 1; ++s)
                    if (sgn(d2(np, kk, s)) != 0) acc += rising[s][t] * d2(np, kk, s);
                g[np][kk][t] = acc;
            }
    }
    auto G = [&](int np, int kk, int t) -> const Int& {
        if (np < 0 || kk < 0 || kk > np || t > N - np) return kZero;
        return g[np][kk][t];
    };

    const Binomials C(2 * std::max(N, k_max) + 2);
    // Number of b-subsets of a set of size f-t-1, with the empty word giving size -1.
    auto lower_sets = [&](int size, int b) -> Int {
        if (size == -1) return b == 0 ? 1 : 0;
        return C(size, b);
    };
    // h[n][f][t] = sum_b C(f-t-1, b) G(n-t, f-b-t, t)
    const int F = k_max;
    out.b = Grid3<Int>(N + 1, k_max + 1, k_max + 1);
    for (int n = 0; n <= N; ++n) {
        dl.check(0);
        for (int f = 0; f <= F; ++f) {
            std::vector<Int> h(f + 1);
            for (int t = 0; t <= std::min(f, n); ++t)
                for (int b = 0; b <= f - t; ++b) {
                    const Int& gv = G(n - t, f - b - t, t);
                    if (sgn(gv) != 0) h[t] += lower_sets(f - t - 1, b) * gv;
                }
            for (int k = f; k <= k_max; ++k) {
                Int acc = 0;
                for (int t = 0; t <= f; ++t)
                    if (sgn(h[t]) != 0) acc += C(t + k - f, k - f) * h[t];
                out.b.at(n, k, f) = acc;
            }
        }
    }

    out.c = Grid2<Int>(N + 1, k_max + 1);
    for (int n = 0; n <= N; ++n)
        for (int k = 0; k <= k_max; ++k) {
            Int acc = n > 0 ? out.c(n - 1, k) : Int(0);
            for (int f = 0; f <= k; ++f) acc += out.b(n, k, f);
            out.c.at(n, k) = acc;
        }
    return out;
}

Tables000_120 tables_000_120(int n_max, int k_max, const Deadline& dl) {
    check_dims(n_max, k_max);
    Tables000_120 out;
    const int K = std::max(n_max, k_max);
    out.f = Grid2<Int>(n_max + 1, K + 1);
    for (int n = 0; n <= n_max; ++n) {
        out.f.at(n, n) = catalan(n);
        for (int k = n - 1; 2 * k >= n; --k) out.f.at(n, k) = out.f(n, k + 1) - out.f(n - 1, k);
    }

    for (auto& g : out.d) g = Grid2<Int>(n_max + 1, K + 1);
    // Single-letter alphabet: the only letter is both 0 and k-1.
    if (n_max >= 1) out.d[0].at(1, 1) = 1;
    if (n_max >= 2) out.d[3].at(2, 1) = 1;
    const Binomials C(2 * K + 2);
    for (int k = 2; k <= K; ++k)
        for (int n = k; n <= std::min(2 * k, n_max); ++n)
            for (int a = 1; a <= 2; ++a)
                for (int b = 1; b <= 2; ++b) out.d[2 * (a - 1) + (b - 1)].at(n, k) = C(k - 2, n - k + 2 - a - b) * out.f(n, k);

    auto dsum = [&](int n, int d, bool a_is_1, bool b_is_1) {
        Int acc = 0;
        for (int a = 1; a <= 2; ++a)
            for (int b = 1; b <= 2; ++b) {
                if ((a_is_1 && a != 1) || (b_is_1 && b != 1)) continue;
                acc += out.d_at(n, d, a, b);
            }
        return acc;
    };

    out.b = Grid2<Int>(n_max + 1, k_max + 1);
    out.c = Grid2<Int>(n_max + 1, k_max + 1);
    out.b_no00 = Grid2<Int>(n_max + 1, k_max + 1);
    out.c_no00 = Grid2<Int>(n_max + 1, k_max + 1);
    for (int k = 0; k <= k_max; ++k) {
        out.b.at(0, k) = 1;
        out.b_no00.at(0, k) = 1;
    }
    for (int n = 1; n <= n_max; ++n) {
        dl.check(0);
        for (int k = 1; k <= k_max; ++k) {
            Int b = 0, c = 0, bn = 0, cn = 0;
            for (int d = 1; d <= std::min(n, k); ++d) {
                const Int all = dsum(n, d, false, false);
                const Int top_once = dsum(n, d, false, true);
                b += C(k, d) * all;
                c += C(k - 1, d - 1) * top_once;
                bn += C(k - 1, d - 1) * dsum(n, d, true, false) + C(k - 1, d) * all;
                cn += C(k - 2, d - 2) * out.d_at(n, d, 1, 1) + C(k - 2, d - 1) * top_once;
            }
            out.b.at(n, k) = b;
            out.c.at(n, k) = c;
            out.b_no00.at(n, k) = bn;
            out.c_no00.at(n, k) = cn;
        }
    }
    // With one letter, 0 and k-1 coincide and the aggregation above miscounts.
    if (k_max >= 1 && n_max >= 1) {
        for (int n = 1; n <= n_max; ++n) out.c_no00.at(n, 1) = n == 1 ? 1 : 0;
    }
    return out;
}

}  // namespace invseq::words
