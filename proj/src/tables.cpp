#include "invseq/tables.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "invseq/words.hpp"

namespace invseq::tables {

namespace {

void addmul(Int& acc, const Int& a, const Int& b) {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

void addmul_ui(Int& acc, const Int& a, unsigned long k) {
    mpz_addmul_ui(acc.get_mpz_t(), a.get_mpz_t(), k);
}

Int sum_row(const Grid2<Int>& g, int i) {
    Int s = 0;
    for (int j = 0; j < g.cols(); ++j) s += g(i, j);
    return s;
}

}  // namespace

// ---------------------------------------------------------------- {102,201}

Tables102_201 tables_102_201(int n_max, const Deadline& dl) {
    const int N = n_max;
    Tables102_201 t{Grid2<Int>(N + 1, N + 1), Grid2<Int>(N + 1, N + 1), Grid2<Int>(N + 1, N + 1),
                    Grid2<Int>(N + 1, N + 1), Grid2<Int>(N + 1, N + 1), std::vector<Int>(N + 1)};
    t.a.at(0, 0) = 1;
    t.terms[0] = 1;
    for (int n = 1; n <= N; ++n) {
        dl.check(n - 1);
        for (int m = 0; m < n; ++m) t.a.at(n, m) = words::binom(n + m - 1, m) * (n - m) / n;
        for (int s = 0; s <= n - 2; ++s) t.b1.at(n, s) = t.b1(n - 1, s) + (n - 1 - s) * t.a(n, s);
        for (int s = 0; s <= n - 3; ++s) t.b2.at(n, s) = t.b2(n - 1, s) + t.b1(n - 1, s);
        for (int s = 0; s <= n - 4; ++s) t.b3.at(n, s) = 2 * t.b3(n - 1, s) + t.b2(n - 1, s);
        // suffix[i] = sum over i' >= i of (a + b3 + c)(n-1, i') for i' <= n-2
        Int suffix = 0;
        for (int l = n - 2; l >= 0; --l) {
            if (l <= n - 3) t.c.at(n, l) = t.c(n - 1, l) + suffix;
            suffix += t.a(n - 1, l) + t.b3(n - 1, l) + t.c(n - 1, l);
        }
        t.terms[n] = sum_row(t.a, n) + sum_row(t.b3, n) + sum_row(t.c, n);
    }
    return t;
}

std::vector<Int> terms_102_201_recurrence(int n_max, const Deadline& dl) {
    return tables_102_201(n_max, dl).terms;
}

Int closed_sum_102_201(int n) {
    if (n < 1) throw std::invalid_argument("closed_sum_102_201: n must be >= 1");
    auto tri = [](long l, long m) -> Int { return words::binom(l + m - 1, m) * (l - m) / l; };
    Int unimodal = 1;
    for (int m = 1; m <= n - 1; ++m)
        for (int l = m + 1; l <= n; ++l) unimodal += tri(l, m) * words::binom(n - l + m - 1, n - l);
    Int with_101 = 0;
    for (int f = 2; f <= n - 2; ++f)
        for (int l = f + 2; l <= n; ++l) {
            Int runs = (Int(1) << (l - f - 1)) - 1;
            for (int s = 0; s <= f - 2; ++s)
                with_101 += (f - s - 1) * tri(f, s) * runs * words::binom(n - l + s, n - l);
        }
    return unimodal + with_101;
}

std::vector<Int> closed_sums_102_201(int n_max, const Deadline& dl) {
    const int N = n_max;
    const words::Binomials C(2 * N + 1);
    Grid2<Int> tri(N + 1, N + 1);
    for (int l = 1; l <= N; ++l)
        for (int m = 0; m < l; ++m) tri.at(l, m) = C(l + m - 1, m) * (l - m) / l;
    // inner(f, u) = sum_s (f-s-1) tri(f, s) C(u+s, u)
    Grid2<Int> inner(N + 1, N + 1);
    for (int f = 2; f <= N; ++f) {
        dl.check(0);
        for (int u = 0; u + f + 2 <= N; ++u) {
            Int& h = inner.at(f, u);
            for (int s = 0; s <= f - 2; ++s) h += (f - s - 1) * tri(f, s) * C(u + s, u);
        }
    }
    std::vector<Int> out(N + 1);
    out[0] = 1;
    for (int n = 1; n <= N; ++n) {
        dl.check(n - 1);
        Int t = 1;
        for (int m = 1; m <= n - 1; ++m)
            for (int l = m + 1; l <= n; ++l) addmul(t, tri(l, m), C(n - l + m - 1, n - l));
        for (int f = 2; f <= n - 2; ++f)
            for (int l = f + 2; l <= n; ++l) addmul(t, (Int(1) << (l - f - 1)) - 1, inner(f, n - l));
        out[n] = std::move(t);
    }
    return out;
}

// ------------------------------------------------------------------ maxrec

std::vector<Int> terms_maxrec(MaxRec family, int n_max, const Deadline& dl,
                              const PlaneVisitor& visit) {
    const int N = n_max;
    std::vector<Int> terms(N + 1);
    terms[0] = 1;
    if (N == 0) return terms;

    using Plane = Grid2<Int>;  // (m, p)
    const int D = N + 1;
    Plane cur(D, D), a1(D, D), a2(D, D);
    Plane cum1(D, D), cum2(D, D), cum3(D, D);  // cumulative over sizes <= n-1, n-2, n-3
    Plane total_by_max(D, D);                  // (L, s): sum over sizes <= L and positions
    Plane diag(D, D);                          // (q, s): a(q, s, q)
    Plane front(D, D);                         // (d, s): anti-diagonal partial sums of cum

    cur.at(0, 1) = 1;
    if (visit) visit(1, cur);
    std::swap(a1, cur);
    cum1.at(0, 1) = 1;
    total_by_max.at(1, 0) = 1;
    diag.at(1, 0) = 1;
    Int running = 1;
    terms[1] = 1;

    std::vector<Int> x(D), acc_a1(D), acc_a2(D), acc_qa2(D), acc_cum(D), acc_diag(D);
    for (int n = 2; n <= N; ++n) {
        dl.check(n - 1);
        if (family == MaxRec::p100_101) {
            for (int d = 0; d <= n - 4; ++d)
                for (int s = 0; s < D; ++s) front.at(d, s) += cum3(s, n - 3 - d);
        } else if (family == MaxRec::p101_210) {
            for (int d = 0; d <= n - 3; ++d)
                for (int s = 0; s < D; ++s) front.at(d, s) += cum2(s, n - 2 - d);
        }
        for (int s = 0; s < n; ++s) acc_a1[s] = acc_a2[s] = acc_qa2[s] = acc_cum[s] = acc_diag[s] = 0;
        for (int m = 0; m < D; ++m)
            for (int p = 0; p < D; ++p) cur.at(m, p) = 0;

        for (int p = 1; p <= n; ++p) {
            // x[s] for s <= p-2; the accumulators hold sums over q < p on entry.
            for (int s = 0; s <= p - 2; ++s) {
                Int& v = x[s];
                switch (family) {
                    case MaxRec::p000_201: {
                        Int A1 = acc_a1[s] + a1(s, p);
                        Int A2 = acc_a2[s] + a2(s, p);
                        Int QA2 = acc_qa2[s] + p * a2(s, p);
                        v = A1 + p * A2 - QA2 + a2(s, p);
                        if (p == n) v -= A2;
                        break;
                    }
                    case MaxRec::p100_110:
                        if (p >= n - 1) v = total_by_max(n - 1, s);
                        else v = (n - p) * a1(s, p) + acc_a1[s] + acc_a2[s];
                        break;
                    case MaxRec::p100_101:
                        if (p >= n - 1) v = total_by_max(n - 1, s);
                        else v = (n - p) * a1(s, p) + acc_cum[s] - front(n - p - 2, s);
                        break;
                    case MaxRec::p110_201:
                        if (p >= n - 1) v = total_by_max(n - 1, s);
                        else v = acc_a1[s] + a1(s, p) + total_by_max(p - 1, s) + diag(p, s);
                        break;
                    case MaxRec::p101_210:
                        if (p >= n - 1) v = total_by_max(n - 1, s);
                        else v = cum1(s, p) + acc_diag[s] + acc_cum[s] - front(n - p - 1, s);
                        break;
                }
            }
            Int prefix = 0;
            for (int m = 1; m <= p - 1; ++m) {
                prefix += x[m - 1];
                cur.at(m, p) = prefix;
            }
            for (int s = 0; s < n; ++s) {
                acc_a1[s] += a1(s, p);
                acc_a2[s] += a2(s, p);
                addmul_ui(acc_qa2[s], a2(s, p), p);
                acc_cum[s] += cum1(s, p);
                acc_diag[s] += diag(p, s);
            }
        }
        if (visit) visit(n, cur);

        Int level = 0;
        for (int s = 0; s < n; ++s) {
            Int by_max = 0;
            for (int p = s + 1; p <= n; ++p) by_max += cur(s, p);
            total_by_max.at(n, s) = total_by_max(n - 1, s) + by_max;
            diag.at(n, s) = cur(s, n);
            level += by_max;
        }
        if (family == MaxRec::p000_201) {
            Int t = level;
            for (int m = 0; m < n; ++m)
                for (int p = m + 1; p < n; ++p) addmul_ui(t, a1(m, p), n - p);
            terms[n] = t;
        } else {
            running += level;
            terms[n] = running;
        }

        // cum3 <- cum1 + cur, then rotate so cum1 is the newest.
        for (int m = 0; m < D; ++m)
            for (int p = 0; p < D; ++p) cum3.at(m, p) = cum1(m, p) + cur(m, p);
        std::swap(cum3, cum2);  // cum2 = old cum3 (scratch), cum3 = old cum2
        std::swap(cum2, cum1);  // cum1 = new, cum2 = old cum1
        std::swap(a2, a1);
        std::swap(a1, cur);
    }
    return terms;
}

Grid3<Int> maxrec_table(MaxRec family, int n_max) {
    Grid3<Int> out(n_max + 1, n_max + 1, n_max + 1);
    terms_maxrec(family, n_max, {}, [&](int n, const Grid2<Int>& plane) {
        for (int m = 0; m <= n_max; ++m)
            for (int p = 0; p <= n_max; ++p) out.at(n, m, p) = plane(m, p);
    });
    return out;
}

// ---------------------------------------------------------------- splitmax

namespace {

using Ragged = std::vector<std::vector<std::vector<Int>>>;  // [n][m][x]

// Two-index families: a(n,m) = sum_p [extra(n-p,m) + sum_{j0<=j<m} a(p-1,j) b(n-p, m-j+off)].
void fill_two_index(Grid3<Int>& a, int N, const Grid2<Int>& b, int off, int j0,
                    const Grid2<Int>* extra, const Deadline& dl) {
    for (int n = 1; n <= N; ++n) {
        dl.check(n - 1);
        a.at(n, 0, 0) = 1;
        for (int m = 1; m < n; ++m) {
            Int acc = 0;
            for (int p = m + 1; p <= n; ++p) {
                const int k = p - 1, r = n - p;
                if (extra) acc += (*extra)(r, m);
                for (int j = j0; j < m; ++j) addmul(acc, a(k, j, 0), b(r, m - j + off));
            }
            a.at(n, m, 0) = std::move(acc);
        }
    }
}

void fill_101_120(SplitTable& t, int N, const Deadline& dl) {
    const Grid2<Int> b = words::table_101_120_b(N + 1, N + 1);
    for (int n = 1; n <= N; ++n) {
        dl.check(n - 1);
        t.a.at(n, 0, 0) = 1;
        t.aux.at(n, 0) = 1;  // the constant sequence ends with its maximum
        for (int m = 1; m < n; ++m) {
            Int acc = 0, ends = 0;
            for (int p = m + 1; p <= n; ++p) {
                const int k = p - 1, r = n - p;
                for (int j = 0; j < m; ++j) {
                    const Int& whole = t.a(k, j, 0);
                    const Int& tail = t.aux(k, j);
                    addmul(acc, tail, b(r, m - j));
                    addmul(acc, Int(whole - tail), b(r, m - j - 1));
                    ends += whole;
                }
            }
            t.a.at(n, m, 0) = std::move(acc);
            t.aux.at(n, m) = std::move(ends);
        }
    }
}

void fill_000_120(SplitTable& t, int N, const Deadline& dl) {
    const words::Tables000_120 w = words::tables_000_120(N + 1, N + 2, dl);
    auto& a = t.a;  // third index r - 1
    if (N >= 1) a.at(1, 0, 0) = 1;
    if (N >= 2) a.at(2, 0, 1) = 1;
    for (int n = 2; n <= N; ++n) {
        dl.check(n - 1);
        for (int m = 1; m < n; ++m) {
            Int once = 0, twice = 0;
            for (int p = m + 1; p <= n; ++p) {
                const int k = p - 1, r = n - p;
                for (int j = 0; j < m; ++j) {
                    const Int& x1 = a(k, j, 0);
                    const Int& x2 = a(k, j, 1);
                    addmul(once, x1, w.b_no00(r, m - j));
                    addmul(once, x2, w.b(r, m - j - 1));
                    addmul(twice, x1, w.c_no00(r, m - j + 1));
                    addmul(twice, x2, w.c(r, m - j));
                }
            }
            a.at(n, m, 0) = std::move(once);
            a.at(n, m, 1) = std::move(twice);
        }
    }
}

// Three-index families, stored ragged: a[n][m][x] with x <= m + 1, and
// prefix[k][m][i] = sum_{j<m} a(k, j, i) for m <= k.
struct ThreeIndex {
    Ragged a, prefix;

    explicit ThreeIndex(int N) : a(N + 1), prefix(N + 1) {
        for (int n = 0; n <= N; ++n) {
            a[n].resize(n + 1);
            prefix[n].resize(n + 1);
            for (int m = 0; m <= n; ++m) {
                a[n][m].assign(m + 2, Int(0));
                prefix[n][m].assign(m + 2, Int(0));
            }
        }
    }
    const Int& S(int k, int m, int i) const {
        static const Int zero;
        if (k < 0 || m > k || i > m + 1) return zero;
        return prefix[k][m][i];
    }
    void close_level(int n) {
        for (int m = 1; m <= n; ++m)
            for (int i = 0; i <= m; ++i) prefix[n][m][i] = prefix[n][m - 1][i] + a[n][m - 1][i];
    }
    Int level_sum(int n) const {
        Int t = 0;
        for (const auto& row : a[n])
            for (const auto& v : row) t += v;
        return t;
    }
};

void fill_distinct(ThreeIndex& t, int N, bool no_triple, const Deadline& dl) {
    const Grid2<Int> b = no_triple ? words::table_000_010_b(N + 2, N + 2) : words::table_010_b(N + 2, N + 2);
    const words::Binomials C(N + 2);
    std::vector<std::vector<Int>> U;
    for (int n = 1; n <= N; ++n) {
        dl.check(n - 1);
        if (!no_triple || n <= 2) t.a[n][0][1] = 1;
        for (int m = 1; m < n; ++m) {
            // U[i][e] = sum_{p} b(n-p+1, e) S(p-1, m, i)
            U.assign(m + 1, std::vector<Int>(m + 2));
            for (int i = 0; i <= m; ++i)
                for (int e = 1; e <= m + 1 - i; ++e) {
                    Int& u = U[i][e];
                    for (int k = m; k <= n - 1; ++k) addmul(u, b(n - k, e), t.S(k, m, i));
                }
            for (int d = 2; d <= m + 1; ++d) {
                Int acc = 0;
                for (int i = 0; i <= d - 1; ++i) addmul(acc, C(m - i, d - i - 1), U[i][d - i]);
                t.a[n][m][d] = std::move(acc);
            }
        }
        t.close_level(n);
    }
}

void fill_forbidden_210(ThreeIndex& t, int N, const Deadline& dl) {
    const Grid2<Int> b = words::table_010_210_b(N + 1, N + 2);
    std::vector<std::vector<Int>> U;
    for (int n = 1; n <= N; ++n) {
        dl.check(n - 1);
        t.a[n][0][1] = 1;
        for (int m = 1; m < n; ++m) {
            U.assign(m + 1, std::vector<Int>(m + 1));
            for (int i = 0; i <= m; ++i)
                for (int e = 0; e <= m - i; ++e) {
                    Int& u = U[i][e];
                    for (int k = m; k <= n - 1; ++k) addmul(u, b(n - 1 - k, e), t.S(k, m, i));
                }
            for (int f = 2; f <= m + 1; ++f) {
                Int acc = 0;
                for (int i = 0; i < f; ++i) acc += U[i][f - i - 1];
                t.a[n][m][f] = std::move(acc);
            }
        }
        t.close_level(n);
    }
}

void fill_forbidden_110(ThreeIndex& t, int N, const Deadline& dl) {
    const words::Tables010_110 w = words::tables_010_110(N + 1, N + 2, dl);
    std::vector<std::vector<Int>> U;
    std::vector<Int> V;
    for (int n = 1; n <= N; ++n) {
        dl.check(n - 1);
        t.a[n][0][1] = 1;
        for (int m = 1; m < n; ++m) {
            U.assign(m + 1, std::vector<Int>(m + 1));
            V.assign(m + 1, Int(0));
            for (int i = 0; i <= m; ++i) {
                for (int k = m; k <= n - 1; ++k) {
                    const Int& s = t.S(k, m, i);
                    if (s == 0) continue;
                    for (int e = 0; e <= m - i; ++e) addmul(U[i][e], s, w.b(n - 1 - k, m - i, e));
                    addmul(V[i], s, w.c(n - 2 - k, m - i));
                }
            }
            for (int f = 2; f <= m + 1; ++f) {
                Int acc = 0;
                for (int i = 0; i < f; ++i) {
                    acc += U[i][f - i - 1];
                    if (f == m + 1) acc += V[i];
                }
                t.a[n][m][f] = std::move(acc);
            }
        }
        t.close_level(n);
    }
}

bool is_three_index(SplitMax f) {
    return f == SplitMax::p010 || f == SplitMax::p000_010 || f == SplitMax::p010_210 ||
           f == SplitMax::p010_110;
}

SplitTable fill_split(SplitMax family, int n_max, const Deadline& dl, bool dense) {
    const int N = n_max;
    SplitTable t;
    t.terms.assign(N + 1, Int(0));
    t.terms[0] = 1;

    if (is_three_index(family)) {
        ThreeIndex ti(N);
        switch (family) {
            case SplitMax::p010: fill_distinct(ti, N, false, dl); break;
            case SplitMax::p000_010: fill_distinct(ti, N, true, dl); break;
            case SplitMax::p010_210: fill_forbidden_210(ti, N, dl); break;
            default: fill_forbidden_110(ti, N, dl); break;
        }
        for (int n = 1; n <= N; ++n) t.terms[n] = ti.level_sum(n);
        if (dense) {
            t.a = Grid3<Int>(N + 1, N + 1, N + 2);
            for (int n = 0; n <= N; ++n)
                for (int m = 0; m <= n; ++m)
                    for (int x = 0; x <= m + 1; ++x) t.a.at(n, m, x) = ti.a[n][m][x];
        }
        return t;
    }

    t.a = Grid3<Int>(N + 1, N + 1, family == SplitMax::p000_120 ? 2 : 1);
    switch (family) {
        case SplitMax::p011_120: {
            const Grid2<Int> b = words::table_011_120_b(N + 1, N + 1);
            const Grid2<Int> c = words::table_011_120_c(N + 1, N + 1);
            fill_two_index(t.a, N, b, -1, 1, &c, dl);
            break;
        }
        case SplitMax::p100_120:
            fill_two_index(t.a, N, words::table_100_120_b(N + 1, N + 2), 1, 0, nullptr, dl);
            break;
        case SplitMax::p120_201:
            fill_two_index(t.a, N, words::table_120_201_b(N + 1, N + 1), 0, 0, nullptr, dl);
            break;
        case SplitMax::p110_120:
            fill_two_index(t.a, N, words::table_110_120_B(N + 1, N + 1), 0, 0, nullptr, dl);
            break;
        case SplitMax::p010_120:
            fill_two_index(t.a, N, words::table_010_120_B(N + 1, N + 1), 0, 0, nullptr, dl);
            break;
        case SplitMax::p101_120:
            t.aux = Grid2<Int>(N + 1, N + 1);
            fill_101_120(t, N, dl);
            break;
        case SplitMax::p000_120: fill_000_120(t, N, dl); break;
        default: throw std::invalid_argument("unknown split family");
    }
    for (int n = 1; n <= N; ++n) {
        Int s = 0;
        for (int m = 0; m < n; ++m)
            for (int x = 0; x < t.a.dim2(); ++x) s += t.a(n, m, x);
        t.terms[n] = s;
    }
    return t;
}

}  // namespace

SplitTable splitmax_table(SplitMax family, int n_max, const Deadline& dl) {
    return fill_split(family, n_max, dl, true);
}

std::vector<Int> terms_splitmax(SplitMax family, int n_max, const Deadline& dl) {
    return fill_split(family, n_max, dl, false).terms;
}

// ----------------------------------------------------------------- shifted

namespace {

void fill_010_102(ShiftedTable& t, int N, const Deadline& dl) {
    const Grid2<Int> b = words::table_010_102_b(N + 1, N + 1);
    Grid2<Int>& a = t.a;
    Grid2<Int> p0(N + 1, N + 1), p1(N + 1, N + 1);  // (L, s): sums of a(l, s) and l a(l, s) over l <= L
    for (int s = 0; s <= N; ++s) a.at(0, s) = 1, p0.at(0, s) = 1;
    // weighted(u, s) = sum_{l=0}^{u-1} (u - l - [l = 0]) a(l, s). The empty
    // sequence is the only (-1)-shifted one, so a(0, -1) = 1.
    auto weighted = [&](int u, int s) -> Int {
        if (u < 1 || s < -1) return 0;
        if (s == -1) return u - 1;
        return u * p0(u - 1, s) - p1(u - 1, s) - a(0, s);
    };
    for (int n = 1; n <= N; ++n) {
        dl.check(n - 1);
        for (int s = 0; s + n <= N; ++s) {
            Int acc = 0;
            for (int z = 0; z <= n; ++z)
                if (s + z - 1 >= 0) acc += a(n - z, s + z - 1);
            if (s >= 1) acc += p0(n - 1, s - 1) - a(0, s - 1);
            for (int r = 1; r <= n - 2; ++r)
                for (int m = 1; m <= s; ++m) {
                    const Int& bm = b(r, m);
                    if (bm == 0) continue;
                    addmul(acc, bm, weighted(n - r, s - m - 1));
                }
            a.at(n, s) = std::move(acc);
        }
        for (int s = 0; s <= N; ++s) {
            p0.at(n, s) = p0(n - 1, s) + a(n, s);
            p1.at(n, s) = p1(n - 1, s);
            addmul_ui(p1.at(n, s), a(n, s), n);
        }
    }
}

void fill_100_102(ShiftedTable& t, int N, const Deadline& dl) {
    const Grid2<Int> b = words::table_011_120_b(N + 1, N + 1);
    const Grid2<Int> c = words::table_011_120_c(N + 1, N + 1);
    Grid2<Int>& a = t.a;
    Grid2<Int>& ap = t.aux;
    // diag_a(D, u) = sum_{i=1}^{u} a(i, D - i); likewise for ap.
    Grid2<Int> diag_a(N + 1, N + 1), diag_ap(N + 1, N + 1);
    for (int s = 0; s <= N; ++s) a.at(0, s) = 1;
    for (int n = 1; n <= N; ++n) {
        dl.check(n - 1);
        for (int s = 0; s + n <= N; ++s) {
            Int acc = 0;
            for (int p = 2; p <= n; ++p)
                for (int m = 1; m <= s; ++m) {
                    acc += c(n - p, m);
                    const int da = p + s - m - 2, dp = p - 1 + s - m;
                    if (da >= 0) addmul(acc, b(n - p, m), diag_a(da, p - 2));
                    if (dp >= 0) addmul(acc, b(n - p, m - 1), diag_ap(dp, p - 1));
                }
            ap.at(n, s) = acc;
            a.at(n, s) = a(n, s - 1) + a(n - 1, s + 1) + acc;
        }
        for (int D = 0; D <= N; ++D) {
            diag_a.at(D, n) = diag_a(D, n - 1) + a(n, D - n);
            diag_ap.at(D, n) = diag_ap(D, n - 1) + ap(n, D - n);
        }
    }
}

}  // namespace

ShiftedTable shifted_table(Shifted family, int n_max, const Deadline& dl) {
    const int N = n_max;
    ShiftedTable t{Grid2<Int>(N + 1, N + 1), Grid2<Int>(), std::vector<Int>(N + 1)};
    if (family == Shifted::p010_102) {
        fill_010_102(t, N, dl);
    } else {
        t.aux = Grid2<Int>(N + 1, N + 1);
        fill_100_102(t, N, dl);
    }
    for (int n = 0; n <= N; ++n) t.terms[n] = t.a(n, 0);
    return t;
}

std::vector<Int> terms_shifted(Shifted family, int n_max, const Deadline& dl) {
    return shifted_table(family, n_max, dl).terms;
}

}  // namespace invseq::tables
