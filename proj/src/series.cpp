#include "invseq/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace invseq::series {

namespace {

using Poly = std::vector<long>;

Poly pmul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Poly pmul(std::initializer_list<Poly> fs) {
    Poly r{1};
    for (const auto& f : fs) r = pmul(r, f);
    return r;
}

Poly pneg(Poly a) {
    for (auto& c : a) c = -c;
    return a;
}

}  // namespace

// ---- Series1 ----

Series1::Series1(int order) : order_(order), c_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
}

Series1 Series1::constant(const Rat& c, int order) {
    Series1 s(order);
    s.c_[0] = c;
    return s;
}

Series1 Series1::poly(const std::vector<long>& coeffs, int order) {
    Series1 s(order);
    for (std::size_t i = 0; i < coeffs.size() && static_cast<int>(i) <= order; ++i) s.c_[i] = coeffs[i];
    return s;
}

Series1 Series1::from_ints(const std::vector<Int>& coeffs, int order) {
    if (static_cast<int>(coeffs.size()) < order + 1) throw std::invalid_argument("not enough coefficients");
    Series1 s(order);
    for (int i = 0; i <= order; ++i) s.c_[i] = coeffs[i];
    return s;
}

Series1 Series1::truncated(int order) const {
    Series1 s(order);
    for (int i = 0; i <= std::min(order, order_); ++i) s.c_[i] = c_[i];
    return s;
}

Series1 Series1::shift_down(int k) const {
    for (int i = 0; i < k && i <= order_; ++i)
        if (sgn(c_[i]) != 0) throw StructuralError("series is not divisible by the requested power of x");
    Series1 s(order_ - k);
    for (int i = 0; i <= order_ - k; ++i) s.c_[i] = c_[i + k];
    return s;
}

bool Series1::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return sgn(r) == 0; });
}

std::vector<Int> Series1::integer_coeffs(int n) const {
    if (n > order_) throw std::invalid_argument("requested coefficients beyond the truncation order");
    std::vector<Int> out;
    out.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
        if (c_[i].get_den() != 1) throw StructuralError("coefficient " + std::to_string(i) + " is not an integer");
        out.push_back(c_[i].get_num());
    }
    return out;
}

Series1 operator+(const Series1& a, const Series1& b) {
    Series1 r(std::min(a.order_, b.order_));
    for (int i = 0; i <= r.order_; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

Series1 operator-(const Series1& a, const Series1& b) {
    Series1 r(std::min(a.order_, b.order_));
    for (int i = 0; i <= r.order_; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
}

Series1 operator*(const Series1& a, const Series1& b) {
    Series1 r(std::min(a.order_, b.order_));
    for (int i = 0; i <= r.order_; ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (int j = 0; i + j <= r.order_; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

Series1 operator*(const Rat& k, const Series1& a) {
    Series1 r(a.order_);
    for (int i = 0; i <= r.order_; ++i) r.c_[i] = k * a.c_[i];
    return r;
}

Series1 inverse(const Series1& s) {
    if (sgn(s[0]) == 0) throw StructuralError("division by a series with zero constant term");
    Series1 r(s.order());
    const Rat inv0 = 1 / s[0];
    r[0] = inv0;
    for (int n = 1; n <= s.order(); ++n) {
        Rat acc = 0;
        for (int k = 1; k <= n; ++k) acc += s[k] * r[n - k];
        r[n] = -acc * inv0;
    }
    return r;
}

Series1 operator/(const Series1& a, const Series1& b) { return a * inverse(b); }

Series1 sqrt(const Series1& s) {
    if (s[0] != 1) throw StructuralError("square root needs constant term 1");
    Series1 r = Series1::constant(1, 0);
    int prec = 1;  // r is exact through x^(prec-1)
    const Rat half(1, 2);
    while (prec <= s.order()) {
        prec = std::min(2 * prec, s.order() + 1);
        const Series1 target = s.truncated(prec - 1);
        const Series1 cur = r.truncated(prec - 1);
        r = half * (cur + target / cur);
    }
    return r.truncated(s.order());
}

// ---- Series2 ----

Series2::Series2(int nx, int ny)
    : nx_(nx), ny_(ny), c_(static_cast<std::size_t>(nx + 1) * (ny + 1)) {
    if (nx < 0 || ny < 0) throw std::invalid_argument("series order must be non-negative");
}

Series2 Series2::poly(const std::vector<std::array<long, 3>>& terms, int nx, int ny) {
    Series2 s(nx, ny);
    for (const auto& [i, j, c] : terms)
        if (i <= nx && j <= ny) s.at(static_cast<int>(i), static_cast<int>(j)) += c;
    return s;
}

Series2 Series2::truncated(int nx, int ny) const {
    Series2 s(nx, ny);
    for (int i = 0; i <= std::min(nx, nx_); ++i)
        for (int j = 0; j <= std::min(ny, ny_); ++j) s.at(i, j) = (*this)(i, j);
    return s;
}

Series2 Series2::shift_down(int kx, int ky) const {
    for (int i = 0; i <= nx_; ++i)
        for (int j = 0; j <= ny_; ++j)
            if ((i < kx || j < ky) && sgn((*this)(i, j)) != 0)
                throw StructuralError("series is not divisible by the requested monomial");
    Series2 s(nx_ - kx, ny_ - ky);
    for (int i = 0; i <= s.nx_; ++i)
        for (int j = 0; j <= s.ny_; ++j) s.at(i, j) = (*this)(i + kx, j + ky);
    return s;
}

bool Series2::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return sgn(r) == 0; });
}

Series2 operator+(const Series2& a, const Series2& b) {
    Series2 r(std::min(a.nx_, b.nx_), std::min(a.ny_, b.ny_));
    for (int i = 0; i <= r.nx_; ++i)
        for (int j = 0; j <= r.ny_; ++j) r.at(i, j) = a(i, j) + b(i, j);
    return r;
}

Series2 operator-(const Series2& a, const Series2& b) {
    Series2 r(std::min(a.nx_, b.nx_), std::min(a.ny_, b.ny_));
    for (int i = 0; i <= r.nx_; ++i)
        for (int j = 0; j <= r.ny_; ++j) r.at(i, j) = a(i, j) - b(i, j);
    return r;
}

Series2 operator*(const Series2& a, const Series2& b) {
    Series2 r(std::min(a.nx_, b.nx_), std::min(a.ny_, b.ny_));
    for (int i = 0; i <= r.nx_; ++i)
        for (int j = 0; j <= r.ny_; ++j) {
            if (sgn(a(i, j)) == 0) continue;
            for (int k = 0; i + k <= r.nx_; ++k)
                for (int l = 0; j + l <= r.ny_; ++l) r.at(i + k, j + l) += a(i, j) * b(k, l);
        }
    return r;
}

Series2 operator*(const Rat& k, const Series2& a) {
    Series2 r(a.nx_, a.ny_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = k * a.c_[i];
    return r;
}

Series2 inverse(const Series2& s) {
    if (sgn(s(0, 0)) == 0) throw StructuralError("division by a series with zero constant term");
    Series2 r(s.nx(), s.ny());
    const Rat inv0 = 1 / s(0, 0);
    for (int i = 0; i <= s.nx(); ++i)
        for (int j = 0; j <= s.ny(); ++j) {
            if (i == 0 && j == 0) {
                r.at(0, 0) = inv0;
                continue;
            }
            Rat acc = 0;
            for (int k = 0; k <= i; ++k)
                for (int l = 0; l <= j; ++l)
                    if ((k || l) && sgn(s(k, l)) != 0) acc += s(k, l) * r(i - k, j - l);
            r.at(i, j) = -acc * inv0;
        }
    return r;
}

Series2 operator/(const Series2& a, const Series2& b) { return a * inverse(b); }

Series2 sqrt(const Series2& s) {
    if (s(0, 0) != 1) throw StructuralError("square root needs constant term 1");
    Series2 r(s.nx(), s.ny());
    r.at(0, 0) = 1;
    const Rat half(1, 2);
    // Each step doubles the exact total degree.
    for (int exact = 1; exact <= s.nx() + s.ny(); exact *= 2) r = half * (r + s / r);
    if (!(r * r == s)) throw StructuralError("square root iteration did not converge");
    return r;
}

// ---- closed forms ----

std::vector<Int> gf_102_201_terms(int n_max) {
    const int K = n_max + 1 + kGuard;
    auto P = [K](const Poly& p) { return Series1::poly(p, K); };
    const Poly x{0, 1};
    const Series1 radical = sqrt(P(pmul({{-1, 5}, {-1, 1}})));  // (5x-1)(x-1)
    const Series1 num = P({4, -8, -10, 18, -8}) + P(pmul({{2}, {-1, 2}, {2, -2, 1}})) * radical;
    const Series1 den = P(pmul({{4}, {-1, 2}, {-1, 1}, {-2, 1}, {-2, 1}}));
    return (num.shift_down(1) / den.truncated(K - 1)).integer_coeffs(n_max);
}

std::vector<Int> gf_102_210_terms(int n_max) {
    const int K = n_max + 3 + kGuard;
    auto P = [K](const Poly& p) { return Series1::poly(p, K); };
    const Series1 radical = sqrt(P({1, -4}));
    const Series1 num = P(pmul({{-1, 4}, {1, -9, 25, -22, 4}})) - P(pmul({{-1, 2}, {1, -5, 1}, {1, -4, 2}})) * radical;
    const Series1 den = P(pmul({{2}, {-1, 4}, {-1, 1}, {-1, 1}}));
    return (num.shift_down(3) / den.truncated(K - 3)).integer_coeffs(n_max);
}

Series1 minimal_poly_residual(const PolyInF& poly, const std::vector<Int>& terms, int order) {
    const Series1 F = Series1::from_ints(terms, order);
    Series1 power = Series1::constant(1, order);
    Series1 total(order);
    for (const auto& coeff : poly) {
        total = total + Series1::poly(coeff, order) * power;
        power = power * F;
    }
    return total;
}

PolyInF minimal_poly_000_102() {
    return {
        {1},
        pneg({1, -2, 2}),
        pmul({{0, 1}, {-1, 4, -2, 1}}),
        pmul({{-2}, {0, 0, 0, 1}, {-1, 1}}),
        {0, 0, 0, 0, 1},
    };
}

PolyInF minimal_poly_102_201() {
    return {
        {2, -12, 25, -22, 9, -1},
        pmul({{-1, 1}, {-1, 2}, {-2, 4, 5, -9, 4}}),
        pmul({{0, 1}, {-1, 1}, {-1, 1}, {-2, 1}, {-2, 1}, {-1, 2}, {-1, 2}}),
    };
}

PolyInF minimal_poly_102_210() {
    return {
        {-1, 14, -75, 194, -254, 165, -44, 4},
        pneg(pmul({{-1, 4}, {1, -9, 25, -22, 4}, {-1, 1}, {-1, 1}})),
        pmul({{-1, 4}, {-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}, {0, 0, 0, 1}}),
    };
}

PolyInF minimal_poly_010_102() {
    return {
        pneg(pmul({{-1, 2}, {-1, 1}, {-1, 1}})),
        pneg({1, -6, 11, -8, 1}),
        pmul({{0, 2}, {-1, 1}, {1, -2, 2}}),
        pmul({{0, 1}, {1, -1, 1}, {-1, 1}, {-1, 1}}),
    };
}

// ---- words ----

namespace {

// (1-x)^4 - 2(1-x)^2 y + (1 - 4x^2 + 4x^3) y^2
Series2 words_radicand(int nx, int ny) {
    const Series2 omx = Series2::poly({{0, 0, 1}, {1, 0, -1}}, nx, ny);
    const Series2 y = Series2::poly({{0, 1, 1}}, nx, ny);
    const Series2 q = Series2::poly({{0, 0, 1}, {2, 0, -4}, {3, 0, 4}}, nx, ny);
    const Series2 omx2 = omx * omx;
    return omx2 * omx2 - Rat(2) * (omx2 * y) + q * (y * y);
}

// (1-x)^2 - (1-2x) y
Series2 words_rational_part(int nx, int ny) {
    return Series2::poly({{0, 0, 1}, {1, 0, -2}, {2, 0, 1}, {0, 1, -1}, {1, 1, 2}}, nx, ny);
}

}  // namespace

Series2 expand_F_words(int nx, int ny) {
    const int NX = nx + 1 + kGuard, NY = ny + 1 + kGuard;
    const Series2 one_minus_y = Series2::poly({{0, 0, 1}, {0, 1, -1}}, NX, NY);
    // The x^0 part of the radicand is (1-y)^2; take its root as 1-y.
    const Series2 normalized = words_radicand(NX, NY) / (one_minus_y * one_minus_y);
    const Series2 root = one_minus_y * sqrt(normalized);
    const Series2 num = words_rational_part(NX, NY) - root;
    const Series2 F = num.shift_down(1, 1) / (Rat(2) * one_minus_y.truncated(NX - 1, NY - 1));
    return F.truncated(nx, ny);
}

Grid2<Int> words_F_table(int nx, int ny) {
    if (nx < 0 || ny < 0) throw std::invalid_argument("negative truncation order");
    const int X = nx + 1, K = ny + 1;
    // Coefficients r_i(y) of x^i in the radicand (degree <= 2 in y).
    const Series2 R = words_radicand(4, 2);
    std::array<std::array<long, 3>, 5> r{};
    for (int i = 0; i <= 4; ++i)
        for (int t = 0; t <= 2; ++t) r[i][t] = R(i, t).get_num().get_si();
    if (r[0] != std::array<long, 3>{1, -2, 1}) throw StructuralError("unexpected radicand constant term");

    // s[N] is the x^N coefficient of the root, as a y-series through y^K.
    std::vector<std::vector<Int>> s(X + 1, std::vector<Int>(K + 1));
    s[0][0] = 1;
    if (K >= 1) s[0][1] = -1;
    Int tmp;
    for (int N = 1; N <= X; ++N) {
        auto& out = s[N];
        for (int i = 1; i <= std::min(4, N); ++i) {
            const long w = 3L * i - 2L * N;
            for (int t = 0; t <= 2; ++t) {
                const long c = w * r[i][t];
                if (c == 0) continue;
                const auto& src = s[N - i];
                for (int j = t; j <= K; ++j) {
                    if (c > 0)
                        mpz_addmul_ui(out[j].get_mpz_t(), src[j - t].get_mpz_t(), static_cast<unsigned long>(c));
                    else
                        mpz_submul_ui(out[j].get_mpz_t(), src[j - t].get_mpz_t(), static_cast<unsigned long>(-c));
                }
            }
        }
        // Divide by (1-y)^2, then by 2N.
        for (int pass = 0; pass < 2; ++pass)
            for (int j = 1; j <= K; ++j) out[j] += out[j - 1];
        const unsigned long d = 2UL * static_cast<unsigned long>(N);
        for (int j = 0; j <= K; ++j) {
            if (!mpz_divisible_ui_p(out[j].get_mpz_t(), d)) throw StructuralError("square-root recurrence lost integrality");
            mpz_divexact_ui(out[j].get_mpz_t(), out[j].get_mpz_t(), d);
        }
    }

    const Series2 P = words_rational_part(2, 1);
    auto numerator = [&](int n, int k) {
        Int v = -s[n][k];
        if (n <= 2 && k <= 1) v += P(n, k).get_num();
        return v;
    };
    for (int n = 0; n <= X; ++n)
        if (sgn(numerator(n, 0)) != 0) throw StructuralError("numerator is not divisible by y");
    for (int k = 0; k <= K; ++k)
        if (sgn(numerator(0, k)) != 0) throw StructuralError("numerator is not divisible by x");

    Grid2<Int> F(nx + 1, ny + 1);
    for (int n = 0; n <= nx; ++n) {
        Int run = 0;
        for (int k = 0; k <= ny; ++k) {
            tmp = numerator(n + 1, k + 1);
            if (!mpz_divisible_ui_p(tmp.get_mpz_t(), 2)) throw StructuralError("numerator is not divisible by 2");
            mpz_divexact_ui(tmp.get_mpz_t(), tmp.get_mpz_t(), 2);
            run += tmp;
            F.at(n, k) = run;
        }
    }
    return F;
}

}  // namespace invseq::series
