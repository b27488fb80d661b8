#pragma once

#include <gmpxx.h>

#include <array>
#include <vector>

#include "invseq/core.hpp"
#include "invseq/grid.hpp"

namespace invseq::series {

using Rat = mpq_class;

// Extra orders carried by intermediate expansions.
inline constexpr int kGuard = 4;

// Power series in x truncated after x^order.
class Series1 {
public:
    explicit Series1(int order = 0);
    static Series1 constant(const Rat& c, int order);
    static Series1 poly(const std::vector<long>& coeffs, int order);  // coeffs[i] is the x^i coefficient
    static Series1 from_ints(const std::vector<Int>& coeffs, int order);

    int order() const { return order_; }
    const Rat& operator[](int i) const { return c_[i]; }
    Rat& operator[](int i) { return c_[i]; }

    Series1 truncated(int order) const;
    // Divides by x^k after checking the low coefficients vanish.
    Series1 shift_down(int k) const;
    bool is_zero() const;
    // Coefficients 0..n as integers; throws StructuralError otherwise.
    std::vector<Int> integer_coeffs(int n) const;

    friend Series1 operator+(const Series1& a, const Series1& b);
    friend Series1 operator-(const Series1& a, const Series1& b);
    friend Series1 operator*(const Series1& a, const Series1& b);
    friend Series1 operator*(const Rat& k, const Series1& a);
    friend Series1 operator/(const Series1& a, const Series1& b);
    friend bool operator==(const Series1& a, const Series1& b) { return a.c_ == b.c_; }

private:
    int order_;
    std::vector<Rat> c_;
};

Series1 inverse(const Series1& s);
// Newton iteration; requires constant term 1.
Series1 sqrt(const Series1& s);

// Power series in x, y truncated after x^nx and y^ny.
class Series2 {
public:
    Series2(int nx = 0, int ny = 0);
    // terms: {i, j, c} for c x^i y^j
    static Series2 poly(const std::vector<std::array<long, 3>>& terms, int nx, int ny);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    const Rat& operator()(int i, int j) const { return c_[idx(i, j)]; }
    Rat& at(int i, int j) { return c_[idx(i, j)]; }

    Series2 truncated(int nx, int ny) const;
    Series2 shift_down(int kx, int ky) const;
    bool is_zero() const;

    friend Series2 operator+(const Series2& a, const Series2& b);
    friend Series2 operator-(const Series2& a, const Series2& b);
    friend Series2 operator*(const Series2& a, const Series2& b);
    friend Series2 operator*(const Rat& k, const Series2& a);
    friend Series2 operator/(const Series2& a, const Series2& b);
    friend bool operator==(const Series2& a, const Series2& b) { return a.c_ == b.c_; }

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * (ny_ + 1) + j; }
    int nx_, ny_;
    std::vector<Rat> c_;
};

Series2 inverse(const Series2& s);
Series2 sqrt(const Series2& s);

// Terms 0..n_max of the closed-form generating functions.
std::vector<Int> gf_102_201_terms(int n_max);
std::vector<Int> gf_102_210_terms(int n_max);

// poly[j] holds the coefficients (in x) of F^j.
using PolyInF = std::vector<std::vector<long>>;

// P(x, F) mod x^(order+1) for F given by its terms.
Series1 minimal_poly_residual(const PolyInF& poly, const std::vector<Int>& terms, int order);

// Minimal polynomials for the four algebraic generating functions.
PolyInF minimal_poly_000_102();
PolyInF minimal_poly_102_201();
PolyInF minimal_poly_102_210();
PolyInF minimal_poly_010_102();

// Bivariate generating function of {101,120}-avoiding words by length and
// alphabet size, through x^nx y^ny, via Newton square root.
Series2 expand_F_words(int nx, int ny);

// Same coefficients as an integer table (rows: length, cols: alphabet),
// computed by a linear recurrence for the square root.
Grid2<Int> words_F_table(int nx, int ny);

}  // namespace invseq::series
