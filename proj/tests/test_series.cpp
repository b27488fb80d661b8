#include <doctest.h>

#include "invseq/gentree.hpp"
#include "invseq/oracle.hpp"
#include "invseq/series.hpp"

using namespace invseq;
using namespace invseq::series;

namespace {

Series1 catalan_gf(int order) {
    // (1 - sqrt(1-4x)) / (2x)
    const Series1 root = sqrt(Series1::poly({1, -4}, order + 1));
    return Rat(1, 2) * (Series1::constant(1, order + 1) - root).shift_down(1);
}

}  // namespace

TEST_CASE("inverse and sqrt round-trip") {
    const int N = 64;
    const Series1 s = Series1::poly({1, 3, -2, 0, 7, 1}, N);
    CHECK((s * inverse(s) - Series1::constant(1, N)).is_zero());
    const Series1 r = sqrt(s);
    CHECK(r * r == s);
    CHECK_THROWS_AS(inverse(Series1::poly({0, 1}, N)), StructuralError);
    CHECK_THROWS_AS(sqrt(Series1::poly({2, 1}, N)), StructuralError);
}

TEST_CASE("catalan numbers from a square root") {
    const auto c = catalan_gf(20).integer_coeffs(20);
    CHECK(c[0] == 1);
    CHECK(c[5] == 42);
    CHECK(c[20] == Int("6564120420"));
}

TEST_CASE("shift_down rejects nonzero low terms") {
    CHECK_THROWS_AS(Series1::poly({1, 1}, 5).shift_down(1), StructuralError);
    CHECK_THROWS_AS(Series2::poly({{1, 0, 1}}, 3, 3).shift_down(1, 1), StructuralError);
}

TEST_CASE("bivariate sqrt") {
    const Series2 s = Series2::poly({{0, 0, 1}, {1, 0, 2}, {0, 1, -3}, {1, 1, 5}, {2, 2, 1}}, 8, 7);
    const Series2 r = sqrt(s);
    CHECK(r * r == s);
    CHECK((s * inverse(s) - Series2::poly({{0, 0, 1}}, 8, 7)).is_zero());
}

TEST_CASE("closed forms agree with the generating trees") {
    const int N = 200;
    CHECK(gf_102_201_terms(N) == gentree::run_rule(gentree::rule_102_201(), N));
    CHECK(gf_102_210_terms(N) == gentree::run_rule(gentree::rule_102_210(), N));
}

TEST_CASE("closed forms stay integral") {
    CHECK_NOTHROW(gf_102_201_terms(500));
    CHECK_NOTHROW(gf_102_210_terms(500));
}

TEST_CASE("minimal polynomials annihilate the series") {
    const int N = 120;
    CHECK(minimal_poly_residual(minimal_poly_000_102(), gentree::run_rule(gentree::rule_000_102(), N), N).is_zero());
    CHECK(minimal_poly_residual(minimal_poly_102_201(), gf_102_201_terms(N), N).is_zero());
    CHECK(minimal_poly_residual(minimal_poly_102_210(), gf_102_210_terms(N), N).is_zero());
    // A perturbed sequence must leave a residual.
    auto bad = gf_102_201_terms(N);
    bad[9] += 1;
    CHECK_FALSE(minimal_poly_residual(minimal_poly_102_201(), bad, N).is_zero());
}

TEST_CASE("functional equation for the unimodal kernel") {
    // (1-y-x) A(x,y) = 1-y - xy A(xy,1) with A = (1-2y+sqrt(1-4xy)) / (2-2x-2y)
    const int n = 10;
    const Series2 root = sqrt(Series2::poly({{0, 0, 1}, {1, 1, -4}}, n, n));
    const Series2 A = (Series2::poly({{0, 0, 1}, {0, 1, -2}}, n, n) + root) /
                      Series2::poly({{0, 0, 2}, {1, 0, -2}, {0, 1, -2}}, n, n);
    // A(x,1) is the Catalan series, so A(xy,1) sits on the diagonal.
    const Series1 cat = catalan_gf(n);
    Series2 sub(n, n);
    for (int i = 0; i <= n; ++i) sub.at(i, i) = cat[i];
    const Series2 lhs = Series2::poly({{0, 0, 1}, {0, 1, -1}, {1, 0, -1}}, n, n) * A;
    const Series2 rhs = Series2::poly({{0, 0, 1}, {0, 1, -1}}, n, n) - Series2::poly({{1, 1, 1}}, n, n) * sub;
    CHECK((lhs - rhs).is_zero());
}

TEST_CASE("functional equation for 102,210") {
    // (1-y+xy^2) A = 1-y + xy A(x,1) with A = (2-y-y sqrt(1-4x)) / (2(1-y+xy^2))
    const int n = 10;
    const Series2 kernel = Series2::poly({{0, 0, 1}, {0, 1, -1}, {1, 2, 1}}, n, n);
    const Series2 root = sqrt(Series2::poly({{0, 0, 1}, {1, 0, -4}}, n, n));
    const Series2 A = (Series2::poly({{0, 0, 2}, {0, 1, -1}}, n, n) - Series2::poly({{0, 1, 1}}, n, n) * root) /
                      (Rat(2) * kernel);
    // A(x,1) = (1 - sqrt(1-4x)) / 2 / x
    Series2 at_one(n, n);
    for (int i = 0; i + 1 <= n; ++i) at_one.at(i, 0) = Rat(1, 2) * (-root(i + 1, 0));
    const Series2 lhs = kernel * A;
    const Series2 rhs = Series2::poly({{0, 0, 1}, {0, 1, -1}}, n, n) + Series2::poly({{1, 1, 1}}, n, n) * at_one;
    CHECK((lhs - rhs).is_zero());
}

TEST_CASE("word generating function: two routes agree") {
    const int nx = 30, ny = 15;
    const auto table = words_F_table(nx, ny);
    const auto newton = expand_F_words(12, 8);
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= 8; ++k) CHECK(Rat(table(n, k)) == newton(n, k));
    CHECK(table.rows() == nx + 1);
    CHECK(table.cols() == ny + 1);
}

TEST_CASE("word generating function matches brute force") {
    const auto table = words_F_table(6, 4);
    const auto P = PatternSet::parse("101,120");
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= 4; ++k) CHECK(table(n, k) == Int(static_cast<unsigned long>(oracle::count_words({n, k, false}, P))));
}
