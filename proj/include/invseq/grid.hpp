#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace invseq {

using Int = mpz_class;

// Dense 2-index table that reads as zero outside its extent.
template <class T>
class Grid2 {
public:
    Grid2() = default;
    Grid2(int rows, int cols) : rows_(rows), cols_(cols), v_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const T& operator()(int i, int j) const {
        if (i < 0 || j < 0 || i >= rows_ || j >= cols_) return zero_;
        return v_[static_cast<std::size_t>(i) * cols_ + j];
    }
    T& at(int i, int j) { return v_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const Grid2&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> v_;
    static inline const T zero_{};
};

// Dense 3-index table, zero outside its extent.
template <class T>
class Grid3 {
public:
    Grid3() = default;
    Grid3(int d0, int d1, int d2)
        : d0_(d0), d1_(d1), d2_(d2), v_(static_cast<std::size_t>(d0) * d1 * d2) {}

    int dim0() const { return d0_; }
    int dim1() const { return d1_; }
    int dim2() const { return d2_; }

    const T& operator()(int i, int j, int k) const {
        if (i < 0 || j < 0 || k < 0 || i >= d0_ || j >= d1_ || k >= d2_) return zero_;
        return v_[idx(i, j, k)];
    }
    T& at(int i, int j, int k) { return v_[idx(i, j, k)]; }

private:
    std::size_t idx(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * d1_ + j) * d2_ + k;
    }
    int d0_ = 0, d1_ = 0, d2_ = 0;
    std::vector<T> v_;
    static inline const T zero_{};
};

}  // namespace invseq
