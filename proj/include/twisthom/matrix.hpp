#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "twisthom/errors.hpp"

namespace twisthom {

// Exact arbitrary-precision integer. Smith normal form intermediates can blow
// up well past 64 bits even for small inputs, so fixed-width types are not an
// option here.
using Integer = boost::multiprecision::cpp_int;

// Dense row-major matrix over Z. Maps act on column vectors: an r x c matrix
// is a map Z^c -> Z^r. Empty dimensions are fully supported and keep their
// shape (a 3x0 and a 0x3 matrix are different things).
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
    // Row-major literal, e.g. IntMatrix::of({{2, 4}, {6, 8}}).
    static IntMatrix of(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMatrix identity(std::size_t n);
    static IntMatrix scalar(std::size_t n, const Integer& value);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty_shape() const { return rows_ == 0 || cols_ == 0; }

    Integer& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const IntMatrix& other) const = default;

    IntMatrix operator*(const IntMatrix& other) const;
    IntMatrix operator+(const IntMatrix& other) const;
    IntMatrix operator-(const IntMatrix& other) const;
    IntMatrix operator-() const;
    IntMatrix scaled(const Integer& s) const;
    IntMatrix transposed() const;

    // Entries reduced into [0, n).
    IntMatrix reduced_mod(const Integer& n) const;

    IntMatrix column(std::size_t j) const;
    IntMatrix columns(std::size_t first, std::size_t count) const;
    IntMatrix top_rows(std::size_t count) const;
    // [a | b] side by side; both must have the same number of rows.
    static IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);
    // Block diagonal.
    static IntMatrix diag_blocks(const std::vector<IntMatrix>& blocks);

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    // row i += s * row j ; col i += s * col j
    void add_row(std::size_t i, std::size_t j, const Integer& s);
    void add_col(std::size_t i, std::size_t j, const Integer& s);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<Integer> e_;
};

// Determinant by fraction-free (Bareiss) elimination; exact.
Integer determinant(const IntMatrix& m);

}  // namespace twisthom
