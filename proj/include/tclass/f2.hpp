#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "tclass/errors.hpp"

namespace tclass {

namespace detail {
inline constexpr std::size_t kWordBits = 64;
inline constexpr std::size_t words_for(std::size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
}
}  // namespace detail

/// Bit-packed row vector over GF(2). Bits past len() stay zero.
class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(std::size_t len) : len_(len), words_(detail::words_for(len), 0) {}
    F2Vector(std::size_t len, std::initializer_list<int> bits);

    std::size_t len() const { return len_; }

    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
    void set(std::size_t i, bool v) {
        const std::uint64_t m = std::uint64_t{1} << (i % 64);
        if (v)
            words_[i / 64] |= m;
        else
            words_[i / 64] &= ~m;
    }

    bool is_zero() const;

    F2Vector& operator^=(const F2Vector& o);
    friend F2Vector operator^(F2Vector a, const F2Vector& b) {
        a ^= b;
        return a;
    }
    friend bool operator==(const F2Vector&, const F2Vector&) = default;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense bit-packed matrix over GF(2). Row-major, 64-bit words per row.
/// Addition is XOR, products are AND/XOR; everything is exact.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_(detail::words_for(cols)), data_(rows * stride_, 0) {}
    F2Matrix(std::initializer_list<std::initializer_list<int>> rows);

    static F2Matrix identity(std::size_t n);
    static F2Matrix from_rows(const std::vector<F2Vector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * stride_ + c / 64] >> (c % 64)) & 1;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        const std::uint64_t m = std::uint64_t{1} << (c % 64);
        if (v)
            data_[r * stride_ + c / 64] |= m;
        else
            data_[r * stride_ + c / 64] &= ~m;
    }

    F2Vector row(std::size_t r) const;
    void set_row(std::size_t r, const F2Vector& v);
    void swap_rows(std::size_t r1, std::size_t r2);
    /// row[dst] ^= row[src]
    void xor_row(std::size_t dst, std::size_t src);

    F2Matrix transposed() const;

    friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b);
    friend F2Matrix operator+(const F2Matrix& a, const F2Matrix& b);
    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

    std::span<const std::uint64_t> row_words(std::size_t r) const {
        return {data_.data() + r * stride_, stride_};
    }
    std::span<std::uint64_t> row_words(std::size_t r) {
        return {data_.data() + r * stride_, stride_};
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Reduced row-echelon form and rank. The row space is preserved; zero rows
/// sink to the bottom. rref is idempotent.
std::pair<F2Matrix, std::size_t> rref(F2Matrix m);

std::size_t rank(const F2Matrix& m);

/// Inverse of a square matrix. Throws SingularMatrixError when rank < n.
F2Matrix invert(const F2Matrix& m);

/// 2x2 matrix over GF(2) packed into a nibble: value (a<<3)|(b<<2)|(c<<1)|d
/// for [[a,b],[c,d]]. The sixteen values 0..15 are exactly M_2(F_2).
struct Mat2 {
    std::uint8_t bits = 0;

    static constexpr Mat2 zero() { return {0}; }
    static constexpr Mat2 identity() { return {0b1001}; }
    static constexpr Mat2 of(int a, int b, int c, int d) {
        return {static_cast<std::uint8_t>(((a & 1) << 3) | ((b & 1) << 2) | ((c & 1) << 1) |
                                          (d & 1))};
    }

    constexpr bool at(std::size_t r, std::size_t c) const {
        return (bits >> (3 - (2 * r + c))) & 1;
    }

    constexpr Mat2 transposed() const { return of(at(0, 0), at(1, 0), at(0, 1), at(1, 1)); }

    constexpr bool invertible() const {
        return ((at(0, 0) & at(1, 1)) ^ (at(0, 1) & at(1, 0))) != 0;
    }

    /// Over GF(2) the adjugate of an invertible 2x2 matrix is its inverse.
    constexpr Mat2 inverse() const {
        if (!invertible()) throw SingularMatrixError("Mat2::inverse: singular matrix");
        return of(at(1, 1), at(0, 1), at(1, 0), at(0, 0));
    }

    friend constexpr Mat2 operator+(Mat2 x, Mat2 y) {
        return {static_cast<std::uint8_t>(x.bits ^ y.bits)};
    }
    friend constexpr Mat2 operator*(Mat2 x, Mat2 y) {
        const int a = (x.at(0, 0) & y.at(0, 0)) ^ (x.at(0, 1) & y.at(1, 0));
        const int b = (x.at(0, 0) & y.at(0, 1)) ^ (x.at(0, 1) & y.at(1, 1));
        const int c = (x.at(1, 0) & y.at(0, 0)) ^ (x.at(1, 1) & y.at(1, 0));
        const int d = (x.at(1, 0) & y.at(0, 1)) ^ (x.at(1, 1) & y.at(1, 1));
        return of(a, b, c, d);
    }
    friend constexpr bool operator==(Mat2, Mat2) = default;
    friend constexpr bool operator<(Mat2 x, Mat2 y) { return x.bits < y.bits; }
};

F2Matrix to_f2(Mat2 m);
Mat2 mat2_from_f2(const F2Matrix& m);

/// A subspace held as its canonical representative: the RREF basis with zero
/// rows stripped. Subspace equality is basis equality bit-for-bit.
class RowSpace {
public:
    RowSpace() = default;

    static RowSpace zero(std::size_t cols);
    static RowSpace from_generators(const F2Matrix& gens);
    static RowSpace from_generators(const std::vector<F2Vector>& gens, std::size_t cols);

    const F2Matrix& basis() const { return basis_; }
    std::size_t dim() const { return basis_.rows(); }
    std::size_t cols() const { return cols_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Residual of v after elimination against the basis; zero iff v is in the span.
    F2Vector reduce(F2Vector v) const;
    bool member(const F2Vector& v) const;

    friend bool operator==(const RowSpace&, const RowSpace&) = default;

private:
    std::size_t cols_ = 0;
    F2Matrix basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace tclass
