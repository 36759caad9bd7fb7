#include "tclass/f2.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace tclass {

F2Vector::F2Vector(std::size_t len, std::initializer_list<int> bits) : F2Vector(len) {
    if (bits.size() > len) throw std::invalid_argument("F2Vector: more bits than length");
    std::size_t i = 0;
    for (int b : bits) {
        if (b) set(i, true);
        ++i;
    }
}

bool F2Vector::is_zero() const {
    for (std::uint64_t w : words_)
        if (w) return false;
    return true;
}

F2Vector& F2Vector::operator^=(const F2Vector& o) {
    if (len_ != o.len_) throw std::invalid_argument("F2Vector: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

F2Matrix::F2Matrix(std::initializer_list<std::initializer_list<int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    stride_ = detail::words_for(cols_);
    data_.assign(rows_ * stride_, 0);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("F2Matrix: ragged initializer");
        std::size_t c = 0;
        for (int v : row) {
            if (v) set(r, c, true);
            ++c;
        }
        ++r;
    }
}

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<F2Vector>& rows, std::size_t cols) {
    F2Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

F2Vector F2Matrix::row(std::size_t r) const {
    F2Vector v(cols_);
    auto src = row_words(r);
    std::copy(src.begin(), src.end(), v.words().begin());
    return v;
}

void F2Matrix::set_row(std::size_t r, const F2Vector& v) {
    if (v.len() != cols_) throw std::invalid_argument("F2Matrix::set_row: length mismatch");
    auto dst = row_words(r);
    std::copy(v.words().begin(), v.words().end(), dst.begin());
}

void F2Matrix::swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    auto a = row_words(r1);
    auto b = row_words(r2);
    std::swap_ranges(a.begin(), a.end(), b.begin());
}

void F2Matrix::xor_row(std::size_t dst, std::size_t src) {
    std::uint64_t* d = data_.data() + dst * stride_;
    const std::uint64_t* s = data_.data() + src * stride_;
    for (std::size_t i = 0; i < stride_; ++i) d[i] ^= s[i];
}

F2Matrix F2Matrix::transposed() const {
    F2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto w = row_words(r);
        for (std::size_t wi = 0; wi < w.size(); ++wi) {
            std::uint64_t bits = w[wi];
            while (bits) {
                const std::size_t c = wi * 64 + std::countr_zero(bits);
                t.set(c, r, true);
                bits &= bits - 1;
            }
        }
    }
    return t;
}

F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("F2Matrix: product dimension mismatch");
    F2Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        std::uint64_t* dst = out.data_.data() + r * out.stride_;
        auto w = a.row_words(r);
        for (std::size_t wi = 0; wi < w.size(); ++wi) {
            std::uint64_t bits = w[wi];
            while (bits) {
                const std::size_t k = wi * 64 + std::countr_zero(bits);
                const std::uint64_t* src = b.data_.data() + k * b.stride_;
                for (std::size_t i = 0; i < out.stride_; ++i) dst[i] ^= src[i];
                bits &= bits - 1;
            }
        }
    }
    return out;
}

F2Matrix operator+(const F2Matrix& a, const F2Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("F2Matrix: sum dimension mismatch");
    F2Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] ^= b.data_[i];
    return out;
}

std::pair<F2Matrix, std::size_t> rref(F2Matrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && !m.get(piv, c)) ++piv;
        if (piv == rows) continue;
        m.swap_rows(piv, r);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && m.get(i, c)) m.xor_row(i, r);
        ++r;
    }
    return {std::move(m), r};
}

std::size_t rank(const F2Matrix& m) { return rref(m).second; }

F2Matrix invert(const F2Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("invert: matrix not square");
    const std::size_t n = m.rows();
    F2Matrix a = m;
    F2Matrix inv = F2Matrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && !a.get(piv, c)) ++piv;
        if (piv == n) throw SingularMatrixError("invert: singular matrix");
        a.swap_rows(piv, c);
        inv.swap_rows(piv, c);
        for (std::size_t i = 0; i < n; ++i) {
            if (i != c && a.get(i, c)) {
                a.xor_row(i, c);
                inv.xor_row(i, c);
            }
        }
    }
    return inv;
}

F2Matrix to_f2(Mat2 m) {
    F2Matrix out(2, 2);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) out.set(r, c, m.at(r, c));
    return out;
}

Mat2 mat2_from_f2(const F2Matrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("mat2_from_f2: not 2x2");
    return Mat2::of(m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
}

RowSpace RowSpace::zero(std::size_t cols) {
    RowSpace s;
    s.cols_ = cols;
    s.basis_ = F2Matrix(0, cols);
    return s;
}

RowSpace RowSpace::from_generators(const F2Matrix& gens) {
    auto [red, rk] = rref(gens);
    RowSpace s;
    s.cols_ = gens.cols();
    s.basis_ = F2Matrix(rk, gens.cols());
    s.pivots_.reserve(rk);
    for (std::size_t r = 0; r < rk; ++r) {
        s.basis_.set_row(r, red.row(r));
        std::size_t c = 0;
        while (!red.get(r, c)) ++c;
        s.pivots_.push_back(c);
    }
    return s;
}

RowSpace RowSpace::from_generators(const std::vector<F2Vector>& gens, std::size_t cols) {
    return from_generators(F2Matrix::from_rows(gens, cols));
}

F2Vector RowSpace::reduce(F2Vector v) const {
    if (v.len() != cols_) throw std::invalid_argument("RowSpace: vector length mismatch");
    auto vw = v.words();
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        const std::size_t p = pivots_[i];
        if ((vw[p / 64] >> (p % 64)) & 1) {
            auto bw = basis_.row_words(i);
            for (std::size_t w = 0; w < bw.size(); ++w) vw[w] ^= bw[w];
        }
    }
    return v;
}

bool RowSpace::member(const F2Vector& v) const { return reduce(v).is_zero(); }

}  // namespace tclass
