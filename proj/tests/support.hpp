#pragma once

#include <random>
#include <vector>

#include "tclass/code.hpp"
#include "tclass/endo.hpp"
#include "tclass/f2.hpp"
#include "tclass/symplectic.hpp"

namespace tclass::testing {

using Rng = std::mt19937_64;

inline F2Vector random_vector(Rng& rng, std::size_t len) {
    F2Vector v(len);
    for (std::size_t i = 0; i < len; ++i)
        if (rng() & 1) v.set(i, true);
    return v;
}

inline F2Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    F2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng() & 1) m.set(r, c, true);
    return m;
}

/// Random isotropic subspace built by rejection sampling: draw vectors, keep
/// those omega-orthogonal to everything chosen so far and outside the span.
/// May stop short of target_dim when attempts run out.
inline StabilizerCode random_isotropic_code(Rng& rng, std::size_t n, std::size_t target_dim) {
    std::vector<F2Vector> rows;
    RowSpace span = RowSpace::zero(2 * n);
    std::size_t attempts = 0;
    while (span.dim() < target_dim && attempts < 1000) {
        ++attempts;
        F2Vector v = random_vector(rng, 2 * n);
        if (v.is_zero()) continue;
        bool isotropic = true;
        for (const auto& row : rows)
            if (omega(v, row) != 0) {
                isotropic = false;
                break;
            }
        if (!isotropic || span.member(v)) continue;
        rows.push_back(v);
        span = RowSpace::from_generators(rows, 2 * n);
    }
    return {n, span};
}

/// The randomized search that produced the frozen generic corpus entry:
/// random 5-qubit, dim-4 isotropic codes until the endomorphism algebra is
/// trivial ({0, I}).
inline StabilizerCode find_generic_code(std::uint64_t seed) {
    Rng rng(seed);
    const std::uint16_t trivial_mask = (1u << 0) | (1u << Mat2::identity().bits);
    while (true) {
        StabilizerCode c = random_isotropic_code(rng, 5, 4);
        if (c.space().dim() == 4 && endo_algebra(c).mask() == trivial_mask) return c;
    }
}

// Naive per-bit references used by the packing-transparency tests.
using BitGrid = std::vector<std::vector<int>>;

inline BitGrid grid_of(const F2Matrix& m) {
    BitGrid g(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) g[r][c] = m.get(r, c) ? 1 : 0;
    return g;
}

inline BitGrid naive_mul(const BitGrid& a, const BitGrid& b) {
    BitGrid out(a.size(), std::vector<int>(b.empty() ? 0 : b[0].size(), 0));
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < out[r].size(); ++c) {
            int acc = 0;
            for (std::size_t k = 0; k < b.size(); ++k) acc ^= a[r][k] & b[k][c];
            out[r][c] = acc;
        }
    return out;
}

inline BitGrid naive_add(const BitGrid& a, const BitGrid& b) {
    BitGrid out = a;
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a[r].size(); ++c) out[r][c] ^= b[r][c];
    return out;
}

inline BitGrid naive_transpose(const BitGrid& a) {
    if (a.empty()) return {};
    BitGrid out(a[0].size(), std::vector<int>(a.size(), 0));
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a[r].size(); ++c) out[c][r] = a[r][c];
    return out;
}

inline std::size_t naive_rank(BitGrid a) {
    std::size_t rank = 0;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && !a[piv][c]) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != rank && a[r][c])
                for (std::size_t cc = 0; cc < cols; ++cc) a[r][cc] ^= a[rank][cc];
        ++rank;
    }
    return rank;
}

}  // namespace tclass::testing
