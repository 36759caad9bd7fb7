#include "tclass/symplectic.hpp"

#include <bit>

namespace tclass {

F2Matrix symplectic_form(std::size_t n) {
    F2Matrix jn(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        jn.set(2 * i, 2 * i + 1, true);
        jn.set(2 * i + 1, 2 * i, true);
    }
    return jn;
}

int omega(const F2Vector& a, const F2Vector& c) {
    if (a.len() != c.len() || a.len() % 2 != 0)
        throw std::invalid_argument("omega: vectors must share an even length");
    constexpr std::uint64_t kEven = 0x5555555555555555ull;
    std::uint64_t acc = 0;
    auto aw = a.words();
    auto cw = c.words();
    for (std::size_t i = 0; i < aw.size(); ++i)
        acc ^= (aw[i] & (cw[i] >> 1) & kEven) ^ ((aw[i] >> 1) & cw[i] & kEven);
    return std::popcount(acc) & 1;
}

bool is_symplectic(const F2Matrix& t) {
    if (t.rows() != t.cols() || t.rows() % 2 != 0)
        throw std::invalid_argument("is_symplectic: tableau must be square with even dimension");
    const F2Matrix jn = symplectic_form(t.rows() / 2);
    return t * jn * t.transposed() == jn;
}

const std::array<Mat2, 6>& sp2_elements() {
    static const std::array<Mat2, 6> k = {
        Mat2::identity(),      // I
        Mat2::of(0, 1, 1, 0),  // Hadamard
        Mat2::of(1, 1, 1, 0),  // facet: X -> Y -> Z -> X
        Mat2::of(0, 1, 1, 1),  // inverse facet
        Mat2::of(1, 1, 0, 1),  // S
        Mat2::of(1, 0, 1, 1),  // sqrt(X)
    };
    return k;
}

std::string_view sp2_name(Mat2 m) {
    static constexpr std::array<std::string_view, 6> kNames = {
        "identity", "hadamard", "facet", "facet-inverse", "s", "sqrt-x"};
    const auto& elems = sp2_elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (elems[i] == m) return kNames[i];
    return {};
}

BigUint sp_order(std::size_t ell) {
    if (ell < 1 || ell > 31) throw std::invalid_argument("sp_order: ell out of range");
    BigUint order{1};
    for (std::size_t i = 0; i < ell * ell; ++i) order *= 2;
    for (std::size_t i = 1; i <= ell; ++i) order *= (std::uint64_t{1} << (2 * i)) - 1;
    return order;
}

}  // namespace tclass
