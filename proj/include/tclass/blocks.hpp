#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tclass/bignum.hpp"
#include "tclass/endo.hpp"
#include "tclass/f2.hpp"

namespace tclass {

/// Conjugation on 2x2 blocks: bar(a) = J a^T J (swap of the diagonal entries).
/// It is an involutive anti-automorphism of M_2(F_2).
Mat2 bar(Mat2 a);

/// A 2l x 2l tableau viewed as an l x l grid of 2x2 blocks.
class BlockMatrix {
public:
    explicit BlockMatrix(F2Matrix t);
    static BlockMatrix identity(std::size_t ell);
    static BlockMatrix from_blocks(std::size_t ell, std::span<const Mat2> blocks);

    std::size_t ell() const { return ell_; }
    const F2Matrix& matrix() const { return t_; }
    Mat2 block(std::size_t i, std::size_t j) const;

    friend bool operator==(const BlockMatrix&, const BlockMatrix&) = default;

private:
    std::size_t ell_;
    F2Matrix t_;
};

/// Blockwise bar followed by the block transpose. Coincides with J_l t^T J_l.
BlockMatrix bar_transpose(const BlockMatrix& t);

/// Blockwise conjugation r * t_ij * r^-1 (r invertible).
BlockMatrix block_conjugate(const BlockMatrix& t, Mat2 r);

/// Transversal action on a vector in qubit-major layout: v has length 2*n*l
/// and each contiguous 2l-slice (the l (x,z) pairs of one physical qubit
/// across blocks) is right-multiplied by t.
F2Vector act_blocks(const F2Vector& v, const BlockMatrix& t);

/// Every 2x2 block of t lies in a.
bool in_Ml_A(const BlockMatrix& t, const EndoAlgebra& a);

/// Brute-force oracle: embed each basis vector of C in each block position,
/// apply act_blocks and test per-block membership in C. Never consults the
/// endomorphism algebra.
bool preserves_l_blocks(const StabilizerCode& c, const BlockMatrix& t);

/// t * bar_transpose(t) == I. For t in M_l(A) this is the symplectic
/// condition in disguise.
bool is_unitary_over_A(const BlockMatrix& t);

/// Enumerated group of transversal tableaus, elements in canonical order
/// (lexicographic by packed row bits).
class TransversalGroup {
public:
    TransversalGroup(std::size_t ell, int family_case, std::string family, BigUint order,
                     std::vector<std::uint8_t> packed, bool has_elements);

    std::size_t ell() const { return ell_; }
    int family_case() const { return family_case_; }
    const std::string& family() const { return family_; }
    const BigUint& order() const { return order_; }

    bool has_elements() const { return has_elements_; }
    std::size_t size() const;
    BlockMatrix element(std::size_t i) const;
    /// Raw element: ell*ell block nibbles in block-row-major order.
    std::span<const std::uint8_t> packed_element(std::size_t i) const;

private:
    std::size_t ell_;
    int family_case_;
    std::string family_;
    BigUint order_;
    std::vector<std::uint8_t> packed_;
    bool has_elements_;
};

inline constexpr std::uint64_t kDefaultElementCap = 2'000'000;
inline constexpr std::uint64_t kDefaultNodeCap = 100'000'000;

/// All t in M_l(endo_algebra(c)) with t * bar_transpose(t) == I, found by
/// Gram-constrained backtracking over block rows. Depends on the code only
/// through its endomorphism algebra.
TransversalGroup enumerate_group(const StabilizerCode& c, std::size_t ell,
                                 std::uint64_t cap = kDefaultElementCap);
TransversalGroup enumerate_group_for_algebra(const EndoAlgebra& a, std::size_t ell,
                                             std::uint64_t cap = kDefaultElementCap);

/// Group order for one of the six families: by backtracking count when
/// feasible, by closed formula for Sp, GL and U(l,F4); both must agree when
/// both run.
BigUint count_group(int family_case, std::size_t ell);
BigUint count_group_for_algebra(const EndoAlgebra& a, std::size_t ell,
                                std::uint64_t node_cap = kDefaultNodeCap);

/// Closed formulas: case 0 (Sp), case 1 (U(l,F4)), case 2 (GL).
std::optional<BigUint> closed_form_order(int family_case, std::size_t ell);

/// Frozen reference orders for the six families at small l.
std::optional<std::uint64_t> family_table_order(int family_case, std::size_t ell);

/// Tableau file format: 2l lines of 2l characters in {0,1}, row i the image
/// of the i-th generator in the order X1,Z1,...,Xl,Zl.
F2Matrix parse_tableau(std::string_view text);
std::string format_tableau(const F2Matrix& t);

}  // namespace tclass
