#include "tclass/certify.hpp"

#include <algorithm>

#include "tclass/symplectic.hpp"

namespace tclass {

GateVerdict certify_gate(const StabilizerCode& c, const BlockMatrix& t) {
    EndoAlgebra a = endo_algebra(c);
    for (std::size_t i = 0; i < t.ell(); ++i) {
        for (std::size_t j = 0; j < t.ell(); ++j) {
            const Mat2 b = t.block(i, j);
            if (!a.contains(b))
                return {false, GateVerdict::Reason::block_outside_algebra, i, j, b, std::move(a),
                        -1};
        }
    }
    if (!is_symplectic(t.matrix()))
        return {false, GateVerdict::Reason::not_symplectic, 0, 0, Mat2::zero(), std::move(a), -1};
    const int fam = family_case_of(algebra_id(a));
    return {true, GateVerdict::Reason::accepted, 0, 0, Mat2::zero(), std::move(a), fam};
}

BlockMatrix cnot_tableau_from_gl(const F2Matrix& a) {
    if (a.rows() != a.cols() || a.rows() == 0)
        throw std::invalid_argument("cnot_tableau_from_gl: matrix must be square");
    const F2Matrix b = invert(a).transposed();  // throws SingularMatrixError
    const std::size_t ell = a.rows();
    const Mat2 x = Mat2::of(0, 0, 0, 1);
    const Mat2 ix = Mat2::identity() + x;
    std::vector<Mat2> blocks(ell * ell, Mat2::zero());
    for (std::size_t i = 0; i < ell; ++i)
        for (std::size_t j = 0; j < ell; ++j) {
            Mat2 blk = Mat2::zero();
            if (a.get(i, j)) blk = blk + x;
            if (b.get(i, j)) blk = blk + ix;
            blocks[i * ell + j] = blk;
        }
    return BlockMatrix::from_blocks(ell, blocks);
}

const std::map<std::string, BlockMatrix>& named_tableaus() {
    static const std::map<std::string, BlockMatrix> k = [] {
        std::map<std::string, BlockMatrix> m;
        m.emplace("cnot", cnot_tableau_from_gl(F2Matrix{{1, 0}, {1, 1}}));

        const Mat2 i2 = Mat2::identity();
        const Mat2 ones = Mat2::of(1, 1, 1, 1);
        m.emplace("ycy",
                  BlockMatrix::from_blocks(2, std::array<Mat2, 4>{i2, ones, ones, i2}));

        // 4-block gate with orthogonal 0/1 support; transversal for any code
        const int g4[4][4] = {{1, 1, 1, 0}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}};
        std::vector<Mat2> gb(16, Mat2::zero());
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                if (g4[i][j]) gb[i * 4 + j] = i2;
        m.emplace("gottesman4", BlockMatrix::from_blocks(4, gb));

        m.emplace("swap_2", BlockMatrix::from_blocks(
                                2, std::array<Mat2, 4>{Mat2::zero(), i2, i2, Mat2::zero()}));
        m.emplace("facet", BlockMatrix(to_f2(Mat2::of(1, 1, 1, 0))));
        m.emplace("facet_inv", BlockMatrix(to_f2(Mat2::of(0, 1, 1, 1))));
        return m;
    }();
    return k;
}

bool is_block_permutation_pattern(const BlockMatrix& t) {
    const std::size_t ell = t.ell();
    std::vector<int> col_count(ell, 0);
    for (std::size_t i = 0; i < ell; ++i) {
        int row_count = 0;
        for (std::size_t j = 0; j < ell; ++j) {
            if (t.block(i, j) != Mat2::zero()) {
                ++row_count;
                ++col_count[j];
            }
        }
        if (row_count != 1) return false;
    }
    return std::all_of(col_count.begin(), col_count.end(), [](int c) { return c == 1; });
}

EntanglingWitness has_entangling_two_qubit_gate(const StabilizerCode& c) {
    const CodeFamily f = classify(c);
    if (f.family_case == 1 || f.family_case == 5)
        return {false, BlockMatrix::identity(2)};
    const BlockMatrix& base = named_tableaus().at(f.family_case == 3 ? "ycy" : "cnot");
    // endo(C) = witness * A_case * witness^-1, so conjugating the canonical
    // gate blockwise by the witness lands its blocks in endo(C).
    return {true, block_conjugate(base, f.witness)};
}

bool small_gate_triviality(const StabilizerCode& c, std::size_t ell) {
    if (ell < 1 || ell > 3)
        throw std::invalid_argument("small_gate_triviality: ell must be 1..3");
    if (classify(c).family_case != 5)
        throw std::invalid_argument("small_gate_triviality: not a generic code");
    const TransversalGroup g = enumerate_group(c, ell);
    static constexpr std::size_t kFactorial[] = {1, 1, 2, 6};
    if (g.size() != kFactorial[ell]) return false;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const BlockMatrix e = g.element(i);
        if (!is_block_permutation_pattern(e)) return false;
        for (std::size_t r = 0; r < ell; ++r)
            for (std::size_t s = 0; s < ell; ++s) {
                const Mat2 b = e.block(r, s);
                if (b != Mat2::zero() && b != Mat2::identity()) return false;
            }
    }
    return true;
}

}  // namespace tclass
