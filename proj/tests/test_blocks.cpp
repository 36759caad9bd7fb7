#include <doctest.h>

#include <set>

#include "support.hpp"
#include "tclass/blocks.hpp"
#include "tclass/certify.hpp"
#include "tclass/corpus.hpp"
#include "tclass/symplectic.hpp"

using namespace tclass;
using namespace tclass::testing;

namespace {

const F2Matrix kCnot{{1, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 1}};
const F2Matrix kYcy{{1, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 0}, {1, 1, 0, 1}};

BlockMatrix random_block_matrix(Rng& rng, std::size_t ell) {
    return BlockMatrix(random_matrix(rng, 2 * ell, 2 * ell));
}

// the Lemma's block-sum form of the action, as an independent reference
F2Vector act_blocks_by_sum(const F2Vector& v, const BlockMatrix& t) {
    const std::size_t ell = t.ell();
    const std::size_t n = v.len() / (2 * ell);
    F2Vector out(v.len());
    for (std::size_t j = 0; j < ell; ++j) {
        F2Vector comp(2 * n);
        for (std::size_t k = 0; k < ell; ++k) {
            F2Vector vk(2 * n);
            for (std::size_t q = 0; q < n; ++q) {
                if (v.get(q * 2 * ell + 2 * k)) vk.set(2 * q, true);
                if (v.get(q * 2 * ell + 2 * k + 1)) vk.set(2 * q + 1, true);
            }
            comp ^= act(vk, t.block(k, j));
        }
        for (std::size_t q = 0; q < n; ++q) {
            if (comp.get(2 * q)) out.set(q * 2 * ell + 2 * j, true);
            if (comp.get(2 * q + 1)) out.set(q * 2 * ell + 2 * j + 1, true);
        }
    }
    return out;
}

// all of M_l(a) by odometer over the blocks
template <typename Fn>
void sweep_Ml(const EndoAlgebra& a, std::size_t ell, Fn&& fn) {
    const auto elems = a.elements();
    std::vector<std::size_t> odo(ell * ell, 0);
    std::vector<Mat2> blocks(ell * ell);
    while (true) {
        for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i] = elems[odo[i]];
        fn(BlockMatrix::from_blocks(ell, blocks));
        std::size_t p = 0;
        while (p < odo.size() && ++odo[p] == elems.size()) odo[p++] = 0;
        if (p == odo.size()) break;
    }
}

}  // namespace

TEST_SUITE("blocks") {

TEST_CASE("block access round trip") {
    const BlockMatrix t(kCnot);
    CHECK(t.ell() == 2);
    CHECK(t.block(0, 0) == Mat2::identity());
    CHECK(t.block(0, 1) == Mat2::of(1, 0, 0, 0));
    CHECK(t.block(1, 0) == Mat2::of(0, 0, 0, 1));
    CHECK(t.block(1, 1) == Mat2::identity());
    CHECK(BlockMatrix::from_blocks(
              2, std::array<Mat2, 4>{t.block(0, 0), t.block(0, 1), t.block(1, 0), t.block(1, 1)}) ==
          t);
    CHECK_THROWS_AS(BlockMatrix(F2Matrix(3, 3)), std::invalid_argument);
}

TEST_CASE("act_blocks basics") {
    Rng rng(67);
    const F2Vector v = random_vector(rng, 16);  // n=4, l=2
    CHECK(act_blocks(v, BlockMatrix::identity(2)) == v);

    // block swap exchanges the two copies
    const BlockMatrix swap = named_tableaus().at("swap_2");
    const F2Vector swapped = act_blocks(v, swap);
    for (std::size_t q = 0; q < 4; ++q)
        for (std::size_t b = 0; b < 2; ++b) {
            CHECK(swapped.get(q * 4 + 2 + b) == v.get(q * 4 + b));
            CHECK(swapped.get(q * 4 + b) == v.get(q * 4 + 2 + b));
        }

    CHECK_THROWS_AS(act_blocks(F2Vector(10), BlockMatrix::identity(2)), std::invalid_argument);
}

TEST_CASE("cnot copies an x-type row into both blocks") {
    // X1X2 placed in block 1 of two blocks (n=2)
    F2Vector v(8);
    v.set(0, true);
    v.set(4, true);
    const F2Vector w = act_blocks(v, BlockMatrix(kCnot));
    F2Vector expected(8);
    expected.set(0, true);
    expected.set(2, true);  // X on qubit 1, both blocks
    expected.set(4, true);
    expected.set(6, true);  // X on qubit 2, both blocks
    CHECK(w == expected);
}

TEST_CASE("act_blocks agrees with the block-sum form") {
    Rng rng(71);
    for (int i = 0; i < 100; ++i) {
        const std::size_t ell = 1 + rng() % 3;
        const std::size_t n = 1 + rng() % 5;
        const F2Vector v = random_vector(rng, 2 * n * ell);
        const BlockMatrix t = random_block_matrix(rng, ell);
        CHECK(act_blocks(v, t) == act_blocks_by_sum(v, t));
    }
}

TEST_CASE("in_Ml_A") {
    for (AlgebraTag t : algebra_catalog())
        CHECK(in_Ml_A(BlockMatrix::identity(3), catalog_algebra(t)));

    const F2Matrix m2a1{{1, 1, 1, 0}, {1, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 1}};
    CHECK(in_Ml_A(BlockMatrix(m2a1), catalog_algebra(AlgebraTag::A1)));
    CHECK_FALSE(in_Ml_A(BlockMatrix(kCnot), catalog_algebra(AlgebraTag::A1)));
}

TEST_CASE("preserves_l_blocks matches algebra membership") {
    const StabilizerCode c513 = corpus_code("513");
    const EndoAlgebra a1 = endo_algebra(c513);

    // full sweep over M_2(A1)
    sweep_Ml(a1, 2, [&](const BlockMatrix& t) {
        CHECK(preserves_l_blocks(c513, t));
        CHECK(in_Ml_A(t, a1));
    });

    // random matrices agree with membership in both directions
    Rng rng(73);
    for (int i = 0; i < 300; ++i) {
        const BlockMatrix t = random_block_matrix(rng, 2);
        CHECK(preserves_l_blocks(c513, t) == in_Ml_A(t, a1));
    }

    // a single bad block sinks it
    std::array<Mat2, 4> blocks{Mat2::identity(), Mat2::zero(), Mat2::of(0, 0, 1, 0),
                               Mat2::identity()};
    CHECK_FALSE(preserves_l_blocks(c513, BlockMatrix::from_blocks(2, blocks)));

    // block swaps preserve every code
    for (const auto& e : corpus())
        CHECK(preserves_l_blocks(parse_code(e.stab_text), named_tableaus().at("swap_2")));
}

TEST_CASE("bar") {
    CHECK(bar(Mat2::of(0, 1, 1, 1)) == Mat2::of(1, 1, 1, 0));
    CHECK(bar(Mat2::identity()) == Mat2::identity());
    CHECK(bar(Mat2::of(1, 1, 1, 1)) == Mat2::of(1, 1, 1, 1));
    for (unsigned x = 0; x < 16; ++x) {
        const Mat2 mx{static_cast<std::uint8_t>(x)};
        CHECK(bar(bar(mx)) == mx);
        CHECK(bar(mx) == mat2_from_f2(to_f2(Mat2::of(0, 1, 1, 0)) * to_f2(mx).transposed() *
                                      to_f2(Mat2::of(0, 1, 1, 0))));
        for (unsigned y = 0; y < 16; ++y) {
            const Mat2 my{static_cast<std::uint8_t>(y)};
            CHECK(bar(mx * my) == bar(my) * bar(mx));  // anti-automorphism
        }
    }
}

TEST_CASE("bar_transpose") {
    CHECK(bar_transpose(BlockMatrix::identity(3)) == BlockMatrix::identity(3));

    // diagonal block matrices stay diagonal with barred entries
    const Mat2 x = Mat2::of(1, 1, 0, 1), y = Mat2::of(1, 0, 1, 0);
    const BlockMatrix diag =
        BlockMatrix::from_blocks(2, std::array<Mat2, 4>{x, Mat2::zero(), Mat2::zero(), y});
    const BlockMatrix bt = bar_transpose(diag);
    CHECK(bt.block(0, 0) == bar(x));
    CHECK(bt.block(1, 1) == bar(y));
    CHECK(bt.block(0, 1) == Mat2::zero());

    // equals J_l t^T J_l
    Rng rng(79);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t ell = 1 + rng() % 4;
        const BlockMatrix t = random_block_matrix(rng, ell);
        const F2Matrix jl = symplectic_form(ell);
        CHECK(bar_transpose(t).matrix() == jl * t.matrix().transposed() * jl);
    }
}

TEST_CASE("is_unitary_over_A") {
    CHECK(is_unitary_over_A(BlockMatrix(kCnot)));
    CHECK(is_unitary_over_A(BlockMatrix(kYcy)));
    CHECK_FALSE(is_unitary_over_A(BlockMatrix(F2Matrix(4, 4))));
}

TEST_CASE("symplectic iff unitary over M_2(A) for A1 and A5") {
    for (AlgebraTag tag : {AlgebraTag::A1, AlgebraTag::A5}) {
        sweep_Ml(catalog_algebra(tag), 2, [&](const BlockMatrix& t) {
            CHECK(is_symplectic(t.matrix()) == is_unitary_over_A(t));
        });
    }
}

TEST_CASE("group of the five-qubit code on one block") {
    const TransversalGroup g = enumerate_group(corpus_code("513"), 1);
    REQUIRE(g.size() == 3);
    // canonical order: lexicographic by packed row bits
    CHECK(g.element(0) == BlockMatrix(to_f2(Mat2::of(0, 1, 1, 1))));
    CHECK(g.element(1) == BlockMatrix(to_f2(Mat2::identity())));
    CHECK(g.element(2) == BlockMatrix(to_f2(Mat2::of(1, 1, 1, 0))));
    CHECK(g.order().str() == "3");
    CHECK(g.family_case() == 1);
    CHECK(g.family() == "U(l,F4)");
}

TEST_CASE("group of the five-qubit code on two blocks") {
    const TransversalGroup g = enumerate_group(corpus_code("513"), 2);
    REQUIRE(g.size() == 18);
    for (std::size_t i = 0; i < g.size(); ++i)
        CHECK(is_block_permutation_pattern(g.element(i)));
}

TEST_CASE("group of a generic code on two blocks") {
    const TransversalGroup g = enumerate_group(corpus_code("generic-5q"), 2);
    REQUIRE(g.size() == 2);
    CHECK(g.element(0) == named_tableaus().at("swap_2"));
    CHECK(g.element(1) == BlockMatrix::identity(2));
}

TEST_CASE("group axioms on enumerated groups") {
    for (const char* name : {"513", "a3-422"}) {
        const TransversalGroup g = enumerate_group(corpus_code(name), 2);
        std::set<F2Matrix> elems;
        bool has_identity = false;
        for (std::size_t i = 0; i < g.size(); ++i) {
            elems.insert(g.element(i).matrix());
            if (g.element(i).matrix() == F2Matrix::identity(4)) has_identity = true;
        }
        CHECK(has_identity);
        CHECK(elems.size() == g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            CHECK(elems.count(invert(g.element(i).matrix())) == 1);
            for (std::size_t j = 0; j < g.size(); ++j)
                CHECK(elems.count(g.element(i).matrix() * g.element(j).matrix()) == 1);
        }
    }
}

TEST_CASE("all block permutations belong to every family's group") {
    // l = 3: the 6 permutation tableaus are symplectic and in M_3(A) for all A
    const std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& p : perms) {
        std::vector<Mat2> blocks(9, Mat2::zero());
        for (std::size_t i = 0; i < 3; ++i) blocks[i * 3 + p[i]] = Mat2::identity();
        const BlockMatrix t = BlockMatrix::from_blocks(3, blocks);
        CHECK(is_symplectic(t.matrix()));
        CHECK(is_unitary_over_A(t));
        for (int cs = 0; cs <= 5; ++cs) CHECK(in_Ml_A(t, canonical_algebra(cs)));
    }
}

TEST_CASE("lattice monotonicity at l = 2") {
    // the generic group embeds in every family's group; every family's group
    // embeds in Sp = case 0
    const TransversalGroup generic = enumerate_group_for_algebra(canonical_algebra(5), 2);
    for (int cs = 0; cs <= 4; ++cs)
        for (std::size_t i = 0; i < generic.size(); ++i)
            CHECK(in_Ml_A(generic.element(i), canonical_algebra(cs)));

    for (int cs = 1; cs <= 5; ++cs) {
        const TransversalGroup g = enumerate_group_for_algebra(canonical_algebra(cs), 2);
        for (std::size_t i = 0; i < g.size(); ++i) {
            CHECK(in_Ml_A(g.element(i), canonical_algebra(0)));
            CHECK(is_symplectic(g.element(i).matrix()));
        }
    }
}

TEST_CASE("count_group reproduces the reference orders") {
    for (int cs = 0; cs <= 5; ++cs)
        for (std::size_t ell = 1; family_table_order(cs, ell); ++ell)
            CHECK(count_group(cs, ell).str() == std::to_string(*family_table_order(cs, ell)));
}

TEST_CASE("count matches enumeration where both run") {
    for (int cs = 0; cs <= 5; ++cs)
        for (std::size_t ell = 1; ell <= 2; ++ell) {
            const TransversalGroup g = enumerate_group_for_algebra(canonical_algebra(cs), ell);
            CHECK(count_group(cs, ell).str() == std::to_string(g.size()));
        }
}

TEST_CASE("closed formulas agree with the table") {
    CHECK(closed_form_order(0, 3)->str() == "1451520");
    CHECK(closed_form_order(1, 4)->str() == "77760");
    CHECK(closed_form_order(2, 6)->str() == "20158709760");
    CHECK_FALSE(closed_form_order(3, 2).has_value());
    CHECK_FALSE(closed_form_order(4, 2).has_value());
    CHECK_FALSE(closed_form_order(5, 2).has_value());
}

TEST_CASE("the corrected O(4, F2[x]/(x^2)) order") {
    // Exact count: O(l,R) fibers over O(l,F2) with kernel {I + xN : N
    // symmetric}; every 0/1 orthogonal matrix lifts, so the order is
    // |O(4,F2)| * 2^10 = 48 * 1024. Verified against the enumeration
    // element-for-element.
    std::vector<F2Matrix> o4;
    for (unsigned bits = 0; bits < (1u << 16); ++bits) {
        F2Matrix m(4, 4);
        for (int i = 0; i < 16; ++i)
            if ((bits >> i) & 1) m.set(i / 4, i % 4, true);
        if (m * m.transposed() == F2Matrix::identity(4)) o4.push_back(std::move(m));
    }
    CHECK(o4.size() == 48);

    const Mat2 x = Mat2::of(1, 1, 1, 1);
    std::set<F2Matrix> constructed;
    for (const auto& a : o4) {
        for (unsigned sbits = 0; sbits < (1u << 10); ++sbits) {
            F2Matrix s(4, 4);
            int b = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = i; j < 4; ++j, ++b)
                    if ((sbits >> b) & 1) {
                        s.set(i, j, true);
                        s.set(j, i, true);
                    }
            const F2Matrix bm = s * a;
            std::vector<Mat2> blocks(16, Mat2::zero());
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    Mat2 blk = Mat2::zero();
                    if (a.get(i, j)) blk = blk + Mat2::identity();
                    if (bm.get(i, j)) blk = blk + x;
                    blocks[i * 4 + j] = blk.bits ? blk : Mat2::zero();
                }
            constructed.insert(BlockMatrix::from_blocks(4, blocks).matrix());
        }
    }
    CHECK(constructed.size() == 49152);

    const TransversalGroup g = enumerate_group_for_algebra(canonical_algebra(3), 4);
    CHECK(g.size() == 49152);
    for (std::size_t i = 0; i < g.size(); i += 257)
        CHECK(constructed.count(g.element(i).matrix()) == 1);
    CHECK(count_group(3, 4).str() == "49152");
}

TEST_CASE("caps") {
    CHECK_THROWS_AS(enumerate_group(corpus_code("422"), 3, 1000), CapExceededError);
    try {
        enumerate_group(corpus_code("422"), 3, 1000);
    } catch (const CapExceededError& e) {
        REQUIRE(e.predicted_order.has_value());
        CHECK(*e.predicted_order == "1451520");
    }
    CHECK_THROWS_AS(enumerate_group(corpus_code("422"), 0), std::invalid_argument);
}

TEST_CASE("tableau file format") {
    const std::string text = format_tableau(kCnot);
    CHECK(text == "1010\n0100\n0010\n0101\n");
    CHECK(parse_tableau(text) == kCnot);
    CHECK(parse_tableau("# a comment\n10\n01\n") == F2Matrix::identity(2));
    CHECK_THROWS_AS(parse_tableau(""), ParseError);
    CHECK_THROWS_AS(parse_tableau("10\n0\n"), ParseError);
    CHECK_THROWS_AS(parse_tableau("10\n01\n11\n"), ParseError);
    CHECK_THROWS_AS(parse_tableau("1x\n01\n"), ParseError);
    CHECK_THROWS_AS(parse_tableau("101\n010\n111\n"), ParseError);
}

TEST_CASE("enumeration is independent of the worker count") {
    // same canonical element list with one worker and with many
    const StabilizerCode c = corpus_code("a3-422");
#ifdef _WIN32
    // setenv differs; this project only targets POSIX
#endif
    setenv("TCLASS_THREADS", "1", 1);
    const TransversalGroup g1 = enumerate_group(c, 3);
    setenv("TCLASS_THREADS", "7", 1);
    const TransversalGroup g7 = enumerate_group(c, 3);
    unsetenv("TCLASS_THREADS");
    REQUIRE(g1.size() == g7.size());
    CHECK(g1.size() == 384);
    for (std::size_t i = 0; i < g1.size(); ++i) CHECK(g1.element(i) == g7.element(i));
}

}  // TEST_SUITE
