#include "tclass/endo.hpp"

#include <bit>

#include "tclass/symplectic.hpp"

namespace tclass {

F2Vector act(const F2Vector& v, Mat2 t) {
    if (v.len() % 2 != 0) throw std::invalid_argument("act: vector length must be even");
    constexpr std::uint64_t kEven = 0x5555555555555555ull;
    const bool a = t.at(0, 0), b = t.at(0, 1), c = t.at(1, 0), d = t.at(1, 1);
    F2Vector out(v.len());
    auto vw = v.words();
    auto ow = out.words();
    for (std::size_t i = 0; i < vw.size(); ++i) {
        const std::uint64_t x = vw[i] & kEven;
        const std::uint64_t z = (vw[i] >> 1) & kEven;
        const std::uint64_t nx = (a ? x : 0) ^ (c ? z : 0);
        const std::uint64_t nz = (b ? x : 0) ^ (d ? z : 0);
        ow[i] = nx | (nz << 1);
    }
    return out;
}

bool invariant_under(const StabilizerCode& c, Mat2 t) {
    for (std::size_t r = 0; r < c.space().dim(); ++r)
        if (!c.contains(act(c.space().basis().row(r), t))) return false;
    return true;
}

bool invariant_under(const StabilizerCode& c, const F2Matrix& t) {
    return invariant_under(c, mat2_from_f2(t));
}

StabilizerCode transformed(const StabilizerCode& c, Mat2 r) {
    if (!r.invertible()) throw SingularMatrixError("transformed: r must be invertible");
    std::vector<F2Vector> rows;
    rows.reserve(c.space().dim());
    for (std::size_t i = 0; i < c.space().dim(); ++i)
        rows.push_back(act(c.space().basis().row(i), r));
    return {c.n(), RowSpace::from_generators(rows, 2 * c.n())};
}

// Predicates declared in code.hpp; they are invariance checks under the
// generating matrices of A2, A3 and A1.
bool is_css(const StabilizerCode& c) { return invariant_under(c, Mat2::of(1, 0, 0, 0)); }
bool is_self_dual_code(const StabilizerCode& c) { return invariant_under(c, Mat2::of(0, 1, 1, 0)); }
bool is_gf4_linear(const StabilizerCode& c) { return invariant_under(c, Mat2::of(1, 1, 1, 0)); }

EndoAlgebra EndoAlgebra::from_elements(const std::vector<Mat2>& elems) {
    std::uint16_t mask = 0;
    for (Mat2 e : elems) mask |= static_cast<std::uint16_t>(1u << e.bits);
    return EndoAlgebra(mask);
}

std::size_t EndoAlgebra::size() const { return std::popcount(mask_); }

int EndoAlgebra::dim() const {
    const auto n = std::popcount(mask_);
    return std::bit_width(static_cast<unsigned>(n)) - 1;
}

std::vector<Mat2> EndoAlgebra::elements() const {
    std::vector<Mat2> out;
    out.reserve(size());
    for (unsigned m = 0; m < 16; ++m)
        if ((mask_ >> m) & 1) out.push_back(Mat2{static_cast<std::uint8_t>(m)});
    return out;
}

std::vector<F2Matrix> EndoAlgebra::element_matrices() const {
    std::vector<F2Matrix> out;
    out.reserve(size());
    for (Mat2 m : elements()) out.push_back(to_f2(m));
    return out;
}

bool EndoAlgebra::is_closed() const {
    if (!contains(Mat2::zero()) || !contains(Mat2::identity())) return false;
    const auto elems = elements();
    for (Mat2 x : elems)
        for (Mat2 y : elems)
            if (!contains(x + y) || !contains(x * y)) return false;
    return true;
}

EndoAlgebra endo_algebra(const StabilizerCode& c) {
    std::uint16_t mask = 0;
    for (unsigned m = 0; m < 16; ++m)
        if (invariant_under(c, Mat2{static_cast<std::uint8_t>(m)}))
            mask |= static_cast<std::uint16_t>(1u << m);
    EndoAlgebra a = EndoAlgebra::from_mask(mask);
    if (!a.is_closed())
        throw std::logic_error("endo_algebra: invariant set is not an algebra (bug)");
    return a;
}

namespace {

std::array<EndoAlgebra, 12> build_catalog() {
    const Mat2 kI = Mat2::identity();
    const Mat2 kZero = Mat2::zero();

    std::uint16_t upper = 0, lower = 0, even = 0;
    for (unsigned m = 0; m < 16; ++m) {
        const Mat2 x{static_cast<std::uint8_t>(m)};
        if (!x.at(1, 0)) upper |= 1u << m;
        if (!x.at(0, 1)) lower |= 1u << m;
        if (std::popcount(m) % 2 == 0) even |= 1u << m;
    }

    return {
        EndoAlgebra::from_mask(0xFFFF),                                                   // A0
        EndoAlgebra::from_elements({kZero, kI, Mat2::of(1, 1, 1, 0), Mat2::of(0, 1, 1, 1)}),  // A1
        EndoAlgebra::from_elements({kZero, kI, Mat2::of(1, 0, 0, 0), Mat2::of(0, 0, 0, 1)}),  // A2
        EndoAlgebra::from_elements({kZero, kI, Mat2::of(0, 1, 1, 0), Mat2::of(1, 1, 1, 1)}),  // A3
        EndoAlgebra::from_mask(static_cast<std::uint16_t>(upper)),                            // A4
        EndoAlgebra::from_elements({kZero, kI}),                                              // A5
        EndoAlgebra::from_elements({kZero, kI, Mat2::of(1, 1, 0, 0), Mat2::of(0, 1, 0, 1)}),  // B0
        EndoAlgebra::from_elements({kZero, kI, Mat2::of(0, 0, 1, 1), Mat2::of(1, 0, 1, 0)}),  // B1
        EndoAlgebra::from_elements({kZero, kI, Mat2::of(1, 1, 0, 1), Mat2::of(0, 1, 0, 0)}),  // B2
        EndoAlgebra::from_elements({kZero, kI, Mat2::of(1, 0, 1, 1), Mat2::of(0, 0, 1, 0)}),  // B3
        EndoAlgebra::from_mask(static_cast<std::uint16_t>(lower)),                            // L
        EndoAlgebra::from_mask(static_cast<std::uint16_t>(even)),                             // E
    };
}

const std::array<EndoAlgebra, 12>& catalog() {
    static const std::array<EndoAlgebra, 12> k = build_catalog();
    return k;
}

}  // namespace

std::string_view algebra_name(AlgebraTag t) {
    static constexpr std::array<std::string_view, 12> kNames = {
        "A0", "A1", "A2", "A3", "A4", "A5", "B0", "B1", "B2", "B3", "L", "E"};
    return kNames[static_cast<std::size_t>(t)];
}

const std::array<AlgebraTag, 12>& algebra_catalog() {
    static constexpr std::array<AlgebraTag, 12> k = {
        AlgebraTag::A0, AlgebraTag::A1, AlgebraTag::A2, AlgebraTag::A3,
        AlgebraTag::A4, AlgebraTag::A5, AlgebraTag::B0, AlgebraTag::B1,
        AlgebraTag::B2, AlgebraTag::B3, AlgebraTag::L,  AlgebraTag::E};
    return k;
}

const EndoAlgebra& catalog_algebra(AlgebraTag t) { return catalog()[static_cast<std::size_t>(t)]; }

AlgebraTag algebra_id(const EndoAlgebra& a) {
    for (AlgebraTag t : algebra_catalog())
        if (catalog_algebra(t) == a) return t;
    throw std::invalid_argument("algebra_id: not an endomorphism algebra of a stabilizer code");
}

int family_case_of(AlgebraTag t) {
    switch (t) {
        case AlgebraTag::A0:
            return 0;
        case AlgebraTag::A1:
            return 1;
        case AlgebraTag::A2:
        case AlgebraTag::B0:
        case AlgebraTag::B1:
            return 2;
        case AlgebraTag::A3:
        case AlgebraTag::B2:
        case AlgebraTag::B3:
            return 3;
        case AlgebraTag::A4:
        case AlgebraTag::L:
        case AlgebraTag::E:
            return 4;
        case AlgebraTag::A5:
            return 5;
    }
    throw std::invalid_argument("family_case_of: bad tag");
}

const EndoAlgebra& canonical_algebra(int family_case) {
    if (family_case < 0 || family_case > 5)
        throw std::invalid_argument("canonical_algebra: case must be 0..5");
    static constexpr std::array<AlgebraTag, 6> kCanonical = {AlgebraTag::A0, AlgebraTag::A1,
                                                             AlgebraTag::A2, AlgebraTag::A3,
                                                             AlgebraTag::A4, AlgebraTag::A5};
    return catalog_algebra(kCanonical[static_cast<std::size_t>(family_case)]);
}

EndoAlgebra conjugate_algebra(const EndoAlgebra& a, Mat2 r) {
    const Mat2 rinv = r.inverse();  // throws when singular
    std::uint16_t mask = 0;
    for (Mat2 x : a.elements()) {
        const Mat2 y = rinv * x * r;
        mask |= static_cast<std::uint16_t>(1u << y.bits);
    }
    return EndoAlgebra::from_mask(mask);
}

CodeFamily classify(const StabilizerCode& c) {
    EndoAlgebra a = endo_algebra(c);
    const AlgebraTag tag = algebra_id(a);
    const int fam = family_case_of(tag);
    const EndoAlgebra& target = canonical_algebra(fam);
    for (Mat2 r : sp2_elements()) {
        if (conjugate_algebra(a, r) == target)
            return {fam, tag, std::move(a), r, transformed(c, r)};
    }
    // Every catalog algebra is Sp(2,F_2)-conjugate to its canonical form.
    throw std::logic_error("classify: no LDC witness found (bug)");
}

std::string_view family_name(int family_case) {
    static constexpr std::array<std::string_view, 6> kNames = {
        "self-dual CSS", "GF(4)", "CSS", "self-dual",
        "semi-self-dual-CSS≅self-dual-semi-CSS", "generic"};
    if (family_case < 0 || family_case > 5)
        throw std::invalid_argument("family_name: case must be 0..5");
    return kNames[static_cast<std::size_t>(family_case)];
}

std::string_view group_name(int family_case) {
    static constexpr std::array<std::string_view, 6> kNames = {
        "Sp(2l,F2)", "U(l,F4)", "GL(l,F2)", "O(l,F2[x]/(x^2))", "U(l,R8)", "O(l,F2)"};
    if (family_case < 0 || family_case > 5)
        throw std::invalid_argument("group_name: case must be 0..5");
    return kNames[static_cast<std::size_t>(family_case)];
}

}  // namespace tclass
