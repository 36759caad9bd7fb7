#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "tclass/code.hpp"
#include "tclass/f2.hpp"

namespace tclass {

/// Transversal right-action of a 2x2 matrix: each consecutive (x,z) pair of v
/// is replaced by (x,z)*t.
F2Vector act(const F2Vector& v, Mat2 t);

/// v*t stays in C for every v in C. Checking a basis suffices by linearity.
bool invariant_under(const StabilizerCode& c, Mat2 t);
bool invariant_under(const StabilizerCode& c, const F2Matrix& t);

/// The LDC-transformed code C*r (r must be invertible).
StabilizerCode transformed(const StabilizerCode& c, Mat2 r);

/// A subset of the sixteen elements of M_2(F_2), stored as a 16-flag bitset
/// (flag m is the matrix whose packed nibble is m). Outputs of endo_algebra
/// always contain 0 and I and are closed under + and *.
class EndoAlgebra {
public:
    EndoAlgebra() : mask_(0) {}
    static EndoAlgebra from_mask(std::uint16_t mask) { return EndoAlgebra(mask); }
    static EndoAlgebra from_elements(const std::vector<Mat2>& elems);

    std::uint16_t mask() const { return mask_; }
    bool contains(Mat2 m) const { return (mask_ >> m.bits) & 1; }
    std::size_t size() const;
    /// log2 of the element count.
    int dim() const;
    std::vector<Mat2> elements() const;  // ascending packed value
    std::vector<F2Matrix> element_matrices() const;

    bool is_closed() const;

    friend bool operator==(const EndoAlgebra&, const EndoAlgebra&) = default;

private:
    explicit EndoAlgebra(std::uint16_t mask) : mask_(mask) {}
    std::uint16_t mask_;
};

/// { t in M_2(F_2) : C invariant under t }. Throws std::logic_error if the
/// result is somehow not an algebra (cannot happen for a valid code).
EndoAlgebra endo_algebra(const StabilizerCode& c);

/// The twelve subalgebras of M_2(F_2) that contain I, by catalog name.
/// A0..A5 are the canonical representatives of the six family cases; B0..B3,
/// L and E are their LDC-conjugates.
enum class AlgebraTag { A0, A1, A2, A3, A4, A5, B0, B1, B2, B3, L, E };

std::string_view algebra_name(AlgebraTag t);
const std::array<AlgebraTag, 12>& algebra_catalog();
const EndoAlgebra& catalog_algebra(AlgebraTag t);

/// The unique catalog tag with exactly this element set. Throws
/// std::invalid_argument when the set matches no catalog entry (unreachable
/// for outputs of endo_algebra).
AlgebraTag algebra_id(const EndoAlgebra& a);

/// Family case of a tag: A0->0, A1->1, {A2,B0,B1}->2, {A3,B2,B3}->3,
/// {A4,L,E}->4, A5->5.
int family_case_of(AlgebraTag t);
const EndoAlgebra& canonical_algebra(int family_case);

/// Elementwise r^-1 * x * r. Throws SingularMatrixError for singular r.
EndoAlgebra conjugate_algebra(const EndoAlgebra& a, Mat2 r);

struct CodeFamily {
    int family_case;        // 0..5
    AlgebraTag algebra;     // tag of endo(C)
    EndoAlgebra endo;       // endo(C)
    Mat2 witness;           // witness^-1 * endo(C) * witness == canonical_algebra(family_case)
    StabilizerCode canonical;  // C * witness
};

/// Exactly one of the six cases holds for every code. The witness is the
/// first match in sp2_elements() order, so cases 0 and 1 always return the
/// identity.
CodeFamily classify(const StabilizerCode& c);

std::string_view family_name(int family_case);
std::string_view group_name(int family_case);

}  // namespace tclass
