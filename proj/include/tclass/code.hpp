#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tclass/f2.hpp"

namespace tclass {

/// A stabilizer code on n qubits: an isotropic subspace of F_2^(2n) in
/// interleaved (x,z)-pair coordinates. dim <= n, k = n - dim. Phases are not
/// tracked; Y encodes to (1,1).
class StabilizerCode {
public:
    StabilizerCode(std::size_t n, RowSpace space);

    std::size_t n() const { return n_; }
    std::size_t k() const { return n_ - space_.dim(); }
    const RowSpace& space() const { return space_; }

    bool contains(const F2Vector& v) const { return space_.member(v); }

    friend bool operator==(const StabilizerCode&, const StabilizerCode&) = default;

private:
    std::size_t n_;
    RowSpace space_;
};

/// I -> (0,0), X -> (1,0), Z -> (0,1), Y -> (1,1). Throws ParseError on other
/// characters.
F2Vector encode_paulis(std::string_view letters);

/// Length-2n row back to its Pauli string.
std::string pauli_string(const F2Vector& row);

/// Parse the .stab format: one Pauli string per line over {I,X,Y,Z}, '#'
/// starts a comment, blank lines ignored, all lines the same length.
/// Dependent generators are accepted and reduced; anticommuting generators
/// are rejected with the offending line numbers.
StabilizerCode parse_code(std::string_view text);

/// The RREF basis rendered as Pauli strings (round-trips through parse_code).
std::vector<std::string> stabilizer_lines(const StabilizerCode& c);

/// Omega-orthogonal complement of C; has dimension 2n - dim(C) and contains C.
RowSpace dual(const StabilizerCode& c);

/// Count of qubit positions whose (x,z) pair is nonzero.
std::size_t qubit_weight(const F2Vector& v);

/// Minimum qubit weight over dual(C) \ C, by exhaustive enumeration of the
/// dual. Guarded by max_n; undefined (error) for k = 0 codes.
std::size_t distance(const StabilizerCode& c, std::size_t max_n = 14);

// Structural predicates: invariance of C under the generating matrix of the
// algebras A2, A3, A1 respectively. Defined alongside the invariance test.
bool is_css(const StabilizerCode& c);
bool is_self_dual_code(const StabilizerCode& c);
bool is_gf4_linear(const StabilizerCode& c);

}  // namespace tclass
