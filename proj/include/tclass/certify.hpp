#pragma once

#include <map>
#include <string>

#include "tclass/blocks.hpp"

namespace tclass {

/// Verdict of the fast membership test: transversal iff every block lies in
/// the code's endomorphism algebra and the tableau is symplectic. On failure
/// the first offending block, or the symplectic check, is pinpointed.
struct GateVerdict {
    enum class Reason { accepted, block_outside_algebra, not_symplectic };

    bool transversal;
    Reason reason;
    std::size_t block_row = 0;  // 0-based grid indices, valid for block_outside_algebra
    std::size_t block_col = 0;
    Mat2 offending_block = Mat2::zero();
    EndoAlgebra algebra;
    int family_case = -1;  // valid when accepted
};

GateVerdict certify_gate(const StabilizerCode& c, const BlockMatrix& t);

/// The tableau A[x] + B[I+x] with x = [[0,0],[0,1]] and B = (a^-1)^T; a group
/// homomorphism from GL(l,F2) into the transversal group of any CSS code.
/// a = [[1,0],[1,1]] yields the CNOT tableau.
BlockMatrix cnot_tableau_from_gl(const F2Matrix& a);

/// Stock tableaus: "cnot", "ycy" (Y-controlled-Y), "gottesman4" (the 4-block
/// gate transversal for every code), "swap_2", "facet", "facet_inv".
const std::map<std::string, BlockMatrix>& named_tableaus();

/// Block support is a permutation pattern: exactly one nonzero block per row
/// and column. Such tableaus are block swaps followed by single-block gates.
bool is_block_permutation_pattern(const BlockMatrix& t);

struct EntanglingWitness {
    bool has_gate;
    BlockMatrix witness;  // passes certify_gate against the code when has_gate
};

/// A transversal, entangling two-qubit Clifford exists iff the code is
/// LDC-equivalent to a CSS or self-dual code (cases 0, 2, 3, 4). The witness
/// is the CNOT (cases 0/2/4) or Y-controlled-Y (case 3) tableau conjugated
/// blockwise by the LDC witness of the code.
EntanglingWitness has_entangling_two_qubit_gate(const StabilizerCode& c);

/// For a generic (case 5) code, confirms by enumeration that the transversal
/// group on ell <= 3 blocks is exactly the ell! block permutations.
bool small_gate_triviality(const StabilizerCode& c, std::size_t ell);

}  // namespace tclass
