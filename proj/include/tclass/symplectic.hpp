#pragma once

#include <array>
#include <string_view>

#include "tclass/bignum.hpp"
#include "tclass/f2.hpp"

namespace tclass {

/// J_n: block diagonal with 2x2 J = [[0,1],[1,0]] blocks, acting on the
/// interleaved (x1,z1,x2,z2,...) coordinates. J_n^2 = I.
F2Matrix symplectic_form(std::size_t n);

/// Symplectic inner product a J_n c^T. Value 1 exactly when the Pauli
/// strings encoded by a and c anticommute.
int omega(const F2Vector& a, const F2Vector& c);

/// t J t^T == J for the form of matching size. Throws on non-square or
/// odd-dimension input.
bool is_symplectic(const F2Matrix& t);

/// The six invertible 2x2 matrices over GF(2), in a fixed order:
/// identity, Hadamard (J), facet, inverse facet, S, sqrt(X).
const std::array<Mat2, 6>& sp2_elements();

/// Gate name of an Sp(2,F_2) element ("" when m is not one of the six).
std::string_view sp2_name(Mat2 m);

/// |Sp(2l,F_2)| = 2^(l^2) * prod_{i=1..l} (4^i - 1).
BigUint sp_order(std::size_t ell);

}  // namespace tclass
