#pragma once

#include "charpoly/bivar.hpp"
#include "charpoly/symfunc.hpp"
#include "charpoly/unipoly.hpp"

#include <vector>

namespace charpoly {

// The principal specialization sending a symmetric function in the power-sum
// basis to a polynomial in m: each p_lambda contributes its coefficient times
// m^{length(lambda)}.  It is a ring homomorphism, and for permutation-module
// characters its value at a positive integer m0 is a combinatorial count of
// colorings with m0 colors; see char_poly_invariants for the representation-
// theoretic readings of special values.
UniPoly char_poly(const SymFunc& f);

// Value of char_poly(f) at m0 without building the polynomial.
Rat char_value(const SymFunc& f, const Rat& m0);

// Graded version: grade k of g contributes at t^k.
BivarPoly char_poly_graded(const GradedSymFunc& g);

// char_poly(omega(f)); for homogeneous f of degree n this equals
// (-1)^n char_poly(f)(-m).
UniPoly omega_char_poly(const SymFunc& f);

// Summary invariants of a homogeneous degree-n character:
//   dim           = n! * [m^n] char_poly        (dimension of V)
//   invariant_dim = char_poly(1)                (multiplicity of the trivial)
//   sign_mult     = (-1)^n char_poly(-1)        (multiplicity of the sign)
// All three are integers >= 0 for a genuine character.
struct RepInvariants {
    Rat dim;
    Rat invariant_dim;
    Rat sign_mult;
};
RepInvariants char_poly_invariants(const SymFunc& f);

// Specialization of the permutation module M^lambda = h_lambda:
//   prod_i <<m, lambda_i>>.
UniPoly perm_module_char_poly(const Partition& lam);

// Recover the multiplicities c_0..c_r (r = floor(n/2)) of a virtual
// combination V = sum_j c_j M^{(n-j, j)} from the r+1 specialized values
// values[i] = char_value(V, i - n), i = 0..r.  The transition matrix
//   B_{ij} = (-1)^n C(n-i, n-j) C(n-i, j)   (zero for i > j)
// is upper triangular with nonzero diagonal; exact back-substitution.
std::vector<Rat> recover_length_two(const std::vector<Rat>& values, int n);

// Specialized Schur value via the Weyl-type product
//   prod_{1 <= i < j <= m0} (1 + (lambda_i - lambda_j)/(j - i)),
// lambda padded with zeros to length m0.  Equals char_value(schur(lam), m0).
Rat schur_char_value(const Partition& lam, int m0);

}  // namespace charpoly
