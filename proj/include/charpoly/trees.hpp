#pragma once

#include <string>
#include <vector>

#include "charpoly/partitions.hpp"
#include "charpoly/rational.hpp"
#include "charpoly/symfunc.hpp"
#include "charpoly/unipoly.hpp"

namespace charpoly {

// A weighted rooted tree: every vertex carries a nonnegative weight and a
// number of input legs; the root additionally carries the output leg.
//
// Valency conditions, with val(v) = #children + #inputs + 1 (the +1 counts
// the parent edge, or the output leg at the root):
//   - root:     0 <= weight <= val - 3
//   - non-root: 1 <= weight <= val - 3
//
// The family with n inputs in total and total weight k indexes a basis of
// the degree-2k cohomology of the moduli space of stable genus-0 curves
// with n+1 marked points.  The single tree with one input and weight zero
// (a bare leg) is admitted as the formal base object of the recursion even
// though its root valency is 2.
//
// Children are kept sorted in canonical order, so structural equality of
// WTree values coincides with isomorphism of weighted rooted trees.
struct WTree {
    int weight = 0;
    int inputs = 0;
    std::vector<WTree> children;
};

// Total order used for canonical forms: lexicographic on
// (weight, inputs, child list).  Returns <0, 0, >0.
int tree_compare(const WTree& a, const WTree& b);

inline bool operator==(const WTree& a, const WTree& b) { return tree_compare(a, b) == 0; }
inline bool operator!=(const WTree& a, const WTree& b) { return tree_compare(a, b) != 0; }
inline bool operator<(const WTree& a, const WTree& b) { return tree_compare(a, b) < 0; }

int tree_inputs_total(const WTree& t);
int tree_weight_total(const WTree& t);
int tree_vertex_count(const WTree& t);

// Debug form "(w=., in=., [children])" with children in canonical order.
std::string tree_to_string(const WTree& t);

// All isomorphism classes of weighted rooted trees with n inputs and total
// weight k, each exactly once, sorted by (vertex count, canonical order).
// With positive_root_weight, restricts to trees whose root weight is >= 1
// (the "plus" family), except that the bare-leg base tree (n=1, k=0) is
// a member of both families by convention.
std::vector<WTree> enumerate_trees(int n, int k, bool positive_root_weight);

// Order of the stabilizer of a labeling of T inside the symmetric group on
// its inputs: n0! * prod over child isomorphism classes of stab^r * r!.
Int stab_order(const WTree& t);

// Frobenius characteristic of the permutation representation induced by T:
//   ch(T) = h_{n0} * prod over child classes of h_r o ch(T_child).
// Homogeneous of degree n = total inputs.
SymFunc ch_UT(const WTree& t);

// Characteristic polynomial of ch_UT(T) as a polynomial in m, computed by
// the product formula
//   S(m) = <<m, n0>> * prod <<S_child(m), r>>
// where <<f, r>> is the rising multiset coefficient C(f + r - 1, r).
UniPoly char_poly_UT(const WTree& t);

// Characteristic polynomial of omega(ch_UT(T)): same product shape, with
// binomial C(., .) at the root block and at child classes whose subtree has
// an odd number of inputs, and <<., .>> at even ones.  Satisfies
// omega_char_poly_UT(T)(m) = (-1)^n char_poly_UT(T)(-m).
UniPoly omega_char_poly_UT(const WTree& t);

// Generators of the stabilizer of the labeled representative of T whose
// inputs are numbered 0..n-1 in depth-first order (legs of a vertex first,
// then its children in canonical order).  Generated subgroup has order
// stab_order(T); its permutation character equals ch_UT(T).
std::vector<Perm> stabilizer_generators(const WTree& t);

// Number of colorings of the inputs of T with m0 colors, counted up to the
// stabilizer action (two colorings are identified when the colored trees
// are isomorphic).  Equals char_poly_UT(T) evaluated at m0.
// Brute force; requires m0 >= 1, total inputs <= 8 and m0 <= 4.
Int coloring_count_oracle(const WTree& t, int m0);

// Number of proper colorings up to the stabilizer action: legs sharing a
// vertex get pairwise distinct colors, and within a group of isomorphic
// sibling subtrees with an odd number of inputs the colored subtrees must
// be pairwise non-isomorphic.  Equals omega_char_poly_UT(T) at m0.
// Brute force; same size bounds as coloring_count_oracle.
Int proper_coloring_count_oracle(const WTree& t, int m0);

// Independent oracles for the t^k coefficients of the recursive bivariate
// tables: sums of char_poly_UT over all trees (oracle_Q) or over trees with
// positive root weight (oracle_Qplus).  Rejects n beyond the bound.
UniPoly oracle_Q(int n, int k, int max_n_bound = 9);
UniPoly oracle_Qplus(int n, int k, int max_n_bound = 9);

}  // namespace charpoly
