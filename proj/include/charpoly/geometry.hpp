#pragma once

#include <utility>
#include <vector>

#include "charpoly/bivar.hpp"
#include "charpoly/rational.hpp"
#include "charpoly/symfunc.hpp"
#include "charpoly/unipoly.hpp"

namespace charpoly {

// Betti numbers b_0..b_d of a space X in even degrees; p_X(t) = sum b_k t^k.
struct BettiProfile {
    std::vector<Int> b;

    // Throws std::invalid_argument unless b_0 >= 1 and all entries are >= 0.
    void validate() const;

    UniPoly to_poly() const;  // p_X(t)
    Int total() const;        // N = sum of Betti numbers = p_X(1)
};

// Non-decreasing h: [n] -> [n] with h(i) >= i.  Stored 1-based: h(i) = h[i-1].
struct HessenbergFunction {
    std::vector<int> h;

    int n() const { return static_cast<int>(h.size()); }
    void validate() const;  // throws std::invalid_argument on violation
};

// Undirected simple graph on vertices 0..n-1.
struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // normalized: i < j, sorted, unique

    void validate() const;  // throws std::invalid_argument on loops/dupes/range
    static SimpleGraph from_edges(int n, std::vector<std::pair<int, int>> edges);
};

// Characteristic polynomial of the n-fold product X^n, computed by the
// partition sum  sum over lambda of z_lambda^{-1} prod_i p_X(t^{lambda_i})
// times m^{length(lambda)}.
BivarPoly nfold_char_poly(const BettiProfile& b, int n);

// The same polynomial from the composition form: sum over (n_0,...,n_d) with
// sum n_i = n of prod_i <<b_i m, n_i>> t^{sum i n_i}.  Used as a cross-check.
BivarPoly nfold_char_poly_coeff_form(const BettiProfile& b, int n);

// Characteristic polynomial of the GIT quotient family, odd n = 2r+1:
//   sum_{j=0}^{r-1} t^j (1 + t^2 + ... + t^{2(r-j-1)}) <<m, n-j>> <<m, j>>.
// Throws std::invalid_argument for even or too-small n.
BivarPoly git_char_poly(int n);

// Product formulas attached to a Hessenberg function:
//   value at t=1:        prod_i (m + h(i) - i)
//   chromatic polynomial: prod_i (m - (h(i) - i))
UniPoly hessenberg_char_poly_t1(const HessenbergFunction& h);
UniPoly hessenberg_chromatic(const HessenbergFunction& h);

// Invariant Poincare polynomial prod_i [h(i) - i + 1]_t.
UniPoly hessenberg_invariant_poincare(const HessenbergFunction& h);

// Coefficient of m in the bivariate characteristic polynomial:
//   (1/n) [n]_t prod_{i=1}^{n-1} [h(i) - i]_t.
UniPoly hessenberg_linear_coeff(const HessenbergFunction& h);

// Incomparability graph of h: edges {i, j} with i < j <= h(i) (1-based),
// returned 0-based.
SimpleGraph incomparability_graph(const HessenbergFunction& h);

// All Hessenberg functions on [n], in lexicographic order of the h-vector.
std::vector<HessenbergFunction> enumerate_hessenberg(int n);

// Chromatic polynomial by deletion-contraction with memoized subgraphs and
// shortcut evaluation for complete graphs, forests and cycles.
// Throws std::domain_error when n exceeds the bound.
UniPoly chromatic_polynomial(const SimpleGraph& g, int max_n = 16);

// Independent oracle: counts proper colorings at m = 0..n via a
// partition-into-independent-sets subset DP (no deletion-contraction) and
// interpolates the unique degree-n polynomial through those counts.
UniPoly chromatic_count_oracle(const SimpleGraph& g, int max_n = 12);

// Chromatic symmetric function in the power-sum basis via edge subsets:
//   sum over S subset of E of (-1)^|S| p_{lambda(S)},
// lambda(S) the partition of component sizes of ([n], S).
// Throws std::domain_error when |E| exceeds the bound.
SymFunc csf_p_expansion(const SimpleGraph& g, int max_edges = 20);

}  // namespace charpoly
