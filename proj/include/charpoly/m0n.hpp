#pragma once

#include "charpoly/bivar.hpp"
#include "charpoly/qseries.hpp"
#include "charpoly/symfunc.hpp"

#include <vector>

namespace charpoly {

// Bivariate characteristic polynomials of the cohomology of the moduli spaces
// of stable rational curves, computed by the weight-partition recursion:
//
//   qplus[1] = m,   qplus[n] = sum_{lambda |- n, len >= 3}
//                      (t + ... + t^{len-2}) prod_j h_{r_j} o qplus[n_j],
//   q[n]     = sum_{lambda |- n} prod_j h_{r_j} o qplus[n_j],
//   (1+t) p[n] = q[n] - (t/2) ( sum_{h=2}^{n-2} q[h] q[n-h] - q[n/2](m, t^2) ),
//
// where (n_j, r_j) runs over distinct parts with multiplicities, the h_r o -
// operation is the partition-averaged power substitution on (m, t)-polynomials
// (t -> t^s, m untouched), and q[n/2] is taken as zero for odd n.
//
// q[n] carries the S_n-character data of the space with n+1 marked points,
// p[n] that of the space with n marked points.
struct M0nTable {
    int max_n = 0;
    std::vector<BivarPoly> qplus;  // index 0..max_n; qplus[0] = 0
    std::vector<BivarPoly> q;      // q[0] = 1
    std::vector<BivarPoly> p;      // p[0] = 1

    const BivarPoly& Qplus(int n) const { return qplus.at(static_cast<size_t>(n)); }
    const BivarPoly& Q(int n) const { return q.at(static_cast<size_t>(n)); }
    const BivarPoly& P(int n) const { return p.at(static_cast<size_t>(n)); }
};

// h_r o f on bivariate polynomial data:
//   sum_{mu |- r} z_mu^{-1} prod_i f(m, t^{mu_i}).
BivarPoly h_apply_bivar(int r, const BivarPoly& f);

// Build the table up to max_n.  num_threads = 0 uses hardware concurrency;
// results are identical for every thread count.  exp_check_upto >= 0 verifies
// the q[] column against the plethystic-exponential generating series through
// that q-power (a disagreement throws std::logic_error); -1 checks everything
// up to min(max_n, 14), which keeps the defensive cross-check cheap at large
// truncations.
M0nTable compute_m0n_table(int max_n, int num_threads = 0, int exp_check_upto = -1);

// Q+ column as a truncated series in q.
QSeries qplus_series(const M0nTable& table, int truncation);

// Exp(t Q+) = t^2 Exp(Q+) + (1 - t)(1 + t + m q t), checked exactly through
// q^upto (upto = -1 means the full table range).
struct ExpIdentityReport {
    bool ok = true;
    int first_fail_q = -1;
};
ExpIdentityReport exp_identity_check(const M0nTable& table, int upto = -1);

enum class Side { Q, P };

// 2k-th Betti numbers read off a table column: k-th entry is
// n! * [m^n t^k]; throws std::logic_error if any value fails to be a
// nonnegative integer.
std::vector<Int> betti_numbers(const M0nTable& table, int n, Side side);

// Poincare polynomial of the invariant subalgebra: column evaluated at m = 1.
UniPoly invariant_poincare(const M0nTable& table, int n, Side side);

// Degreewise wall-crossing relation between the two columns:
//   p[n]_k + p[n]_{k-1} = q[n]_k - (1/2) sum_{h=2}^{n-2} sum_{j=0}^{k-1}
//       q[h]_j q[n-h]_{k-1-j} + (1/2) q[n/2]_{(k-1)/2},
// fractional indices read as zero.  Checked for all k in 0..n.
bool wallcrossing_holds(const M0nTable& table, int n);

// ---------------------------------------------------------------------------
// The same recursion run at the symmetric-function level (t-graded characters
// rather than their specializations); feasible for small n and used as a
// differential oracle against the specialized table.
struct M0nLambdaTable {
    int max_n = 0;
    std::vector<GradedSymFunc> qplus, q, p;
};

// Computes the graded characters up to max_n.  The p column is produced by
// two independent right-hand sides (the half-sum form with the degree-doubling
// substitution, and the unordered-pair form with the two-row Schur plethysm);
// a mismatch throws std::logic_error.
M0nLambdaTable compute_m0n_lambda(int max_n);

}  // namespace charpoly
