#pragma once

#include <string>
#include <utility>
#include <vector>

#include "charpoly/bivar.hpp"
#include "charpoly/m0n.hpp"
#include "charpoly/rational.hpp"
#include "charpoly/unipoly.hpp"

namespace charpoly {

// Result of one log-concavity check on one coefficient sequence.
//
// `pass` is the verdict on the inequality |a_k|^2 >= |a_{k-1} a_{k+1}|,
// checked at every interior k with a_k != 0 (zero entries are covered by the
// internal-zeros flag instead, so a sequence like 1,0,1 passes the
// inequality but is flagged).  `internal_zeros` reports whether some zero
// entry sits strictly between two nonzero ones.  A sequence counts as
// log-concave with no internal zeros exactly when ok() holds.
struct LCReport {
    std::string notion;   // e.g. "length@degree-2", "degree@m=1"
    std::string subject;  // identifier of the polynomial checked
    bool pass = true;
    bool internal_zeros = false;
    int violation_index = -1;  // middle index k of the first violating triple

    bool ok() const { return pass && !internal_zeros; }
};

LCReport is_logconcave(const std::vector<Rat>& seq, bool check_internal_zeros = true,
                       const std::string& subject = "", const std::string& notion = "sequence");

// Log-concavity of the normalized sequence a_k / C(n, k); the input must
// have exactly n+1 entries.
LCReport is_ultra_logconcave(const std::vector<Rat>& seq, int n,
                             const std::string& subject = "",
                             const std::string& notion = "ultra");

// The four directional checks on a bivariate polynomial A(m, t):
//   (1) each t-degree row A_k(m),     (2) the evaluation A(m, t0),
//   (3) each m-power column A^j(t),   (4) the evaluation A(m0, t).
struct BivarLC {
    std::vector<LCReport> length_in_degree;  // (1), index = t-degree k
    LCReport length_at_t;                    // (2)
    std::vector<LCReport> degree_in_length;  // (3), index = m-power j
    LCReport degree_at_m;                    // (4)
};

BivarLC check_bivariate(const BivarPoly& A, const std::string& subject,
                        const Rat& t0 = Rat(1), const Rat& m0 = Rat(1));

// Sweep over both recursive tables for 3 <= n <= N: length log-concavity at
// t=1 and in every degree, degree log-concavity at m=1, and degree
// log-concavity in length l for l >= ceil(sqrt(n)) + 2.  Returns every
// report; the expectation (checked by tests) is that all of them are ok().
std::vector<LCReport> verify_m0n_conjecture(const M0nTable& table, int N);

// Smallest l checked by the sweep rule for a given n: ceil(sqrt(n)) + 2.
int conjecture_min_length(int n);

// Signless Stirling numbers of the first kind via
//   c(n, j) = c(n-1, j-1) + (n-1) c(n-1, j),  c(0, 0) = 1.
Int stirling_c(int n, int j);

// The constants c_k = (k+1)^(k-1) / k! and d_k = (k+1)^(k-2) / k!.
std::pair<Rat, Rat> cayley_constants(int k);

// One row of an asymptotic trend table.
struct TrendRow {
    int n = 0;
    Rat value;       // table value (evaluation or coefficient)
    Rat prediction;  // main term including the limiting constant
    Rat ratio;       // normalized ratio whose limit is the constant
};

struct TrendReport {
    std::string kind;  // "value" or "coeff"
    Side side = Side::Q;
    int k = 0;
    int param = 0;  // m0 for value reports, j for coefficient reports
    Rat limit;      // constant the ratio column approaches
    std::vector<TrendRow> rows;
};

// Value trends: rows n = k+3 .. max_n with
//   ratio = value(n, k, m0) * ((k+1) m0 - 1)! / n^((k+1) m0 - 1),
// approaching c_k for the Q side and d_k for the P side.
TrendReport asymptotic_value_report(const M0nTable& table, Side side, int k, int m0);

// Coefficient trends for the m^(n-j) coefficient of the t^k part:
//   ratio = coeff * n! / ((k+1)^(n-j) c(n, n-j)),
// approaching c_k for the Q side and d_k for the P side.
TrendReport asymptotic_coeff_report(const M0nTable& table, Side side, int k, int j);

// Smallest n0 such that value(n,k,m0)^2 >= value(n,k-1,m0) * value(n,k+1,m0)
// for every n in [n0, max_n]; returns -1 when even n = max_n fails.
int value_lc_tail_start(const M0nTable& table, Side side, int k, int m0);

}  // namespace charpoly
