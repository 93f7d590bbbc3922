#pragma once

#include "charpoly/bivar.hpp"
#include "charpoly/symfunc.hpp"

#include <vector>

namespace charpoly {

// Truncated power series in q whose coefficients are exact bivariate
// polynomials in (m, t): f = sum_{j=0}^{trunc} c[j](m, t) q^j.
// Arithmetic between two series truncates to the smaller truncation order;
// results are exact through every retained power of q.
struct QSeries {
    int trunc = 0;
    std::vector<BivarPoly> c;  // size trunc + 1

    QSeries() : c(1) {}
    explicit QSeries(int truncation);

    static QSeries zero(int truncation) { return QSeries(truncation); }
    static QSeries one(int truncation);
    // f * q^j for a bivariate coefficient f
    static QSeries term(const BivarPoly& f, int q_exp, int truncation);

    BivarPoly q_coeff(int j) const;
    void set_q_coeff(int j, const BivarPoly& f);
    bool is_zero() const;

    // equality compares through min(trunc, o.trunc)? No: requires equal
    // truncation and equal coefficients (tests compare like with like).
    bool operator==(const QSeries& o) const { return trunc == o.trunc && c == o.c; }
    bool operator!=(const QSeries& o) const { return !(*this == o); }

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries operator*(const Rat& s) const;
    QSeries operator*(const BivarPoly& s) const;

    // agreement of all q-coefficients up to and including q^upto
    bool agrees_with(const QSeries& o, int upto) const;
};

// f^[r]: q -> q^r, t -> t^r, m untouched.  Truncation order is preserved;
// the result is exact through q^trunc.
QSeries substitute_power(const QSeries& f, int r);

// F o f for a finitely supported symmetric function F in the power-sum basis:
//   F o f = sum_lambda c_lambda prod_i f^[lambda_i].
QSeries sym_apply(const SymFunc& F, const QSeries& f);

// Plethystic exponential Exp(f) = sum_{r>=0} h_r o f
//                               = sum_{lambda} z_lambda^{-1} f^[lambda],
// computed as the partition sum grouped by part multiplicities,
//   prod_{r>=1} sum_{mu>=0} (f^[r])^mu / (r^mu mu!),
// which is exact and O(N log N) series products.  Requires the q^0
// coefficient of f to vanish (otherwise the sum does not terminate).
QSeries exp_plethystic_series(const QSeries& f);

// Termwise composition of specialized series:
//   (sum_i f_i(m) q^i) o (sum_{j,k} g_{jk}(m) q^j t^k)
//     = f_0(m) + sum_{i>=1, j, k} f_i(g_{jk}(m)) q^{ij} t^{ik}.
// Preconditions: every coefficient of f is t-free, and g has zero q^0
// coefficient.  This represents plethysm followed by specialization exactly
// when the inner argument is concentrated in a single (q, t)-bidegree.
QSeries compose_series(const QSeries& f, const QSeries& g);

}  // namespace charpoly
