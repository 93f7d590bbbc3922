#pragma once

#include "charpoly/rational.hpp"
#include "charpoly/unipoly.hpp"

#include <map>
#include <string>
#include <utility>

namespace charpoly {

// Exact bivariate polynomial in (m, t).  Terms are keyed by (t_exp, m_exp) so
// iteration order is t-major, m-minor - the canonical term order used by the
// serialized form.  Zero coefficients are never stored.
struct BivarPoly {
    // (t exponent, m exponent) -> coefficient
    std::map<std::pair<int, int>, Rat> terms;

    static BivarPoly zero() { return {}; }
    static BivarPoly constant(const Rat& c);
    static BivarPoly m_var();  // the polynomial m
    static BivarPoly t_var();  // the polynomial t
    static BivarPoly monomial(int m_exp, int t_exp, const Rat& c);
    // embed a polynomial in m, times t^t_exp
    static BivarPoly from_m_poly(const UniPoly& f, int t_exp = 0);
    // embed a polynomial in t, times m^m_exp
    static BivarPoly from_t_poly(const UniPoly& f, int m_exp = 0);

    bool is_zero() const { return terms.empty(); }
    Rat coeff(int m_exp, int t_exp) const;
    void add_term(int m_exp, int t_exp, const Rat& c);

    int m_degree() const;  // -1 for zero
    int t_degree() const;  // -1 for zero

    bool operator==(const BivarPoly& o) const { return terms == o.terms; }
    bool operator!=(const BivarPoly& o) const { return !(*this == o); }

    BivarPoly operator+(const BivarPoly& o) const;
    BivarPoly operator-(const BivarPoly& o) const;
    BivarPoly operator*(const BivarPoly& o) const;
    BivarPoly operator*(const Rat& s) const;
    BivarPoly& operator+=(const BivarPoly& o);
    BivarPoly& operator-=(const BivarPoly& o);

    Rat eval(const Rat& m0, const Rat& t0) const;
    UniPoly eval_t(const Rat& t0) const;  // polynomial in m
    UniPoly eval_m(const Rat& m0) const;  // polynomial in t

    // coefficient of t^k as a polynomial in m / of m^j as a polynomial in t
    UniPoly t_coeff_poly(int k) const;
    UniPoly m_coeff_poly(int j) const;

    // f(m, t^r): the degree-r Adams-type substitution used by plethysm on
    // polynomial data (m is untouched).
    BivarPoly subst_t_power(int r) const;

    // m -> -m
    BivarPoly negate_m() const;

    // coefficients of t^k and t^(d-k) agree for all k (d = t-degree)
    bool is_palindromic_in_t() const;

    std::string to_string() const;  // e.g. "(1/2*m^2 + 1/2*m)*t + 1"
};

// Exact division: returns q with a = q*b; throws std::domain_error when b is
// zero or does not divide a.  Single-divisor leading-term reduction in the
// (t, m)-lexicographic order, which is complete for exact divisibility.
BivarPoly divide_exact(const BivarPoly& a, const BivarPoly& b);

}  // namespace charpoly
