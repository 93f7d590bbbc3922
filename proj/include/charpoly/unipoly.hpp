#pragma once

#include "charpoly/rational.hpp"

#include <string>
#include <vector>

namespace charpoly {

// Dense univariate polynomial over Rat.  coeffs[i] multiplies x^i; the vector
// carries no trailing zeros (the zero polynomial is the empty vector).
// Used both for polynomials in the color-count variable m and in the grading
// variable t; the variable name only matters for printing.
struct UniPoly {
    std::vector<Rat> coeffs;

    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> c) : coeffs(std::move(c)) { normalize(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rat& c);
    static UniPoly monomial(int deg, const Rat& c = Rat(1));
    static UniPoly variable() { return monomial(1); }

    void normalize();
    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }  // -1 for zero
    Rat coeff(int i) const;

    bool operator==(const UniPoly& o) const { return coeffs == o.coeffs; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& s) const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rat& s);

    Rat eval(const Rat& x) const;

    // f(g): substitute g for the variable.
    UniPoly compose(const UniPoly& g) const;

    // f(-x), and the reflection (-1)^n f(-x).
    UniPoly negate_variable() const;
    UniPoly reflect(int n) const;

    // human-readable, e.g. "1/2*m^2 + 1/2*m" (highest degree first)
    std::string to_string(const std::string& var) const;
};

// Multiset coefficient with polynomial argument:
//   <<f, r>> = f (f+1) ... (f+r-1) / r!
UniPoly rising_multiset(const UniPoly& f, unsigned r);

// Binomial coefficient with polynomial argument:
//   C(f, r) = f (f-1) ... (f-r+1) / r!
UniPoly falling_binomial(const UniPoly& f, unsigned r);

// [k]_t = 1 + t + ... + t^{k-1}  ([0]_t = 0)
UniPoly q_integer(int k);

// Gaussian binomial [a choose b]_t (integer coefficients).
UniPoly gaussian_binomial(int a, int b);

// Exact Lagrange interpolation through (xs[i], ys[i]); xs must be distinct.
UniPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

}  // namespace charpoly
