#include "charpoly/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace charpoly {

UniPoly UniPoly::constant(const Rat& c) {
    UniPoly p;
    if (c != 0) p.coeffs = {c};
    return p;
}

UniPoly UniPoly::monomial(int deg, const Rat& c) {
    UniPoly p;
    if (c != 0) {
        p.coeffs.assign(static_cast<size_t>(deg) + 1, Rat(0));
        p.coeffs.back() = c;
    }
    return p;
}

void UniPoly::normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Rat UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs.size())) return Rat(0);
    return coeffs[static_cast<size_t>(i)];
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly r = *this;
    r += o;
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    UniPoly r = *this;
    r -= o;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (coeffs.size() < o.coeffs.size()) coeffs.resize(o.coeffs.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (coeffs.size() < o.coeffs.size()) coeffs.resize(o.coeffs.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    normalize();
    return *this;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    UniPoly r;
    r.coeffs.assign(coeffs.size() + o.coeffs.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs.size(); ++j) {
            if (o.coeffs[j] == 0) continue;
            r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
        }
    }
    r.normalize();
    return r;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    *this = *this * o;
    return *this;
}

UniPoly UniPoly::operator*(const Rat& s) const {
    if (s == 0) return UniPoly();
    UniPoly r = *this;
    for (auto& c : r.coeffs) c *= s;
    return r;
}

UniPoly& UniPoly::operator*=(const Rat& s) {
    *this = *this * s;
    return *this;
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

UniPoly UniPoly::compose(const UniPoly& g) const {
    UniPoly acc;  // Horner in the polynomial ring
    for (size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * g;
        acc += UniPoly::constant(coeffs[i]);
    }
    return acc;
}

UniPoly UniPoly::negate_variable() const {
    UniPoly r = *this;
    for (size_t i = 1; i < r.coeffs.size(); i += 2) r.coeffs[i] = -r.coeffs[i];
    return r;
}

UniPoly UniPoly::reflect(int n) const {
    UniPoly r = negate_variable();
    if (n % 2 != 0) r *= Rat(-1);
    return r;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Rat c = coeff(i);
        if (c == 0) continue;
        if (!out.empty()) {
            out += (c < 0) ? " - " : " + ";
            if (c < 0) c = -c;
        }
        bool unit = (c == 1 && i > 0);
        if (!unit) out += rat_to_string(c);
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

UniPoly rising_multiset(const UniPoly& f, unsigned r) {
    UniPoly p = UniPoly::constant(1);
    for (unsigned i = 0; i < r; ++i) p *= (f + UniPoly::constant(Rat(i)));
    return p * (Rat(1) / Rat(factorial(r)));
}

UniPoly falling_binomial(const UniPoly& f, unsigned r) {
    UniPoly p = UniPoly::constant(1);
    for (unsigned i = 0; i < r; ++i) p *= (f - UniPoly::constant(Rat(i)));
    return p * (Rat(1) / Rat(factorial(r)));
}

UniPoly q_integer(int k) {
    if (k <= 0) return UniPoly();
    UniPoly p;
    p.coeffs.assign(static_cast<size_t>(k), Rat(1));
    return p;
}

UniPoly gaussian_binomial(int a, int b) {
    if (b < 0 || b > a) return UniPoly();
    // [a b]_t = [a-1 b-1]_t + t^b [a-1 b]_t, [a 0]_t = 1
    std::vector<UniPoly> row(static_cast<size_t>(b) + 1);
    row[0] = UniPoly::constant(1);
    for (int i = 1; i <= a; ++i) {
        for (int j = std::min(i, b); j >= 1; --j) {
            UniPoly shifted = row[static_cast<size_t>(j)] * UniPoly::monomial(j, Rat(1));
            row[static_cast<size_t>(j)] = row[static_cast<size_t>(j - 1)] + shifted;
            if (j > i) row[static_cast<size_t>(j)] = UniPoly();
        }
    }
    return row[static_cast<size_t>(b)];
}

UniPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
    UniPoly acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        UniPoly basis = UniPoly::constant(1);
        Rat denom = 1;
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            if (xs[i] == xs[j]) throw std::invalid_argument("interpolate: repeated node");
            basis *= (UniPoly::variable() - UniPoly::constant(xs[j]));
            denom *= (xs[i] - xs[j]);
        }
        acc += basis * (ys[i] / denom);
    }
    return acc;
}

}  // namespace charpoly
