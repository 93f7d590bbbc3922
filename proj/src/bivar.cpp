#include "charpoly/bivar.hpp"

#include <algorithm>
#include <stdexcept>

namespace charpoly {

BivarPoly BivarPoly::constant(const Rat& c) {
    BivarPoly p;
    if (c != 0) p.terms[{0, 0}] = c;
    return p;
}

BivarPoly BivarPoly::m_var() { return monomial(1, 0, Rat(1)); }
BivarPoly BivarPoly::t_var() { return monomial(0, 1, Rat(1)); }

BivarPoly BivarPoly::monomial(int m_exp, int t_exp, const Rat& c) {
    BivarPoly p;
    if (c != 0) p.terms[{t_exp, m_exp}] = c;
    return p;
}

BivarPoly BivarPoly::from_m_poly(const UniPoly& f, int t_exp) {
    BivarPoly p;
    for (int i = 0; i <= f.degree(); ++i) {
        Rat c = f.coeff(i);
        if (c != 0) p.terms[{t_exp, i}] = c;
    }
    return p;
}

BivarPoly BivarPoly::from_t_poly(const UniPoly& f, int m_exp) {
    BivarPoly p;
    for (int i = 0; i <= f.degree(); ++i) {
        Rat c = f.coeff(i);
        if (c != 0) p.terms[{i, m_exp}] = c;
    }
    return p;
}

Rat BivarPoly::coeff(int m_exp, int t_exp) const {
    auto it = terms.find({t_exp, m_exp});
    return it == terms.end() ? Rat(0) : it->second;
}

void BivarPoly::add_term(int m_exp, int t_exp, const Rat& c) {
    if (c == 0) return;
    auto key = std::make_pair(t_exp, m_exp);
    auto [it, fresh] = terms.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

int BivarPoly::m_degree() const {
    int d = -1;
    for (const auto& [key, c] : terms) d = std::max(d, key.second);
    return d;
}

int BivarPoly::t_degree() const {
    if (terms.empty()) return -1;
    return terms.rbegin()->first.first;
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
    BivarPoly r = *this;
    r += o;
    return r;
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const {
    BivarPoly r = *this;
    r -= o;
    return r;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
    for (const auto& [key, c] : o.terms) add_term(key.second, key.first, c);
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
    for (const auto& [key, c] : o.terms) add_term(key.second, key.first, -c);
    return *this;
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
    BivarPoly r;
    for (const auto& [ka, ca] : terms)
        for (const auto& [kb, cb] : o.terms)
            r.add_term(ka.second + kb.second, ka.first + kb.first, ca * cb);
    return r;
}

BivarPoly BivarPoly::operator*(const Rat& s) const {
    BivarPoly r;
    if (s == 0) return r;
    for (const auto& [key, c] : terms) r.terms[key] = c * s;
    return r;
}

Rat BivarPoly::eval(const Rat& m0, const Rat& t0) const {
    Rat acc = 0;
    for (const auto& [key, c] : terms)
        acc += c * rat_pow(t0, key.first) * rat_pow(m0, key.second);
    return acc;
}

UniPoly BivarPoly::eval_t(const Rat& t0) const {
    UniPoly out;
    for (const auto& [key, c] : terms)
        out += UniPoly::monomial(key.second, c * rat_pow(t0, key.first));
    return out;
}

UniPoly BivarPoly::eval_m(const Rat& m0) const {
    UniPoly out;
    for (const auto& [key, c] : terms)
        out += UniPoly::monomial(key.first, c * rat_pow(m0, key.second));
    return out;
}

UniPoly BivarPoly::t_coeff_poly(int k) const {
    UniPoly out;
    auto lo = terms.lower_bound({k, 0});
    for (auto it = lo; it != terms.end() && it->first.first == k; ++it)
        out += UniPoly::monomial(it->first.second, it->second);
    return out;
}

UniPoly BivarPoly::m_coeff_poly(int j) const {
    UniPoly out;
    for (const auto& [key, c] : terms)
        if (key.second == j) out += UniPoly::monomial(key.first, c);
    return out;
}

BivarPoly BivarPoly::subst_t_power(int r) const {
    BivarPoly out;
    for (const auto& [key, c] : terms) out.terms[{key.first * r, key.second}] = c;
    return out;
}

BivarPoly BivarPoly::negate_m() const {
    BivarPoly out;
    for (const auto& [key, c] : terms)
        out.terms[key] = (key.second % 2 != 0) ? -c : c;
    return out;
}

bool BivarPoly::is_palindromic_in_t() const {
    int d = t_degree();
    if (d <= 0) return true;
    for (int k = 0; k <= d / 2; ++k)
        if (t_coeff_poly(k) != t_coeff_poly(d - k)) return false;
    return true;
}

std::string BivarPoly::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (int k = 0; k <= t_degree(); ++k) {
        UniPoly row = t_coeff_poly(k);
        if (row.is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += row.to_string("m");
        } else {
            out += "(" + row.to_string("m") + ")*t";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

BivarPoly divide_exact(const BivarPoly& a, const BivarPoly& b) {
    if (b.is_zero()) throw std::domain_error("divide_exact: division by zero");
    BivarPoly rem = a;
    BivarPoly quot;
    const auto& ltb = *b.terms.rbegin();  // largest (t, m) key
    while (!rem.is_zero()) {
        const auto& lta = *rem.terms.rbegin();
        int dt = lta.first.first - ltb.first.first;
        int dm = lta.first.second - ltb.first.second;
        if (dt < 0 || dm < 0) throw std::domain_error("divide_exact: not divisible");
        Rat c = lta.second / ltb.second;
        BivarPoly mono = BivarPoly::monomial(dm, dt, c);
        quot += mono;
        rem -= mono * b;
    }
    return quot;
}

}  // namespace charpoly
