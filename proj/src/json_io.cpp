#include "charpoly/json_io.hpp"

#include <stdexcept>
#include <string>

namespace charpoly {

namespace {

Int int_from_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer string");
    size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad integer string: " + s);
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("bad integer string: " + s);
    return Int(s);
}

}  // namespace

nlohmann::json rat_to_json(const Rat& r) {
    return {{"num", rat_num(r).str()}, {"den", rat_den(r).str()}};
}

Rat rat_from_json(const nlohmann::json& j) {
    const Int num = int_from_decimal(j.at("num").get<std::string>());
    const Int den = int_from_decimal(j.at("den").get<std::string>());
    if (den <= 0) throw std::invalid_argument("rational: denominator must be positive");
    if (boost::multiprecision::gcd(num < 0 ? Int(-num) : num, den) != 1 &&
        !(num == 0 && den == 1))
        throw std::invalid_argument("rational: not in lowest terms");
    Rat r(num);
    r /= Rat(den);
    return r;
}

nlohmann::json bivar_to_json(const BivarPoly& f) {
    nlohmann::json out = nlohmann::json::array();
    // Term storage is keyed (t, m), so iteration already matches the
    // serialization order.
    for (const auto& [key, c] : f.terms) {
        nlohmann::json rec = rat_to_json(c);
        rec["t"] = key.first;
        rec["m"] = key.second;
        out.push_back(std::move(rec));
    }
    return out;
}

BivarPoly bivar_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("bivariate polynomial: expected array");
    BivarPoly f;
    for (const auto& rec : j) {
        const int t = rec.at("t").get<int>();
        const int m = rec.at("m").get<int>();
        if (t < 0 || m < 0) throw std::invalid_argument("bivariate polynomial: negative exponent");
        const Rat c = rat_from_json(rec);
        if (c == 0) throw std::invalid_argument("bivariate polynomial: zero term present");
        if (f.coeff(m, t) != 0) throw std::invalid_argument("bivariate polynomial: duplicate term");
        f.add_term(m, t, c);
    }
    return f;
}

nlohmann::json unipoly_m_to_json(const UniPoly& f) {
    return bivar_to_json(BivarPoly::from_m_poly(f));
}

nlohmann::json unipoly_t_to_json(const UniPoly& f) {
    return bivar_to_json(BivarPoly::from_t_poly(f));
}

UniPoly unipoly_m_from_json(const nlohmann::json& j) {
    const BivarPoly f = bivar_from_json(j);
    if (f.t_degree() > 0) throw std::invalid_argument("expected a polynomial in m only");
    return f.eval_t(Rat(1));
}

UniPoly unipoly_t_from_json(const nlohmann::json& j) {
    const BivarPoly f = bivar_from_json(j);
    if (f.m_degree() > 0) throw std::invalid_argument("expected a polynomial in t only");
    return f.eval_m(Rat(1));
}

}  // namespace charpoly
