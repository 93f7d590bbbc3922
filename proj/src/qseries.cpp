#include "charpoly/qseries.hpp"

#include <map>
#include <stdexcept>

namespace charpoly {

QSeries::QSeries(int truncation) {
    if (truncation < 0) throw std::invalid_argument("QSeries: negative truncation");
    trunc = truncation;
    c.assign(static_cast<size_t>(trunc) + 1, BivarPoly());
}

QSeries QSeries::one(int truncation) {
    QSeries s(truncation);
    s.c[0] = BivarPoly::constant(1);
    return s;
}

QSeries QSeries::term(const BivarPoly& f, int q_exp, int truncation) {
    QSeries s(truncation);
    if (q_exp <= truncation) s.c[static_cast<size_t>(q_exp)] = f;
    return s;
}

BivarPoly QSeries::q_coeff(int j) const {
    if (j < 0 || j > trunc) return BivarPoly();
    return c[static_cast<size_t>(j)];
}

void QSeries::set_q_coeff(int j, const BivarPoly& f) {
    if (j < 0 || j > trunc) throw std::out_of_range("QSeries::set_q_coeff");
    c[static_cast<size_t>(j)] = f;
}

bool QSeries::is_zero() const {
    for (const auto& f : c)
        if (!f.is_zero()) return false;
    return true;
}

QSeries QSeries::operator+(const QSeries& o) const {
    QSeries r(std::min(trunc, o.trunc));
    for (int j = 0; j <= r.trunc; ++j)
        r.c[static_cast<size_t>(j)] = q_coeff(j) + o.q_coeff(j);
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const {
    QSeries r(std::min(trunc, o.trunc));
    for (int j = 0; j <= r.trunc; ++j)
        r.c[static_cast<size_t>(j)] = q_coeff(j) - o.q_coeff(j);
    return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
    QSeries r(std::min(trunc, o.trunc));
    for (int a = 0; a <= r.trunc; ++a) {
        if (q_coeff(a).is_zero()) continue;
        for (int b = 0; a + b <= r.trunc; ++b) {
            if (o.q_coeff(b).is_zero()) continue;
            r.c[static_cast<size_t>(a + b)] += q_coeff(a) * o.q_coeff(b);
        }
    }
    return r;
}

QSeries QSeries::operator*(const Rat& s) const {
    QSeries r(trunc);
    for (int j = 0; j <= trunc; ++j) r.c[static_cast<size_t>(j)] = q_coeff(j) * s;
    return r;
}

QSeries QSeries::operator*(const BivarPoly& s) const {
    QSeries r(trunc);
    for (int j = 0; j <= trunc; ++j) r.c[static_cast<size_t>(j)] = q_coeff(j) * s;
    return r;
}

bool QSeries::agrees_with(const QSeries& o, int upto) const {
    if (upto > trunc || upto > o.trunc)
        throw std::invalid_argument("agrees_with: beyond truncation");
    for (int j = 0; j <= upto; ++j)
        if (q_coeff(j) != o.q_coeff(j)) return false;
    return true;
}

QSeries substitute_power(const QSeries& f, int r) {
    if (r < 1) throw std::invalid_argument("substitute_power: need r >= 1");
    QSeries out(f.trunc);
    for (int j = 0; j * r <= f.trunc; ++j)
        out.c[static_cast<size_t>(j * r)] = f.q_coeff(j).subst_t_power(r);
    return out;
}

QSeries sym_apply(const SymFunc& F, const QSeries& f) {
    QSeries out(f.trunc);
    std::map<int, QSeries> cache;  // r -> f^[r]
    auto power = [&](int r) -> const QSeries& {
        auto it = cache.find(r);
        if (it == cache.end()) it = cache.emplace(r, substitute_power(f, r)).first;
        return it->second;
    };
    for (const auto& [lam, coeff] : F.terms) {
        QSeries prod = QSeries::one(f.trunc);
        for (int r : lam) prod = prod * power(r);
        out = out + prod * coeff;
    }
    return out;
}

QSeries exp_plethystic_series(const QSeries& f) {
    if (!f.q_coeff(0).is_zero())
        throw std::invalid_argument("exp_plethystic_series: nonzero q^0 coefficient");
    const int N = f.trunc;
    QSeries out = QSeries::one(N);
    for (int r = 1; r <= N; ++r) {
        QSeries fr = substitute_power(f, r);  // q-order >= r
        // sum over the multiplicity of part r: (f^[r])^mu / (r^mu mu!)
        QSeries factor = QSeries::one(N);
        QSeries pow = QSeries::one(N);
        Rat scale = 1;
        for (int mu = 1; mu * r <= N; ++mu) {
            pow = pow * fr;
            scale /= Rat(r) * Rat(mu);
            factor = factor + pow * scale;
        }
        out = out * factor;
    }
    return out;
}

QSeries compose_series(const QSeries& f, const QSeries& g) {
    for (int i = 0; i <= f.trunc; ++i)
        if (f.q_coeff(i).t_degree() > 0)
            throw std::invalid_argument("compose_series: outer coefficients must be t-free");
    if (!g.q_coeff(0).is_zero())
        throw std::invalid_argument("compose_series: inner series must have zero q^0 part");
    QSeries out(g.trunc);
    out.c[0] = f.q_coeff(0);  // constant outer term passes through once
    for (int i = 1; i <= f.trunc; ++i) {
        UniPoly fi = f.q_coeff(i).eval_t(Rat(1));  // t-free by precondition
        if (fi.is_zero()) continue;
        for (int j = 1; j <= g.trunc; ++j) {
            if (i * j > g.trunc) break;
            const BivarPoly& gj = g.q_coeff(j);
            // g_{jk}(m) is the full m-polynomial at bidegree (q^j, t^k);
            // each contributes f_i(g_{jk}(m)) q^{ij} t^{ik}.
            for (int k = 0; k <= gj.t_degree(); ++k) {
                UniPoly gjk = gj.t_coeff_poly(k);
                if (gjk.is_zero()) continue;
                UniPoly composed = fi.compose(gjk);
                out.c[static_cast<size_t>(i * j)] +=
                    BivarPoly::from_m_poly(composed, i * k);
            }
        }
    }
    return out;
}

}  // namespace charpoly
