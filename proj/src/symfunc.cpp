#include "charpoly/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace charpoly {

SymFunc SymFunc::one() {
    SymFunc f;
    f.terms[{}] = 1;
    return f;
}

SymFunc SymFunc::p(const Partition& lam) {
    if (!is_valid_partition(lam)) throw std::invalid_argument("SymFunc::p: invalid partition");
    SymFunc f;
    f.terms[lam] = 1;
    return f;
}

SymFunc SymFunc::p(int n) {
    if (n < 1) throw std::invalid_argument("SymFunc::p: need n >= 1");
    return p(Partition{n});
}

SymFunc SymFunc::h(int n) {
    if (n < 0) throw std::invalid_argument("SymFunc::h: negative n");
    SymFunc f;
    for (const auto& lam : partitions_of(n)) f.terms[lam] = Rat(1) / Rat(z_of(lam));
    return f;
}

SymFunc SymFunc::e(int n) {
    if (n < 0) throw std::invalid_argument("SymFunc::e: negative n");
    SymFunc f;
    for (const auto& lam : partitions_of(n)) {
        Rat c = Rat(1) / Rat(z_of(lam));
        if ((n - partition_length(lam)) % 2 != 0) c = -c;
        f.terms[lam] = c;
    }
    return f;
}

Rat SymFunc::coeff(const Partition& lam) const {
    auto it = terms.find(lam);
    return it == terms.end() ? Rat(0) : it->second;
}

void SymFunc::set_coeff(const Partition& lam, const Rat& c) {
    if (c == 0)
        terms.erase(lam);
    else
        terms[lam] = c;
}

void SymFunc::add_term(const Partition& lam, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(lam, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    SymFunc r = *this;
    r += o;
    return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const {
    SymFunc r = *this;
    r -= o;
    return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    for (const auto& [lam, c] : o.terms) add_term(lam, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    for (const auto& [lam, c] : o.terms) add_term(lam, -c);
    return *this;
}

namespace {

Partition merge_partitions(const Partition& a, const Partition& b) {
    Partition out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
               std::greater<int>());
    return out;
}

}  // namespace

SymFunc SymFunc::operator*(const SymFunc& o) const {
    SymFunc r;
    for (const auto& [la, ca] : terms)
        for (const auto& [lb, cb] : o.terms) r.add_term(merge_partitions(la, lb), ca * cb);
    return r;
}

SymFunc SymFunc::operator*(const Rat& s) const {
    SymFunc r;
    if (s == 0) return r;
    for (const auto& [lam, c] : terms) r.terms[lam] = c * s;
    return r;
}

int SymFunc::max_degree() const {
    int d = -1;
    for (const auto& [lam, c] : terms) d = std::max(d, partition_weight(lam));
    return d;
}

int SymFunc::min_degree() const {
    if (terms.empty()) return -1;
    int d = -1;
    for (const auto& [lam, c] : terms) {
        int w = partition_weight(lam);
        if (d < 0 || w < d) d = w;
    }
    return d;
}

bool SymFunc::is_homogeneous() const {
    return terms.empty() || max_degree() == min_degree();
}

SymFunc SymFunc::homogeneous_component(int d) const {
    SymFunc r;
    for (const auto& [lam, c] : terms)
        if (partition_weight(lam) == d) r.terms[lam] = c;
    return r;
}

SymFunc SymFunc::truncate_degree(int max_deg) const {
    SymFunc r;
    for (const auto& [lam, c] : terms)
        if (partition_weight(lam) <= max_deg) r.terms[lam] = c;
    return r;
}

std::string SymFunc::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [lam, c] : terms) {
        if (!out.empty()) out += " + ";
        out += rat_to_string(c);
        out += "*p[";
        for (size_t i = 0; i < lam.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(lam[i]);
        }
        out += "]";
    }
    return out;
}

SymFunc omega(const SymFunc& f) {
    SymFunc r;
    for (const auto& [lam, c] : f.terms) {
        int sgn_exp = partition_weight(lam) - partition_length(lam);
        r.terms[lam] = (sgn_exp % 2 != 0) ? -c : c;
    }
    return r;
}

Rat inner_product(const SymFunc& f, const SymFunc& g) {
    Rat acc = 0;
    for (const auto& [lam, c] : f.terms) {
        Rat cg = g.coeff(lam);
        if (cg != 0) acc += c * cg * Rat(z_of(lam));
    }
    return acc;
}

namespace {

// p_r o g: multiply every part by r (the constant term is fixed).
SymFunc plethysm_p(int r, const SymFunc& g) {
    SymFunc out;
    for (const auto& [lam, c] : g.terms) {
        Partition scaled = lam;
        for (int& x : scaled) x *= r;
        out.terms[scaled] = c;
    }
    return out;
}

}  // namespace

SymFunc plethysm(const SymFunc& f, const SymFunc& g) {
    SymFunc out;
    std::map<int, SymFunc> p_cache;  // r -> p_r o g
    for (const auto& [lam, c] : f.terms) {
        SymFunc prod = SymFunc::one();
        for (int r : lam) {
            auto it = p_cache.find(r);
            if (it == p_cache.end()) it = p_cache.emplace(r, plethysm_p(r, g)).first;
            prod = prod * it->second;
        }
        out += prod * c;
    }
    return out;
}

SymFunc schur(const Partition& lam) {
    if (!is_valid_partition(lam)) throw std::invalid_argument("schur: invalid partition");
    int l = partition_length(lam);
    if (l == 0) return SymFunc::one();
    // det(h_{lambda_i - i + j}) over S_l, h_k = 0 for k < 0
    std::vector<int> idx(static_cast<size_t>(l));
    for (int i = 0; i < l; ++i) idx[static_cast<size_t>(i)] = i;
    SymFunc out;
    std::vector<int> perm = idx;
    // iterate over all permutations with parity tracking
    std::sort(perm.begin(), perm.end());
    do {
        // parity of perm
        int inv = 0;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inv;
        SymFunc prod = SymFunc::one();
        bool zero = false;
        for (int i = 0; i < l && !zero; ++i) {
            int k = lam[static_cast<size_t>(i)] - i + perm[static_cast<size_t>(i)];
            if (k < 0) {
                zero = true;
                break;
            }
            prod = prod * SymFunc::h(k);
        }
        if (!zero) out += prod * Rat(inv % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

SymFunc exp_plethystic(const SymFunc& f, int max_deg) {
    if (f.coeff({}) != 0)
        throw std::invalid_argument("exp_plethystic: nonzero constant term");
    SymFunc g = f.truncate_degree(max_deg);
    SymFunc out;
    for (int r = 0; r <= max_deg; ++r)
        out += plethysm(SymFunc::h(r), g).truncate_degree(max_deg);
    return out;
}

std::vector<Perm> subgroup_closure(const std::vector<Perm>& gens, int n, size_t max_order) {
    for (const auto& g : gens)
        if (static_cast<int>(g.size()) != n)
            throw std::invalid_argument("subgroup_closure: generator size mismatch");
    std::set<Perm> seen;
    std::vector<Perm> queue;
    seen.insert(perm_identity(n));
    queue.push_back(perm_identity(n));
    for (size_t head = 0; head < queue.size(); ++head) {
        Perm cur = queue[head];
        for (const auto& g : gens) {
            Perm nxt = perm_compose(g, cur);
            if (seen.insert(nxt).second) {
                if (seen.size() > max_order)
                    throw std::runtime_error("subgroup_closure: order bound exceeded");
                queue.push_back(std::move(nxt));
            }
        }
    }
    return queue;
}

SymFunc ch_of_subgroup(const std::vector<Perm>& gens, int n, size_t max_order) {
    std::vector<Perm> elems = subgroup_closure(gens, n, max_order);
    SymFunc out;
    for (const auto& sigma : elems) out.add_term(cycle_type(sigma), 1);
    return out * (Rat(1) / Rat(Int(elems.size())));
}

// ---------------------------------------------------------------------------

GradedSymFunc GradedSymFunc::from(const SymFunc& f, int t_power) {
    GradedSymFunc g;
    if (f.is_zero()) return g;
    g.coef.assign(static_cast<size_t>(t_power) + 1, SymFunc::zero());
    g.coef.back() = f;
    return g;
}

void GradedSymFunc::normalize() {
    while (!coef.empty() && coef.back().is_zero()) coef.pop_back();
}

bool GradedSymFunc::is_zero() const {
    for (const auto& f : coef)
        if (!f.is_zero()) return false;
    return true;
}

SymFunc GradedSymFunc::t_coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coef.size())) return SymFunc::zero();
    return coef[static_cast<size_t>(k)];
}

bool GradedSymFunc::operator==(const GradedSymFunc& o) const {
    GradedSymFunc a = *this, b = o;
    a.normalize();
    b.normalize();
    return a.coef == b.coef;
}

GradedSymFunc GradedSymFunc::operator+(const GradedSymFunc& o) const {
    GradedSymFunc r = *this;
    r += o;
    return r;
}

GradedSymFunc& GradedSymFunc::operator+=(const GradedSymFunc& o) {
    if (coef.size() < o.coef.size()) coef.resize(o.coef.size());
    for (size_t i = 0; i < o.coef.size(); ++i) coef[i] += o.coef[i];
    normalize();
    return *this;
}

GradedSymFunc GradedSymFunc::operator-(const GradedSymFunc& o) const {
    GradedSymFunc r = *this;
    if (r.coef.size() < o.coef.size()) r.coef.resize(o.coef.size());
    for (size_t i = 0; i < o.coef.size(); ++i) r.coef[i] -= o.coef[i];
    r.normalize();
    return r;
}

GradedSymFunc GradedSymFunc::operator*(const GradedSymFunc& o) const {
    GradedSymFunc r;
    if (is_zero() || o.is_zero()) return r;
    r.coef.assign(coef.size() + o.coef.size() - 1, SymFunc::zero());
    for (size_t i = 0; i < coef.size(); ++i) {
        if (coef[i].is_zero()) continue;
        for (size_t j = 0; j < o.coef.size(); ++j) {
            if (o.coef[j].is_zero()) continue;
            r.coef[i + j] += coef[i] * o.coef[j];
        }
    }
    r.normalize();
    return r;
}

GradedSymFunc GradedSymFunc::operator*(const Rat& s) const {
    GradedSymFunc r;
    if (s == 0) return r;
    r.coef.reserve(coef.size());
    for (const auto& f : coef) r.coef.push_back(f * s);
    r.normalize();
    return r;
}

GradedSymFunc GradedSymFunc::shift_t(int k) const {
    GradedSymFunc r;
    if (is_zero()) return r;
    r.coef.assign(coef.size() + static_cast<size_t>(k), SymFunc::zero());
    for (size_t i = 0; i < coef.size(); ++i) r.coef[i + static_cast<size_t>(k)] = coef[i];
    return r;
}

GradedSymFunc plethysm_p_graded(int r, const GradedSymFunc& g) {
    GradedSymFunc out;
    if (g.is_zero()) return out;
    out.coef.assign(static_cast<size_t>(g.t_degree() * r) + 1, SymFunc::zero());
    for (int k = 0; k <= g.t_degree(); ++k) {
        const SymFunc& gk = g.coef[static_cast<size_t>(k)];
        if (gk.is_zero()) continue;
        SymFunc scaled;
        for (const auto& [lam, c] : gk.terms) {
            Partition sl = lam;
            for (int& x : sl) x *= r;
            scaled.terms[sl] = c;
        }
        out.coef[static_cast<size_t>(k * r)] += scaled;
    }
    out.normalize();
    return out;
}

GradedSymFunc plethysm_graded(const SymFunc& f, const GradedSymFunc& g) {
    GradedSymFunc out;
    std::map<int, GradedSymFunc> p_cache;
    for (const auto& [lam, c] : f.terms) {
        GradedSymFunc prod = GradedSymFunc::from(SymFunc::one());
        for (int r : lam) {
            auto it = p_cache.find(r);
            if (it == p_cache.end()) it = p_cache.emplace(r, plethysm_p_graded(r, g)).first;
            prod = prod * it->second;
        }
        out += prod * c;
    }
    return out;
}

}  // namespace charpoly
