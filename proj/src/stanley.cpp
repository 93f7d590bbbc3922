#include "charpoly/stanley.hpp"

#include <stdexcept>

namespace charpoly {

UniPoly char_poly(const SymFunc& f) {
    UniPoly out;
    for (const auto& [lam, c] : f.terms) out += UniPoly::monomial(partition_length(lam), c);
    return out;
}

Rat char_value(const SymFunc& f, const Rat& m0) {
    Rat acc = 0;
    for (const auto& [lam, c] : f.terms) acc += c * rat_pow(m0, partition_length(lam));
    return acc;
}

BivarPoly char_poly_graded(const GradedSymFunc& g) {
    BivarPoly out;
    for (int k = 0; k <= g.t_degree(); ++k) {
        const SymFunc& fk = g.coef[static_cast<size_t>(k)];
        if (fk.is_zero()) continue;
        out += BivarPoly::from_m_poly(char_poly(fk), k);
    }
    return out;
}

UniPoly omega_char_poly(const SymFunc& f) { return char_poly(omega(f)); }

RepInvariants char_poly_invariants(const SymFunc& f) {
    if (!f.is_homogeneous())
        throw std::invalid_argument("char_poly_invariants: inhomogeneous input");
    int n = f.max_degree();
    if (n < 0) return {Rat(0), Rat(0), Rat(0)};
    UniPoly cp = char_poly(f);
    RepInvariants inv;
    inv.dim = cp.coeff(n) * Rat(factorial(static_cast<unsigned>(n)));
    inv.invariant_dim = cp.eval(Rat(1));
    inv.sign_mult = cp.eval(Rat(-1));
    if (n % 2 != 0) inv.sign_mult = -inv.sign_mult;
    return inv;
}

UniPoly perm_module_char_poly(const Partition& lam) {
    if (!is_valid_partition(lam))
        throw std::invalid_argument("perm_module_char_poly: invalid partition");
    UniPoly out = UniPoly::constant(1);
    for (int part : lam)
        out *= rising_multiset(UniPoly::variable(), static_cast<unsigned>(part));
    return out;
}

std::vector<Rat> recover_length_two(const std::vector<Rat>& values, int n) {
    if (n < 0) throw std::invalid_argument("recover_length_two: negative n");
    int r = n / 2;
    if (static_cast<int>(values.size()) != r + 1)
        throw std::invalid_argument("recover_length_two: need floor(n/2)+1 values");
    // B_{ij} = (-1)^n C(n-i, n-j) C(n-i, j) for i <= j, else 0
    auto B = [&](int i, int j) -> Rat {
        if (i > j) return Rat(0);
        Int v = binomial(Int(n - i), static_cast<unsigned>(n - j)) *
                binomial(Int(n - i), static_cast<unsigned>(j));
        Rat out(v);
        if (n % 2 != 0) out = -out;
        return out;
    };
    std::vector<Rat> coeffs(static_cast<size_t>(r) + 1, Rat(0));
    for (int i = r; i >= 0; --i) {
        Rat acc = values[static_cast<size_t>(i)];
        for (int j = i + 1; j <= r; ++j) acc -= B(i, j) * coeffs[static_cast<size_t>(j)];
        Rat diag = B(i, i);
        // diagonal (-1)^n C(n-i, i) is nonzero for every i <= floor(n/2)
        coeffs[static_cast<size_t>(i)] = acc / diag;
    }
    return coeffs;
}

Rat schur_char_value(const Partition& lam, int m0) {
    if (!is_valid_partition(lam))
        throw std::invalid_argument("schur_char_value: invalid partition");
    if (m0 < 0) throw std::invalid_argument("schur_char_value: negative m0");
    if (partition_length(lam) > m0) return Rat(0);
    std::vector<int> padded(static_cast<size_t>(m0), 0);
    for (size_t i = 0; i < lam.size(); ++i) padded[i] = lam[i];
    Rat prod = 1;
    for (int i = 0; i < m0; ++i)
        for (int j = i + 1; j < m0; ++j)
            prod *= Rat(1) + Rat(padded[static_cast<size_t>(i)] - padded[static_cast<size_t>(j)]) /
                                 Rat(j - i);
    return prod;
}

}  // namespace charpoly
