#include <doctest.h>

#include <random>

#include "charpoly/symfunc.hpp"

using namespace charpoly;

namespace {

SymFunc random_sym(std::mt19937& rng, int degree) {
    SymFunc f;
    for (const auto& lam : partitions_of(degree)) {
        const int c = static_cast<int>(rng() % 7) - 3;
        if (c != 0) f.add_term(lam, Rat(c));
    }
    return f;
}

}  // namespace

TEST_CASE("power-sum expansions of h and e") {
    CHECK(SymFunc::h(0) == SymFunc::one());
    CHECK(SymFunc::h(1) == SymFunc::p(1));
    CHECK(SymFunc::h(2).coeff({1, 1}) == Rat(1, 2));
    CHECK(SymFunc::h(2).coeff({2}) == Rat(1, 2));
    CHECK(SymFunc::e(2).coeff({1, 1}) == Rat(1, 2));
    CHECK(SymFunc::e(2).coeff({2}) == Rat(-1, 2));

    // h_n = sum over lambda of p_lambda / z_lambda
    for (int n = 0; n <= 8; ++n) {
        SymFunc expect;
        for (const auto& lam : partitions_of(n)) expect.add_term(lam, Rat(1) / Rat(z_of(lam)));
        CHECK(SymFunc::h(n) == expect);
    }

    // Newton: n e_n = sum_{k=1}^{n} (-1)^{k-1} p_k e_{n-k}
    for (int n = 1; n <= 8; ++n) {
        SymFunc rhs;
        for (int k = 1; k <= n; ++k) {
            const Rat sign = (k % 2 == 1) ? Rat(1) : Rat(-1);
            rhs += SymFunc::p(k) * SymFunc::e(n - k) * sign;
        }
        CHECK(SymFunc::e(n) * Rat(n) == rhs);
    }
}

TEST_CASE("grading helpers") {
    const SymFunc f = SymFunc::h(3) + SymFunc::p(1) * Rat(2);
    CHECK_FALSE(f.is_homogeneous());
    CHECK(f.min_degree() == 1);
    CHECK(f.max_degree() == 3);
    CHECK(f.homogeneous_component(3) == SymFunc::h(3));
    CHECK(f.homogeneous_component(1) == SymFunc::p(1) * Rat(2));
    CHECK(f.homogeneous_component(2).is_zero());
    CHECK(f.truncate_degree(2) == SymFunc::p(1) * Rat(2));
    CHECK(SymFunc::h(4).is_homogeneous());
    CHECK(SymFunc::zero().max_degree() == -1);
}

TEST_CASE("omega swaps h and e and is an involution") {
    for (int n = 0; n <= 8; ++n) {
        CHECK(omega(SymFunc::h(n)) == SymFunc::e(n));
        CHECK(omega(SymFunc::e(n)) == SymFunc::h(n));
    }
    std::mt19937 rng(7);
    for (int iter = 0; iter < 30; ++iter) {
        const SymFunc f = random_sym(rng, 1 + static_cast<int>(rng() % 6));
        CHECK(omega(omega(f)) == f);
    }
}

TEST_CASE("Hall inner product") {
    CHECK(inner_product(SymFunc::p(Partition{2, 1}), SymFunc::p(Partition{2, 1})) == Rat(2));
    CHECK(inner_product(SymFunc::p(Partition{2, 1}), SymFunc::p(Partition{3})) == Rat(0));
    CHECK(inner_product(SymFunc::h(3), SymFunc::p(Partition{1, 1, 1})) == Rat(1));

    // Schur functions are orthonormal
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& mu : partitions_of(n))
                CHECK(inner_product(schur(lam), schur(mu)) == (lam == mu ? Rat(1) : Rat(0)));
}

TEST_CASE("Schur functions via Jacobi-Trudi") {
    for (int n = 1; n <= 7; ++n) {
        CHECK(schur(Partition(1, n)) == SymFunc::h(n));  // one-row shape
        CHECK(schur(Partition(static_cast<size_t>(n), 1)) == SymFunc::e(n));  // one-column
    }
    CHECK(schur({2, 1}) == SymFunc::h(2) * SymFunc::h(1) - SymFunc::h(3));

    // Pieri: h_2 h_2 = s_4 + s_31 + s_22
    CHECK(SymFunc::h(2) * SymFunc::h(2) == schur({4}) + schur({3, 1}) + schur({2, 2}));
}

TEST_CASE("plethysm basics") {
    CHECK(plethysm(SymFunc::p(2), SymFunc::p(3)) == SymFunc::p(6));
    CHECK(plethysm(SymFunc::p(2), SymFunc::h(2)).coeff({2, 2}) == Rat(1, 2));
    CHECK(plethysm(SymFunc::p(2), SymFunc::h(2)).coeff({4}) == Rat(1, 2));

    std::mt19937 rng(11);
    for (int iter = 0; iter < 20; ++iter) {
        const SymFunc f = random_sym(rng, 1 + static_cast<int>(rng() % 5));
        CHECK(plethysm(f, SymFunc::p(1)) == f);
        CHECK(plethysm(SymFunc::p(1), f) == f);
    }

    // classical degree-4 plethysms
    CHECK(plethysm(SymFunc::h(2), SymFunc::h(2)) == schur({4}) + schur({2, 2}));
    CHECK(plethysm(SymFunc::e(2), SymFunc::h(2)) == schur({3, 1}));
    CHECK(plethysm(SymFunc::h(2), SymFunc::e(2)) == schur({2, 2}) + schur({1, 1, 1, 1}));

    // h_n o (f + g) = sum_k (h_k o f)(h_{n-k} o g)
    for (int iter = 0; iter < 5; ++iter) {
        const SymFunc f = random_sym(rng, 2);
        const SymFunc g = random_sym(rng, 3);
        for (int n = 1; n <= 3; ++n) {
            SymFunc rhs;
            for (int k = 0; k <= n; ++k)
                rhs += plethysm(SymFunc::h(k), f) * plethysm(SymFunc::h(n - k), g);
            CHECK(plethysm(SymFunc::h(n), f + g) == rhs);
        }
    }
}

TEST_CASE("plethystic exponential") {
    // Exp(p_1) = sum h_r
    for (int d = 0; d <= 6; ++d) {
        SymFunc expect;
        for (int r = 0; r <= d; ++r) expect += SymFunc::h(r);
        CHECK(exp_plethystic(SymFunc::p(1), d) == expect);
    }

    // Exp(f + g) = Exp(f) Exp(g)
    std::mt19937 rng(13);
    for (int iter = 0; iter < 10; ++iter) {
        const SymFunc f = random_sym(rng, 1 + static_cast<int>(rng() % 3));
        const SymFunc g = random_sym(rng, 1 + static_cast<int>(rng() % 3));
        const int d = 5;
        CHECK(exp_plethystic(f + g, d) ==
              (exp_plethystic(f, d) * exp_plethystic(g, d)).truncate_degree(d));
    }
}

TEST_CASE("subgroup closure and permutation characters") {
    // adjacent transpositions generate S_n
    for (int n = 2; n <= 5; ++n) {
        std::vector<Perm> gens;
        for (int i = 0; i + 1 < n; ++i) {
            Perm t = perm_identity(n);
            std::swap(t[i], t[i + 1]);
            gens.push_back(t);
        }
        CHECK(Int(subgroup_closure(gens, n).size()) == factorial(static_cast<unsigned>(n)));
        CHECK(ch_of_subgroup(gens, n) == SymFunc::h(n));
    }

    // cyclic group of order 4
    const Perm c4{1, 2, 3, 0};
    CHECK(subgroup_closure({c4}, 4).size() == 4);
    SymFunc expect;
    expect.add_term({1, 1, 1, 1}, Rat(1, 4));
    expect.add_term({2, 2}, Rat(1, 4));
    expect.add_term({4}, Rat(1, 2));
    CHECK(ch_of_subgroup({c4}, 4) == expect);

    // trivial group: regular representation character p_1^n
    CHECK(ch_of_subgroup({}, 3) == SymFunc::p(Partition{1, 1, 1}));
}

TEST_CASE("graded symmetric functions") {
    GradedSymFunc g = GradedSymFunc::from(SymFunc::p(1), 1);  // p_1 t
    CHECK(g.t_degree() == 1);
    CHECK(g.t_coeff(0).is_zero());
    CHECK(g.t_coeff(1) == SymFunc::p(1));

    // p_r substitution doubles the grading
    const GradedSymFunc p2g = plethysm_p_graded(2, g);
    CHECK(p2g.t_degree() == 2);
    CHECK(p2g.t_coeff(2) == SymFunc::p(2));

    // on data concentrated in one t-degree, plethysm acts blockwise
    const GradedSymFunc h2g = plethysm_graded(SymFunc::h(2), g);
    CHECK(h2g.t_degree() == 2);
    CHECK(h2g.t_coeff(2) == SymFunc::h(2));
    CHECK(h2g.t_coeff(1).is_zero());

    // product and shift
    const GradedSymFunc prod = g * g;
    CHECK(prod.t_coeff(2) == SymFunc::p(1) * SymFunc::p(1));
    CHECK(g.shift_t(3).t_coeff(4) == SymFunc::p(1));

    // mixed grading: h_2 o (p_1 + p_1 t) = h_2 + p_1^2 t + h_2 t^2
    GradedSymFunc mixed;
    mixed.coef = {SymFunc::p(1), SymFunc::p(1)};
    const GradedSymFunc out = plethysm_graded(SymFunc::h(2), mixed);
    CHECK(out.t_coeff(0) == SymFunc::h(2));
    CHECK(out.t_coeff(1) == SymFunc::p(1) * SymFunc::p(1));
    CHECK(out.t_coeff(2) == SymFunc::h(2));
}
