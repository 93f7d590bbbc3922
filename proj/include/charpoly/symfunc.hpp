#pragma once

#include "charpoly/partitions.hpp"
#include "charpoly/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace charpoly {

// A symmetric function with rational coefficients, stored in the power-sum
// basis: terms[lambda] is the coefficient of p_lambda.  The empty partition
// indexes the constant term.  Always finitely supported.
struct SymFunc {
    std::map<Partition, Rat> terms;

    static SymFunc zero() { return {}; }
    static SymFunc one();                    // p_{} with coefficient 1
    static SymFunc p(const Partition& lam);  // p_lambda
    static SymFunc p(int n);                 // p_n, n >= 1
    static SymFunc h(int n);                 // complete homogeneous, h_0 = 1
    static SymFunc e(int n);                 // elementary, e_0 = 1

    bool is_zero() const { return terms.empty(); }
    Rat coeff(const Partition& lam) const;
    void set_coeff(const Partition& lam, const Rat& c);
    void add_term(const Partition& lam, const Rat& c);

    bool operator==(const SymFunc& o) const { return terms == o.terms; }
    bool operator!=(const SymFunc& o) const { return !(*this == o); }

    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc operator*(const SymFunc& o) const;
    SymFunc operator*(const Rat& s) const;
    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);

    // -1 for the zero function.
    int max_degree() const;
    int min_degree() const;
    bool is_homogeneous() const;
    SymFunc homogeneous_component(int d) const;
    SymFunc truncate_degree(int max_deg) const;

    std::string to_string() const;  // e.g. "1/2*p[1,1] + 1/2*p[2]"
};

// Involution omega: p_n -> (-1)^(n-1) p_n, so p_lambda picks up
// (-1)^(|lambda| - length(lambda)).  Swaps h_n <-> e_n.
SymFunc omega(const SymFunc& f);

// Hall inner product: <p_lambda, p_mu> = z_lambda delta_{lambda,mu}.
Rat inner_product(const SymFunc& f, const SymFunc& g);

// Plethysm f[g], computed through the power-sum expansion of f:
//   p_n o g  multiplies every part of g's indexing partitions by n,
//   and the operation is linear and multiplicative in f.
SymFunc plethysm(const SymFunc& f, const SymFunc& g);

// Schur function via the Jacobi-Trudi determinant det(h_{lambda_i - i + j}).
SymFunc schur(const Partition& lam);

// Plethystic exponential truncated to total degree <= max_deg:
//   Exp(f) = sum_{r >= 0} h_r o f.
// Requires f to have zero constant term (otherwise the sum diverges).
SymFunc exp_plethystic(const SymFunc& f, int max_deg);

// Frobenius characteristic of the permutation action of the subgroup
// generated by gens on itself... more precisely of C[S_n/H]-type data:
//   ch U_H = (1/|H|) sum_{sigma in H} p_{cycle type(sigma)}.
// Generators are permutations of {0..n-1}; the closure is computed by
// breadth-first multiplication and must not exceed max_order elements.
SymFunc ch_of_subgroup(const std::vector<Perm>& gens, int n, size_t max_order = 1000000);

// Closure of the generated subgroup (used by tests and by ch_of_subgroup).
std::vector<Perm> subgroup_closure(const std::vector<Perm>& gens, int n,
                                   size_t max_order = 1000000);

// ---------------------------------------------------------------------------
// Symmetric functions graded by an auxiliary variable t (cohomological
// grading): coef[k] is the coefficient of t^k.
struct GradedSymFunc {
    std::vector<SymFunc> coef;

    static GradedSymFunc zero() { return {}; }
    static GradedSymFunc from(const SymFunc& f, int t_power = 0);

    void normalize();  // drop trailing zero grades
    bool is_zero() const;
    int t_degree() const { return static_cast<int>(coef.size()) - 1; }
    SymFunc t_coeff(int k) const;

    bool operator==(const GradedSymFunc& o) const;

    GradedSymFunc operator+(const GradedSymFunc& o) const;
    GradedSymFunc operator-(const GradedSymFunc& o) const;
    GradedSymFunc operator*(const GradedSymFunc& o) const;
    GradedSymFunc operator*(const Rat& s) const;
    GradedSymFunc& operator+=(const GradedSymFunc& o);

    GradedSymFunc shift_t(int k) const;  // multiply by t^k
};

// p_r o (sum_k G_k t^k) = sum_k (p_r o G_k) t^{rk}   (t itself is degree-1
// "plethystic" data: substituting into p_r raises it to the r-th power).
GradedSymFunc plethysm_p_graded(int r, const GradedSymFunc& g);

// f o g for finitely supported f, via the power-sum expansion of f.
GradedSymFunc plethysm_graded(const SymFunc& f, const GradedSymFunc& g);

}  // namespace charpoly
