#include "charpoly/m0n.hpp"

#include "charpoly/partitions.hpp"

#include <map>
#include <stdexcept>
#include <thread>

namespace charpoly {

BivarPoly h_apply_bivar(int r, const BivarPoly& f) {
    if (r < 0) throw std::invalid_argument("h_apply_bivar: negative r");
    BivarPoly out;
    for (const auto& mu : partitions_of(r)) {
        BivarPoly prod = BivarPoly::constant(1);
        for (int part : mu) prod = prod * f.subst_t_power(part);
        out += prod * (Rat(1) / Rat(z_of(mu)));
    }
    return out;
}

namespace {

// t + t^2 + ... + t^top (zero when top < 1)
BivarPoly t_range_sum(int top) {
    BivarPoly out;
    for (int i = 1; i <= top; ++i) out.add_term(0, i, Rat(1));
    return out;
}

struct LevelSums {
    BivarPoly q_sum;
    BivarPoly qplus_sum;
};

}  // namespace

M0nTable compute_m0n_table(int max_n, int num_threads, int exp_check_upto) {
    if (max_n < 0) throw std::invalid_argument("compute_m0n_table: negative max_n");
    if (num_threads <= 0) {
        unsigned hc = std::thread::hardware_concurrency();
        num_threads = hc == 0 ? 1 : static_cast<int>(hc);
    }

    M0nTable table;
    table.max_n = max_n;
    table.qplus.assign(static_cast<size_t>(max_n) + 1, BivarPoly());
    table.q.assign(static_cast<size_t>(max_n) + 1, BivarPoly());
    table.p.assign(static_cast<size_t>(max_n) + 1, BivarPoly());

    table.q[0] = BivarPoly::constant(1);
    table.p[0] = BivarPoly::constant(1);
    if (max_n >= 1) {
        table.qplus[1] = BivarPoly::m_var();
        table.q[1] = BivarPoly::m_var();
        table.p[1] = BivarPoly::m_var();
    }

    std::map<std::pair<int, int>, BivarPoly> h_memo;  // (r, a) -> h_r o qplus[a]
    auto h_on_qplus = [&](int r, int a) -> const BivarPoly& {
        auto key = std::make_pair(r, a);
        auto it = h_memo.find(key);
        if (it == h_memo.end())
            it = h_memo.emplace(key, h_apply_bivar(r, table.qplus[static_cast<size_t>(a)])).first;
        return it->second;
    };

    for (int n = 2; n <= max_n; ++n) {
        auto lams = partitions_of(n);

        // memoize sequentially so the parallel phase only reads
        for (const auto& lam : lams)
            for (auto [part, mult] : part_multiplicities(lam))
                if (part < n) h_on_qplus(mult, part);

        auto eval_range = [&](size_t lo, size_t hi, LevelSums& out) {
            for (size_t idx = lo; idx < hi; ++idx) {
                const Partition& lam = lams[idx];
                int len = partition_length(lam);
                if (lam[0] == n) continue;  // lambda = (n): length-1 t-sum is
                                            // empty and q picks it up below
                BivarPoly prod = BivarPoly::constant(1);
                for (auto [part, mult] : part_multiplicities(lam)) {
                    // every (mult, part) pair was memoized before the parallel
                    // phase, so this lookup never mutates the shared map
                    const BivarPoly& factor = h_on_qplus(mult, part);
                    if (factor.is_zero()) {
                        prod = BivarPoly();
                        break;
                    }
                    prod = prod * factor;
                }
                if (prod.is_zero()) continue;
                out.q_sum += prod;
                if (len >= 3) out.qplus_sum += prod * t_range_sum(len - 2);
            }
        };

        int workers = std::min<int>(num_threads, static_cast<int>(lams.size()));
        workers = std::max(workers, 1);
        std::vector<LevelSums> partial(static_cast<size_t>(workers));
        if (workers == 1) {
            eval_range(0, lams.size(), partial[0]);
        } else {
            std::vector<std::thread> pool;
            size_t chunk = (lams.size() + static_cast<size_t>(workers) - 1) /
                           static_cast<size_t>(workers);
            for (int w = 0; w < workers; ++w) {
                size_t lo = static_cast<size_t>(w) * chunk;
                size_t hi = std::min(lams.size(), lo + chunk);
                if (lo >= hi) break;
                pool.emplace_back(eval_range, lo, hi, std::ref(partial[static_cast<size_t>(w)]));
            }
            for (auto& th : pool) th.join();
        }
        BivarPoly q_sum, qplus_sum;
        for (const auto& part : partial) {  // fixed merge order keeps output
            q_sum += part.q_sum;            // independent of thread count
            qplus_sum += part.qplus_sum;
        }

        table.qplus[static_cast<size_t>(n)] = qplus_sum;
        // lambda = (n) contributes h_1 o qplus[n] = qplus[n] to q[n]
        table.q[static_cast<size_t>(n)] = q_sum + qplus_sum;

        if (n == 2) {
            table.p[2] = table.q[2];
        } else {
            BivarPoly pair_sum;
            for (int h = 2; h <= n - 2; ++h)
                pair_sum += table.q[static_cast<size_t>(h)] * table.q[static_cast<size_t>(n - h)];
            if (n % 2 == 0) pair_sum -= table.q[static_cast<size_t>(n / 2)].subst_t_power(2);
            BivarPoly numerator =
                table.q[static_cast<size_t>(n)] - pair_sum * BivarPoly::monomial(0, 1, Rat(1, 2));
            BivarPoly one_plus_t = BivarPoly::constant(1) + BivarPoly::t_var();
            table.p[static_cast<size_t>(n)] = divide_exact(numerator, one_plus_t);
        }
    }

    int check_upto = exp_check_upto;
    if (check_upto < 0) check_upto = std::min(max_n, 14);
    check_upto = std::min(check_upto, max_n);
    if (check_upto >= 1) {
        QSeries qp = qplus_series(table, check_upto);
        QSeries expanded = exp_plethystic_series(qp);
        for (int n = 0; n <= check_upto; ++n) {
            if (expanded.q_coeff(n) != table.q[static_cast<size_t>(n)])
                throw std::logic_error(
                    "compute_m0n_table: recursion and exponential form disagree at n=" +
                    std::to_string(n));
        }
    }

    return table;
}

QSeries qplus_series(const M0nTable& table, int truncation) {
    if (truncation > table.max_n)
        throw std::invalid_argument("qplus_series: truncation beyond table");
    QSeries s(truncation);
    for (int n = 1; n <= truncation; ++n)
        s.set_q_coeff(n, table.qplus[static_cast<size_t>(n)]);
    return s;
}

ExpIdentityReport exp_identity_check(const M0nTable& table, int upto) {
    int N = upto < 0 ? table.max_n : upto;
    if (N > table.max_n) throw std::invalid_argument("exp_identity_check: beyond table");
    QSeries qp = qplus_series(table, N);
    BivarPoly t = BivarPoly::t_var();
    BivarPoly m = BivarPoly::m_var();
    BivarPoly one = BivarPoly::constant(1);

    QSeries lhs = exp_plethystic_series(qp * t);
    QSeries rhs = exp_plethystic_series(qp) * (t * t);
    // (1 - t)(1 + t + m q t) = (1 - t^2) + (m t - m t^2) q
    QSeries affine = QSeries::term(one - t * t, 0, N) + QSeries::term(m * t - m * (t * t), 1, N);
    rhs = rhs + affine;

    ExpIdentityReport rep;
    for (int j = 0; j <= N; ++j) {
        if (lhs.q_coeff(j) != rhs.q_coeff(j)) {
            rep.ok = false;
            rep.first_fail_q = j;
            break;
        }
    }
    return rep;
}

std::vector<Int> betti_numbers(const M0nTable& table, int n, Side side) {
    const BivarPoly& f = side == Side::Q ? table.Q(n) : table.P(n);
    Int nfact = factorial(static_cast<unsigned>(n));
    std::vector<Int> betti;
    int d = std::max(f.t_degree(), 0);
    for (int k = 0; k <= d; ++k) {
        Rat v = f.coeff(n, k) * Rat(nfact);
        if (!rat_is_int(v) || v < 0)
            throw std::logic_error("betti_numbers: top coefficient not a nonnegative integer");
        betti.push_back(rat_num(v));
    }
    return betti;
}

UniPoly invariant_poincare(const M0nTable& table, int n, Side side) {
    const BivarPoly& f = side == Side::Q ? table.Q(n) : table.P(n);
    return f.eval_m(Rat(1));
}

bool wallcrossing_holds(const M0nTable& table, int n) {
    if (n < 2 || n > table.max_n)
        throw std::invalid_argument("wallcrossing_holds: n out of range");
    for (int k = 0; k <= n; ++k) {
        UniPoly lhs = table.P(n).t_coeff_poly(k) + table.P(n).t_coeff_poly(k - 1);
        UniPoly rhs = table.Q(n).t_coeff_poly(k);
        for (int h = 2; h <= n - 2; ++h)
            for (int j = 0; j <= k - 1; ++j)
                rhs -= table.Q(h).t_coeff_poly(j) *
                       table.Q(n - h).t_coeff_poly(k - 1 - j) * Rat(1, 2);
        if (n % 2 == 0 && k >= 1 && (k - 1) % 2 == 0)
            rhs += table.Q(n / 2).t_coeff_poly((k - 1) / 2) * Rat(1, 2);
        if (lhs != rhs) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

namespace {

// (sum_k f_k t^k) / (1 + t), exact; throws if the division leaves a remainder
GradedSymFunc divide_one_plus_t(const GradedSymFunc& num) {
    GradedSymFunc out;
    if (num.is_zero()) return out;
    int d = num.t_degree();
    out.coef.assign(static_cast<size_t>(d) + 1, SymFunc::zero());
    SymFunc carry;  // quotient coefficient from the previous grade
    for (int k = 0; k <= d; ++k) {
        SymFunc qk = num.t_coeff(k) - carry;
        out.coef[static_cast<size_t>(k)] = qk;
        carry = qk;
    }
    if (!out.coef[static_cast<size_t>(d)].is_zero())
        throw std::logic_error("divide_one_plus_t: not divisible");
    out.normalize();
    return out;
}

}  // namespace

M0nLambdaTable compute_m0n_lambda(int max_n) {
    if (max_n < 0) throw std::invalid_argument("compute_m0n_lambda: negative max_n");
    M0nLambdaTable tab;
    tab.max_n = max_n;
    tab.qplus.assign(static_cast<size_t>(max_n) + 1, GradedSymFunc());
    tab.q.assign(static_cast<size_t>(max_n) + 1, GradedSymFunc());
    tab.p.assign(static_cast<size_t>(max_n) + 1, GradedSymFunc());

    tab.q[0] = GradedSymFunc::from(SymFunc::one());
    tab.p[0] = GradedSymFunc::from(SymFunc::one());
    if (max_n >= 1) {
        tab.qplus[1] = GradedSymFunc::from(SymFunc::p(1));
        tab.q[1] = tab.qplus[1];
        tab.p[1] = tab.qplus[1];
    }

    std::map<std::pair<int, int>, GradedSymFunc> memo;
    auto h_on = [&](int r, int a) -> const GradedSymFunc& {
        auto key = std::make_pair(r, a);
        auto it = memo.find(key);
        if (it == memo.end())
            it = memo.emplace(key, plethysm_graded(SymFunc::h(r), tab.qplus[static_cast<size_t>(a)]))
                     .first;
        return it->second;
    };

    for (int n = 2; n <= max_n; ++n) {
        GradedSymFunc q_sum, qplus_sum;
        for (const auto& lam : partitions_of(n)) {
            if (lam[0] == n) continue;
            GradedSymFunc prod = GradedSymFunc::from(SymFunc::one());
            bool dead = false;
            for (auto [part, mult] : part_multiplicities(lam)) {
                const GradedSymFunc& f = h_on(mult, part);
                if (f.is_zero()) {
                    dead = true;
                    break;
                }
                prod = prod * f;
            }
            if (dead) continue;
            q_sum += prod;
            int len = partition_length(lam);
            for (int i = 1; i <= len - 2; ++i) qplus_sum += prod.shift_t(i);
        }
        tab.qplus[static_cast<size_t>(n)] = qplus_sum;
        tab.q[static_cast<size_t>(n)] = q_sum + qplus_sum;

        if (n == 2) {
            tab.p[2] = tab.q[2];
            continue;
        }

        // Half-sum form with the degree-doubling part substitution.
        GradedSymFunc pair_sum;
        for (int h = 2; h <= n - 2; ++h)
            pair_sum += tab.q[static_cast<size_t>(h)] * tab.q[static_cast<size_t>(n - h)];
        if (n % 2 == 0) pair_sum = pair_sum - plethysm_p_graded(2, tab.q[static_cast<size_t>(n / 2)]);
        GradedSymFunc num_half = tab.q[static_cast<size_t>(n)] - (pair_sum * Rat(1, 2)).shift_t(1);

        // Unordered-pair form with the two-row antisymmetric plethysm.
        GradedSymFunc pair_sum2;
        for (int h = 2; 2 * h < n; ++h)
            pair_sum2 += tab.q[static_cast<size_t>(h)] * tab.q[static_cast<size_t>(n - h)];
        if (n % 2 == 0) {
            SymFunc s11 = schur(Partition{1, 1});
            pair_sum2 += plethysm_graded(s11, tab.q[static_cast<size_t>(n / 2)]);
        }
        GradedSymFunc num_pair = tab.q[static_cast<size_t>(n)] - pair_sum2.shift_t(1);

        GradedSymFunc p_half = divide_one_plus_t(num_half);
        GradedSymFunc p_pair = divide_one_plus_t(num_pair);
        if (!(p_half == p_pair))
            throw std::logic_error("compute_m0n_lambda: the two recursion forms disagree at n=" +
                                   std::to_string(n));
        tab.p[static_cast<size_t>(n)] = p_half;
    }
    return tab;
}

}  // namespace charpoly
