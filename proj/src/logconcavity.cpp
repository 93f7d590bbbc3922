#include "charpoly/logconcavity.hpp"

#include <cmath>
#include <stdexcept>

namespace charpoly {

LCReport is_logconcave(const std::vector<Rat>& seq, bool check_internal_zeros,
                       const std::string& subject, const std::string& notion) {
    LCReport r;
    r.notion = notion;
    r.subject = subject;
    for (size_t k = 1; r.pass && k + 1 < seq.size(); ++k) {
        if (seq[k] == 0) continue;  // zero entries are the internal-zeros flag's job
        if (rat_abs(seq[k]) * rat_abs(seq[k]) <
            rat_abs(seq[k - 1]) * rat_abs(seq[k + 1])) {
            r.pass = false;
            r.violation_index = static_cast<int>(k);
        }
    }
    if (check_internal_zeros) {
        size_t first = seq.size(), last = 0;
        for (size_t i = 0; i < seq.size(); ++i)
            if (seq[i] != 0) {
                if (first == seq.size()) first = i;
                last = i;
            }
        for (size_t i = first; i < last && first < seq.size(); ++i)
            if (seq[i] == 0) {
                r.internal_zeros = true;
                break;
            }
    }
    return r;
}

LCReport is_ultra_logconcave(const std::vector<Rat>& seq, int n, const std::string& subject,
                             const std::string& notion) {
    if (static_cast<int>(seq.size()) != n + 1)
        throw std::invalid_argument("is_ultra_logconcave: need exactly n+1 entries");
    std::vector<Rat> normalized(seq.size());
    for (int k = 0; k <= n; ++k)
        normalized[static_cast<size_t>(k)] =
            seq[static_cast<size_t>(k)] / Rat(binomial(Int(n), static_cast<unsigned>(k)));
    return is_logconcave(normalized, true, subject, notion);
}

namespace {

std::vector<Rat> coeffs_padded(const UniPoly& f) {
    std::vector<Rat> c;
    c.reserve(static_cast<size_t>(f.degree()) + 1);
    for (int i = 0; i <= f.degree(); ++i) c.push_back(f.coeff(i));
    if (c.empty()) c.emplace_back(0);
    return c;
}

}  // namespace

BivarLC check_bivariate(const BivarPoly& A, const std::string& subject, const Rat& t0,
                        const Rat& m0) {
    BivarLC out;
    for (int k = 0; k <= A.t_degree(); ++k)
        out.length_in_degree.push_back(is_logconcave(coeffs_padded(A.t_coeff_poly(k)), true,
                                                     subject,
                                                     "length@degree-" + std::to_string(k)));
    out.length_at_t = is_logconcave(coeffs_padded(A.eval_t(t0)), true, subject,
                                    "length@t=" + rat_to_string(t0));
    for (int j = 0; j <= A.m_degree(); ++j)
        out.degree_in_length.push_back(is_logconcave(coeffs_padded(A.m_coeff_poly(j)), true,
                                                     subject,
                                                     "degree@length-" + std::to_string(j)));
    out.degree_at_m = is_logconcave(coeffs_padded(A.eval_m(m0)), true, subject,
                                    "degree@m=" + rat_to_string(m0));
    return out;
}

int conjecture_min_length(int n) {
    int s = 0;
    while (s * s < n) ++s;  // s = ceil(sqrt(n))
    return s + 2;
}

std::vector<LCReport> verify_m0n_conjecture(const M0nTable& table, int N) {
    if (N > table.max_n)
        throw std::invalid_argument("verify_m0n_conjecture: table too small");
    std::vector<LCReport> reports;
    for (int n = 3; n <= N; ++n) {
        for (Side side : {Side::P, Side::Q}) {
            const BivarPoly& A = side == Side::P ? table.P(n) : table.Q(n);
            const std::string subject =
                (side == Side::P ? "P_" : "Q_") + std::to_string(n);
            reports.push_back(is_logconcave(coeffs_padded(A.eval_t(Rat(1))), true, subject,
                                            "length@t=1"));
            for (int k = 0; k <= A.t_degree(); ++k)
                reports.push_back(is_logconcave(coeffs_padded(A.t_coeff_poly(k)), true,
                                                subject,
                                                "length@degree-" + std::to_string(k)));
            reports.push_back(is_logconcave(coeffs_padded(A.eval_m(Rat(1))), true, subject,
                                            "degree@m=1"));
            for (int l = conjecture_min_length(n); l <= A.m_degree(); ++l)
                reports.push_back(is_logconcave(coeffs_padded(A.m_coeff_poly(l)), true,
                                                subject,
                                                "degree@length-" + std::to_string(l)));
        }
    }
    return reports;
}

Int stirling_c(int n, int j) {
    if (n < 0 || j < 0 || j > n)
        throw std::invalid_argument("stirling_c: need 0 <= j <= n");
    // Row-by-row evaluation of c(i, .) from c(i-1, .).
    std::vector<Int> row{1};  // c(0, 0)
    for (int i = 1; i <= n; ++i) {
        std::vector<Int> next(static_cast<size_t>(i) + 1, Int(0));
        for (int jj = 0; jj < i; ++jj) {
            if (row[static_cast<size_t>(jj)] == 0) continue;
            next[static_cast<size_t>(jj) + 1] += row[static_cast<size_t>(jj)];
            next[static_cast<size_t>(jj)] += Int(i - 1) * row[static_cast<size_t>(jj)];
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(j)];
}

std::pair<Rat, Rat> cayley_constants(int k) {
    if (k < 0) throw std::invalid_argument("cayley_constants: k must be >= 0");
    const Rat base(k + 1);
    const Rat kfact(factorial(static_cast<unsigned>(k)));
    return {rat_pow(base, k - 1) / kfact, rat_pow(base, k - 2) / kfact};
}

namespace {

const BivarPoly& side_poly(const M0nTable& table, Side side, int n) {
    return side == Side::P ? table.P(n) : table.Q(n);
}

Rat value_at(const M0nTable& table, Side side, int n, int k, int m0) {
    return side_poly(table, side, n).t_coeff_poly(k).eval(Rat(m0));
}

}  // namespace

TrendReport asymptotic_value_report(const M0nTable& table, Side side, int k, int m0) {
    if (k < 0 || m0 < 1)
        throw std::invalid_argument("asymptotic_value_report: need k >= 0, m0 >= 1");
    TrendReport rep;
    rep.kind = "value";
    rep.side = side;
    rep.k = k;
    rep.param = m0;
    const auto [ck, dk] = cayley_constants(k);
    rep.limit = side == Side::Q ? ck : dk;
    const int power = (k + 1) * m0 - 1;
    const Rat fact(factorial(static_cast<unsigned>(power)));
    for (int n = k + 3; n <= table.max_n; ++n) {
        TrendRow row;
        row.n = n;
        row.value = value_at(table, side, n, k, m0);
        const Rat npow(int_pow(Int(n), static_cast<unsigned>(power)));
        row.prediction = rep.limit / fact * npow;
        row.ratio = row.value * fact / npow;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

TrendReport asymptotic_coeff_report(const M0nTable& table, Side side, int k, int j) {
    if (k < 0 || j < 0)
        throw std::invalid_argument("asymptotic_coeff_report: need k >= 0, j >= 0");
    TrendReport rep;
    rep.kind = "coeff";
    rep.side = side;
    rep.k = k;
    rep.param = j;
    const auto [ck, dk] = cayley_constants(k);
    rep.limit = side == Side::Q ? ck : dk;
    for (int n = std::max(j + 1, k + 3); n <= table.max_n; ++n) {
        TrendRow row;
        row.n = n;
        row.value = side_poly(table, side, n).coeff(n - j, k);
        const Rat scale = Rat(int_pow(Int(k + 1), static_cast<unsigned>(n - j))) *
                          Rat(stirling_c(n, n - j)) / Rat(factorial(static_cast<unsigned>(n)));
        row.prediction = rep.limit * scale;
        row.ratio = row.value / scale;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

int value_lc_tail_start(const M0nTable& table, Side side, int k, int m0) {
    if (k < 1 || m0 < 1)
        throw std::invalid_argument("value_lc_tail_start: need k >= 1, m0 >= 1");
    int start = -1;
    for (int n = 3; n <= table.max_n; ++n) {
        const Rat mid = value_at(table, side, n, k, m0);
        const Rat lo = value_at(table, side, n, k - 1, m0);
        const Rat hi = value_at(table, side, n, k + 1, m0);
        if (mid * mid >= lo * hi) {
            if (start < 0) start = n;
        } else {
            start = -1;
        }
    }
    return start;
}

}  // namespace charpoly
