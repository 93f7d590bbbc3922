#include <doctest.h>

#include <random>
#include <stdexcept>

#include "charpoly/geometry.hpp"
#include "charpoly/logconcavity.hpp"

using namespace charpoly;

namespace {

std::vector<Rat> rats(std::initializer_list<int> xs) {
    std::vector<Rat> out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

// plain reference predicate: every interior nonzero entry satisfies the
// squared inequality, zeros handled exactly like the library contract
bool naive_pass(const std::vector<Rat>& a) {
    for (size_t k = 1; k + 1 < a.size(); ++k) {
        if (a[k] == 0) continue;
        if (rat_abs(a[k]) * rat_abs(a[k]) < rat_abs(a[k - 1]) * rat_abs(a[k + 1])) return false;
    }
    return true;
}

bool naive_internal_zero(const std::vector<Rat>& a) {
    size_t lo = a.size(), hi = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) {
            lo = std::min(lo, i);
            hi = std::max(hi, i);
        }
    if (lo >= hi) return false;
    for (size_t i = lo; i <= hi; ++i)
        if (a[i] == 0) return true;
    return false;
}

}  // namespace

TEST_CASE("sequence verdicts") {
    CHECK(is_logconcave(rats({1, 2, 2, 1})).ok());
    CHECK(is_logconcave(rats({1, 4, 6, 4, 1})).ok());
    CHECK(is_logconcave(rats({})).ok());
    CHECK(is_logconcave(rats({5})).ok());
    CHECK(is_logconcave(rats({0, 0, 0})).ok());

    // strict failure in the middle
    const LCReport bad = is_logconcave(rats({1, 1, 2, 1, 1}));
    CHECK_FALSE(bad.pass);
    CHECK(bad.violation_index == 1);
    CHECK_FALSE(bad.ok());

    // the inequality is checked on absolute values
    CHECK(is_logconcave(rats({1, -2, 2, -1})).ok());
    CHECK_FALSE(is_logconcave(rats({1, -1, 2, 1, -1})).pass);

    // an internal zero passes the inequality but trips the flag
    const LCReport gap = is_logconcave(rats({1, 0, 1}));
    CHECK(gap.pass);
    CHECK(gap.internal_zeros);
    CHECK_FALSE(gap.ok());

    // leading and trailing zeros are harmless
    CHECK(is_logconcave(rats({0, 1, 2, 1, 0})).ok());

    // flag checking can be disabled
    CHECK(is_logconcave(rats({1, 0, 1}), false).ok());
}

TEST_CASE("sequence verdicts against the naive reference") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 300; ++iter) {
        std::vector<Rat> a;
        const int len = static_cast<int>(rng() % 7);
        for (int i = 0; i < len; ++i) a.emplace_back(static_cast<int>(rng() % 5) - 1);
        const LCReport r = is_logconcave(a);
        CHECK(r.pass == naive_pass(a));
        CHECK(r.internal_zeros == naive_internal_zero(a));
    }
}

TEST_CASE("log-concavity is preserved by convolution of positive sequences") {
    // binomial rows are log-concave, and so are their products' coefficients
    std::mt19937 rng(100);
    for (int iter = 0; iter < 20; ++iter) {
        UniPoly f = UniPoly::constant(Rat(1));
        const int factors = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < factors; ++i)
            f *= UniPoly({Rat(1 + static_cast<int>(rng() % 4)), Rat(1)});
        CHECK(is_logconcave(f.coeffs).ok());  // real-rooted => log-concave
    }
}

TEST_CASE("ultra log-concavity") {
    // (1,4,6,4,1) normalized by binomials is constant: ultra log-concave
    CHECK(is_ultra_logconcave(rats({1, 4, 6, 4, 1}), 4).ok());
    // (1,1,1) is log-concave but not ultra: normalized (1, 1/2, 1)
    CHECK(is_logconcave(rats({1, 1, 1})).ok());
    CHECK_FALSE(is_ultra_logconcave(rats({1, 1, 1}), 2).pass);
    CHECK_THROWS_AS(is_ultra_logconcave(rats({1, 1}), 3), std::invalid_argument);
}

TEST_CASE("bivariate checks on pinned examples") {
    // the five-point marked-curve polynomial fails in lengths 1 and 2
    const M0nTable table = compute_m0n_table(6);
    const BivarLC p5 = check_bivariate(table.P(5), "P_5");
    REQUIRE(p5.degree_in_length.size() >= 3);
    CHECK(p5.degree_in_length[1].pass);            // (1/5, 0, 1/5)
    CHECK(p5.degree_in_length[1].internal_zeros);  // ... but with the gap
    CHECK_FALSE(p5.degree_in_length[1].ok());
    CHECK_FALSE(p5.degree_in_length[2].pass);  // (5/12, 1/4, 5/12)
    CHECK(p5.degree_in_length[2].violation_index == 1);
    // everything else about it is fine
    CHECK(p5.length_at_t.ok());
    CHECK(p5.degree_at_m.ok());
    for (const auto& r : p5.length_in_degree) CHECK(r.ok());

    // the six-input polynomial fails plainly in length 1:
    // (1/6, 1/6, 1/3, 1/6, 1/6)
    const BivarLC q6 = check_bivariate(table.Q(6), "Q_6");
    CHECK(table.Q(6).m_coeff_poly(1) ==
          UniPoly({Rat(1, 6), Rat(1, 6), Rat(1, 3), Rat(1, 6), Rat(1, 6)}));
    CHECK_FALSE(q6.degree_in_length[1].pass);
    CHECK(q6.degree_in_length[1].violation_index == 1);

    // the odd polygon space at n = 7 fails in degree at m = 1
    const BivarLC y7 = check_bivariate(git_char_poly(7), "Y_7");
    CHECK_FALSE(y7.degree_at_m.pass);  // (1,1,2,1,1) at k = 1
    CHECK(y7.degree_at_m.violation_index == 1);

    // subjects and notions are propagated
    CHECK(y7.degree_at_m.subject == "Y_7");
    CHECK(p5.degree_in_length[1].notion == "degree@length-1");
}

TEST_CASE("sweep over the recursive tables") {
    const M0nTable table = compute_m0n_table(12);
    const auto reports = verify_m0n_conjecture(table, 12);
    CHECK(!reports.empty());
    for (const auto& r : reports) CHECK(r.ok());
    CHECK_THROWS_AS(verify_m0n_conjecture(table, 13), std::invalid_argument);

    // the length threshold of the sweep
    CHECK(conjecture_min_length(3) == 4);   // ceil(sqrt 3) = 2
    CHECK(conjecture_min_length(4) == 4);
    CHECK(conjecture_min_length(5) == 5);   // ceil(sqrt 5) = 3
    CHECK(conjecture_min_length(9) == 5);
    CHECK(conjecture_min_length(10) == 6);  // ceil(sqrt 10) = 4
    CHECK(conjecture_min_length(16) == 6);
    CHECK(conjecture_min_length(17) == 7);
}

TEST_CASE("Stirling numbers and limiting constants") {
    CHECK(stirling_c(0, 0) == 1);
    CHECK(stirling_c(4, 2) == 11);
    CHECK(stirling_c(5, 1) == 24);  // (n-1)!
    CHECK(stirling_c(6, 6) == 1);
    CHECK(stirling_c(4, 0) == 0);
    // row sums: sum_j c(n, j) = n!
    for (int n = 1; n <= 10; ++n) {
        Int total = 0;
        for (int j = 0; j <= n; ++j) total += stirling_c(n, j);
        CHECK(total == factorial(static_cast<unsigned>(n)));
    }

    // c_k = (k+1)^{k-1}/k!, d_k = (k+1)^{k-2}/k!
    CHECK((cayley_constants(0) == std::pair<Rat, Rat>{Rat(1), Rat(1)}));
    CHECK((cayley_constants(1) == std::pair<Rat, Rat>{Rat(1), Rat(1, 2)}));
    CHECK((cayley_constants(2) == std::pair<Rat, Rat>{Rat(3, 2), Rat(1, 2)}));
    CHECK((cayley_constants(3) == std::pair<Rat, Rat>{Rat(8, 3), Rat(2, 3)}));
}

TEST_CASE("trend reports") {
    const M0nTable table = compute_m0n_table(12);

    // k = 0 value rows at m0 = 1 are exactly 1: Q_n,0(1) = 1 and the
    // normalization is n^0 = 1
    const TrendReport v0 = asymptotic_value_report(table, Side::Q, 0, 1);
    CHECK(v0.limit == Rat(1));
    REQUIRE(!v0.rows.empty());
    CHECK(v0.rows.front().n == 3);
    CHECK(v0.rows.back().n == 12);
    for (const auto& row : v0.rows) CHECK(row.ratio == Rat(1));

    // k = 0 coefficient rows at j = 0 are exactly 1: the top coefficient of
    // Q_n,0 = <<m,n>> is 1/n! and the normalization is c(n,n)/n! = 1/n!
    const TrendReport c0 = asymptotic_coeff_report(table, Side::Q, 0, 0);
    for (const auto& row : c0.rows) CHECK(row.ratio == Rat(1));

    // k = 1 values at m0 = 1: Q_n,1(1) = n - 2, ratio (n-2)/n increasing to 1
    const TrendReport v1 = asymptotic_value_report(table, Side::Q, 1, 1);
    CHECK(v1.limit == Rat(1));
    for (const auto& row : v1.rows) {
        CHECK(row.value == Rat(row.n - 2));
        CHECK(row.ratio == Rat(row.n - 2, row.n));
        CHECK(row.prediction == Rat(row.n));
    }

    // prediction * ratio == value * limit on every row of any report
    for (int k : {0, 1, 2})
        for (Side s : {Side::Q, Side::P}) {
            const TrendReport rep = asymptotic_value_report(table, s, k, 1);
            for (const auto& row : rep.rows)
                CHECK(row.prediction * row.ratio == row.value * rep.limit);
            const TrendReport repc = asymptotic_coeff_report(table, s, k, 0);
            for (const auto& row : repc.rows)
                CHECK(row.prediction * row.ratio == row.value * repc.limit);
        }

    // the value sequence in k is eventually log-concave at m0 = 1
    CHECK(value_lc_tail_start(table, Side::Q, 1, 1) >= 3);
}
