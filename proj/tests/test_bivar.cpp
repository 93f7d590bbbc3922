#include <doctest.h>

#include <random>
#include <stdexcept>

#include "charpoly/bivar.hpp"
#include "charpoly/json_io.hpp"

using namespace charpoly;

namespace {

BivarPoly random_bivar(std::mt19937& rng, int max_deg) {
    BivarPoly f;
    const int nterms = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < nterms; ++i) {
        const int me = static_cast<int>(rng() % (max_deg + 1));
        const int te = static_cast<int>(rng() % (max_deg + 1));
        const int num = static_cast<int>(rng() % 9) - 4;
        const int den = 1 + static_cast<int>(rng() % 4);
        if (num != 0) f.add_term(me, te, Rat(num, den));
    }
    return f;
}

}  // namespace

TEST_CASE("construction and accessors") {
    BivarPoly f = BivarPoly::monomial(2, 1, Rat(3));  // 3 m^2 t
    CHECK(f.coeff(2, 1) == Rat(3));
    CHECK(f.coeff(1, 2) == Rat(0));
    CHECK(f.m_degree() == 2);
    CHECK(f.t_degree() == 1);
    CHECK(BivarPoly::zero().m_degree() == -1);
    CHECK(BivarPoly::zero().t_degree() == -1);

    f.add_term(2, 1, Rat(-3));  // cancels to zero: term must disappear
    CHECK(f.is_zero());

    const UniPoly g({Rat(1), Rat(2)});  // 1 + 2x
    CHECK(BivarPoly::from_m_poly(g, 3).coeff(1, 3) == Rat(2));
    CHECK(BivarPoly::from_t_poly(g, 3).coeff(3, 1) == Rat(2));
    CHECK(BivarPoly::m_var() == BivarPoly::monomial(1, 0, Rat(1)));
    CHECK(BivarPoly::t_var() == BivarPoly::monomial(0, 1, Rat(1)));
}

TEST_CASE("arithmetic agrees with evaluation") {
    std::mt19937 rng(42);
    for (int iter = 0; iter < 50; ++iter) {
        const BivarPoly a = random_bivar(rng, 4);
        const BivarPoly b = random_bivar(rng, 4);
        const Rat m0(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 2));
        const Rat t0(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 2));
        CHECK((a + b).eval(m0, t0) == a.eval(m0, t0) + b.eval(m0, t0));
        CHECK((a - b).eval(m0, t0) == a.eval(m0, t0) - b.eval(m0, t0));
        CHECK((a * b).eval(m0, t0) == a.eval(m0, t0) * b.eval(m0, t0));
        CHECK((a * Rat(5, 3)).eval(m0, t0) == a.eval(m0, t0) * Rat(5, 3));
        CHECK(a.eval_t(t0).eval(m0) == a.eval(m0, t0));
        CHECK(a.eval_m(m0).eval(t0) == a.eval(m0, t0));
        CHECK(a.negate_m().eval(m0, t0) == a.eval(-m0, t0));
        CHECK(a.subst_t_power(2).eval(m0, t0) == a.eval(m0, t0 * t0));
    }
}

TEST_CASE("coefficient extraction") {
    std::mt19937 rng(43);
    for (int iter = 0; iter < 30; ++iter) {
        const BivarPoly a = random_bivar(rng, 4);
        BivarPoly rebuilt_t, rebuilt_m;
        for (int k = 0; k <= a.t_degree(); ++k)
            rebuilt_t += BivarPoly::from_m_poly(a.t_coeff_poly(k), k);
        for (int j = 0; j <= a.m_degree(); ++j)
            rebuilt_m += BivarPoly::from_t_poly(a.m_coeff_poly(j), j);
        CHECK(rebuilt_t == a);
        CHECK(rebuilt_m == a);
    }
}

TEST_CASE("palindromic detection") {
    // Gaussian binomials are palindromic in t
    CHECK(BivarPoly::from_t_poly(gaussian_binomial(4, 2)).is_palindromic_in_t());
    CHECK(BivarPoly::from_t_poly(gaussian_binomial(6, 3)).is_palindromic_in_t());

    BivarPoly f;
    f.add_term(0, 0, Rat(1));
    f.add_term(1, 1, Rat(5));
    f.add_term(0, 2, Rat(1));
    CHECK(f.is_palindromic_in_t());  // 1 + 5mt + t^2
    f.add_term(0, 2, Rat(1));
    CHECK_FALSE(f.is_palindromic_in_t());  // 1 + 5mt + 2t^2
}

TEST_CASE("exact division") {
    std::mt19937 rng(44);
    for (int iter = 0; iter < 40; ++iter) {
        const BivarPoly q = random_bivar(rng, 3);
        BivarPoly b = random_bivar(rng, 3);
        if (b.is_zero()) b = BivarPoly::m_var();
        CHECK(divide_exact(q * b, b) == q);
    }
    // 1 + t does not divide m t
    CHECK_THROWS_AS(
        divide_exact(BivarPoly::monomial(1, 1, Rat(1)),
                     BivarPoly::constant(Rat(1)) + BivarPoly::t_var()),
        std::domain_error);
    CHECK_THROWS_AS(divide_exact(BivarPoly::m_var(), BivarPoly::zero()), std::domain_error);
}

TEST_CASE("serialized form follows the canonical term order") {
    std::mt19937 rng(45);
    for (int iter = 0; iter < 20; ++iter) {
        const BivarPoly a = random_bivar(rng, 5);
        const nlohmann::json j = bivar_to_json(a);
        REQUIRE(j.is_array());
        // strictly increasing (t, m) keys, fully reduced entries
        for (size_t i = 0; i < j.size(); ++i) {
            CHECK(j[i]["den"].get<std::string>().front() != '-');
            CHECK(j[i]["num"].get<std::string>() != "0");
            if (i > 0) {
                const int tp = j[i - 1]["t"].get<int>(), mp = j[i - 1]["m"].get<int>();
                const int tc = j[i]["t"].get<int>(), mc = j[i]["m"].get<int>();
                CHECK((tc > tp || (tc == tp && mc > mp)));
            }
        }
        CHECK(bivar_from_json(j) == a);  // bit-exact round trip
    }
}

TEST_CASE("serialized form validation") {
    using nlohmann::json;
    CHECK(bivar_from_json(json::array()) == BivarPoly::zero());

    // not reduced
    json bad1 = json::array({{{"m", 1}, {"t", 0}, {"num", "2"}, {"den", "4"}}});
    CHECK_THROWS_AS(bivar_from_json(bad1), std::invalid_argument);
    // zero denominator
    json bad2 = json::array({{{"m", 1}, {"t", 0}, {"num", "1"}, {"den", "0"}}});
    CHECK_THROWS_AS(bivar_from_json(bad2), std::invalid_argument);
    // negative denominator
    json bad3 = json::array({{{"m", 1}, {"t", 0}, {"num", "1"}, {"den", "-2"}}});
    CHECK_THROWS_AS(bivar_from_json(bad3), std::invalid_argument);
    // zero coefficient stored
    json bad4 = json::array({{{"m", 1}, {"t", 0}, {"num", "0"}, {"den", "1"}}});
    CHECK_THROWS_AS(bivar_from_json(bad4), std::invalid_argument);
    // duplicate exponent pair
    json bad5 = json::array({{{"m", 1}, {"t", 0}, {"num", "1"}, {"den", "1"}},
                             {{"m", 1}, {"t", 0}, {"num", "2"}, {"den", "1"}}});
    CHECK_THROWS_AS(bivar_from_json(bad5), std::invalid_argument);
    // nonsense numeral
    json bad6 = json::array({{{"m", 1}, {"t", 0}, {"num", "1.5"}, {"den", "1"}}});
    CHECK_THROWS_AS(bivar_from_json(bad6), std::invalid_argument);
    // negative exponent
    json bad7 = json::array({{{"m", -1}, {"t", 0}, {"num", "1"}, {"den", "1"}}});
    CHECK_THROWS_AS(bivar_from_json(bad7), std::invalid_argument);
}

TEST_CASE("rational and univariate serialization") {
    for (const Rat& r : {Rat(0), Rat(-7, 3), Rat(22), Rat(1000000007, 998244353)}) {
        CHECK(rat_from_json(rat_to_json(r)) == r);
    }
    const UniPoly f({Rat(1, 6), Rat(0), Rat(-1, 2), Rat(1)});
    CHECK(unipoly_m_from_json(unipoly_m_to_json(f)) == f);
    CHECK(unipoly_t_from_json(unipoly_t_to_json(f)) == f);
    // an m-polynomial is not a valid t-polynomial payload
    CHECK_THROWS_AS(unipoly_t_from_json(unipoly_m_to_json(UniPoly::variable())),
                    std::invalid_argument);
}

TEST_CASE("decimal rendering of rationals") {
    CHECK(rat_to_decimal(Rat(1, 2), 3) == "0.500");
    CHECK(rat_to_decimal(Rat(-1, 3), 5) == "-0.33333");
    CHECK(rat_to_decimal(Rat(7), 2) == "7.00");
}
