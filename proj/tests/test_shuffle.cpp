#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "qtknots/errors.hpp"
#include "qtknots/shuffle.hpp"
#include "support.hpp"

using namespace qtknots;
using namespace qtknots::test;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

constexpr auto SYT = TableauKind::SYT;
constexpr auto ASYT = TableauKind::ASYT;

QTRat catalan_term(const char* T, int m) { return catalan_stalk_term(tableau(T, SYT), m); }
QTRat cuspidal_term(const char* T, int m) { return cuspidal_stalk_term(tableau(T, ASYT), m); }

Laurent geometric(int k) {
    Laurent s;
    for (int i = 0; i <= k; ++i) s += Laurent::monomial(i, k - i);
    return s;
}

}  // namespace

TEST_CASE("mu weights", "[shuffle]") {
    CHECK(mu_weights(SlopeData(3, 2), Rounding::floor) == std::vector<int>{1, 2});
    CHECK(mu_weights(SlopeData(3, 2), Rounding::ceiling) == std::vector<int>{2, 1});
    CHECK(mu_weights(SlopeData(3, 4), Rounding::floor) == std::vector<int>{0, 1, 1, 1});
    CHECK(mu_weights(-1, 2, Rounding::floor) == std::vector<int>{-1, 0});
}

TEST_CASE("slope validation", "[shuffle]") {
    CHECK_THROWS_AS(SlopeData(2, 4), NotCoprime);
    CHECK_THROWS_AS(SlopeData(0, 3), std::invalid_argument);
}

TEST_CASE("two-box stalk terms", "[shuffle]") {
    for (int k = 0; k <= 5; ++k) {
        const int m = 2 * k + 1;
        CAPTURE(k);
        CHECK(catalan_term("1,2", m) == mono(k, 0) / om(-1, 1));
        CHECK(catalan_term("1;2", m) == mono(0, k) / om(1, -1));
        CHECK(cuspidal_term("1,2", m) == mono(k + 1, 0) / om(-1, 1));
        CHECK(cuspidal_term("1;2", m) ==
              mono(0, k + 1) * om(1, 0) * om(1, 1) / (om(0, 1) * om(0, 2) * om(1, -1)));
        CHECK(cuspidal_term("2;1", m) == mono(0, k) * om(1, 2) / (om(0, 2) * om(0, -1)));

        SlopeData s(m, 2);
        CHECK(stalk_catalan_over_g(s, P({2})) == mono(k, 0) / om(-1, 1));
        CHECK(stalk_cuspidal_over_g(s, P({2})) == mono(k + 1, 0) / om(-1, 1));
        CHECK(c_mn_coeffs(s, Formula::syt).total().to_laurent() == geometric(k));
        CHECK(c_mn_coeffs(s, Formula::asyt).total().to_laurent() == geometric(k));
        QTRat cusp = 0, cat = 0;
        for (const auto& lam : partitions_of(2)) {
            cusp += stalk_cuspidal_over_g(s, lam);
            cat += stalk_catalan_over_g(s, lam);
        }
        CHECK(cat.to_laurent() == geometric(k));
        CHECK(cusp.to_laurent() == Laurent::q() * geometric(k));
    }
}

// The displayed values are compared as a multiset: each must equal the term of
// exactly one tableau. Labels on the displayed diagrams do not always agree with
// the per-tableau formula (see the two hand-expanded cases further down).
static void check_bijection(const std::vector<QTRat>& shown, int n, int m, bool cuspidal) {
    std::vector<std::pair<std::string, QTRat>> mine;
    for (const auto& lam : partitions_of(n))
        for (const auto& T : cuspidal ? enumerate_asyt(lam) : enumerate_syt(lam))
            mine.emplace_back(T.str(), cuspidal ? cuspidal_stalk_term(T, m) : catalan_stalk_term(T, m));
    REQUIRE(shown.size() == mine.size());
    std::vector<bool> used(mine.size(), false);
    for (std::size_t a = 0; a < shown.size(); ++a) {
        bool found = false;
        for (std::size_t b = 0; b < mine.size() && !found; ++b)
            if (!used[b] && mine[b].second == shown[a]) used[b] = found = true;
        CAPTURE(a, shown[a].str());
        CHECK(found);
    }
}

TEST_CASE("three-box Catalan stalk terms", "[shuffle]") {
    check_bijection({mono(1, 0) / (om(-1, 1) * om(2, -1)), mono(0, 1) / (om(1, -1) * om(-1, 2)),
                     mono(1, 0) / (om(-1, 1) * om(-2, 1)), mono(0, 1) / (om(1, -1) * om(1, -2))},
                    3, 2, false);
    CHECK(catalan_term("1,2,3", 2) == mono(1, 0) / (om(-1, 1) * om(-2, 1)));
    CHECK(catalan_term("1;2;3", 2) == mono(0, 1) / (om(1, -1) * om(1, -2)));
    // Hand expansion with chi = (1, t, q): monomial t, chain (1-q)(1-t^2).
    CHECK(catalan_term("1,3;2", 2) == mono(0, 1) / (om(1, -1) * om(-1, 2)));
    CHECK(stalk_catalan_over_g(SlopeData(2, 3), P({2, 1})) == catalan_term("1,3;2", 2) + catalan_term("1,2;3", 2));
}

TEST_CASE("three-box cuspidal stalk terms", "[shuffle]") {
    check_bijection(
        {mono(3, 0) / (om(-1, 1) * om(-2, 1)),
         mono(1, 1) * om(2, 0) * om(1, 1) / (om(0, 1) * om(2, -1) * om(-1, 1) * om(-1, 2)),
         mono(1, 1) * om(1, 1) * om(1, 1) / (om(0, 1) * om(0, 1) * om(1, -1) * om(-1, 2)),
         mono(1, 0) * om(1, 2) / (om(0, -1) * om(0, 1) * om(-1, 2)),
         om(1, 0) * om(1, 0) * mono(0, 3) * om(1, 1) * om(1, 1) /
             (om(0, 1) * om(0, 1) * om(0, 2) * om(0, 2) * om(1, -2) * om(1, -1)),
         om(1, 0) * mono(0, 3) * om(1, 1) * om(1, 2) / (om(0, -1) * om(0, 1) * om(0, 2) * om(0, 3) * om(1, -2)),
         om(1, 0) * mono(0, 2) * om(1, 1) * om(1, 2) / (om(0, -1) * om(0, 1) * om(0, 2) * om(0, 3) * om(1, -2)),
         mono(0, 1) * om(1, 2) * om(1, 3) / (om(0, -2) * om(0, -1) * om(0, 2) * om(0, 3))},
        3, 2, true);
    CHECK(cuspidal_term("1,2,3", 2) == mono(3, 0) / (om(-1, 1) * om(-2, 1)));
    CHECK(cuspidal_term("1,2;3", 2) ==
          mono(1, 1) * om(2, 0) * om(1, 1) / (om(0, 1) * om(2, -1) * om(-1, 1) * om(-1, 2)));
    CHECK(cuspidal_term("1;2;3", 2) == om(1, 0) * om(1, 0) * mono(0, 3) * om(1, 1) * om(1, 1) /
                                           (om(0, 1) * om(0, 1) * om(0, 2) * om(0, 2) * om(1, -2) * om(1, -1)));
    CHECK(cuspidal_term("3;2;1", 2) == mono(0, 1) * om(1, 2) * om(1, 3) / (om(0, -2) * om(0, -1) * om(0, 2) * om(0, 3)));
}

TEST_CASE("four-box Catalan stalk terms", "[shuffle]") {
    check_bijection({mono(1, 1) * om(0, 1) / (om(2, -1) * om(-1, 1) * om(-1, 1) * om(-2, 2)),
                     mono(1, 1) / (om(1, -1) * om(-1, 1) * om(-2, 2)),
                     om(1, 0) * mono(1, 1) / (om(1, -1) * om(2, -1) * om(-1, 1) * om(-1, 1)),
                     mono(3, 0) / (om(-3, 1) * om(-2, 1) * om(-1, 1)),
                     mono(3, 0) / (om(3, -1) * om(-2, 1) * om(-1, 1)),
                     // this one and the ninth are the q,t mirrors of the first and fourth
                     mono(1, 1) * om(1, 0) / (om(2, -2) * om(1, -1) * om(1, -1) * om(-1, 2)),
                     mono(1, 1) / (om(2, -2) * om(1, -1) * om(-1, 1)),
                     mono(1, 1) * om(0, 1) / (om(1, -1) * om(1, -1) * om(-1, 1) * om(-1, 2)),
                     mono(0, 3) / (om(-1, 3) * om(1, -2) * om(1, -1)),
                     mono(0, 3) / (om(1, -3) * om(1, -2) * om(1, -1))},
                    4, 3, false);
    // Hand expansion of the one-row tableau, chi = (1, q, q^2, q^3): monomial q^3, chain (1-t)^3.
    CHECK(catalan_term("1,2,3,4", 3) == mono(3, 0) / (om(-3, 1) * om(-2, 1) * om(-1, 1)));
    CHECK(catalan_term("1;2;3;4", 3) == mono(0, 3) / (om(1, -3) * om(1, -2) * om(1, -1)));
}

TEST_CASE("Catalan totals", "[shuffle]") {
    CHECK(c_mn_coeffs(SlopeData(3, 2), Formula::syt).total().to_laurent() == poly("q + t"));
    CHECK(c_mn_coeffs(SlopeData(2, 3), Formula::syt).total().to_laurent() == poly("q + t"));
    CHECK(c_mn_coeffs(SlopeData(3, 4), Formula::syt).total().to_laurent() == poly("q^3 + q^2*t + q*t + q*t^2 + t^3"));
    CHECK(c_mn_coeffs(SlopeData(3, 4), Formula::asyt).total().to_laurent() ==
          poly("q^3 + q^2*t + q*t + q*t^2 + t^3"));
    CHECK(c_mn_coeffs(SlopeData(5, 1), Formula::syt).total().to_laurent() == Laurent(1));
}

TEST_CASE("cuspidal totals are q^(n-1) times the Catalan totals", "[shuffle]") {
    QTRat cusp = 0;
    for (const auto& lam : partitions_of(3)) cusp += stalk_cuspidal_over_g(SlopeData(2, 3), lam);
    CHECK(cusp.to_laurent() == poly("q^2*t + q^3"));
    CHECK(verify_prop_PA(SlopeData(2, 3)));
    CHECK(verify_prop_PA(SlopeData(3, 2)));
    CHECK(verify_prop_PA(SlopeData(3, 4)));
}

TEST_CASE("dual formulas agree", "[shuffle]") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 9; ++m) {
            if (std::gcd(m, n) != 1) continue;
            SlopeData s(m, n);
            CAPTURE(m, n);
            auto a = c_mn_coeffs(s, Formula::syt);
            auto b = c_mn_coeffs(s, Formula::asyt);
            for (const auto& lam : partitions_of(n)) CHECK(a.entries.at(lam) == b.entries.at(lam));
            CHECK(verify_prop_PA(s));
        }
}

TEST_CASE("Catalan totals: polynomial, symmetric, counting paths", "[shuffle]") {
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; m <= 8; ++m) {
            if (std::gcd(m, n) != 1) continue;
            CAPTURE(m, n);
            Laurent c = c_mn_coeffs(SlopeData(m, n), Formula::syt).total().to_laurent();
            CHECK_FALSE(c.has_negative_coeff());
            CHECK(c.swap_qt() == c);
            mpz_class count;
            mpz_bin_uiui(count.get_mpz_t(), m + n, n);
            CHECK(c.evaluate(1, 1) == mpq_class(count) / (m + n));
            CHECK(c.max_q() == (m - 1) * (n - 1) / 2);
        }
}

TEST_CASE("threads do not change results", "[shuffle]") {
    auto a = c_mn_coeffs(SlopeData(5, 4), Formula::asyt, 1);
    auto b = c_mn_coeffs(SlopeData(5, 4), Formula::asyt, 4);
    for (const auto& [lam, c] : a.entries) CHECK(b.entries.at(lam).str() == c.str());
}

TEST_CASE("P_{m,n}.1", "[shuffle]") {
    CHECK(basis_convert(pmn_dot_1(SlopeData(4, 1)), Basis::schur) == SymF::basis_element(Basis::schur, P({1})));
    SymF f = pmn_dot_1(SlopeData(3, 2));
    CHECK(f.basis() == Basis::macdonald);
    CHECK((f.coeff(P({2})) + f.coeff(P({1, 1}))).to_laurent() == poly("q + t"));
    CHECK(schur_coefficient(basis_convert(pmn_dot_1(SlopeData(3, 4)), Basis::schur), P({4})).to_laurent() ==
          poly("q^3 + q^2*t + q*t + q*t^2 + t^3"));
}

TEST_CASE("symmetrized presentations agree", "[shuffle]") {
    CHECK(sym_presentation_check(SlopeData(3, 2), 20, 0));
    CHECK(sym_presentation_check(SlopeData(2, 3), 20, 0));
    CHECK(sym_presentation_check(SlopeData(5, 1), 3, 0));
    CHECK(sym_presentation_check(SlopeData(5, 4), 2, 9));
    CHECK_THROWS_AS(sym_presentation_check(SlopeData(2, 5), 1, 0), std::invalid_argument);
}

TEST_CASE("omega kernel", "[shuffle]") {
    // omega(x) = (1 - x)(1 - qtx)/((1 - qx)(1 - tx)) at x=2, q=3, t=5
    CHECK(omega_kernel(2, 3, 5) == mpq_class(29, 45));
    CHECK_THROWS_AS(omega_kernel(1, 1, 5), PoleAtPoint);
}

TEST_CASE("wheel conditions", "[shuffle]") {
    Evaluable one{3, [](const std::vector<mpq_class>&, const mpq_class&, const mpq_class&) { return mpq_class(1); }};
    CHECK_FALSE(wheel_check(one, 3, 5, 0));
    CHECK(wheel_check(one, 3, 0, 0));

    // Vanishes whenever some ratio z_i/z_j equals q.
    Evaluable wheel{3, [](const std::vector<mpq_class>& z, const mpq_class& q, const mpq_class&) {
                        mpq_class v = 1;
                        for (int i = 0; i < 3; ++i)
                            for (int j = 0; j < 3; ++j)
                                if (i != j) v *= z[i] - q * z[j];
                        return v;
                    }};
    CHECK(wheel_check(wheel, 3, 10, 1));
    CHECK(wheel_check(wheel, 4, 10, 2));
    CHECK_THROWS_AS(wheel_check(one, 2, 1, 0), std::invalid_argument);
}

TEST_CASE("shuffle product", "[shuffle]") {
    Evaluable one1{1, [](const std::vector<mpq_class>&, const mpq_class&, const mpq_class&) { return mpq_class(1); }};
    Evaluable unit{0, [](const std::vector<mpq_class>&, const mpq_class&, const mpq_class&) { return mpq_class(1); }};
    Evaluable z1{1, [](const std::vector<mpq_class>& z, const mpq_class& q, const mpq_class&) -> mpq_class { return z[0] * z[0] + q; }};

    SamplePoint pt{2, 3, {5, 7}};
    CHECK(shuffle_mul_eval(one1, one1, pt) ==
          omega_kernel(mpq_class(5, 7), 2, 3) + omega_kernel(mpq_class(7, 5), 2, 3));

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(1, 40);
    for (int i = 0; i < 10; ++i) {
        SamplePoint p{mpq_class(d(rng), d(rng)), mpq_class(d(rng), d(rng)), {mpq_class(d(rng), d(rng)), mpq_class(d(rng), d(rng))}};
        p.q.canonicalize();
        p.t.canonicalize();
        for (auto& z : p.z) z.canonicalize();
        try {
            const auto& z = p.z;
            CHECK(shuffle_mul_eval(one1, z1, p) == z1.fn({z[1]}, p.q, p.t) * omega_kernel(z[0] / z[1], p.q, p.t) +
                                                       z1.fn({z[0]}, p.q, p.t) * omega_kernel(z[1] / z[0], p.q, p.t));
        } catch (const PoleAtPoint&) {
        }
    }

    // Associativity, with the inner products evaluated pointwise.
    auto times = [](const Evaluable& f, const Evaluable& g) {
        return Evaluable{f.vars + g.vars, [f, g](const std::vector<mpq_class>& z, const mpq_class& q, const mpq_class& t) {
                             return shuffle_mul_eval(f, g, SamplePoint{q, t, z});
                         }};
    };
    SamplePoint three{mpq_class(2, 7), 5, {3, mpq_class(1, 4), mpq_class(11, 6)}};
    CHECK(shuffle_mul_eval(times(one1, z1), one1, three) == shuffle_mul_eval(one1, times(z1, one1), three));

    SamplePoint single{2, 3, {mpq_class(5, 2)}};
    CHECK(shuffle_mul_eval(unit, z1, single) == z1.fn(single.z, 2, 3));
    CHECK_THROWS_AS(shuffle_mul_eval(one1, one1, single), std::invalid_argument);
}
