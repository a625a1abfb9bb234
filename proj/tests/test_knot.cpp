#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "qtknots/dyck.hpp"
#include "qtknots/errors.hpp"
#include "qtknots/knot.hpp"
#include "support.hpp"

using namespace qtknots;
using namespace qtknots::test;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}  // namespace

TEST_CASE("Frobenius character of L", "[knot]") {
    SymF one = frobenius_L(SlopeData(5, 1));
    CHECK(one == SymF::basis_element(Basis::schur, P({1})));

    SymF f = frobenius_L(SlopeData(3, 2));
    CHECK(f.coeff(P({2})).to_laurent() == poly("q + q^-1*t"));
    CHECK(f.coeff(P({1, 1})).to_laurent() == poly("1"));

    SymF f34 = frobenius_L(SlopeData(4, 3));
    for (const auto& [mu, c] : f34.coeffs()) {
        REQUIRE(c.is_laurent());
        CHECK_FALSE(c.num().has_negative_coeff());
    }
}

TEST_CASE("superpolynomial of small torus knots", "[knot]") {
    CHECK(hhh_superpoly(SlopeData(4, 1), false).str() == "1");
    CHECK(hhh_superpoly(SlopeData(4, 1), true).str() == "1");

    SuperPoly t32 = hhh_superpoly(SlopeData(3, 2), false);
    CHECK(t32.a_part(0) == poly("q + q^-1*t"));
    CHECK(t32.a_part(1) == poly("1"));
    CHECK(t32.str() == "q^-1*t + q + a");

    Mono shift;
    SuperPoly n32 = hhh_superpoly(SlopeData(3, 2), true, &shift);
    CHECK(shift == Mono{1, 0});
    CHECK(n32.str() == "t + q^2 + a*q");
    CHECK(n32 == hhh_superpoly(SlopeData(2, 3), true));
}

TEST_CASE("m,n symmetry", "[knot]") {
    for (auto [m, n] : {std::pair{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}) {
        CAPTURE(m, n);
        CHECK(verify_mn_symmetry(m, n));
    }
    CHECK_THROWS_AS(verify_mn_symmetry(2, 4), NotCoprime);
}

TEST_CASE("superpolynomial properties", "[knot]") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 7; ++m) {
            if (std::gcd(m, n) != 1) continue;
            CAPTURE(m, n);
            SlopeData s(m, n);
            SuperPoly h = hhh_superpoly(s, false);
            CHECK_FALSE(h.has_negative_coeff());
            CHECK(h.a_part(0) == substitute_t_by_qinv_t(qt_catalan(m, n, CatalanMethod::shuffle)));
            CHECK(catalan_consistency(s));
            for (const auto& [key, c] : h.terms()) {
                CHECK(key[0] >= 0);
                CHECK(key[0] <= n - 1);
            }
            // Total dimension at a=q=t=1 is the sum over hooks of Schur dimensions times a-dimension.
            CHECK(h.eval_one() > 0);
        }
}

TEST_CASE("Catalan dimension of the a^0 part", "[knot]") {
    CHECK(hhh_superpoly(SlopeData(3, 2), false).a_part(0).evaluate(1, 1) == 2);
    CHECK(hhh_superpoly(SlopeData(3, 4), false).a_part(0).evaluate(1, 1) == 5);
    CHECK(hhh_superpoly(SlopeData(6, 1), false).a_part(0).evaluate(1, 1) == 1);
}

TEST_CASE("trefoil shift bookkeeping", "[knot]") {
    SuperPoly h = hhh_superpoly(SlopeData(3, 2), false);
    CHECK(h.shifted({1, 0}) == hhh_superpoly(SlopeData(3, 2), true));
    CHECK(h.eval_one() == 3);
}
