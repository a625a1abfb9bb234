#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "qtknots/dyck.hpp"
#include "qtknots/errors.hpp"
#include "support.hpp"

using namespace qtknots;
using namespace qtknots::test;

namespace {

const DyckPath& with_area(const std::vector<DyckPath>& v, int a) {
    for (const auto& D : v)
        if (area(D) == a) return D;
    throw std::runtime_error("no path with that area");
}

}  // namespace

TEST_CASE("path counts", "[dyck]") {
    CHECK(enumerate_dyck(3, 2).size() == 2);
    CHECK(enumerate_dyck(3, 4).size() == 5);
    CHECK(enumerate_dyck(7, 1).size() == 1);
    CHECK(enumerate_dyck(1, 6).size() == 1);
    CHECK(enumerate_dyck(5, 3).size() == 7);
    CHECK_THROWS_AS(enumerate_dyck(2, 4), NotCoprime);
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; m <= 8; ++m)
            if (std::gcd(m, n) == 1) CHECK(static_cast<long>(enumerate_dyck(m, n).size()) == rational_catalan_count(m, n));
}

TEST_CASE("area and dinv on (3,2)", "[dyck]") {
    auto paths = enumerate_dyck(3, 2);
    const DyckPath& hug = with_area(paths, 0);
    const DyckPath& low = with_area(paths, 1);
    CHECK(hug.str() == "1,0");
    CHECK(low.str() == "0,0");
    CHECK(dinv(hug) == 1);
    CHECK(dinv(low) == 0);

    auto single = enumerate_dyck(4, 1);
    CHECK(area(single[0]) == 0);
    CHECK(dinv(single[0]) == 0);
}

TEST_CASE("q,t-Catalan from paths", "[dyck]") {
    CHECK(qt_catalan(3, 2, CatalanMethod::dyck) == poly("q + t"));
    CHECK(qt_catalan(2, 3, CatalanMethod::dyck) == poly("q + t"));
    CHECK(qt_catalan(3, 4, CatalanMethod::dyck) == poly("q^3 + q^2*t + q*t + q*t^2 + t^3"));
    CHECK(qt_catalan(3, 4, CatalanMethod::shuffle) == poly("q^3 + q^2*t + q*t + q*t^2 + t^3"));
}

TEST_CASE("path and shuffle computations agree", "[dyck]") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 7; ++m) {
            if (std::gcd(m, n) != 1) continue;
            CAPTURE(m, n);
            Laurent d = qt_catalan(m, n, CatalanMethod::dyck);
            Laurent s = qt_catalan(m, n, CatalanMethod::shuffle);
            CHECK(d == s);
            CHECK(d.swap_qt() == d);
            CHECK(d == qt_catalan(n, m, CatalanMethod::dyck));
            CHECK(d.evaluate(1, 1) == rational_catalan_count(m, n));
        }
}

TEST_CASE("rational Catalan count", "[dyck]") {
    CHECK(rational_catalan_count(3, 2) == 2);
    CHECK(rational_catalan_count(3, 4) == 5);
    CHECK(rational_catalan_count(5, 6) == 42);
    CHECK(rational_catalan_count(4, 7) == 30);
}
