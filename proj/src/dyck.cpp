#include "qtknots/dyck.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

#include "qtknots/errors.hpp"
#include "qtknots/shuffle.hpp"

namespace qtknots {

namespace {

void check_coprime(int m, int n) {
    if (m <= 0 || n <= 0) throw std::invalid_argument("m and n must be positive");
    if (std::gcd(m, n) != 1) throw NotCoprime("m=" + std::to_string(m) + " and n=" + std::to_string(n) + " are not coprime");
}

// Least x-coordinate allowed for the south step leaving row i (0 = top row).
int min_step(int m, int n, int i) { return (m * (i + 1) + n - 1) / n; }

}  // namespace

std::string DyckPath::str() const {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(cells[i]);
    }
    return s;
}

std::vector<DyckPath> enumerate_dyck(int m, int n) {
    check_coprime(m, n);
    std::vector<DyckPath> out;
    std::vector<int> x(static_cast<std::size_t>(n));
    std::function<void(int, int)> rec = [&](int i, int prev) {
        if (i == n) {
            DyckPath d{m, n, {}};
            for (int xi : x) d.cells.push_back(m - xi);
            out.push_back(std::move(d));
            return;
        }
        // the last row has min_step = m, which pins the path to (m,0)
        for (int v = std::max(prev, min_step(m, n, i)); v <= m; ++v) {
            x[i] = v;
            rec(i + 1, v);
        }
    };
    rec(0, 0);
    return out;
}

int area(const DyckPath& D) {
    int a = 0;
    for (int i = 0; i < D.n; ++i) a += (D.m - D.cells[i]) - min_step(D.m, D.n, i);
    return a;
}

int dinv(const DyckPath& D) {
    // The cells above the path form a partition with rows read from the top;
    // arm runs along the row towards the east edge, leg counts cells below.
    int d = 0;
    for (int i = 0; i < D.n; ++i) {
        for (int j = 0; j < D.cells[i]; ++j) {
            const int a = D.cells[i] - j - 1;
            int l = 0;
            for (int k = i + 1; k < D.n && D.cells[k] > j; ++k) ++l;
            // a/(l+1) < m/n < (a+1)/l, the right bound being infinite for l = 0
            const bool left = static_cast<long>(a) * D.n < static_cast<long>(D.m) * (l + 1);
            const bool right = l == 0 || static_cast<long>(D.m) * l < static_cast<long>(a + 1) * D.n;
            if (left && right) ++d;
        }
    }
    return d;
}

Laurent qt_catalan(int m, int n, CatalanMethod method, int threads) {
    check_coprime(m, n);
    if (method == CatalanMethod::shuffle) return c_mn_coeffs(SlopeData(m, n), Formula::syt, threads).total().to_laurent();
    std::vector<Term> terms;
    for (const auto& D : enumerate_dyck(m, n)) terms.push_back({Mono{area(D), dinv(D)}, 1});
    return Laurent::from_terms(std::move(terms));
}

long rational_catalan_count(int m, int n) {
    mpz_class a, b, c;
    mpz_fac_ui(a.get_mpz_t(), static_cast<unsigned long>(m + n - 1));
    mpz_fac_ui(b.get_mpz_t(), static_cast<unsigned long>(m));
    mpz_fac_ui(c.get_mpz_t(), static_cast<unsigned long>(n));
    return mpz_class(a / (b * c)).get_si();
}

}  // namespace qtknots
