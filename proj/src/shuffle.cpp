#include "qtknots/shuffle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qtknots/errors.hpp"
#include "qtknots/parallel.hpp"

namespace qtknots {

SlopeData::SlopeData(int m_, int n_) : m(m_), n(n_) {
    if (m <= 0 || n <= 0) throw std::invalid_argument("slope numerator and denominator must be positive");
    if (std::gcd(m, n) != 1) throw NotCoprime("m=" + std::to_string(m) + " and n=" + std::to_string(n) + " are not coprime");
}

QTRat CoeffVector::total() const {
    QTRat s;
    for (const auto& [lam, c] : entries) s += c;
    return s;
}

namespace {

const Mono kQ{1, 0}, kT{0, 1}, kQT{1, 1};

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

// Tableaux are summed in fixed-size chunks so that the normalized result does
// not depend on the worker count.
constexpr std::size_t kChunk = 8;

template <class TermFn>
QTRat sum_terms(const std::vector<Tableau>& tabs, int threads, TermFn term) {
    const std::size_t chunks = (tabs.size() + kChunk - 1) / kChunk;
    std::vector<QTRat> partial(chunks);
    parallel_for(chunks, threads, [&](std::size_t c) {
        QTRat s;
        const std::size_t end = std::min(tabs.size(), (c + 1) * kChunk);
        for (std::size_t i = c * kChunk; i < end; ++i) s += term(tabs[i]);
        partial[c] = std::move(s);
    });
    QTRat total;
    for (auto& p : partial) total += p;
    return total;
}

void add_chain(ExponentBag& bag, const std::vector<Mono>& chi, Mono shift) {
    for (std::size_t i = 0; i + 1 < chi.size(); ++i) bag.add(shift + chi[i] - chi[i + 1], -1);
}

QTRat finish(const ExponentBag& bag, Mono mono, bool negative, bool check_hat) {
    if (check_hat && bag.mult(Mono{}) != 0) {
        throw HatViolation("unhatted zero factor in a localization term");
    }
    QTRat r = omega_eval(bag, true);
    QTRat m(Laurent(mpz_class(negative ? -1 : 1), mono));
    return r * m;
}

}  // namespace

std::vector<int> mu_weights(int m, int n, Rounding r) {
    std::vector<int> mu;
    for (int i = 1; i <= n; ++i) {
        long a = r == Rounding::floor ? floor_div(static_cast<long>(i) * m, n) : ceil_div(static_cast<long>(i) * m, n);
        long b = r == Rounding::floor ? floor_div(static_cast<long>(i - 1) * m, n)
                                      : ceil_div(static_cast<long>(i - 1) * m, n);
        mu.push_back(static_cast<int>(a - b));
    }
    return mu;
}

std::vector<int> mu_weights(const SlopeData& s, Rounding r) { return mu_weights(s.m, s.n, r); }

Mono mu_monomial(const std::vector<Mono>& chi, const std::vector<int>& mu) {
    const int n = static_cast<int>(chi.size());
    Mono e;
    for (int i = 1; i <= n; ++i) {
        const Mono& x = chi[n - i];
        e = e + Mono{x.q * mu[i - 1], x.t * mu[i - 1]};
    }
    return e;
}

QTRat syt_term(const Tableau& T, int m) {
    const int n = T.size();
    auto chi = chi_sequence(T);
    ExponentBag bag;
    bag.add(kQ, n);
    bag.add(kT, n);
    bag.add(kQT, -n);
    bag.add(g_lambda_bag(T.shape()), -1);
    bag.add(theta_sigma(T));
    add_chain(bag, chi, kQT);
    return finish(bag, mu_monomial(chi, mu_weights(m, n, Rounding::floor)), false, true);
}

QTRat asyt_term(const Tableau& T, int m) {
    const int n = T.size();
    auto chi = chi_sequence(T);
    ExponentBag bag;
    bag.add(kT, 1);
    bag.add(kQ, n);
    bag.add(kQT, -1);
    bag.add(g_lambda_bag(T.shape()), -1);
    bag.add(theta_sigma(T));
    add_chain(bag, chi, Mono{0, -1});
    Mono mono = mu_monomial(chi, mu_weights(m, n, Rounding::floor)) - Mono{n - 1, n - 1};
    bool negative = (n - 1 + T.descents()) % 2 != 0;
    return finish(bag, mono, negative, true);
}

QTRat c_mn_coefficient(int m, int n, const Partition& lambda, Formula f, int threads) {
    if (lambda.size() != n) throw SizeMismatch("partition size differs from n");
    if (f == Formula::syt) {
        return sum_terms(enumerate_syt(lambda), threads, [m](const Tableau& T) { return syt_term(T, m); });
    }
    return sum_terms(enumerate_asyt(lambda), threads, [m](const Tableau& T) { return asyt_term(T, m); });
}

CoeffVector c_coeffs(int m, int n, Formula f, int threads) {
    if (n <= 0) throw std::invalid_argument("n must be positive");
    CoeffVector cv{m, n, {}};
    for (const auto& lam : partitions_of(n)) cv.entries.emplace(lam, c_mn_coefficient(m, n, lam, f, threads));
    return cv;
}

CoeffVector c_mn_coeffs(const SlopeData& s, Formula f, int threads) { return c_coeffs(s.m, s.n, f, threads); }

QTRat cuspidal_stalk_term(const Tableau& T, int m) {
    const int n = T.size();
    auto chi = chi_sequence(T);
    ExponentBag bag = xi_sigma(T);
    bag.add(kQT, n - 1);
    bag.add(kT, -(n - 1));
    add_chain(bag, chi, Mono{0, -1});
    Mono mono = mu_monomial(chi, mu_weights(m, n, Rounding::floor)) - Mono{0, n - 1};
    return finish(bag, mono, (n - 1 + T.descents()) % 2 != 0, false);
}

QTRat catalan_stalk_term(const Tableau& T, int m) {
    auto chi = chi_sequence(T);
    ExponentBag bag = xi_sigma(T);
    add_chain(bag, chi, kQT);
    return finish(bag, mu_monomial(chi, mu_weights(m, T.size(), Rounding::floor)), false, false);
}

QTRat stalk_cuspidal_over_g(const SlopeData& s, const Partition& lambda) {
    if (lambda.size() != s.n) throw SizeMismatch("partition size differs from n");
    return sum_terms(enumerate_asyt(lambda), 1, [&](const Tableau& T) { return cuspidal_stalk_term(T, s.m); });
}

QTRat stalk_catalan_over_g(const SlopeData& s, const Partition& lambda) {
    if (lambda.size() != s.n) throw SizeMismatch("partition size differs from n");
    return sum_terms(enumerate_syt(lambda), 1, [&](const Tableau& T) { return catalan_stalk_term(T, s.m); });
}

QTRat stalk_char_cuspidal(const SlopeData& s, const Partition& lambda) {
    return stalk_cuspidal_over_g(s, lambda) * g_lambda(lambda);
}

QTRat stalk_char_catalan(const SlopeData& s, const Partition& lambda) {
    return stalk_catalan_over_g(s, lambda) * g_lambda(lambda);
}

bool verify_prop_PA(const SlopeData& s, int threads) {
    const QTRat shift(Laurent::monomial(1 - s.n, 0));
    for (const auto& lam : partitions_of(s.n)) {
        QTRat cat = stalk_catalan_over_g(s, lam);
        QTRat cusp = stalk_cuspidal_over_g(s, lam);
        if (!(cat == shift * cusp)) return false;
        if (!(cat == c_mn_coefficient(s.m, s.n, lam, Formula::syt, threads))) return false;
        if (!(cat == c_mn_coefficient(s.m, s.n, lam, Formula::asyt, threads))) return false;
    }
    return true;
}

SymF pmn_dot_1(int m, int n, int threads) {
    CoeffVector cv = c_coeffs(m, n, Formula::syt, threads);
    SymF f(n, Basis::macdonald);
    for (const auto& [lam, c] : cv.entries) f.add(lam, c);
    return f;
}

SymF pmn_dot_1(const SlopeData& s, int threads) { return pmn_dot_1(s.m, s.n, threads); }

// ---------------------------------------------------------------------------
// Evaluation at sample points.

namespace {

mpq_class safe_div(const mpq_class& a, const mpq_class& b) {
    if (b == 0) throw PoleAtPoint("pole at sample point");
    return a / b;
}

template <class Fn>
mpq_class symmetrize(const std::vector<mpq_class>& z, Fn fn) {
    std::vector<std::size_t> perm(z.size());
    std::iota(perm.begin(), perm.end(), 0);
    mpq_class s = 0;
    std::vector<mpq_class> w(z.size());
    do {
        for (std::size_t i = 0; i < z.size(); ++i) w[i] = z[perm[i]];
        s += fn(w);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return s;
}

mpq_class shuffle_term(int m, int n, const std::vector<mpq_class>& z, const mpq_class& q, const mpq_class& t,
                       bool cuspidal) {
    auto mu = mu_weights(m, n, Rounding::floor);
    mpq_class v = 1;
    for (int i = 1; i <= n; ++i) v *= mpq_pow(z[n - i], mu[i - 1]);
    for (int i = 0; i + 1 < n; ++i) {
        mpq_class r = safe_div(z[i], z[i + 1]);
        mpq_class d = cuspidal ? mpq_class(1 - safe_div(r, t)) : mpq_class(1 - q * t * r);
        v = safe_div(v, d);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) v *= omega_kernel(safe_div(z[i], z[j]), q, t);
    return v;
}

mpq_class random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(1, 40), den(1, 40);
    mpq_class r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

}  // namespace

mpq_class omega_kernel(const mpq_class& x, const mpq_class& q, const mpq_class& t) {
    return safe_div((1 - x) * (1 - q * t * x), (1 - q * x) * (1 - t * x));
}

mpq_class catalan_shuffle_eval(int m, int n, const SamplePoint& pt) {
    return symmetrize(pt.z, [&](const std::vector<mpq_class>& w) { return shuffle_term(m, n, w, pt.q, pt.t, false); });
}

mpq_class cuspidal_shuffle_eval(int m, int n, const SamplePoint& pt) {
    mpq_class pre = safe_div(1 - pt.q * pt.t, (1 - pt.t) * (-pt.q * pt.t));
    mpq_class s = symmetrize(pt.z, [&](const std::vector<mpq_class>& w) { return shuffle_term(m, n, w, pt.q, pt.t, true); });
    return mpq_pow(pre, n - 1) * s;
}

bool sym_presentation_check(const SlopeData& s, int trials, std::uint64_t seed) {
    if (s.n > 4) throw std::invalid_argument("symmetrization check supports n <= 4");
    if (s.n == 1) return true;
    std::mt19937_64 rng(seed);
    for (int k = 0; k < trials; ++k) {
        bool done = false;
        for (int attempt = 0; attempt < 100 && !done; ++attempt) {
            SamplePoint pt{random_rational(rng), random_rational(rng), {}};
            for (int i = 0; i < s.n; ++i) pt.z.push_back(random_rational(rng));
            try {
                if (catalan_shuffle_eval(s.m, s.n, pt) != cuspidal_shuffle_eval(s.m, s.n, pt)) return false;
                done = true;
            } catch (const PoleAtPoint&) {
            }
        }
        if (!done) throw PoleAtPoint("no pole-free sample point found");
    }
    return true;
}

bool wheel_check(const Evaluable& f, int k, int trials, std::uint64_t seed) {
    if (k < 3) throw std::invalid_argument("wheel check needs at least three variables");
    std::mt19937_64 rng(seed);
    for (int i = 0; i < trials; ++i) {
        mpq_class q = random_rational(rng), t = random_rational(rng), z3 = random_rational(rng);
        std::vector<mpq_class> z{q * t * z3, t * z3, z3};
        for (int j = 3; j < k; ++j) z.push_back(random_rational(rng));
        if (f.fn(z, q, t) != 0) return false;
    }
    return true;
}

mpq_class shuffle_mul_eval(const Evaluable& f, const Evaluable& g, const SamplePoint& pt) {
    const int k = f.vars, l = g.vars;
    if (k + l > 5) throw std::invalid_argument("shuffle product evaluation supports k + l <= 5");
    if (static_cast<int>(pt.z.size()) != k + l) throw std::invalid_argument("sample point has the wrong number of variables");
    mpq_class s = symmetrize(pt.z, [&](const std::vector<mpq_class>& w) {
        std::vector<mpq_class> a(w.begin(), w.begin() + k), b(w.begin() + k, w.end());
        mpq_class v = f.fn(a, pt.q, pt.t) * g.fn(b, pt.q, pt.t);
        for (int i = 0; i < k; ++i)
            for (int j = k; j < k + l; ++j) v *= omega_kernel(safe_div(w[i], w[j]), pt.q, pt.t);
        return v;
    });
    mpz_class fk, fl;
    mpz_fac_ui(fk.get_mpz_t(), static_cast<unsigned long>(k));
    mpz_fac_ui(fl.get_mpz_t(), static_cast<unsigned long>(l));
    return s / mpq_class(fk * fl);
}

}  // namespace qtknots
