#include "qtknots/ratfunc.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <vector>

#include "qtknots/errors.hpp"

namespace qtknots {

void ExponentBag::add(Mono e, long mult) {
    if (mult == 0) return;
    auto [it, fresh] = entries_.try_emplace(e, 0);
    it->second += mult;
    if (it->second == 0) entries_.erase(it);
}

void ExponentBag::add(const ExponentBag& o, long scale) {
    for (const auto& [e, m] : o.entries_) add(e, m * scale);
}

ExponentBag ExponentBag::negated() const {
    ExponentBag r;
    for (const auto& [e, m] : entries_) r.entries_.emplace(e, -m);
    return r;
}

long ExponentBag::mult(Mono e) const {
    auto it = entries_.find(e);
    return it == entries_.end() ? 0 : it->second;
}

bool orient(Mono& m) {
    if (m < Mono{}) {
        m = -m;
        return true;
    }
    return false;
}

QTRat QTRat::fraction(const mpz_class& a, const mpz_class& b) {
    if (b == 0) throw DivisionByZero("integer fraction with zero denominator");
    QTRat r{Laurent(a)};
    r.den_int_ = b;
    if (b < 0) {
        r.den_int_ = -b;
        r.num_ = -r.num_;
    }
    r.cancel_content();
    return r;
}

QTRat QTRat::binomial_inverse(Mono m, int k) {
    QTRat r(1);
    r.mul_binomial(m, -k);
    return r;
}

QTRat QTRat::operator-() const {
    QTRat r = *this;
    r.num_ = -r.num_;
    return r;
}

void QTRat::cancel_content() {
    if (num_.is_zero()) {
        den_int_ = 1;
        den_.clear();
        return;
    }
    if (den_int_ == 1) return;
    mpz_class g = num_.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_int_.get_mpz_t());
    if (g != 1) {
        num_.divexact(g);
        mpz_divexact(den_int_.get_mpz_t(), den_int_.get_mpz_t(), g.get_mpz_t());
    }
}

void QTRat::normalize() {
    cancel_content();
    if (num_.is_zero()) return;
    for (auto it = den_.begin(); it != den_.end();) {
        while (it->second > 0) {
            auto d = num_.div_binomial(it->first);
            if (!d) break;
            num_ = std::move(*d);
            --it->second;
        }
        if (it->second == 0) it = den_.erase(it);
        else ++it;
    }
}

void QTRat::mul_binomial(Mono m, int k) {
    if (k == 0) return;
    if (m.is_one()) throw ZeroFactor("factor (1 - 1)");
    bool flipped = orient(m);
    if (flipped) {
        // (1 - x)^k = (-x)^k (1 - x^-1)^k with x = q^-m
        num_ = num_.shifted(Mono{-m.q * k, -m.t * k});
        if (k % 2 != 0) num_ = -num_;
    }
    if (k > 0) {
        int have = 0;
        auto it = den_.find(m);
        if (it != den_.end()) have = it->second;
        int cancel = std::min(have, k);
        if (cancel > 0) {
            it->second -= cancel;
            if (it->second == 0) den_.erase(it);
        }
        num_.mul_binomial(m, k - cancel);
    } else {
        den_[m] += -k;
    }
}

QTRat operator*(const QTRat& a, const QTRat& b) {
    if (a.is_zero() || b.is_zero()) return {};
    QTRat r;
    r.num_ = a.num_ * b.num_;
    r.den_int_ = a.den_int_ * b.den_int_;
    r.den_ = a.den_;
    for (const auto& [m, k] : b.den_) r.den_[m] += k;
    r.normalize();
    return r;
}

namespace {

// Split n into unit * prod (1 - m)^k by test division. Candidates are the
// divisors of exponent differences against the lowest term, tried largest
// first with bounded backtracking: peeling (1 - x) before (1 - x^2) can leave
// a stranded (1 + x).
bool peel_rec(Laurent& n, std::map<Mono, int>& peeled, int& budget) {
    if (n.is_monomial()) return true;
    const Mono low = n.terms().front().e;
    std::set<Mono> seen;
    std::vector<Mono> cands;
    for (const auto& tm : n.terms()) {
        Mono d = tm.e - low;
        if (d.is_one()) continue;
        int g = std::gcd(d.q, d.t);
        for (int k = 1; k <= g; ++k)
            if (g % k == 0 && seen.insert(Mono{d.q / k, d.t / k}).second) cands.push_back(Mono{d.q / k, d.t / k});
    }
    std::sort(cands.begin(), cands.end(), [](Mono a, Mono b) {
        int sa = std::abs(a.q) + std::abs(a.t), sb = std::abs(b.q) + std::abs(b.t);
        return sa != sb ? sa > sb : a < b;
    });
    for (Mono m : cands) {
        if (--budget < 0) return false;
        auto r = n.div_binomial(m);
        if (!r) continue;
        ++peeled[m];
        if (peel_rec(*r, peeled, budget)) {
            n = std::move(*r);
            return true;
        }
        if (--peeled[m] == 0) peeled.erase(m);
    }
    return false;
}

bool peel_binomials(Laurent& n, std::map<Mono, int>& peeled) {
    int budget = 4096;
    return peel_rec(n, peeled, budget);
}

}  // namespace

QTRat operator/(const QTRat& a, const QTRat& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero rational function");
    if (a.is_zero()) return {};
    // b = N / (d * D), so a / b = a * d * D / N.
    QTRat r = a;
    r.num_ *= b.den_int_;
    for (const auto& [m, k] : b.den_) r.mul_binomial(m, k);
    Laurent n = b.num_;
    std::map<Mono, int> peeled;
    if (!peel_binomials(n, peeled)) {
        auto d = r.num_.div_exact(b.num_);
        if (!d) throw NotPolynomial("divisor is not a product of binomials: " + b.num_.str());
        r.num_ = std::move(*d);
        r.normalize();
        return r;
    }
    const Term& lead = n.terms().front();
    r.num_ = r.num_.shifted(-lead.e);
    mpz_class c = lead.c;
    if (c < 0) {
        r.num_ = -r.num_;
        c = -c;
    }
    r.den_int_ *= c;
    for (const auto& [m, k] : peeled) r.mul_binomial(m, -k);
    r.normalize();
    return r;
}

static QTRat add_impl(const QTRat& a, const QTRat& b, bool sub) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return sub ? -b : b;
    QTRat r;
    std::map<Mono, int> den = a.den();
    for (const auto& [m, k] : b.den()) den[m] = std::max(den[m], k);
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.den_int().get_mpz_t(), b.den_int().get_mpz_t());
    Laurent na = a.num() * mpz_class(l / a.den_int());
    Laurent nb = b.num() * mpz_class(l / b.den_int());
    for (const auto& [m, k] : den) {
        auto ia = a.den().find(m);
        na.mul_binomial(m, k - (ia == a.den().end() ? 0 : ia->second));
        auto ib = b.den().find(m);
        nb.mul_binomial(m, k - (ib == b.den().end() ? 0 : ib->second));
    }
    if (sub) na -= nb;
    else na += nb;
    r = QTRat(std::move(na));
    r *= QTRat::fraction(1, l);
    for (const auto& [m, k] : den) r.mul_binomial(m, -k);
    r.normalize();
    return r;
}

QTRat operator+(const QTRat& a, const QTRat& b) { return add_impl(a, b, false); }
QTRat operator-(const QTRat& a, const QTRat& b) { return add_impl(a, b, true); }

bool QTRat::operator==(const QTRat& o) const {
    Laurent x = num_ * o.den_int_;
    Laurent y = o.num_ * den_int_;
    for (const auto& [m, k] : o.den_) x.mul_binomial(m, k);
    for (const auto& [m, k] : den_) y.mul_binomial(m, k);
    return x == y;
}

Laurent QTRat::to_laurent() const {
    Laurent n = num_;
    if (den_int_ != 1) {
        if (n.content() % den_int_ != 0) throw NotPolynomial("non-integral content in " + str());
        n.divexact(den_int_);
    }
    for (const auto& [m, k] : den_) {
        for (int i = 0; i < k; ++i) {
            auto d = n.div_binomial(m);
            if (!d) throw NotPolynomial("residual denominator in " + str());
            n = std::move(*d);
        }
    }
    return n;
}

mpq_class QTRat::evaluate(const mpq_class& q0, const mpq_class& t0) const {
    mpq_class d = mpq_class(den_int_);
    for (const auto& [m, k] : den_) {
        mpq_class f = 1 - mpq_pow(q0, m.q) * mpq_pow(t0, m.t);
        if (f == 0) throw PoleAtPoint("denominator vanishes at evaluation point");
        d *= mpq_pow(f, k);
    }
    return num_.evaluate(q0, t0) / d;
}

QTRat QTRat::swap_qt() const {
    QTRat r(num_.swap_qt());
    r.den_int_ = den_int_;
    for (const auto& [m, k] : den_) r.mul_binomial(Mono{m.t, m.q}, -k);
    r.normalize();
    return r;
}

std::string QTRat::str() const {
    if (is_laurent()) return num_.str();
    std::string d;
    if (den_int_ != 1) d = den_int_.get_str();
    for (const auto& [m, k] : den_) {
        if (!d.empty()) d += "*";
        d += "(1" + mono_str(mpz_class(-1), {{'q', m.q}, {'t', m.t}}, false) + ")";
        if (k != 1) d += "^" + std::to_string(k);
    }
    return "(" + num_.str() + ")/(" + d + ")";
}

QTRat omega_eval(const ExponentBag& bag, bool drop_constant) {
    QTRat r(1);
    for (const auto& [e, k] : bag.entries()) {
        if (e.is_one()) {
            if (drop_constant) continue;
            throw ZeroFactor("Omega of a bag with a constant entry");
        }
        r.mul_binomial(e, static_cast<int>(k));
    }
    r.normalize();
    return r;
}

}  // namespace qtknots
