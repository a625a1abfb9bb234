#pragma once

#include <map>
#include <string>

#include "qtknots/laurent.hpp"

namespace qtknots {

// Multiset of monomial exponents with signed multiplicities, the argument of
// the plethystic product Omega(sum a_ij q^i t^j) = prod (1 - q^i t^j)^a_ij.
class ExponentBag {
public:
    void add(Mono e, long mult = 1);
    void add(const ExponentBag& o, long scale = 1);
    ExponentBag negated() const;
    long mult(Mono e) const;
    const std::map<Mono, long>& entries() const { return entries_; }
    bool operator==(const ExponentBag&) const = default;

private:
    std::map<Mono, long> entries_;
};

// Structured element of Q(q,t):  num / (den_int * prod (1 - q^i t^j)^k).
// Every denominator factor is oriented with (i,j) lexicographically positive
// and den_int is positive. Values are normalized: numerator content shares no
// factor with den_int and no denominator binomial divides the numerator.
class QTRat {
public:
    QTRat() = default;
    QTRat(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
    QTRat(Laurent num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
    static QTRat fraction(const mpz_class& a, const mpz_class& b);
    static QTRat binomial_inverse(Mono m, int k = 1);

    const Laurent& num() const { return num_; }
    const mpz_class& den_int() const { return den_int_; }
    const std::map<Mono, int>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.empty() && den_int_ == 1; }

    QTRat operator-() const;
    friend QTRat operator+(const QTRat& a, const QTRat& b);
    friend QTRat operator-(const QTRat& a, const QTRat& b);
    friend QTRat operator*(const QTRat& a, const QTRat& b);
    friend QTRat operator/(const QTRat& a, const QTRat& b);
    QTRat& operator+=(const QTRat& o) { return *this = *this + o; }
    QTRat& operator-=(const QTRat& o) { return *this = *this - o; }
    QTRat& operator*=(const QTRat& o) { return *this = *this * o; }
    QTRat& operator/=(const QTRat& o) { return *this = *this / o; }
    // Equality of the represented functions (cross-multiplication).
    bool operator==(const QTRat& o) const;

    // Multiply by (1 - m)^k, k may be negative.
    void mul_binomial(Mono m, int k);
    // Fully cancelled Laurent polynomial, or NotPolynomial.
    Laurent to_laurent() const;
    // Exact value; PoleAtPoint if a denominator factor vanishes.
    mpq_class evaluate(const mpq_class& q0, const mpq_class& t0) const;
    QTRat swap_qt() const;
    std::string str() const;

    // Divide out binomials and integer content shared with the denominator.
    void normalize();

private:
    void cancel_content();
    Laurent num_;
    mpz_class den_int_ = 1;
    std::map<Mono, int> den_;
};

// Canonical orientation of (1 - q^m): returns the positive exponent and
// whether the factor was flipped, (1 - x) = -x (1 - x^-1).
bool orient(Mono& m);

// Omega product of a bag. With drop_constant the (0,0) entry is discarded
// first (restricted product); otherwise a (0,0) entry raises ZeroFactor.
QTRat omega_eval(const ExponentBag& bag, bool drop_constant);

// Laurent polynomial entry points used by the exactalg interface.
inline Laurent to_laurent(const QTRat& a) { return a.to_laurent(); }
inline mpq_class evaluate(const QTRat& a, const mpq_class& q0, const mpq_class& t0) {
    return a.evaluate(q0, t0);
}
inline Laurent substitute_t_by_qinv_t(const Laurent& p) { return p.subst_t_by_qinv_t(); }

}  // namespace qtknots
