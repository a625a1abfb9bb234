#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qtknots {

// Exponent pair of a monomial q^q t^t.
struct Mono {
    int q = 0;
    int t = 0;
    auto operator<=>(const Mono&) const = default;
    Mono operator+(Mono o) const { return {q + o.q, t + o.t}; }
    Mono operator-(Mono o) const { return {q - o.q, t - o.t}; }
    Mono operator-() const { return {-q, -t}; }
    bool is_one() const { return q == 0 && t == 0; }
};

struct Term {
    Mono e;
    mpz_class c;
};

// Sparse Laurent polynomial in q,t with big-integer coefficients. Terms are
// kept sorted ascending by (e_q, e_t) and never hold a zero coefficient.
class Laurent {
public:
    Laurent() = default;
    Laurent(long c);  // NOLINT(google-explicit-constructor)
    explicit Laurent(const mpz_class& c, Mono e = {});

    static Laurent monomial(int eq, int et, long c = 1) { return Laurent(mpz_class(c), Mono{eq, et}); }
    static Laurent q() { return monomial(1, 0); }
    static Laurent t() { return monomial(0, 1); }
    // (1 - q^a t^b)
    static Laurent binomial(Mono m);
    // Build from unsorted terms, merging duplicates and dropping zeros.
    static Laurent from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool has_negative_coeff() const;
    mpz_class coeff(Mono e) const;
    mpz_class content() const;  // gcd of coefficients, 0 for the zero polynomial

    int min_q() const;
    int max_q() const;
    int min_t() const;
    int max_t() const;

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o);
    Laurent& operator*=(const mpz_class& c);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend Laurent operator*(Laurent a, const mpz_class& c) { return a *= c; }
    bool operator==(const Laurent& o) const;

    // Multiply by the monomial q^e.q t^e.t.
    Laurent shifted(Mono e) const;
    // Multiply by (1 - q^m.q t^m.t)^k in place, k >= 0.
    void mul_binomial(Mono m, int k = 1);
    // Exact division by (1 - q^m.q t^m.t); nullopt if it does not divide.
    std::optional<Laurent> div_binomial(Mono m) const;
    // Exact division of every coefficient by c; caller guarantees divisibility.
    void divexact(const mpz_class& c);
    // Exact division by a general Laurent polynomial; nullopt if not exact.
    std::optional<Laurent> div_exact(const Laurent& d) const;

    Laurent pow(unsigned k) const;
    mpq_class evaluate(const mpq_class& q0, const mpq_class& t0) const;
    // Map q^i t^j to q^(i-j) t^j.
    Laurent subst_t_by_qinv_t() const;
    Laurent swap_qt() const;

    // Canonical form: terms ascending by (e_q, e_t).
    std::string str() const;
    // Display form: descending q degree, then ascending t degree.
    std::string pretty() const;
    static Laurent parse(std::string_view s);

private:
    std::vector<Term> terms_;
};

// Monomial rendering shared with the superpolynomial printer.
std::string mono_str(const mpz_class& c, const std::vector<std::pair<char, int>>& vars, bool first);

mpq_class mpq_pow(const mpq_class& x, int k);

}  // namespace qtknots
