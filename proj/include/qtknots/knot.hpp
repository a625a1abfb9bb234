#pragma once

#include <array>
#include <map>
#include <string>

#include "qtknots/laurent.hpp"
#include "qtknots/shuffle.hpp"
#include "qtknots/symfunc.hpp"

namespace qtknots {

// Laurent polynomial in a, q, t with integer coefficients.
class SuperPoly {
public:
    using Key = std::array<int, 3>;  // (e_a, e_q, e_t)

    void add(int ea, const Laurent& p);
    const std::map<Key, mpz_class>& terms() const { return terms_; }
    // Part of a-degree k as a Laurent polynomial in q,t.
    Laurent a_part(int k) const;
    SuperPoly shifted(Mono e) const;
    bool has_negative_coeff() const;
    mpz_class eval_one() const;
    bool operator==(const SuperPoly&) const = default;
    std::string str() const;     // terms ascending by (e_a, e_q, e_t)
    std::string pretty() const;  // a ascending, then the Laurent display order

private:
    std::map<Key, mpz_class> terms_;
};

// Schur expansion of P_{m,n} . 1 with integer numerator m; coefficients are
// Laurent polynomials once summed over lambda.
std::map<Partition, Laurent> pmn_schur(int m, int n, int threads = 1);

// Bigraded Frobenius character of gr L_{m/n} in the Schur basis.
SymF frobenius_L(const SlopeData& s, int threads = 1);

// Triply graded superpolynomial; `shift` receives the normalizing monomial.
SuperPoly hhh_superpoly(const SlopeData& s, bool normalize, Mono* shift = nullptr, int threads = 1);
bool verify_mn_symmetry(int m, int n, int threads = 1);
bool catalan_consistency(const SlopeData& s, int threads = 1);

}  // namespace qtknots
