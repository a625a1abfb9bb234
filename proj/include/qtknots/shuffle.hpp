#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "qtknots/partition.hpp"
#include "qtknots/ratfunc.hpp"
#include "qtknots/symfunc.hpp"
#include "qtknots/tableau.hpp"

namespace qtknots {

// Coprime slope c = m/n with m, n positive.
struct SlopeData {
    int m;
    int n;
    SlopeData(int m_, int n_);
};

enum class Rounding { floor, ceiling };
enum class Formula { syt, asyt };

struct CoeffVector {
    int m;
    int n;
    std::map<Partition, QTRat> entries;
    QTRat total() const;
};

std::vector<int> mu_weights(const SlopeData& s, Rounding r);
// Same rule for an arbitrary integer numerator (m may be zero or negative).
std::vector<int> mu_weights(int m, int n, Rounding r);

// Exponent of prod_i chi_{n-i+1}^{mu(i)} for the given weight sequence.
Mono mu_monomial(const std::vector<Mono>& chi, const std::vector<int>& mu);

// Single tableau contributions to c^lambda; they sum to the coefficient.
QTRat syt_term(const Tableau& T, int m);
QTRat asyt_term(const Tableau& T, int m);

QTRat c_mn_coefficient(int m, int n, const Partition& lambda, Formula f, int threads = 1);
CoeffVector c_mn_coeffs(const SlopeData& s, Formula f, int threads = 1);
// Integer numerator variant; only the SYT formula is used for m <= 0.
CoeffVector c_coeffs(int m, int n, Formula f, int threads = 1);

// Single tableau contributions to the stalk characters divided by g_lambda.
QTRat cuspidal_stalk_term(const Tableau& T, int m);
QTRat catalan_stalk_term(const Tableau& T, int m);

// Stalk characters divided by g_lambda, and the full characters.
QTRat stalk_cuspidal_over_g(const SlopeData& s, const Partition& lambda);
QTRat stalk_catalan_over_g(const SlopeData& s, const Partition& lambda);
QTRat stalk_char_cuspidal(const SlopeData& s, const Partition& lambda);
QTRat stalk_char_catalan(const SlopeData& s, const Partition& lambda);

bool verify_prop_PA(const SlopeData& s, int threads = 1);

SymF pmn_dot_1(const SlopeData& s, int threads = 1);
SymF pmn_dot_1(int m, int n, int threads = 1);

// Sample-point evaluation of symmetric rational functions in z_1..z_k.
struct Evaluable {
    int vars = 0;
    std::function<mpq_class(const std::vector<mpq_class>& z, const mpq_class& q, const mpq_class& t)> fn;
};

struct SamplePoint {
    mpq_class q;
    mpq_class t;
    std::vector<mpq_class> z;
};

mpq_class omega_kernel(const mpq_class& x, const mpq_class& q, const mpq_class& t);

// Both symmetrized presentations of the shuffle generator at one point.
mpq_class catalan_shuffle_eval(int m, int n, const SamplePoint& pt);
mpq_class cuspidal_shuffle_eval(int m, int n, const SamplePoint& pt);

bool sym_presentation_check(const SlopeData& s, int trials, std::uint64_t seed);
bool wheel_check(const Evaluable& f, int k, int trials, std::uint64_t seed);
mpq_class shuffle_mul_eval(const Evaluable& f, const Evaluable& g, const SamplePoint& pt);

}  // namespace qtknots
