#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qtknots/partition.hpp"
#include "qtknots/ratfunc.hpp"

namespace qtknots {

enum class Basis { monomial, elementary, homogeneous, powersum, schur, macdonald };

std::string basis_name(Basis b);

// Homogeneous symmetric function of degree n over Q(q,t).
class SymF {
public:
    SymF(int n, Basis b) : n_(n), basis_(b) {}
    static SymF basis_element(Basis b, const Partition& lambda, QTRat c = 1);

    int degree() const { return n_; }
    Basis basis() const { return basis_; }
    const std::map<Partition, QTRat>& coeffs() const { return coeffs_; }
    QTRat coeff(const Partition& lambda) const;
    // Adds c to the coefficient of lambda; zero results are erased.
    void add(const Partition& lambda, const QTRat& c);
    bool operator==(const SymF& o) const;

private:
    int n_;
    Basis basis_;
    std::map<Partition, QTRat> coeffs_;
};

// Configured maximum degree for transition tables and Macdonald solving.
int degree_cap();
void set_degree_cap(int n);

// chi^lambda evaluated on the class of cycle type rho (Murnaghan-Nakayama).
long character(const Partition& lambda, const Partition& rho);

SymF basis_convert(const SymF& f, Basis target);
QTRat hall_inner(const SymF& f, const SymF& g);
// p_k -> scale(k) p_k. The result is returned in the power-sum basis.
SymF diagonal_plethysm(const SymF& f, const std::function<QTRat(int)>& scale);
QTRat schur_coefficient(const SymF& f, const Partition& mu);

// Schur expansion of the modified Macdonald polynomial, solved from its
// triangularity conditions by fraction-free elimination and cached per degree.
const SymF& modified_macdonald(const Partition& lambda);
// Seeds the in-memory table for one degree (used by the on-disk cache).
void preload_macdonald(int n, const std::map<Partition, SymF>& table);
std::map<Partition, SymF> macdonald_table(int n);
// Solves without consulting or filling the cache.
SymF solve_modified_macdonald(const Partition& lambda);

// Re-checks the three defining conditions through the generic plethysm path.
bool verify_macdonald_conditions(const Partition& lambda, const SymF& schur_expansion);

}  // namespace qtknots
