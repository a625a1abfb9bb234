#include "qtknots/knot.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "qtknots/dyck.hpp"
#include "qtknots/errors.hpp"

namespace qtknots {

void SuperPoly::add(int ea, const Laurent& p) {
    for (const auto& tm : p.terms()) {
        auto [it, fresh] = terms_.try_emplace(Key{ea, tm.e.q, tm.e.t}, 0);
        it->second += tm.c;
        if (it->second == 0) terms_.erase(it);
    }
}

Laurent SuperPoly::a_part(int k) const {
    std::vector<Term> v;
    for (const auto& [key, c] : terms_)
        if (key[0] == k) v.push_back({Mono{key[1], key[2]}, c});
    return Laurent::from_terms(std::move(v));
}

SuperPoly SuperPoly::shifted(Mono e) const {
    SuperPoly r;
    for (const auto& [key, c] : terms_) r.terms_.emplace(Key{key[0], key[1] + e.q, key[2] + e.t}, c);
    return r;
}

bool SuperPoly::has_negative_coeff() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second < 0; });
}

mpz_class SuperPoly::eval_one() const {
    mpz_class s = 0;
    for (const auto& [key, c] : terms_) s += c;
    return s;
}

std::string SuperPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        out += mono_str(c, {{'a', key[0]}, {'q', key[1]}, {'t', key[2]}}, first);
        first = false;
    }
    return out;
}

std::string SuperPoly::pretty() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Key, mpz_class>> order(terms_.begin(), terms_.end());
    std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
        const Key& a = x.first;
        const Key& b = y.first;
        if (a[0] != b[0]) return a[0] < b[0];
        return a[1] != b[1] ? a[1] > b[1] : a[2] < b[2];
    });
    std::string out;
    bool first = true;
    for (const auto& [key, c] : order) {
        out += mono_str(c, {{'a', key[0]}, {'q', key[1]}, {'t', key[2]}}, first);
        first = false;
    }
    return out;
}

std::map<Partition, Laurent> pmn_schur(int m, int n, int threads) {
    CoeffVector cv = c_coeffs(m, n, Formula::syt, threads);
    std::map<Partition, QTRat> acc;
    for (const auto& [lam, c] : cv.entries) {
        for (const auto& [mu, h] : modified_macdonald(lam).coeffs()) acc[mu] += c * h;
    }
    std::map<Partition, Laurent> out;
    for (const auto& [mu, c] : acc) {
        Laurent p = c.to_laurent();
        if (!p.is_zero()) out.emplace(mu, std::move(p));
    }
    return out;
}

// gr L_{m/n} carries the sign-twisted character of the generator one slope
// step down: its s_mu coefficient is the s_{mu^t} coefficient of
// P_{m-n,n} . 1, read in the variables (q, t/q).
SymF frobenius_L(const SlopeData& s, int threads) {
    SymF out(s.n, Basis::schur);
    for (const auto& [mu, p] : pmn_schur(s.m - s.n, s.n, threads)) out.add(conjugate(mu), QTRat(p.subst_t_by_qinv_t()));
    return out;
}

SuperPoly hhh_superpoly(const SlopeData& s, bool normalize, Mono* shift, int threads) {
    const int n = s.n;
    SymF F = frobenius_L(s, threads);
    SuperPoly h;
    for (int k = 0; k < n; ++k) {
        std::vector<int> hook{n - k};
        hook.insert(hook.end(), static_cast<std::size_t>(k), 1);
        h.add(k, F.coeff(Partition(hook)).to_laurent());
    }
    Mono e{};
    if (normalize && !h.terms().empty()) {
        int mq = INT_MAX, mt = INT_MAX;
        for (const auto& [key, c] : h.terms()) {
            mq = std::min(mq, key[1]);
            mt = std::min(mt, key[2]);
        }
        e = Mono{-mq, -mt};
        h = h.shifted(e);
    }
    if (shift) *shift = e;
    return h;
}

bool verify_mn_symmetry(int m, int n, int threads) {
    if (std::gcd(m, n) != 1) throw NotCoprime("m=" + std::to_string(m) + " and n=" + std::to_string(n) + " are not coprime");
    return hhh_superpoly(SlopeData(m, n), true, nullptr, threads) == hhh_superpoly(SlopeData(n, m), true, nullptr, threads);
}

bool catalan_consistency(const SlopeData& s, int threads) {
    Laurent a0 = hhh_superpoly(s, false, nullptr, threads).a_part(0);
    if (a0.evaluate(1, 1) != rational_catalan_count(s.m, s.n)) return false;
    if (a0.is_zero()) return false;
    const int mu = (s.m - 1) * (s.n - 1) / 2;
    return a0.min_q() == -mu && a0.max_q() == mu;
}

}  // namespace qtknots
