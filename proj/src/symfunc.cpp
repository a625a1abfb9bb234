#include "qtknots/symfunc.hpp"

#include <atomic>
#include <map>
#include <memory>
#include <mutex>

#include "qtknots/errors.hpp"

namespace qtknots {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::monomial: return "m";
        case Basis::elementary: return "e";
        case Basis::homogeneous: return "h";
        case Basis::powersum: return "p";
        case Basis::schur: return "s";
        case Basis::macdonald: return "H";
    }
    return "?";
}

SymF SymF::basis_element(Basis b, const Partition& lambda, QTRat c) {
    SymF f(lambda.size(), b);
    f.add(lambda, c);
    return f;
}

QTRat SymF::coeff(const Partition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? QTRat() : it->second;
}

void SymF::add(const Partition& lambda, const QTRat& c) {
    if (lambda.size() != n_) throw DegreeMismatch("partition " + lambda.key() + " has wrong size");
    if (c.is_zero()) return;
    auto it = coeffs_.find(lambda);
    if (it == coeffs_.end()) {
        coeffs_.emplace(lambda, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
}

bool SymF::operator==(const SymF& o) const {
    if (n_ != o.n_ || basis_ != o.basis_ || coeffs_.size() != o.coeffs_.size()) return false;
    for (const auto& [lam, c] : coeffs_) {
        auto it = o.coeffs_.find(lam);
        if (it == o.coeffs_.end() || !(it->second == c)) return false;
    }
    return true;
}

namespace {

std::atomic<int> g_cap{8};

void check_cap(int n) {
    if (n > g_cap.load()) {
        throw DegreeCapExceeded("degree " + std::to_string(n) + " exceeds cap " + std::to_string(g_cap.load()));
    }
}

// Murnaghan-Nakayama on beta-sets: removing a rim hook of length k moves one
// bead from b to b-k; the sign counts beads jumped over.
long mn_rec(std::vector<int>& beta, const std::vector<int>& rho, std::size_t r,
            std::map<std::pair<std::vector<int>, std::size_t>, long>& memo) {
    if (r == rho.size()) return 1;
    auto key = std::make_pair(beta, r);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int k = rho[r];
    long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int b = beta[i];
        const int nb = b - k;
        if (nb < 0) continue;
        bool taken = false;
        int between = 0;
        for (int x : beta) {
            if (x == nb) taken = true;
            if (x > nb && x < b) ++between;
        }
        if (taken) continue;
        beta[i] = nb;
        long v = mn_rec(beta, rho, r + 1, memo);
        beta[i] = b;
        total += (between % 2 == 0) ? v : -v;
    }
    memo.emplace(std::move(key), total);
    return total;
}

using QMatrix = std::vector<std::vector<mpq_class>>;

QMatrix invert(const QMatrix& a) {
    const std::size_t n = a.size();
    QMatrix m = a, inv(n, std::vector<mpq_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) throw SingularSystem("singular transition matrix");
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        mpq_class piv = m[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            mpq_class f = m[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

struct Tables {
    std::vector<Partition> parts;
    std::map<Partition, std::size_t> index;
    std::vector<std::vector<long>> chi;  // chi[lambda][rho]
    // to_s[b][row = basis element][col = Schur index]; from_s is the inverse.
    QMatrix to_s[5];
    QMatrix from_s[5];
};

Partition merge_parts(const Partition& a, const Partition& b) {
    std::vector<int> v = a.parts();
    v.insert(v.end(), b.parts().begin(), b.parts().end());
    std::sort(v.rbegin(), v.rend());
    return Partition(std::move(v));
}

// h_k or e_k in power-sum coordinates, as a map.
std::map<Partition, mpq_class> hk_in_p(int k, bool elementary) {
    std::map<Partition, mpq_class> out;
    for (const auto& rho : partitions_of(k)) {
        mpq_class c(1, 1);
        c /= mpq_class(z_lambda(rho));
        if (elementary && (k - rho.length()) % 2 != 0) c = -c;
        out.emplace(rho, c);
    }
    return out;
}

std::unique_ptr<Tables> build_tables(int n) {
    auto tb = std::make_unique<Tables>();
    tb->parts = partitions_of(n);
    const std::size_t p = tb->parts.size();
    for (std::size_t i = 0; i < p; ++i) tb->index.emplace(tb->parts[i], i);
    tb->chi.assign(p, std::vector<long>(p, 0));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) tb->chi[i][j] = character(tb->parts[i], tb->parts[j]);

    auto& PS = tb->to_s[static_cast<int>(Basis::powersum)];
    PS.assign(p, std::vector<mpq_class>(p, 0));
    for (std::size_t r = 0; r < p; ++r)
        for (std::size_t l = 0; l < p; ++l) PS[r][l] = tb->chi[l][r];

    auto& SS = tb->to_s[static_cast<int>(Basis::schur)];
    SS.assign(p, std::vector<mpq_class>(p, 0));
    for (std::size_t i = 0; i < p; ++i) SS[i][i] = 1;

    for (bool elem : {false, true}) {
        auto& M = tb->to_s[static_cast<int>(elem ? Basis::elementary : Basis::homogeneous)];
        M.assign(p, std::vector<mpq_class>(p, 0));
        for (std::size_t r = 0; r < p; ++r) {
            std::map<Partition, mpq_class> acc{{Partition(), mpq_class(1)}};
            for (int part : tb->parts[r].parts()) {
                std::map<Partition, mpq_class> next;
                for (const auto& [a, ca] : acc)
                    for (const auto& [b, cb] : hk_in_p(part, elem)) next[merge_parts(a, b)] += ca * cb;
                acc = std::move(next);
            }
            for (const auto& [rho, c] : acc) {
                std::size_t ri = tb->index.at(rho);
                for (std::size_t l = 0; l < p; ++l) M[r][l] += c * PS[ri][l];
            }
        }
    }
    // <h_nu, m_mu> = delta, so the Schur rows of m are the columns of h^-1.
    QMatrix hinv = invert(tb->to_s[static_cast<int>(Basis::homogeneous)]);
    auto& MS = tb->to_s[static_cast<int>(Basis::monomial)];
    MS.assign(p, std::vector<mpq_class>(p, 0));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) MS[i][j] = hinv[j][i];

    for (int b = 0; b < 5; ++b) tb->from_s[b] = invert(tb->to_s[b]);
    return tb;
}

const Tables& tables(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Tables>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_tables(n)).first;
    return *it->second;
}

QTRat scaled(const QTRat& x, const mpq_class& c) {
    if (c == 0 || x.is_zero()) return {};
    if (c == 1) return x;
    return x * QTRat::fraction(c.get_num(), c.get_den());
}

// Schur coordinates of f, indexed as tables(n).parts.
std::vector<QTRat> to_schur_coords(const SymF& f) {
    const Tables& tb = tables(f.degree());
    std::vector<QTRat> v(tb.parts.size());
    if (f.basis() == Basis::macdonald) {
        for (const auto& [lam, c] : f.coeffs()) {
            const SymF& h = modified_macdonald(lam);
            for (const auto& [mu, d] : h.coeffs()) v[tb.index.at(mu)] += c * d;
        }
        return v;
    }
    const QMatrix& M = tb.to_s[static_cast<int>(f.basis())];
    for (const auto& [lam, c] : f.coeffs()) {
        const auto& row = M[tb.index.at(lam)];
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) v[j] += scaled(c, row[j]);
    }
    return v;
}

std::vector<QTRat> from_schur_coords(const std::vector<QTRat>& v, Basis target, const Tables& tb) {
    const QMatrix& M = tb.from_s[static_cast<int>(target)];
    std::vector<QTRat> w(tb.parts.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < w.size(); ++j)
            if (M[i][j] != 0) w[j] += scaled(v[i], M[i][j]);
    }
    return w;
}

// <p_rho, p_rho>_* = z_rho (-1)^(n - l(rho)) prod (1-q^r)(1-t^r)
QTRat star_weight(const Partition& rho) {
    QTRat w(Laurent(z_lambda(rho)));
    if ((rho.size() - rho.length()) % 2 != 0) w = -w;
    for (int r : rho.parts()) {
        w.mul_binomial(Mono{r, 0}, 1);
        w.mul_binomial(Mono{0, r}, 1);
    }
    return w;
}

}  // namespace

int degree_cap() { return g_cap.load(); }
void set_degree_cap(int n) { g_cap.store(n); }

long character(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size()) throw SizeMismatch("character arguments of different sizes");
    std::vector<int> beta;
    const int len = lambda.length();
    for (int i = 0; i < len; ++i) beta.push_back(lambda[i] + (len - 1 - i));
    std::map<std::pair<std::vector<int>, std::size_t>, long> memo;
    return mn_rec(beta, rho.parts(), 0, memo);
}

SymF basis_convert(const SymF& f, Basis target) {
    check_cap(f.degree());
    if (f.basis() == target) return f;
    const Tables& tb = tables(f.degree());
    std::vector<QTRat> v = to_schur_coords(f);
    SymF out(f.degree(), target);
    if (target == Basis::macdonald) {
        // Macdonald polynomials are orthogonal for the *-pairing.
        std::vector<QTRat> fp = from_schur_coords(v, Basis::powersum, tb);
        for (const auto& lam : tb.parts) {
            std::vector<QTRat> hs(tb.parts.size());
            for (const auto& [mu, d] : modified_macdonald(lam).coeffs()) hs[tb.index.at(mu)] = d;
            std::vector<QTRat> hp = from_schur_coords(hs, Basis::powersum, tb);
            QTRat num, norm;
            for (std::size_t r = 0; r < tb.parts.size(); ++r) {
                if (hp[r].is_zero()) continue;
                QTRat w = star_weight(tb.parts[r]);
                norm += hp[r] * hp[r] * w;
                if (!fp[r].is_zero()) num += fp[r] * hp[r] * w;
            }
            out.add(lam, num / norm);
        }
        return out;
    }
    std::vector<QTRat> w = target == Basis::schur ? v : from_schur_coords(v, target, tb);
    for (std::size_t j = 0; j < w.size(); ++j) out.add(tb.parts[j], w[j]);
    return out;
}

QTRat hall_inner(const SymF& f, const SymF& g) {
    if (f.degree() != g.degree()) throw DegreeMismatch("Hall pairing of different degrees");
    check_cap(f.degree());
    std::vector<QTRat> a = to_schur_coords(f), b = to_schur_coords(g);
    QTRat s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

SymF diagonal_plethysm(const SymF& f, const std::function<QTRat(int)>& scale) {
    SymF p = basis_convert(f, Basis::powersum);
    std::map<int, QTRat> memo;
    SymF out(f.degree(), Basis::powersum);
    for (const auto& [rho, c] : p.coeffs()) {
        QTRat x = c;
        for (int k : rho.parts()) {
            auto it = memo.find(k);
            if (it == memo.end()) it = memo.emplace(k, scale(k)).first;
            x *= it->second;
        }
        out.add(rho, x);
    }
    return out;
}

QTRat schur_coefficient(const SymF& f, const Partition& mu) {
    if (mu.size() != f.degree()) throw DegreeMismatch("Schur coefficient of the wrong degree");
    if (f.basis() == Basis::schur) return f.coeff(mu);
    return basis_convert(f, Basis::schur).coeff(mu);
}

// ---------------------------------------------------------------------------
// Modified Macdonald polynomials.

namespace {

using PMatrix = std::vector<std::vector<Laurent>>;

Laurent exact(const Laurent& a, const Laurent& b) {
    auto r = a.div_exact(b);
    if (!r) throw SingularSystem("inexact fraction-free elimination step");
    return std::move(*r);
}

// n! times the Schur matrix of the plethysm p_k -> (1 - x^k) p_k, x = q or t.
PMatrix plethysm_matrix(int n, bool in_t) {
    const Tables& tb = tables(n);
    const std::size_t p = tb.parts.size();
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
    std::vector<Laurent> weight(p);
    for (std::size_t r = 0; r < p; ++r) {
        Laurent w(mpz_class(fact / z_lambda(tb.parts[r])));
        for (int k : tb.parts[r].parts()) w.mul_binomial(in_t ? Mono{0, k} : Mono{k, 0});
        weight[r] = std::move(w);
    }
    PMatrix A(p, std::vector<Laurent>(p));
    for (std::size_t nu = 0; nu < p; ++nu) {
        for (std::size_t mu = 0; mu < p; ++mu) {
            Laurent s;
            for (std::size_t r = 0; r < p; ++r) {
                long c = tb.chi[mu][r] * tb.chi[nu][r];
                if (c != 0) s += weight[r] * mpz_class(c);
            }
            A[nu][mu] = std::move(s);
        }
    }
    return A;
}

struct MacState {
    std::mutex mu;
    std::map<int, std::map<Partition, SymF>> table;
    std::map<std::pair<int, bool>, PMatrix> pleth;
};

MacState& mac_state() {
    static MacState s;
    return s;
}

}  // namespace

SymF solve_modified_macdonald(const Partition& lambda) {
    const int n = lambda.size();
    check_cap(n);
    if (n == 0) throw DegreeMismatch("empty partition");
    const Tables& tb = tables(n);
    const std::size_t p = tb.parts.size();
    PMatrix Aq, At;
    {
        MacState& st = mac_state();
        std::lock_guard<std::mutex> lock(st.mu);
        for (bool in_t : {false, true}) {
            auto key = std::make_pair(n, in_t);
            if (!st.pleth.count(key)) st.pleth.emplace(key, plethysm_matrix(n, in_t));
        }
        Aq = st.pleth.at({n, false});
        At = st.pleth.at({n, true});
    }
    const Partition lt = conjugate(lambda);
    PMatrix M;
    for (std::size_t nu = 0; nu < p; ++nu) {
        if (!dominance_leq(lambda, tb.parts[nu])) M.push_back(Aq[nu]);
        if (!dominance_leq(lt, tb.parts[nu])) M.push_back(At[nu]);
    }
    // Fraction-free Gauss-Jordan: after each step every pivot equals the
    // current leading minor and all divisions are exact.
    Laurent prev(1);
    std::size_t r = 0;
    std::vector<std::size_t> pivcol;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < p; ++c) {
        std::size_t i = r;
        while (i < M.size() && M[i][c].is_zero()) ++i;
        if (i == M.size()) {
            free_cols.push_back(c);
            continue;
        }
        std::swap(M[i], M[r]);
        const Laurent piv = M[r][c];
        for (std::size_t k = 0; k < M.size(); ++k) {
            if (k == r) continue;
            const Laurent f = M[k][c];
            for (std::size_t j = 0; j < p; ++j) {
                if (j == c) continue;
                Laurent v = piv * M[k][j];
                if (!f.is_zero() && !M[r][j].is_zero()) v -= f * M[r][j];
                M[k][j] = exact(v, prev);
            }
            M[k][c] = Laurent();
        }
        prev = piv;
        pivcol.push_back(c);
        ++r;
    }
    if (free_cols.size() != 1) throw SingularSystem("defining conditions do not determine " + lambda.key());
    const std::size_t f = free_cols[0];
    // Null vector: x_f = d, x_{pivcol[i]} = -M[i][f], with d the common pivot.
    std::vector<Laurent> x(p);
    x[f] = prev;
    for (std::size_t i = 0; i < pivcol.size(); ++i) {
        if (!(M[i][pivcol[i]] == prev)) throw SingularSystem("unequal pivots in elimination");
        x[pivcol[i]] = -M[i][f];
    }
    const std::size_t top = tb.index.at(Partition({n}));
    if (x[top].is_zero()) throw SingularSystem("normalization coefficient vanishes for " + lambda.key());
    SymF out(n, Basis::schur);
    for (std::size_t j = 0; j < p; ++j) {
        if (x[j].is_zero()) continue;
        auto c = x[j].div_exact(x[top]);
        if (!c) throw SingularSystem("non-polynomial Schur coefficient for " + lambda.key());
        out.add(tb.parts[j], QTRat(std::move(*c)));
    }
    return out;
}

const SymF& modified_macdonald(const Partition& lambda) {
    check_cap(lambda.size());
    MacState& st = mac_state();
    {
        std::lock_guard<std::mutex> lock(st.mu);
        auto& t = st.table[lambda.size()];
        if (auto it = t.find(lambda); it != t.end()) return it->second;
    }
    SymF h = solve_modified_macdonald(lambda);
    std::lock_guard<std::mutex> lock(st.mu);
    auto& t = st.table[lambda.size()];
    return t.emplace(lambda, std::move(h)).first->second;
}

void preload_macdonald(int n, const std::map<Partition, SymF>& table) {
    MacState& st = mac_state();
    std::lock_guard<std::mutex> lock(st.mu);
    auto& t = st.table[n];
    for (const auto& [lam, f] : table) t.emplace(lam, f);
}

std::map<Partition, SymF> macdonald_table(int n) {
    std::map<Partition, SymF> out;
    for (const auto& lam : partitions_of(n)) out.emplace(lam, modified_macdonald(lam));
    return out;
}

bool verify_macdonald_conditions(const Partition& lambda, const SymF& f) {
    const int n = lambda.size();
    if (f.degree() != n) return false;
    const Partition lt = conjugate(lambda);
    for (bool in_t : {false, true}) {
        SymF g = basis_convert(
            diagonal_plethysm(f, [in_t](int k) { return QTRat(Laurent::binomial(in_t ? Mono{0, k} : Mono{k, 0})); }),
            Basis::schur);
        for (const auto& [nu, c] : g.coeffs())
            if (!dominance_leq(in_t ? lt : lambda, nu)) return false;
    }
    return schur_coefficient(f, Partition({n})) == QTRat(1);
}

}  // namespace qtknots
