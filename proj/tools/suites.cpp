#include "suites.hpp"

#include <numeric>
#include <stdexcept>

#include "qtknots/dyck.hpp"
#include "qtknots/errors.hpp"
#include "qtknots/knot.hpp"
#include "qtknots/shuffle.hpp"

namespace qtknots::cli {

namespace {

std::string pair_name(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

// sum_{i=0}^k q^i t^(k-i)
Laurent hook_sum(int k) {
    Laurent s;
    for (int i = 0; i <= k; ++i) s += Laurent::monomial(i, k - i);
    return s;
}

QTRat catalan_total(int m, int n) {
    QTRat s;
    for (const auto& lam : partitions_of(n)) s += stalk_catalan_over_g(SlopeData(m, n), lam);
    return s;
}

QTRat cuspidal_total(int m, int n) {
    QTRat s;
    for (const auto& lam : partitions_of(n)) s += stalk_cuspidal_over_g(SlopeData(m, n), lam);
    return s;
}

void expect(std::vector<CaseResult>& out, std::string name, const QTRat& got, const Laurent& want) {
    bool ok = got == QTRat(want);
    out.push_back({std::move(name), ok, ok ? got.str() : "got " + got.str() + ", expected " + want.str()});
}

std::vector<CaseResult> appendix() {
    std::vector<CaseResult> out;
    for (int k = 0; k <= 5; ++k) {
        expect(out, "catalan n=2 k=" + std::to_string(k), catalan_total(2 * k + 1, 2), hook_sum(k));
        expect(out, "cuspidal n=2 k=" + std::to_string(k), cuspidal_total(2 * k + 1, 2), hook_sum(k) * Laurent::q());
    }
    const Laurent qpt = Laurent::q() + Laurent::t();
    expect(out, "catalan (2,3)", catalan_total(2, 3), qpt);
    expect(out, "cuspidal (2,3)", cuspidal_total(2, 3), Laurent::monomial(2, 0) * qpt);
    expect(out, "catalan (3,4)", catalan_total(3, 4), Laurent::parse("q^3 + q^2*t + q*t + q*t^2 + t^3"));
    return out;
}

std::vector<CaseResult> prefix_identity(int max_n) {
    std::vector<CaseResult> out;
    for (int n = 1; n <= max_n; ++n) {
        for (const auto& lam : partitions_of(n)) {
            int bad = 0, total = 0;
            for (const auto& T : enumerate_syt(lam)) {
                ++total;
                if (!verify_theta_xi_identity(T)) ++bad;
            }
            out.push_back({"shape " + lam.key(), bad == 0, std::to_string(total - bad) + "/" + std::to_string(total) + " SYT"});
        }
    }
    return out;
}

std::vector<CaseResult> prop_pa(const SuiteOptions& o) {
    std::vector<CaseResult> out;
    const int max_n = o.max_n ? o.max_n : 4, max_m = o.max_m ? o.max_m : 9;
    for (int n = 1; n <= max_n; ++n) {
        for (int m = 1; m <= max_m; ++m) {
            if (std::gcd(m, n) != 1) continue;
            SlopeData s(m, n);
            CoeffVector a = c_mn_coeffs(s, Formula::syt, o.threads);
            CoeffVector b = c_mn_coeffs(s, Formula::asyt, o.threads);
            bool agree = true;
            for (const auto& [lam, c] : a.entries) agree = agree && c == b.entries.at(lam);
            out.push_back({"syt=asyt " + pair_name(m, n), agree, ""});
            out.push_back({"stalks " + pair_name(m, n), verify_prop_PA(s, o.threads), ""});
        }
    }
    for (int n = 2; n <= std::min(max_n, 4); ++n) {
        for (int m = 1; m <= std::min(max_m, 7); ++m) {
            if (std::gcd(m, n) != 1) continue;
            out.push_back({"presentations " + pair_name(m, n), sym_presentation_check(SlopeData(m, n), 20, o.seed),
                           "20 trials, seed " + std::to_string(o.seed)});
        }
    }
    return out;
}

std::vector<CaseResult> catalan(const SuiteOptions& o) {
    std::vector<CaseResult> out;
    const int max_n = o.max_n ? o.max_n : 4, max_m = o.max_m ? o.max_m : 7;
    for (int n = 1; n <= max_n; ++n) {
        for (int m = 1; m <= max_m; ++m) {
            if (std::gcd(m, n) != 1) continue;
            std::string why;
            Laurent c;
            try {
                c = qt_catalan(m, n, CatalanMethod::shuffle, o.threads);
            } catch (const NotPolynomial&) {
                out.push_back({"catalan " + pair_name(m, n), false, "not a polynomial"});
                continue;
            }
            if (c.has_negative_coeff() || c.min_q() < 0 || c.min_t() < 0) why += " negative";
            if (!(c == c.swap_qt())) why += " asymmetric";
            if (!(c == qt_catalan(m, n, CatalanMethod::dyck))) why += " dyck-mismatch";
            if (!(c == qt_catalan(n, m, CatalanMethod::shuffle, o.threads))) why += " transpose-mismatch";
            if (c.evaluate(1, 1) != rational_catalan_count(m, n)) why += " count";
            if (c.max_q() != (m - 1) * (n - 1) / 2) why += " top-degree";
            out.push_back({"catalan " + pair_name(m, n), why.empty(), why.empty() ? c.str() : why.substr(1)});
        }
    }
    return out;
}

bool nonnegative_polynomial(const Laurent& p) { return !p.has_negative_coeff() && p.min_q() >= 0 && p.min_t() >= 0; }

std::vector<CaseResult> macdonald(const SuiteOptions& o) {
    std::vector<CaseResult> out;
    const int max_n = o.max_n ? o.max_n : 5;
    for (int n = 1; n <= max_n; ++n) {
        for (const auto& lam : partitions_of(n)) {
            const SymF& h = modified_macdonald(lam);
            std::string why;
            if (!verify_macdonald_conditions(lam, h)) why += " conditions";
            for (const auto& [mu, c] : h.coeffs()) {
                if (!c.is_laurent() || !nonnegative_polynomial(c.num())) why += " positivity(" + mu.key() + ")";
            }
            const SymF& ht = modified_macdonald(conjugate(lam));
            for (const auto& mu : partitions_of(n)) {
                if (!(ht.coeff(mu) == h.coeff(mu).swap_qt())) why += " transpose(" + mu.key() + ")";
            }
            out.push_back({"H " + lam.key(), why.empty(), why.empty() ? "" : why.substr(1)});
        }
    }
    return out;
}

std::vector<CaseResult> symmetry(const SuiteOptions& o) {
    std::vector<CaseResult> out;
    const int max_n = o.max_n ? o.max_n : 5, max_m = o.max_m ? o.max_m : 5;
    for (int n = 1; n <= max_n; ++n) {
        for (int m = 1; m <= max_m; ++m) {
            if (std::gcd(m, n) != 1) continue;
            SlopeData s(m, n);
            std::string why;
            SuperPoly raw = hhh_superpoly(s, false, nullptr, o.threads);
            if (raw.has_negative_coeff()) why += " negative";
            if (!catalan_consistency(s, o.threads)) why += " catalan-consistency";
            Laurent cat = qt_catalan(m, n, CatalanMethod::shuffle, o.threads).subst_t_by_qinv_t();
            if (!(raw.a_part(0) == cat)) why += " a0-mismatch";
            if (m < n && !verify_mn_symmetry(m, n, o.threads)) why += " mn-symmetry";
            out.push_back({"hhh " + pair_name(m, n), why.empty(), why.empty() ? hhh_superpoly(s, true).str() : why.substr(1)});
        }
    }
    return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"appendix", "prefix-identity", "prop-pa", "catalan", "macdonald", "symmetry"};
    return names;
}

std::vector<CaseResult> run_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "appendix") return appendix();
    if (name == "prefix-identity") return prefix_identity(opt.max_n ? opt.max_n : 6);
    if (name == "prop-pa") return prop_pa(opt);
    if (name == "catalan") return catalan(opt);
    if (name == "macdonald") return macdonald(opt);
    if (name == "symmetry") return symmetry(opt);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace qtknots::cli
