#include "qtknots/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "qtknots/errors.hpp"

namespace qtknots {

namespace {

// Floor division for possibly negative numerators, b > 0.
int fdiv(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

}  // namespace

Laurent::Laurent(long c) {
    if (c != 0) terms_.push_back({Mono{}, mpz_class(c)});
}

Laurent::Laurent(const mpz_class& c, Mono e) {
    if (c != 0) terms_.push_back({e, c});
}

Laurent Laurent::binomial(Mono m) {
    if (m.is_one()) throw ZeroFactor("binomial (1 - 1) is zero");
    Laurent r(1);
    r -= Laurent(mpz_class(1), m);
    return r;
}

Laurent Laurent::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.e < b.e; });
    Laurent r;
    for (auto& tm : terms) {
        if (!r.terms_.empty() && r.terms_.back().e == tm.e) {
            r.terms_.back().c += tm.c;
        } else {
            if (!r.terms_.empty() && r.terms_.back().c == 0) r.terms_.pop_back();
            r.terms_.push_back(std::move(tm));
        }
    }
    if (!r.terms_.empty() && r.terms_.back().c == 0) r.terms_.pop_back();
    return r;
}

bool Laurent::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].e.is_one());
}

bool Laurent::has_negative_coeff() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.c < 0; });
}

mpz_class Laurent::coeff(Mono e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& a, Mono b) { return a.e < b; });
    if (it != terms_.end() && it->e == e) return it->c;
    return 0;
}

mpz_class Laurent::content() const {
    mpz_class g = 0;
    for (const auto& tm : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), tm.c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

int Laurent::min_q() const { return terms_.empty() ? 0 : terms_.front().e.q; }
int Laurent::max_q() const { return terms_.empty() ? 0 : terms_.back().e.q; }
int Laurent::min_t() const {
    int m = 0;
    bool first = true;
    for (const auto& tm : terms_) {
        if (first || tm.e.t < m) m = tm.e.t;
        first = false;
    }
    return m;
}
int Laurent::max_t() const {
    int m = 0;
    bool first = true;
    for (const auto& tm : terms_) {
        if (first || tm.e.t > m) m = tm.e.t;
        first = false;
    }
    return m;
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& tm : r.terms_) tm.c = -tm.c;
    return r;
}

static std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, bool sub) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].e < b[j].e)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].e < a[i].e) {
            out.push_back({b[j].e, sub ? mpz_class(-b[j].c) : b[j].c});
            ++j;
        } else {
            mpz_class c = sub ? mpz_class(a[i].c - b[j].c) : mpz_class(a[i].c + b[j].c);
            if (c != 0) out.push_back({a[i].e, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_add(terms_, o.terms_, false);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_add(terms_, o.terms_, true);
    return *this;
}

Laurent& Laurent::operator*=(const mpz_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& tm : terms_) tm.c *= c;
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.size() == 1) {
        Laurent r = a.shifted(b.terms_[0].e);
        return r *= b.terms_[0].c;
    }
    if (a.size() == 1) {
        Laurent r = b.shifted(a.terms_[0].e);
        return r *= a.terms_[0].c;
    }
    const int q0 = a.min_q() + b.min_q();
    const int q1 = a.max_q() + b.max_q();
    const int t0 = a.min_t() + b.min_t();
    const int t1 = a.max_t() + b.max_t();
    const long w = t1 - t0 + 1;
    const long area = static_cast<long>(q1 - q0 + 1) * w;
    const long work = static_cast<long>(a.size()) * static_cast<long>(b.size());
    Laurent r;
    if (area <= 4 * work + 256) {
        std::vector<mpz_class> grid(static_cast<std::size_t>(area));
        std::vector<char> used(static_cast<std::size_t>(area), 0);
        for (const auto& x : a.terms_) {
            for (const auto& y : b.terms_) {
                const long idx = static_cast<long>(x.e.q + y.e.q - q0) * w + (x.e.t + y.e.t - t0);
                mpz_addmul(grid[idx].get_mpz_t(), x.c.get_mpz_t(), y.c.get_mpz_t());
                used[idx] = 1;
            }
        }
        for (long idx = 0; idx < area; ++idx) {
            if (used[idx] && grid[idx] != 0) {
                r.terms_.push_back({Mono{static_cast<int>(idx / w) + q0, static_cast<int>(idx % w) + t0},
                                    std::move(grid[idx])});
            }
        }
        return r;
    }
    std::map<Mono, mpz_class> acc;
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) mpz_addmul(acc[x.e + y.e].get_mpz_t(), x.c.get_mpz_t(), y.c.get_mpz_t());
    for (auto& [e, c] : acc)
        if (c != 0) r.terms_.push_back({e, std::move(c)});
    return r;
}

Laurent& Laurent::operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
}

bool Laurent::operator==(const Laurent& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].e != o.terms_[i].e || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

Laurent Laurent::shifted(Mono e) const {
    Laurent r = *this;
    for (auto& tm : r.terms_) tm.e = tm.e + e;
    return r;
}

void Laurent::mul_binomial(Mono m, int k) {
    if (m.is_one()) throw ZeroFactor("binomial (1 - 1) is zero");
    for (int i = 0; i < k; ++i) {
        Laurent s = shifted(m);
        terms_ = merge_add(terms_, s.terms_, true);
    }
}

std::optional<Laurent> Laurent::div_binomial(Mono m) const {
    if (m.is_one()) throw ZeroFactor("division by (1 - 1)");
    if (terms_.empty()) return Laurent{};
    // (1 - x) Q = P. Orient the step so that it is lexicographically positive;
    // for the opposite orientation (1 - x) = -x (1 - x^-1).
    Mono step = m;
    bool flipped = false;
    if (step < Mono{}) {
        step = -step;
        flipped = true;
    }
    // Split terms into classes along the step direction, indexed by position k.
    struct Item {
        Mono base;
        int k;
        const mpz_class* c;
    };
    std::vector<Item> items;
    items.reserve(terms_.size());
    for (const auto& tm : terms_) {
        int k = step.q > 0 ? fdiv(tm.e.q, step.q) : fdiv(tm.e.t, step.t);
        Mono base{tm.e.q - k * step.q, tm.e.t - k * step.t};
        items.push_back({base, k, &tm.c});
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        return a.base != b.base ? a.base < b.base : a.k < b.k;
    });
    // P = Q - x Q with x = step: P_k = Q_k - Q_{k-1}, so Q_k is the prefix sum.
    std::vector<Term> out;
    std::size_t i = 0;
    while (i < items.size()) {
        std::size_t j = i;
        while (j < items.size() && items[j].base == items[i].base) ++j;
        mpz_class run = 0;
        int k = items[i].k;
        std::size_t p = i;
        const int kend = items[j - 1].k;
        while (k < kend) {
            if (p < j && items[p].k == k) {
                run += *items[p].c;
                ++p;
            }
            if (run != 0) {
                out.push_back({Mono{items[i].base.q + k * step.q, items[i].base.t + k * step.t}, run});
            }
            ++k;
        }
        run += *items[j - 1].c;
        if (run != 0) return std::nullopt;
        i = j;
    }
    Laurent r = from_terms(std::move(out));
    if (flipped) {
        // P / (1 - x^-1) = P / (-x^-1 (1 - x)) = -x Q
        r = -r.shifted(step);
    }
    return r;
}

void Laurent::divexact(const mpz_class& c) {
    for (auto& tm : terms_) mpz_divexact(tm.c.get_mpz_t(), tm.c.get_mpz_t(), c.get_mpz_t());
}

std::optional<Laurent> Laurent::div_exact(const Laurent& d) const {
    if (d.is_zero()) throw DivisionByZero("exact division by zero polynomial");
    if (is_zero()) return Laurent{};
    if (d.size() == 1) {
        Laurent r = shifted(-d.terms_[0].e);
        for (auto& tm : r.terms_) {
            if (!mpz_divisible_p(tm.c.get_mpz_t(), d.terms_[0].c.get_mpz_t())) return std::nullopt;
            mpz_divexact(tm.c.get_mpz_t(), tm.c.get_mpz_t(), d.terms_[0].c.get_mpz_t());
        }
        return r;
    }
    const int qlo = min_q() - d.min_q();
    const int tlo = min_t() - d.min_t();
    std::map<Mono, mpz_class> rem;
    for (const auto& tm : terms_) rem.emplace(tm.e, tm.c);
    const Term& lead = d.terms_.back();
    std::vector<Term> quot;
    while (!rem.empty()) {
        auto it = std::prev(rem.end());
        Mono e = it->first - lead.e;
        if (e.q < qlo || e.t < tlo) return std::nullopt;
        if (!mpz_divisible_p(it->second.get_mpz_t(), lead.c.get_mpz_t())) return std::nullopt;
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), it->second.get_mpz_t(), lead.c.get_mpz_t());
        for (const auto& dt : d.terms_) {
            auto [pos, fresh] = rem.try_emplace(dt.e + e, 0);
            mpz_submul(pos->second.get_mpz_t(), c.get_mpz_t(), dt.c.get_mpz_t());
            if (pos->second == 0) rem.erase(pos);
        }
        quot.push_back({e, std::move(c)});
    }
    return from_terms(std::move(quot));
}

Laurent Laurent::pow(unsigned k) const {
    Laurent r(1), b = *this;
    while (k) {
        if (k & 1u) r *= b;
        k >>= 1u;
        if (k) b *= b;
    }
    return r;
}

mpq_class mpq_pow(const mpq_class& x, int k) {
    if (k < 0) {
        if (x == 0) throw PoleAtPoint("negative power of zero");
        mpq_class inv = 1 / x;
        return mpq_pow(inv, -k);
    }
    mpq_class r = 1;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

mpq_class Laurent::evaluate(const mpq_class& q0, const mpq_class& t0) const {
    mpq_class s = 0;
    for (const auto& tm : terms_) s += mpq_class(tm.c) * mpq_pow(q0, tm.e.q) * mpq_pow(t0, tm.e.t);
    return s;
}

Laurent Laurent::subst_t_by_qinv_t() const {
    std::vector<Term> v = terms_;
    for (auto& tm : v) tm.e.q -= tm.e.t;
    return from_terms(std::move(v));
}

Laurent Laurent::swap_qt() const {
    std::vector<Term> v = terms_;
    for (auto& tm : v) std::swap(tm.e.q, tm.e.t);
    return from_terms(std::move(v));
}

std::string mono_str(const mpz_class& c, const std::vector<std::pair<char, int>>& vars, bool first) {
    std::string out;
    const bool neg = c < 0;
    mpz_class a = abs(c);
    if (first) {
        if (neg) out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    std::string body;
    for (auto [v, e] : vars) {
        if (e == 0) continue;
        if (!body.empty()) body += "*";
        body += v;
        if (e != 1) body += "^" + std::to_string(e);
    }
    if (body.empty()) {
        out += a.get_str();
    } else if (a == 1) {
        out += body;
    } else {
        out += a.get_str() + "*" + body;
    }
    return out;
}

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& tm : terms_) {
        out += mono_str(tm.c, {{'q', tm.e.q}, {'t', tm.e.t}}, first);
        first = false;
    }
    return out;
}

std::string Laurent::pretty() const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> order;
    for (const auto& tm : terms_) order.push_back(&tm);
    std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
        return a->e.q != b->e.q ? a->e.q > b->e.q : a->e.t < b->e.t;
    });
    std::string out;
    bool first = true;
    for (const Term* tm : order) {
        out += mono_str(tm->c, {{'q', tm->e.q}, {'t', tm->e.t}}, first);
        first = false;
    }
    return out;
}

namespace {

struct Parser {
    std::string_view s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char ch) {
        skip();
        if (i < s.size() && s[i] == ch) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const char* what) const {
        throw ParseError(std::string("cannot parse polynomial '") + std::string(s) + "': " + what);
    }
    int integer() {
        skip();
        std::size_t st = i;
        if (i < s.size() && s[i] == '-') ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (st == i || (s[st] == '-' && i == st + 1)) fail("expected exponent");
        return std::stoi(std::string(s.substr(st, i - st)));
    }
};

}  // namespace

Laurent Laurent::parse(std::string_view s) {
    Parser p{s};
    std::vector<Term> terms;
    p.skip();
    if (s.substr(p.i) == "0") return {};
    bool first = true;
    while (true) {
        p.skip();
        if (p.i >= s.size()) break;
        int sign = 1;
        if (p.eat('-')) {
            sign = -1;
        } else if (p.eat('+')) {
        } else if (!first) {
            p.fail("expected sign");
        }
        first = false;
        p.skip();
        mpz_class c = 1;
        std::size_t st = p.i;
        while (p.i < s.size() && std::isdigit(static_cast<unsigned char>(s[p.i]))) ++p.i;
        bool had_coeff = p.i > st;
        if (had_coeff) c = mpz_class(std::string(s.substr(st, p.i - st)));
        Mono e;
        bool need_var = had_coeff ? p.eat('*') : true;
        while (need_var) {
            p.skip();
            if (p.i >= s.size()) p.fail("expected variable");
            char v = s[p.i++];
            int ex = 1;
            if (p.eat('^')) ex = p.integer();
            if (v == 'q') e.q += ex;
            else if (v == 't') e.t += ex;
            else p.fail("unknown variable");
            need_var = p.eat('*');
        }
        terms.push_back({e, sign * c});
    }
    return from_terms(std::move(terms));
}

}  // namespace qtknots
