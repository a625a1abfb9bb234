#include "qtknots/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <stdexcept>

#include "qtknots/errors.hpp"

namespace qtknots {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(n_));
    for (int r = 0; r < length(); ++r)
        for (int c = 0; c < parts_[r]; ++c) out.push_back({c, r});
    return out;
}

std::string Partition::key() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition Partition::parse(std::string_view key) {
    std::vector<int> parts;
    std::size_t i = 0;
    while (i < key.size()) {
        int v = 0;
        auto [p, ec] = std::from_chars(key.data() + i, key.data() + key.size(), v);
        if (ec != std::errc()) throw ParseError("bad partition '" + std::string(key) + "'");
        parts.push_back(v);
        i = static_cast<std::size_t>(p - key.data());
        if (i < key.size()) {
            if (key[i] != ',') throw ParseError("bad partition '" + std::string(key) + "'");
            ++i;
        }
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxp) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(n, n);
    return out;
}

ArmLeg armleg(const Partition& lambda, Cell x) {
    if (!lambda.contains(x)) throw CellOutsideDiagram("cell outside diagram " + lambda.key());
    const Partition conj = conjugate(lambda);
    return {lambda[x.row] - x.col - 1, conj[x.col] - x.row - 1, x.col, x.row};
}

Mono cell_weight(Cell x) { return {x.col, x.row}; }

ExponentBag g_lambda_bag(const Partition& lambda) {
    ExponentBag bag;
    for (Cell x : lambda.cells()) {
        ArmLeg al = armleg(lambda, x);
        bag.add(Mono{al.arm + 1, -al.leg});
        bag.add(Mono{-al.arm, al.leg + 1});
    }
    return bag;
}

QTRat g_lambda(const Partition& lambda) { return omega_eval(g_lambda_bag(lambda), false); }

Laurent B_lambda(const Partition& lambda) {
    std::vector<Term> terms;
    for (Cell x : lambda.cells()) terms.push_back({cell_weight(x), 1});
    return Laurent::from_terms(std::move(terms));
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> parts;
    for (int c = 0; c < lambda[0]; ++c) {
        int h = 0;
        while (h < lambda.length() && lambda[h] > c) ++h;
        parts.push_back(h);
    }
    return Partition(std::move(parts));
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size()) throw SizeMismatch("dominance between partitions of different sizes");
    int a = 0, b = 0;
    const int len = std::max(mu.length(), lambda.length());
    for (int i = 0; i < len; ++i) {
        a += mu[i];
        b += lambda[i];
        if (a > b) return false;
    }
    return true;
}

long hook_length_count(const Partition& lambda) {
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(lambda.size()));
    mpz_class den = 1;
    for (Cell x : lambda.cells()) {
        ArmLeg al = armleg(lambda, x);
        den *= al.arm + al.leg + 1;
    }
    return mpz_class(num / den).get_si();
}

mpz_class z_lambda(const Partition& lambda) {
    std::map<int, unsigned long> mult;
    for (int p : lambda.parts()) ++mult[p];
    mpz_class z = 1;
    for (auto [p, m] : mult) {
        mpz_class f, pw;
        mpz_fac_ui(f.get_mpz_t(), m);
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p), m);
        z *= f * pw;
    }
    return z;
}

}  // namespace qtknots
