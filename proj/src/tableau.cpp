#include "qtknots/tableau.hpp"

#include <functional>
#include <stdexcept>

#include "qtknots/errors.hpp"

namespace qtknots {

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows, TableauKind kind)
    : shape_(std::move(shape)), rows_(std::move(rows)), kind_(kind) {
    const int n = shape_.size();
    where_.assign(static_cast<std::size_t>(n), Cell{-1, -1});
    if (static_cast<int>(rows_.size()) != shape_.length()) throw std::invalid_argument("row count differs from shape");
    for (int r = 0; r < shape_.length(); ++r) {
        if (static_cast<int>(rows_[r].size()) != shape_[r]) throw std::invalid_argument("row length differs from shape");
        for (int c = 0; c < shape_[r]; ++c) {
            int v = rows_[r][c];
            if (v < 1 || v > n || where_[v - 1].row >= 0) throw std::invalid_argument("labels must be a bijection onto 1..n");
            where_[v - 1] = {c, r};
        }
    }
}

int Tableau::descents() const {
    int d = 0;
    for (int i = 1; i < size(); ++i) {
        Cell a = cell_of(i), b = cell_of(i + 1);
        if (a.col == b.col && a.row == b.row + 1) ++d;
    }
    return d;
}

std::string Tableau::str() const {
    std::string s;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) s += ";";
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) s += ",";
            s += std::to_string(rows_[r][c]);
        }
    }
    return s;
}

namespace {

// Backtracking over cells in reading order (bottom row first, left to right).
std::vector<Tableau> enumerate(const Partition& lambda, TableauKind kind) {
    const int n = lambda.size();
    std::vector<Cell> order = lambda.cells();
    std::vector<std::vector<int>> rows;
    for (int p : lambda.parts()) rows.emplace_back(static_cast<std::size_t>(p), 0);
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Tableau> out;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == order.size()) {
            out.emplace_back(lambda, rows, kind);
            return;
        }
        Cell x = order[k];
        for (int v = 1; v <= n; ++v) {
            if (used[v]) continue;
            if (x.col > 0 && rows[x.row][x.col - 1] >= v) continue;
            if (x.row > 0) {
                int below = rows[x.row - 1][x.col];
                bool ok = v > below || (kind == TableauKind::ASYT && v == below - 1);
                if (!ok) continue;
            }
            used[v] = 1;
            rows[x.row][x.col] = v;
            rec(k + 1);
            used[v] = 0;
        }
    };
    rec(0);
    return out;
}

}  // namespace

std::vector<Tableau> enumerate_syt(const Partition& lambda) { return enumerate(lambda, TableauKind::SYT); }
std::vector<Tableau> enumerate_asyt(const Partition& lambda) { return enumerate(lambda, TableauKind::ASYT); }

std::vector<Mono> chi_sequence(const Tableau& T) {
    std::vector<Mono> chi;
    for (int i = 1; i <= T.size(); ++i) chi.push_back(cell_weight(T.cell_of(i)));
    return chi;
}

namespace {

const Mono kQ{1, 0}, kT{0, 1}, kQT{1, 1};

// omega(x) = (1-x)(1-qtx)/((1-qx)(1-tx)), added with sign s.
void add_omega(ExponentBag& b, Mono x, long s) {
    b.add(x, s);
    b.add(x + kQT, s);
    b.add(x + kQ, -s);
    b.add(x + kT, -s);
}

void check_index(const Tableau& T, int j) {
    if (j < 1 || j > T.size()) throw IndexOutOfRange("prefix index " + std::to_string(j) + " out of range");
}

}  // namespace

ExponentBag xi_step(const Tableau& T, int j) {
    check_index(T, j);
    auto chi = chi_sequence(T);
    ExponentBag b;
    b.add(-chi[j - 1], -1);
    for (int i = 1; i < j; ++i) add_omega(b, chi[i - 1] - chi[j - 1], 1);
    return b;
}

ExponentBag theta_step(const Tableau& T, int j) {
    check_index(T, j);
    auto chi = chi_sequence(T);
    ExponentBag b;
    b.add(kQT + chi[j - 1], 1);
    for (int i = 1; i < j; ++i) add_omega(b, chi[j - 1] - chi[i - 1], -1);
    return b;
}

ExponentBag xi_sigma(const Tableau& T) {
    ExponentBag b;
    for (int j = 1; j <= T.size(); ++j) b.add(xi_step(T, j));
    return b;
}

ExponentBag theta_sigma(const Tableau& T) {
    ExponentBag b;
    for (int j = 1; j <= T.size(); ++j) b.add(theta_step(T, j));
    return b;
}

bool prefix_shape(const Tableau& T, int j, Partition& out) {
    std::vector<int> len(static_cast<std::size_t>(T.shape().length()), 0);
    for (int i = 1; i <= j; ++i) ++len[T.cell_of(i).row];
    // cells of each row must be a left-justified initial segment
    for (int i = 1; i <= j; ++i) {
        Cell x = T.cell_of(i);
        if (x.col >= len[x.row]) return false;
    }
    while (!len.empty() && len.back() == 0) len.pop_back();
    for (std::size_t r = 1; r < len.size(); ++r)
        if (len[r] > len[r - 1]) return false;
    for (int v : len)
        if (v == 0) return false;
    out = Partition(len);
    return true;
}

bool verify_theta_xi_identity(const Tableau& T) {
    Partition prev;
    for (int j = 1; j <= T.size(); ++j) {
        Partition cur;
        if (!prefix_shape(T, j, cur)) continue;
        bool prev_ok = j == 1 || prefix_shape(T, j - 1, prev);
        if (j == 1) prev = Partition();
        if (!prev_ok) continue;
        ExponentBag theta = theta_step(T, j);
        if (theta.mult(Mono{}) != 0) return false;
        ExponentBag rest = g_lambda_bag(cur);
        rest.add(g_lambda_bag(prev), -1);
        rest.add(kQT, 1);
        rest.add(kQ, -1);
        rest.add(kT, -1);
        QTRat rhs = omega_eval(xi_step(T, j), true) * omega_eval(rest, false);
        if (!(omega_eval(theta, false) == rhs)) return false;
    }
    return true;
}

}  // namespace qtknots
