#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "qtknots/laurent.hpp"
#include "qtknots/ratfunc.hpp"

namespace qtknots {

// Cell of a Young diagram. Row 0 is the bottom row; rows stack upward.
struct Cell {
    int col = 0;  // coarm a'
    int row = 0;  // coleg l'
    auto operator<=>(const Cell&) const = default;
};

struct ArmLeg {
    int arm = 0;
    int leg = 0;
    int coarm = 0;
    int coleg = 0;
    bool operator==(const ArmLeg&) const = default;
};

class Partition {
public:
    Partition() = default;
    // Throws std::invalid_argument unless parts are weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int operator[](int i) const { return i < length() ? parts_[i] : 0; }
    bool contains(Cell x) const { return x.row >= 0 && x.col >= 0 && x.col < (*this)[x.row]; }
    std::vector<Cell> cells() const;  // row by row, bottom first

    // Reverse lexicographic order, so (3) < (2,1) < (1,1,1) in listings.
    bool operator<(const Partition& o) const { return parts_ > o.parts_; }
    bool operator==(const Partition& o) const = default;

    std::string key() const;  // "3,1"
    static Partition parse(std::string_view key);

private:
    std::vector<int> parts_;
    int n_ = 0;
};

std::vector<Partition> partitions_of(int n);
ArmLeg armleg(const Partition& lambda, Cell x);
Mono cell_weight(Cell x);
// g_lambda as an exponent bag: sum over cells of q^(a+1)t^-l + q^-a t^(l+1).
ExponentBag g_lambda_bag(const Partition& lambda);
QTRat g_lambda(const Partition& lambda);
Laurent B_lambda(const Partition& lambda);
Partition conjugate(const Partition& lambda);
bool dominance_leq(const Partition& mu, const Partition& lambda);
long hook_length_count(const Partition& lambda);
// z_lambda = prod_i i^{m_i} m_i!
mpz_class z_lambda(const Partition& lambda);

}  // namespace qtknots
