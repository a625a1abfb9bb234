#pragma once

#include <string>
#include <vector>

#include "qtknots/partition.hpp"
#include "qtknots/ratfunc.hpp"

namespace qtknots {

enum class TableauKind { SYT, ASYT };

class Tableau {
public:
    Tableau(Partition shape, std::vector<std::vector<int>> rows, TableauKind kind);

    const Partition& shape() const { return shape_; }
    TableauKind kind() const { return kind_; }
    int size() const { return shape_.size(); }
    int label(Cell x) const { return rows_[x.row][x.col]; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    // Cell carrying label i, 1-based.
    Cell cell_of(int i) const { return where_[i - 1]; }
    // Number of i with label i sitting directly above label i+1.
    int descents() const;
    std::string str() const;  // "1,2;3", rows bottom to top

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<Cell> where_;
    TableauKind kind_;
};

std::vector<Tableau> enumerate_syt(const Partition& lambda);
std::vector<Tableau> enumerate_asyt(const Partition& lambda);

// chi_i = weight of the cell labeled i, i = 1..n (index i-1).
std::vector<Mono> chi_sequence(const Tableau& T);

ExponentBag xi_sigma(const Tableau& T);
ExponentBag theta_sigma(const Tableau& T);
ExponentBag theta_step(const Tableau& T, int j);
ExponentBag xi_step(const Tableau& T, int j);

// Shape of the cells labeled 1..j; false when they do not form a diagram.
bool prefix_shape(const Tableau& T, int j, Partition& out);
bool verify_theta_xi_identity(const Tableau& T);

}  // namespace qtknots
