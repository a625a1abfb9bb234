#pragma once

#include <string>
#include <vector>

#include "qtknots/laurent.hpp"

namespace qtknots {

// Lattice path from (0,n) to (m,0) by south and east steps, weakly above the
// diagonal x/m + y/n = 1. cells[i] counts the full cells above the path in
// row i, rows numbered from the top.
struct DyckPath {
    int m;
    int n;
    std::vector<int> cells;
    std::string str() const;
};

enum class CatalanMethod { dyck, shuffle };

std::vector<DyckPath> enumerate_dyck(int m, int n);
int area(const DyckPath& D);
int dinv(const DyckPath& D);
Laurent qt_catalan(int m, int n, CatalanMethod method, int threads = 1);
// (m+n-1)! / (m! n!)
long rational_catalan_count(int m, int n);

}  // namespace qtknots
