#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qtknots/laurent.hpp"
#include "qtknots/ratfunc.hpp"
#include "qtknots/tableau.hpp"

namespace qtknots::test {

// c * q^a t^b
inline QTRat mono(int a, int b, long c = 1) { return QTRat(Laurent::monomial(a, b, c)); }
// (1 - q^a t^b)
inline QTRat om(int a, int b) { return QTRat(Laurent(1) - Laurent::monomial(a, b)); }
inline Laurent poly(std::string_view s) { return Laurent::parse(s); }

// Tableau written bottom row first, e.g. "1,3;2".
inline Tableau tableau(const std::string& text, TableauKind kind) {
    std::vector<int> shape;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        if (end == std::string::npos) end = text.size();
        std::string row = text.substr(start, end - start);
        shape.push_back(1 + static_cast<int>(std::count(row.begin(), row.end(), ',')));
        start = end + 1;
    }
    Partition lam(shape);
    for (const auto& T : kind == TableauKind::SYT ? enumerate_syt(lam) : enumerate_asyt(lam))
        if (T.str() == text) return T;
    throw std::invalid_argument("no tableau " + text);
}

}  // namespace qtknots::test
