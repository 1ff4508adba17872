#pragma once

#include <random>
#include <vector>

#include "clusterfan/array.hpp"
#include "clusterfan/gt.hpp"
#include "clusterfan/numeric.hpp"
#include "clusterfan/tableau.hpp"

namespace testutil {

using clusterfan::Array;
using clusterfan::GTPattern;
using clusterfan::Tableau;

// Uniform sample from the triangular grid {0..bound}^{n(n+1)/2}, rejected
// until D-tight.
inline Array random_d_tight(std::mt19937_64& rng, int n, int bound) {
    std::uniform_int_distribution<long long> u(0, bound);
    for (;;) {
        Array a(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= i; ++j) a.set(i, j, u(rng));
        if (clusterfan::is_d_tight(a)) return a;
    }
}

// A random semistandard tableau built directly from the definition: rows are
// filled bottom-up, each entry at least the one below plus one and at least
// the one to its left.  Independent of the array bijection under test.
inline Tableau random_tableau(std::mt19937_64& rng, int n, int max_cols) {
    std::uniform_int_distribution<int> cols(0, max_cols);
    std::vector<std::vector<int>> rows;
    int width = cols(rng);
    for (int j = 1; j <= n && width > 0; ++j) {
        std::vector<int> row;
        for (int c = 0; c < width; ++c) {
            int lo = j;  // column-strictness forces entries >= row index
            if (!rows.empty() && c < static_cast<int>(rows.back().size()))
                lo = std::max(lo, rows.back()[c] + 1);
            if (c > 0) lo = std::max(lo, row.back());
            if (lo > n) {
                row.clear();
                width = c;
                break;
            }
            std::uniform_int_distribution<int> pick(lo, n);
            row.push_back(pick(rng));
        }
        if (row.empty()) break;
        // weak row increase can clash with column strictness when lo jumped;
        // repair by clamping forward
        for (std::size_t c = 1; c < row.size(); ++c)
            if (row[c] < row[c - 1]) row[c] = row[c - 1];
        rows.push_back(row);
        std::uniform_int_distribution<int> shrink(0, width);
        width = shrink(rng);
    }
    return Tableau(n, rows);
}

// Random valid GT pattern built straight from the interlacing definition
// 0 <= x_{ij} <= x_{i-1,j-1} <= x_{i-1,j}: the i = 1 line is free but weakly
// increasing in j, deeper lines are sandwiched.  Independent of the array
// isomorphism under test.
inline GTPattern random_gt(std::mt19937_64& rng, int n, int bound) {
    GTPattern p(n);
    for (int j = 1; j <= n; ++j) {
        const long long lo = j == 1 ? 0 : p.at(1, j - 1);
        std::uniform_int_distribution<long long> pick(lo, lo + bound);
        p.set(1, j, pick(rng));
    }
    for (int i = 2; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            const long long hi = p.at(i - 1, j - 1);
            const long long lo = j > i ? p.at(i, j - 1) : 0;  // keeps x_{i,j-1} <= x_{ij}
            std::uniform_int_distribution<long long> pick(lo, hi);
            p.set(i, j, pick(rng));
        }
    return p;
}

inline std::vector<std::vector<clusterfan::Rat>> pascal_matrix(int n) {
    std::vector<std::vector<clusterfan::Rat>> m(n, std::vector<clusterfan::Rat>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            // C(i+j-2, i-1)
            clusterfan::Int num = 1, den = 1;
            for (int k = 1; k <= i - 1; ++k) {
                num *= (i + j - 1 - k);
                den *= k;
            }
            m[i - 1][j - 1] = clusterfan::Rat(num / den);
        }
    return m;
}

}  // namespace testutil
