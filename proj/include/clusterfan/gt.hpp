#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clusterfan/array.hpp"
#include "clusterfan/errors.hpp"

namespace clusterfan {

// A Gelfand-Tsetlin pattern: a triangular array x_{ij}, 1 <= i <= j <= n,
// with 0 <= x_{ij} <= x_{i-1,j-1} <= x_{i-1,j}.  Row j holds x_{jj}, ..., x_{1j}.
class GTPattern {
public:
    explicit GTPattern(int n) : n_(n) {
        if (n < 0) throw OutOfRange("GTPattern: size must be nonnegative");
        x_.assign(static_cast<std::size_t>(n) * (n + 1) / 2, 0);
    }

    int size() const { return n_; }

    long long at(int i, int j) const {
        check_range(i, j);
        return x_[idx(i, j)];
    }

    void set(int i, int j, long long v) {
        check_range(i, j);
        x_[idx(i, j)] = v;
    }

    friend bool operator==(const GTPattern& a, const GTPattern& b) {
        return a.n_ == b.n_ && a.x_ == b.x_;
    }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(j - 1) * j / 2 + (i - 1);
    }
    void check_range(int i, int j) const {
        if (i < 1 || j < i || j > n_)
            throw OutOfRange("GTPattern: index (" + std::to_string(i) + ", " +
                             std::to_string(j) + ") out of range for n = " + std::to_string(n_));
    }

    int n_;
    std::vector<long long> x_;
};

// First violated GT inequality, or nullopt if the pattern is valid.
inline std::optional<NotGT> gt_violation(const GTPattern& p) {
    const int n = p.size();
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= j; ++i) {
            if (p.at(i, j) < 0) return NotGT(i, j, "entry is negative");
            if (i >= 2 && p.at(i, j) > p.at(i - 1, j - 1))
                return NotGT(i, j, "x_{ij} > x_{i-1,j-1}");
            if (j < n && p.at(i, j) > p.at(i, j + 1))
                return NotGT(i, j, "x_{ij} > x_{i,j+1}");
        }
    return std::nullopt;
}

inline bool is_gt(const GTPattern& p) { return !gt_violation(p).has_value(); }

// The linear isomorphism D(n) -> GT(n):  x_{ij} = a_{ii} + a_{i+1,i} + ... + a_{ji}
// (the boxes of tableau row i with entries at most j).  Triangular with unit
// diagonal in the standard coordinates, hence unimodular.
inline GTPattern array_to_gt(const Array& a) {
    require_d_tight(a, "array_to_gt");
    const int n = a.size();
    GTPattern p(n);
    for (int i = 1; i <= n; ++i) {
        long long acc = 0;
        for (int j = i; j <= n; ++j) {
            acc += a.at(j, i);
            p.set(i, j, acc);
        }
    }
    return p;
}

// Inverse of array_to_gt: a_{ii} = x_{ii} and a_{ji} = x_{ij} - x_{i,j-1} for
// j > i.  Integral on integer patterns by unimodularity; the output is D-tight
// whenever the input satisfies the GT inequalities.
inline Array gt_to_array(const GTPattern& p) {
    if (auto v = gt_violation(p)) throw *v;
    const int n = p.size();
    Array a(n);
    for (int i = 1; i <= n; ++i) {
        a.set(i, i, p.at(i, i));
        for (int j = i + 1; j <= n; ++j) a.set(j, i, p.at(i, j) - p.at(i, j - 1));
    }
    return a;
}

}  // namespace clusterfan
