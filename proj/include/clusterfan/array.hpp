#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clusterfan/errors.hpp"

namespace clusterfan {

// Nonnegative integer array a_{ij} supported on the triangle 1 <= j <= i <= n.
// These are the coordinates of semistandard Young tableaux: a_{ij} counts the
// boxes of row j filled with the letter i.  Out-of-support entries (i < j)
// read as zero everywhere.
class Array {
public:
    explicit Array(int n) : n_(n) {
        if (n < 0) throw OutOfRange("Array: size must be nonnegative");
        a_.assign(static_cast<std::size_t>(n) * (n + 1) / 2, 0);
    }

    int size() const { return n_; }

    long long at(int i, int j) const {
        check_range(i, j);
        return j <= i ? a_[idx(i, j)] : 0;
    }

    void set(int i, int j, long long v) {
        check_range(i, j);
        if (j > i) throw OutOfRange("Array::set: entries with i < j are identically zero");
        if (v < 0) throw OutOfRange("Array::set: entries must be nonnegative");
        a_[idx(i, j)] = v;
    }

    // Entries in a fixed layout (i-major: (1,1), (2,1), (2,2), (3,1), ...);
    // used as the coordinate vector of the array in Z^{n(n+1)/2}.
    const std::vector<long long>& flat() const { return a_; }

    long long entry_sum() const {
        long long s = 0;
        for (long long v : a_) s += v;
        return s;
    }

    bool is_zero() const {
        for (long long v : a_) if (v != 0) return false;
        return true;
    }

    friend bool operator==(const Array& a, const Array& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

    static std::size_t idx_of(int i, int j) { return idx(i, j); }

private:
    static std::size_t idx(int i, int j) {
        return static_cast<std::size_t>(i - 1) * i / 2 + (j - 1);
    }
    void check_range(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_)
            throw OutOfRange("Array: index (" + std::to_string(i) + ", " +
                             std::to_string(j) + ") out of range for n = " + std::to_string(n_));
    }

    int n_;
    std::vector<long long> a_;
};

inline void require_same_size(const Array& a, const Array& b, const char* op) {
    if (a.size() != b.size())
        throw SizeMismatch(std::string(op) + ": arrays have sizes " +
                           std::to_string(a.size()) + " and " + std::to_string(b.size()));
}

// First violated D-tightness inequality, or nullopt if the array is D-tight.
// The inequalities say: for j < n and i in [n],
//   a(1,j+1) + ... + a(i,j+1)  <=  a(1,j) + ... + a(i-1,j).
// Integer D-tight arrays are exactly the arrays of semistandard tableaux.
inline std::optional<std::pair<int, int>> d_tight_violation(const Array& a) {
    const int n = a.size();
    for (int j = 1; j < n; ++j) {
        long long lhs = 0, rhs = 0;
        for (int i = 1; i <= n; ++i) {
            lhs += a.at(i, j + 1);
            if (i >= 2) rhs += a.at(i - 1, j);
            if (lhs > rhs) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

inline bool is_d_tight(const Array& a) { return !d_tight_violation(a).has_value(); }

inline void require_d_tight(const Array& a, const char* op) {
    if (auto v = d_tight_violation(a)) throw NotDTight(v->first, v->second);
    (void)op;
}

// Compares the monomials X^A and X^B under the pure lexicographic order with
// variables ranked x_{11} > x_{12} > ... > x_{1n} > x_{21} > ... > x_{nn}:
// scanning variables in rank order, the first differing exponent decides and
// the larger exponent wins.  Out-of-support variables carry exponent zero for
// both sides, so the scan can stay on the support triangle.
inline std::strong_ordering lex_compare(const Array& a, const Array& b) {
    require_same_size(a, b, "lex_compare");
    const int n = a.size();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) {
            const long long x = a.at(i, j), y = b.at(i, j);
            if (x != y) return x > y ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    return std::strong_ordering::equal;
}

// Tropical multiplication on D(n): entrywise sum of arrays.
inline Array tropical_product(const Array& a, const Array& b) {
    require_same_size(a, b, "tropical_product");
    Array r(a.size());
    for (int i = 1; i <= a.size(); ++i)
        for (int j = 1; j <= i; ++j) r.set(i, j, a.at(i, j) + b.at(i, j));
    return r;
}

// Tropical addition on D(n): the lex-greater of the two arrays.  On lex-equal
// arguments the first is returned (they are equal as arrays, so the choice is
// inert; fixed for determinism).
inline Array tropical_sum(const Array& a, const Array& b) {
    require_same_size(a, b, "tropical_sum");
    return lex_compare(a, b) == std::strong_ordering::less ? b : a;
}

// The statistic l(A) = sum_i ( sum_{j>k} a_{ij} a_{ik} + sum_{j>k} a_{ji} a_{ki} ),
// the q-exponent normalizing the monomial X^A of a quantum matrix.
inline long long l_statistic(const Array& a) {
    const int n = a.size();
    long long total = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k < j; ++k)
                total += a.at(i, j) * a.at(i, k) + a.at(j, i) * a.at(k, i);
    return total;
}

// Array of the one-column tableau filled with the interval {i, ..., i+j-1}:
// a_{i+r-1, r} = 1 for r = 1..j.
inline Array interval_column_array(int i, int j, int n) {
    if (i < 1 || j < 1 || i + j - 1 > n)
        throw OutOfRange("interval_column_array: need i >= 1, j >= 1, i + j - 1 <= n (got i = " +
                         std::to_string(i) + ", j = " + std::to_string(j) +
                         ", n = " + std::to_string(n) + ")");
    Array a(n);
    for (int r = 1; r <= j; ++r) a.set(i + r - 1, r, 1);
    return a;
}

// Array of the one-column tableau filled with an arbitrary strictly
// increasing subset of [n]: the r-th smallest element e contributes a_{e,r} = 1.
inline Array column_array(const std::vector<int>& column, int n) {
    Array a(n);
    int r = 0, prev = 0;
    for (int e : column) {
        ++r;
        if (e <= prev || e > n)
            throw OutOfRange("column_array: column must be strictly increasing within [n]");
        // Strict column growth forces e >= r, so (e, r) is in the support.
        a.set(e, r, 1);
        prev = e;
    }
    return a;
}

// The 2n-1 frozen one-column arrays: initial intervals {1..i} for i = 1..n
// followed by final intervals {i..n} for i = 2..n, in that order.
inline std::vector<Array> frozen_arrays(int n) {
    if (n < 2) throw OutOfRange("frozen_arrays: need n >= 2");
    std::vector<Array> out;
    out.reserve(2 * n - 1);
    for (int i = 1; i <= n; ++i) out.push_back(interval_column_array(1, i, n));
    for (int i = 2; i <= n; ++i) out.push_back(interval_column_array(i, n - i + 1, n));
    return out;
}

inline std::string to_string(const Array& a) {
    std::string s = "[";
    for (int j = 1; j <= a.size(); ++j) {
        if (j > 1) s += " / ";
        for (int i = j; i <= a.size(); ++i) {
            if (i > j) s += " ";
            s += std::to_string(a.at(i, j));
        }
    }
    return s + "]";
}

}  // namespace clusterfan
