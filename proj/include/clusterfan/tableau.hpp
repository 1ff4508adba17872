#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "clusterfan/array.hpp"
#include "clusterfan/errors.hpp"

namespace clusterfan {

// A semistandard Young tableau in the alphabet [n], stored French style:
// rows bottom-up (rows[0] is the longest, bottom row), weakly increasing
// along rows, strictly increasing up the columns.  The empty tableau is valid.
class Tableau {
public:
    Tableau(int n, std::vector<std::vector<int>> rows) : n_(n), rows_(std::move(rows)) {
        validate();
    }

    explicit Tableau(int n) : n_(n) {}

    int alphabet() const { return n_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    bool empty() const { return rows_.empty(); }

    std::vector<int> shape() const {
        std::vector<int> s;
        s.reserve(rows_.size());
        for (const auto& r : rows_) s.push_back(static_cast<int>(r.size()));
        return s;
    }

    long long box_count() const {
        long long c = 0;
        for (const auto& r : rows_) c += static_cast<long long>(r.size());
        return c;
    }

    // Column c (1-based) read bottom-to-top; strictly increasing subset of [n].
    std::vector<int> column(int c) const {
        std::vector<int> col;
        for (const auto& r : rows_) {
            if (static_cast<int>(r.size()) < c) break;
            col.push_back(r[c - 1]);
        }
        return col;
    }

    int column_count() const { return rows_.empty() ? 0 : static_cast<int>(rows_[0].size()); }

    friend bool operator==(const Tableau& a, const Tableau& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    void validate() const {
        if (n_ < 0) throw OutOfRange("Tableau: alphabet size must be nonnegative");
        for (std::size_t j = 0; j < rows_.size(); ++j) {
            const auto& row = rows_[j];
            if (row.empty())
                throw OutOfRange("Tableau: empty row " + std::to_string(j + 1));
            if (j > 0 && row.size() > rows_[j - 1].size())
                throw OutOfRange("Tableau: shape is not a partition at row " + std::to_string(j + 1));
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (row[c] < 1 || row[c] > n_)
                    throw OutOfRange("Tableau: entry " + std::to_string(row[c]) +
                                     " outside alphabet [" + std::to_string(n_) + "]");
                if (c > 0 && row[c] < row[c - 1])
                    throw OutOfRange("Tableau: row " + std::to_string(j + 1) +
                                     " is not weakly increasing");
                if (j > 0 && row[c] <= rows_[j - 1][c])
                    throw OutOfRange("Tableau: column " + std::to_string(c + 1) +
                                     " is not strictly increasing");
            }
        }
    }

    int n_;
    std::vector<std::vector<int>> rows_;
};

// a_{ij}(T) = number of boxes in row j of T filled with i.  The result is
// always D-tight and its entry sum is the number of boxes.
inline Array tableau_to_array(const Tableau& t) {
    Array a(t.alphabet());
    const auto& rows = t.rows();
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (int e : rows[j])
            a.set(e, static_cast<int>(j + 1), a.at(e, static_cast<int>(j + 1)) + 1);
    return a;
}

// Inverse of tableau_to_array on D-tight arrays: row j lists the letter i
// with multiplicity a_{ij}, in increasing order.
inline Tableau array_to_tableau(const Array& a) {
    require_d_tight(a, "array_to_tableau");
    const int n = a.size();
    std::vector<std::vector<int>> rows;
    for (int j = 1; j <= n; ++j) {
        std::vector<int> row;
        for (int i = j; i <= n; ++i)
            row.insert(row.end(), static_cast<std::size_t>(a.at(i, j)), i);
        if (row.empty()) break;  // D-tightness forces all higher rows empty too
        rows.push_back(std::move(row));
    }
    return Tableau(n, std::move(rows));
}

inline std::string to_string(const Tableau& t) {
    if (t.empty()) return "(empty tableau)";
    std::string s;
    for (int j = t.row_count(); j >= 1; --j) {
        for (std::size_t c = 0; c < t.rows()[j - 1].size(); ++c) {
            if (c > 0) s += ' ';
            s += std::to_string(t.rows()[j - 1][c]);
        }
        if (j > 1) s += '\n';
    }
    return s;
}

}  // namespace clusterfan
