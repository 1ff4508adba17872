#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <string>

#include "clusterfan/errors.hpp"

namespace clusterfan {

// Largest supported alphabet size.  Exponent vectors live in fixed-capacity
// storage so monomial arithmetic never allocates; n*n must fit below.
inline constexpr int kMaxAlphabet = 7;

// A matrix variable x_{ij}, 1 <= i, j <= n.  Variables are totally ranked
// x_{11} > x_{12} > ... > x_{1n} > x_{21} > ... > x_{nn}; the flat index
// (i-1)*n + (j-1) lists them in decreasing rank.
struct VarId {
    int i, j;
};

// Exponent vector of a monomial in the n*n matrix variables, indexed by rank.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(int n) : nvars_(static_cast<std::uint8_t>(n * n)) {
        if (n < 0 || n > kMaxAlphabet)
            throw OutOfRange("Monomial: alphabet size " + std::to_string(n) +
                             " outside supported range [0, " + std::to_string(kMaxAlphabet) + "]");
    }

    int var_count() const { return nvars_; }

    std::uint16_t exponent(int flat) const { return e_[static_cast<std::size_t>(flat)]; }
    std::uint16_t exponent(int i, int j, int n) const { return e_[rank(i, j, n)]; }

    void set_exponent(int flat, std::uint16_t v) { e_[static_cast<std::size_t>(flat)] = v; }

    static std::size_t rank(int i, int j, int n) {
        return static_cast<std::size_t>(i - 1) * n + (j - 1);
    }

    bool is_one() const {
        for (int k = 0; k < nvars_; ++k)
            if (e_[k] != 0) return false;
        return true;
    }

    long long degree() const {
        long long d = 0;
        for (int k = 0; k < nvars_; ++k) d += e_[k];
        return d;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (int k = 0; k < nvars_; ++k) r.e_[k] = static_cast<std::uint16_t>(r.e_[k] + o.e_[k]);
        return r;
    }

    bool divides(const Monomial& o) const {
        for (int k = 0; k < nvars_; ++k)
            if (e_[k] > o.e_[k]) return false;
        return true;
    }

    // Quotient o / this; caller guarantees divisibility.
    Monomial divide_into(const Monomial& o) const {
        Monomial r = o;
        for (int k = 0; k < nvars_; ++k) r.e_[k] = static_cast<std::uint16_t>(r.e_[k] - e_[k]);
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.nvars_ == b.nvars_ &&
               std::memcmp(a.e_.data(), b.e_.data(), sizeof(std::uint16_t) * a.nvars_) == 0;
    }

    // Pure lexicographic monomial order: scanning variables in decreasing
    // rank, the first differing exponent decides; larger exponent on the
    // higher-ranked variable means the greater monomial.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        for (int k = 0; k < a.nvars_; ++k)
            if (a.e_[k] != b.e_[k])
                return a.e_[k] > b.e_[k] ? std::strong_ordering::greater
                                         : std::strong_ordering::less;
        return std::strong_ordering::equal;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (int k = 0; k < nvars_; ++k) {
            h ^= e_[k];
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    std::array<std::uint16_t, kMaxAlphabet * kMaxAlphabet> e_{};
    std::uint8_t nvars_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace clusterfan
