#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "clusterfan/array.hpp"
#include "clusterfan/errors.hpp"
#include "clusterfan/monomial.hpp"
#include "clusterfan/numeric.hpp"
#include "clusterfan/tableau.hpp"

namespace clusterfan {

// Sparse exact-integer multivariate polynomial in the n*n matrix variables.
// Terms are kept canonical: decreasing lexicographic monomial order, no zero
// coefficients, no duplicate monomials.  Polynomials carry their ambient n;
// mixing sizes is an error rather than a silent embedding.
class Polynomial {
public:
    struct Term {
        Monomial m;
        Int c;
    };

    explicit Polynomial(int n) : n_(n) { (void)Monomial(n); }

    static Polynomial zero(int n) { return Polynomial(n); }

    static Polynomial constant(int n, Int c) {
        Polynomial p(n);
        if (c != 0) p.terms_.push_back({Monomial(n), std::move(c)});
        return p;
    }

    static Polynomial one(int n) { return constant(n, 1); }

    static Polynomial variable(int n, int i, int j) {
        if (i < 1 || i > n || j < 1 || j > n)
            throw OutOfRange("Polynomial::variable: index out of range");
        Polynomial p(n);
        Monomial m(n);
        m.set_exponent(static_cast<int>(Monomial::rank(i, j, n)), 1);
        p.terms_.push_back({m, 1});
        return p;
    }

    // Terms must be distinct monomials; sorts and drops zeros.
    static Polynomial from_terms(int n, std::vector<Term> terms) {
        Polynomial p(n);
        p.terms_ = std::move(terms);
        std::sort(p.terms_.begin(), p.terms_.end(),
                  [](const Term& a, const Term& b) { return a.m > b.m; });
        std::vector<Term> out;
        out.reserve(p.terms_.size());
        for (auto& t : p.terms_) {
            if (!out.empty() && out.back().m == t.m)
                out.back().c += t.c;
            else
                out.push_back(std::move(t));
        }
        std::erase_if(out, [](const Term& t) { return t.c == 0; });
        p.terms_ = std::move(out);
        return p;
    }

    int ambient() const { return n_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    long long degree() const {
        long long d = 0;
        for (const auto& t : terms_) d = std::max(d, t.m.degree());
        return d;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t k = 0; k < a.terms_.size(); ++k)
            if (!(a.terms_[k].m == b.terms_[k].m) || a.terms_[k].c != b.terms_[k].c) return false;
        return true;
    }

private:
    int n_;
    std::vector<Term> terms_;  // decreasing lex, canonical

    friend Polynomial poly_add(const Polynomial&, const Polynomial&);
    friend Polynomial poly_neg(const Polynomial&);
    friend Polynomial poly_mul(const Polynomial&, const Polynomial&);
    friend Polynomial poly_exact_div(const Polynomial&, const Polynomial&);
};

inline void require_same_ambient(const Polynomial& p, const Polynomial& q, const char* op) {
    if (p.ambient() != q.ambient())
        throw SizeMismatch(std::string(op) + ": ambient sizes " + std::to_string(p.ambient()) +
                           " and " + std::to_string(q.ambient()) + " differ");
}

inline Polynomial poly_add(const Polynomial& p, const Polynomial& q) {
    require_same_ambient(p, q, "poly_add");
    Polynomial r(p.ambient());
    r.terms_.reserve(p.terms_.size() + q.terms_.size());
    std::size_t a = 0, b = 0;
    while (a < p.terms_.size() && b < q.terms_.size()) {
        const auto cmp = p.terms_[a].m <=> q.terms_[b].m;
        if (cmp == std::strong_ordering::greater) {
            r.terms_.push_back(p.terms_[a++]);
        } else if (cmp == std::strong_ordering::less) {
            r.terms_.push_back(q.terms_[b++]);
        } else {
            Int c = p.terms_[a].c + q.terms_[b].c;
            if (c != 0) r.terms_.push_back({p.terms_[a].m, std::move(c)});
            ++a, ++b;
        }
    }
    for (; a < p.terms_.size(); ++a) r.terms_.push_back(p.terms_[a]);
    for (; b < q.terms_.size(); ++b) r.terms_.push_back(q.terms_[b]);
    return r;
}

inline Polynomial poly_neg(const Polynomial& p) {
    Polynomial r = p;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

inline Polynomial poly_sub(const Polynomial& p, const Polynomial& q) {
    return poly_add(p, poly_neg(q));
}

inline Polynomial poly_mul(const Polynomial& p, const Polynomial& q) {
    require_same_ambient(p, q, "poly_mul");
    if (p.is_zero() || q.is_zero()) return Polynomial::zero(p.ambient());
    std::unordered_map<Monomial, Int, MonomialHash> acc;
    acc.reserve(p.terms_.size() * 2);
    for (const auto& tp : p.terms_)
        for (const auto& tq : q.terms_) {
            Int& c = acc[tp.m * tq.m];
            c += tp.c * tq.c;
        }
    std::vector<Polynomial::Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) terms.push_back({m, std::move(c)});
    std::sort(terms.begin(), terms.end(),
              [](const Polynomial::Term& a, const Polynomial::Term& b) { return a.m > b.m; });
    Polynomial r(p.ambient());
    r.terms_ = std::move(terms);
    return r;
}

inline Polynomial poly_pow(const Polynomial& p, long long e) {
    if (e < 0) throw OutOfRange("poly_pow: negative exponent");
    Polynomial r = Polynomial::one(p.ambient());
    Polynomial base = p;
    while (e > 0) {
        if (e & 1) r = poly_mul(r, base);
        e >>= 1;
        if (e > 0) base = poly_mul(base, base);
    }
    return r;
}

// Exact division by repeated elimination of the lex-leading term.  Returns Q
// with Q * d == p when the quotient exists; a step whose leading term cannot
// be eliminated raises NotDivisible immediately.
inline Polynomial poly_exact_div(const Polynomial& p, const Polynomial& d) {
    require_same_ambient(p, d, "poly_exact_div");
    if (d.is_zero()) throw NotDivisible("poly_exact_div: division by the zero polynomial");
    if (p.is_zero()) return Polynomial::zero(p.ambient());

    const auto& lead_d = d.terms_.front();
    std::map<Monomial, Int, std::greater<Monomial>> rem;
    for (const auto& t : p.terms_) rem.emplace(t.m, t.c);

    std::vector<Polynomial::Term> quot;
    while (!rem.empty()) {
        const auto& [m, c] = *rem.begin();
        if (!lead_d.m.divides(m))
            throw NotDivisible("poly_exact_div: leading monomial not divisible (remainder leading term " +
                               std::to_string(m.degree()) + "-degree)");
        if (c % lead_d.c != 0)
            throw NotDivisible("poly_exact_div: leading coefficient not divisible");
        Polynomial::Term qt{lead_d.m.divide_into(m), c / lead_d.c};
        for (const auto& t : d.terms_) {
            const Monomial key = qt.m * t.m;
            auto it = rem.find(key);
            if (it == rem.end()) it = rem.emplace(key, 0).first;
            it->second -= qt.c * t.c;
            if (it->second == 0) rem.erase(it);
        }
        quot.push_back(std::move(qt));  // leading terms strictly decrease, so quot stays sorted
    }
    Polynomial q(p.ambient());
    q.terms_ = std::move(quot);
    return q;
}

// Row subset of [n], strictly increasing; the row set of a flag minor.
using FlagSet = std::vector<int>;

inline void validate_flag_set(const FlagSet& rows, int n) {
    if (rows.empty()) throw OutOfRange("flag set must be nonempty");
    int prev = 0;
    for (int r : rows) {
        if (r <= prev || r > n)
            throw OutOfRange("flag set must be strictly increasing within [n]");
        prev = r;
    }
}

// The flag minor Delta_I: determinant of the submatrix on rows I (ascending)
// and columns 1..|I| of the generic matrix (x_{ij}).  Expanded by cofactors
// along rows with memoization over column subsets, so the |I|! terms are
// assembled in O(2^|I|) polynomial merges.
inline Polynomial flag_minor(const FlagSet& rows, int n) {
    validate_flag_set(rows, n);
    const int k = static_cast<int>(rows.size());
    std::vector<Polynomial> memo(static_cast<std::size_t>(1) << k, Polynomial::zero(n));
    memo[0] = Polynomial::one(n);
    std::vector<std::vector<unsigned>> by_popcount(k + 1);
    for (unsigned mask = 1; mask < (1u << k); ++mask)
        by_popcount[std::popcount(mask)].push_back(mask);
    for (int r = 1; r <= k; ++r)
        for (unsigned mask : by_popcount[r]) {
            // expand along row rows[r-1] over the columns in mask
            Polynomial acc = Polynomial::zero(n);
            int pos = 0;
            for (int c = 0; c < k; ++c) {
                if (!(mask & (1u << c))) continue;
                ++pos;
                Polynomial x = Polynomial::variable(n, rows[r - 1], c + 1);
                Polynomial sub = poly_mul(x, memo[mask & ~(1u << c)]);
                acc = ((r + pos) % 2 == 0) ? poly_add(acc, sub) : poly_sub(acc, sub);
            }
            memo[mask] = std::move(acc);
        }
    return memo[(1u << k) - 1];
}

// The tableau basis element Delta_T: the product of flag minors over the
// columns of T.  The empty tableau maps to 1.
inline Polynomial tableau_basis_element(const Tableau& t) {
    Polynomial p = Polynomial::one(t.alphabet());
    for (int c = 1; c <= t.column_count(); ++c)
        p = poly_mul(p, flag_minor(t.column(c), t.alphabet()));
    return p;
}

inline const Polynomial::Term& leading_term(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial("leading term of the zero polynomial");
    return p.terms().front();
}

inline std::pair<Monomial, Int> leading_monomial(const Polynomial& p) {
    const auto& t = leading_term(p);
    return {t.m, t.c};
}

inline std::string to_string(const Polynomial& p);

// The Array whose monomial X^A is the leading monomial of p.  Cluster theory
// promises the leading term is monic with exponents on the triangle i >= j
// and a D-tight exponent array; each failure aborts with diagnostics because
// it falsifies that promise for the input.
inline Array leading_array(const Polynomial& p) {
    const auto& t = leading_term(p);
    if (t.c != 1)
        throw NotMonic("leading_array: leading coefficient is " + t.c.str() +
                       " in " + to_string(p));
    const int n = p.ambient();
    Array a(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const auto e = t.m.exponent(i, j, n);
            if (e == 0) continue;
            if (i < j)
                throw NotTriangular("leading_array: exponent on x[" + std::to_string(i) + "," +
                                    std::to_string(j) + "] above the diagonal in " + to_string(p));
            a.set(i, j, e);
        }
    if (auto v = d_tight_violation(a))
        throw NotDTight(v->first, v->second);
    return a;
}

// Exact evaluation at a rational matrix: x_{ij} -> m[i-1][j-1].
inline Rat evaluate(const Polynomial& p, const std::vector<std::vector<Rat>>& m) {
    const int n = p.ambient();
    if (static_cast<int>(m.size()) != n)
        throw SizeMismatch("evaluate: matrix size does not match ambient n");
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw SizeMismatch("evaluate: matrix is not square of size n");
    Rat total = 0;
    for (const auto& t : p.terms()) {
        Rat prod = t.c;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                int e = t.m.exponent(i, j, n);
                for (; e > 0; --e) prod *= m[i - 1][j - 1];
            }
        total += prod;
    }
    return total;
}

inline std::string to_string(const Monomial& m, int n) {
    if (m.is_one()) return "1";
    std::string s;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const auto e = m.exponent(i, j, n);
            if (e == 0) continue;
            if (!s.empty()) s += "*";
            s += "x[" + std::to_string(i) + "," + std::to_string(j) + "]";
            if (e > 1) s += "^" + std::to_string(e);
        }
    return s;
}

// Canonical text rendering: terms in decreasing lex order, variables as x[i,j].
inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : p.terms()) {
        const bool neg = t.c < 0;
        const Int abs_c = neg ? Int(-t.c) : t.c;
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        const std::string mono = to_string(t.m, p.ambient());
        if (abs_c != 1 || mono == "1") {
            s += abs_c.str();
            if (mono != "1") s += "*";
        }
        if (mono != "1") s += mono;
    }
    return s;
}

}  // namespace clusterfan
