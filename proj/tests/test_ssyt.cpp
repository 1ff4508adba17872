#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "clusterfan/array.hpp"
#include "clusterfan/gt.hpp"
#include "clusterfan/tableau.hpp"
#include "helpers.hpp"

using namespace clusterfan;
using testutil::random_d_tight;
using testutil::random_gt;
using testutil::random_tableau;

// The worked example: shape (11, 6, 1) in the alphabet [3].
static Tableau example_tableau() {
    return Tableau(3, {{1, 1, 1, 1, 2, 2, 2, 3, 3, 3, 3}, {2, 2, 2, 3, 3, 3}, {3}});
}

static Array example_array() {
    Array a(3);
    a.set(1, 1, 4);
    a.set(2, 1, 3);
    a.set(3, 1, 4);
    a.set(2, 2, 3);
    a.set(3, 2, 3);
    a.set(3, 3, 1);
    return a;
}

TEST_CASE("tableau_to_array on the worked example") {
    CHECK(tableau_to_array(example_tableau()) == example_array());
    CHECK(is_d_tight(example_array()));
    CHECK(tableau_to_array(example_tableau()).entry_sum() == example_tableau().box_count());
}

TEST_CASE("tableau_to_array trivial cases") {
    CHECK(tableau_to_array(Tableau(4)) == Array(4));

    // one-column tableau {1..k}: a_{jj} = 1 for j <= k
    Tableau col(5, {{1}, {2}, {3}});
    Array expect(5);
    expect.set(1, 1, 1);
    expect.set(2, 2, 1);
    expect.set(3, 3, 1);
    CHECK(tableau_to_array(col) == expect);
}

TEST_CASE("array_to_tableau inverts the worked example") {
    CHECK(array_to_tableau(example_array()) == example_tableau());
    CHECK(array_to_tableau(Array(3)) == Tableau(3));

    Array a(2);
    a.set(1, 1, 1);
    a.set(2, 2, 1);
    CHECK(array_to_tableau(a) == Tableau(2, {{1}, {2}}));
}

TEST_CASE("array_to_tableau rejects non-D-tight arrays with a witness") {
    Array a(2);
    a.set(2, 2, 1);
    CHECK_FALSE(is_d_tight(a));
    auto v = d_tight_violation(a);
    REQUIRE(v.has_value());
    CHECK(v->first == 2);
    CHECK(v->second == 1);
    CHECK_THROWS_AS(array_to_tableau(a), NotDTight);
}

TEST_CASE("is_d_tight basics") {
    CHECK(is_d_tight(Array(4)));
    CHECK(is_d_tight(example_array()));
}

TEST_CASE("round trips between tableaux and D-tight arrays") {
    std::mt19937_64 rng(20240401);
    for (int iter = 0; iter < 1000; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 7);
        Array a = random_d_tight(rng, n, 10);
        CHECK(tableau_to_array(array_to_tableau(a)) == a);
        Tableau t = random_tableau(rng, n, 8);
        CHECK(array_to_tableau(tableau_to_array(t)) == t);
    }
}

TEST_CASE("array_to_gt on the worked example") {
    GTPattern p = array_to_gt(example_array());
    CHECK(p.at(1, 1) == 4);
    CHECK(p.at(2, 2) == 3);
    CHECK(p.at(1, 2) == 7);
    CHECK(p.at(3, 3) == 1);
    CHECK(p.at(2, 3) == 6);
    CHECK(p.at(1, 3) == 11);
    CHECK(is_gt(p));

    // top line = the shape of the tableau
    auto shape = example_tableau().shape();
    CHECK(p.at(1, 3) == shape[0]);
    CHECK(p.at(2, 3) == shape[1]);
    CHECK(p.at(3, 3) == shape[2]);
}

TEST_CASE("array_to_gt trivial cases") {
    CHECK(array_to_gt(Array(3)) == GTPattern(3));

    const int n = 5;
    Array a(n);
    a.set(1, 1, 1);
    GTPattern p = array_to_gt(a);
    for (int j = 1; j <= n; ++j) CHECK(p.at(1, j) == 1);
    for (int i = 2; i <= n; ++i)
        for (int j = i; j <= n; ++j) CHECK(p.at(i, j) == 0);
}

TEST_CASE("gt_to_array inverts array_to_gt") {
    CHECK(gt_to_array(array_to_gt(example_array())) == example_array());
    CHECK(gt_to_array(GTPattern(4)) == Array(4));

    const int n = 4;
    GTPattern p(n);
    for (int j = 1; j <= n; ++j) p.set(1, j, 1);
    Array a(n);
    a.set(1, 1, 1);
    CHECK(gt_to_array(p) == a);
}

TEST_CASE("gt_to_array rejects invalid patterns") {
    GTPattern p(2);
    p.set(2, 2, 3);  // x_{22} > x_{11} = 0
    CHECK_FALSE(is_gt(p));
    CHECK_THROWS_AS(gt_to_array(p), NotGT);
}

TEST_CASE("GT isomorphism is a bijection between the cones") {
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 1000; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 6);
        Array a = random_d_tight(rng, n, 9);
        GTPattern p = array_to_gt(a);
        CHECK(is_gt(p));
        CHECK(gt_to_array(p) == a);

        GTPattern q = random_gt(rng, n, 9);
        Array b = gt_to_array(q);
        CHECK(is_d_tight(b));
        CHECK(array_to_gt(b) == q);
    }
}

TEST_CASE("array_to_gt matrix is unimodular") {
    // The map is linear; in the flat coordinates its matrix is triangular
    // with unit diagonal once rows/columns are ordered compatibly.  Check
    // |det| = 1 by integer Gaussian elimination over rationals-free longs:
    // build the matrix columnwise from images of basis arrays (computed via
    // the raw formula, skipping the D-tight gate, which only restricts the
    // domain of the public API, not the linear map).
    const int n = 5;
    const int d = n * (n + 1) / 2;
    auto formula = [&](const std::vector<long long>& flat) {
        // x_{ij} = sum_{k=i..j} a_{k,i}
        std::vector<long long> out;
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                long long s = 0;
                for (int k = i; k <= j; ++k) s += flat[Array::idx_of(k, i)];
                out.push_back(s);
            }
        return out;
    };
    std::vector<std::vector<long long>> m(d);
    for (int c = 0; c < d; ++c) {
        std::vector<long long> e(d, 0);
        e[c] = 1;
        m[c] = formula(e);
    }
    // Bareiss fraction-free determinant (all divisions exact)
    std::vector<std::vector<long long>> a(d, std::vector<long long>(d));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) a[r][c] = m[c][r];
    long long sign = 1, prev = 1;
    for (int k = 0; k < d - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < d; ++r)
                if (a[r][k] != 0) { piv = r; break; }
            REQUIRE(piv >= 0);
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (int r = k + 1; r < d; ++r)
            for (int c = k + 1; c < d; ++c)
                a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
        prev = a[k][k];
    }
    const long long det = sign * a[d - 1][d - 1];
    CHECK((det == 1 || det == -1));
}

TEST_CASE("lex_compare orders arrays by their monomials") {
    Array c13 = column_array({1, 3}, 3);
    Array c2 = column_array({2}, 3);
    CHECK(lex_compare(c13, c2) == std::strong_ordering::greater);
    CHECK(lex_compare(c2, c2) == std::strong_ordering::equal);
    CHECK(lex_compare(Array(3), column_array({3}, 3)) == std::strong_ordering::less);
    CHECK_THROWS_AS(lex_compare(Array(3), Array(4)), SizeMismatch);
}

TEST_CASE("lex_compare is a total order compatible with tropical product") {
    std::mt19937_64 rng(4242);
    for (int iter = 0; iter < 400; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 4);
        Array a = random_d_tight(rng, n, 6);
        Array b = random_d_tight(rng, n, 6);
        Array c = random_d_tight(rng, n, 6);

        // antisymmetry
        const auto ab = lex_compare(a, b), ba = lex_compare(b, a);
        if (ab == std::strong_ordering::less) CHECK(ba == std::strong_ordering::greater);
        if (ab == std::strong_ordering::equal) CHECK(a == b);

        // transitivity
        if (lex_compare(a, b) != std::strong_ordering::greater &&
            lex_compare(b, c) != std::strong_ordering::greater)
            CHECK(lex_compare(a, c) != std::strong_ordering::greater);

        // translation invariance
        if (ab == std::strong_ordering::greater)
            CHECK(lex_compare(tropical_product(a, c), tropical_product(b, c)) ==
                  std::strong_ordering::greater);
    }
}

TEST_CASE("tropical semiring basics") {
    Array a = column_array({1, 3}, 3);
    Array z(3);
    CHECK(tropical_product(a, z) == a);
    CHECK(tropical_sum(a, a) == a);
    CHECK(tropical_sum(column_array({1, 3}, 3), column_array({2}, 3)) == a);
}

TEST_CASE("l statistic") {
    CHECK(l_statistic(Array(4)) == 0);

    Array single(5);
    single.set(4, 2, 7);
    CHECK(l_statistic(single) == 0);

    Array a(2);
    a.set(2, 1, 1);
    a.set(2, 2, 1);
    CHECK(l_statistic(a) == 1);
}

TEST_CASE("l statistic is quadratic under scaling") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 4);
        Array a = random_d_tight(rng, n, 5);
        const long long base = l_statistic(a);
        for (long long t : {0LL, 2LL, 3LL}) {
            Array scaled(n);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= i; ++j) scaled.set(i, j, t * a.at(i, j));
            CHECK(l_statistic(scaled) == t * t * base);
        }
    }
}

TEST_CASE("frozen arrays") {
    auto f3 = frozen_arrays(3);
    REQUIRE(f3.size() == 5);
    CHECK(f3[0] == column_array({1}, 3));
    CHECK(f3[1] == column_array({1, 2}, 3));
    CHECK(f3[2] == column_array({1, 2, 3}, 3));
    CHECK(f3[3] == column_array({2, 3}, 3));
    CHECK(f3[4] == column_array({3}, 3));

    auto f2 = frozen_arrays(2);
    REQUIRE(f2.size() == 3);
    CHECK(f2[0] == column_array({1}, 2));
    CHECK(f2[1] == column_array({1, 2}, 2));
    CHECK(f2[2] == column_array({2}, 2));

    for (int n = 2; n <= 7; ++n) {
        auto f = frozen_arrays(n);
        CHECK(f.size() == static_cast<std::size_t>(2 * n - 1));
        for (const auto& a : f) CHECK(is_d_tight(a));
        for (std::size_t p = 0; p < f.size(); ++p)
            for (std::size_t q = p + 1; q < f.size(); ++q) CHECK_FALSE(f[p] == f[q]);
    }
}

TEST_CASE("interval column arrays") {
    Array full(3);
    full.set(1, 1, 1);
    full.set(2, 2, 1);
    full.set(3, 3, 1);
    CHECK(interval_column_array(1, 3, 3) == full);

    Array single(3);
    single.set(2, 1, 1);
    CHECK(interval_column_array(2, 1, 3) == single);

    Array pair(5);
    pair.set(2, 1, 1);
    pair.set(3, 2, 1);
    CHECK(interval_column_array(2, 2, 5) == pair);

    CHECK_THROWS_AS(interval_column_array(3, 2, 3), OutOfRange);
}
