#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "clusterfan/array.hpp"
#include "clusterfan/errors.hpp"
#include "clusterfan/polynomial.hpp"
#include "clusterfan/quiver.hpp"

namespace clusterfan {

// A cluster variable: a polynomial in the matrix entries together with its
// tableau label, the exponent array of the lex-leading monomial.  The
// constructor enforces the labeling theorem: the polynomial is monic, the
// leading exponent is triangular and the label is D-tight.
class ClusterVariable {
public:
    explicit ClusterVariable(Polynomial p) : poly_(std::move(p)), label_(leading_array(poly_)) {}

    const Polynomial& poly() const { return poly_; }
    const Array& label() const { return label_; }

private:
    Polynomial poly_;
    Array label_;
};

using VarPtr = std::shared_ptr<const ClusterVariable>;

// A seed: a quiver together with one cluster variable per vertex.  Variables
// are immutable and shared; copying a seed is cheap.
struct Seed {
    Quiver quiver;
    std::vector<VarPtr> vars;  // parallel to quiver.vertices()

    const ClusterVariable& var_at(VertexId v) const {
        const auto& vs = quiver.vertices();
        const auto it = std::find(vs.begin(), vs.end(), v);
        if (it == vs.end()) throw OutOfRange("Seed: unknown vertex " + to_string(v));
        return *vars[static_cast<std::size_t>(it - vs.begin())];
    }
};

// The initial seed: quiver Q(n) with the interval flag minor
// Delta_{i,...,i+j-1} at vertex (i, j).  Its labels are the one-column
// interval arrays, and the frozen vertices carry exactly the frozen minors.
inline Seed initial_seed(int n) {
    Seed s;
    s.quiver = initial_quiver(n);
    s.vars.reserve(s.quiver.vertices().size());
    for (const auto& v : s.quiver.vertices()) {
        FlagSet rows;
        for (int r = v.i; r <= v.i + v.j - 1; ++r) rows.push_back(r);
        s.vars.push_back(std::make_shared<ClusterVariable>(flag_minor(rows, n)));
    }
    return s;
}

// Record of one exchange, including the tropical certificate: the lex-max of
// the weighted in/out label sums minus the mutated label must land back in
// the cone of D-tight arrays, and must equal the new variable's label.
struct ExchangeCertificate {
    Array in_labels;      // sum of w(v',v) * label(v') over in-neighbors
    Array out_labels;     // sum of w(v,v'') * label(v'') over out-neighbors
    Array expected_label; // lex-max of the two, minus the old label
    bool tight_ok = false;

    ExchangeCertificate(int n) : in_labels(n), out_labels(n), expected_label(n) {}
};

namespace detail {

inline Array weighted_label_sum(const Seed& s, const std::vector<std::pair<VertexId, int>>& nbrs,
                                int n) {
    Array acc(n);
    for (const auto& [u, w] : nbrs) {
        const Array& l = s.var_at(u).label();
        for (int t = 0; t < w; ++t) acc = tropical_product(acc, l);
    }
    return acc;
}

}  // namespace detail

// Mutation of a seed at a mutable vertex v.  The new variable is
//   (prod_{v' in In(v)} x_{v'}^{w(v',v)} + prod_{v'' in Out(v)} x_{v''}^{w(v,v'')}) / x_v
// computed by exact division; the quiver mutates alongside.  A failed
// division or a bad leading term is a hard failure (it falsifies regularity
// or the labeling theorem), as is a failed tropical certificate.
inline std::pair<Seed, ExchangeCertificate> mutate_seed(const Seed& s, VertexId v) {
    const int n = s.vars.empty() ? 0 : s.vars.front()->poly().ambient();
    if (s.quiver.is_frozen(v))
        throw FrozenVertex("mutate_seed: vertex " + to_string(v) + " is frozen");

    const auto in = s.quiver.in_neighbors(v);
    const auto out = s.quiver.out_neighbors(v);
    Polynomial in_prod = Polynomial::one(n);
    for (const auto& [u, w] : in) in_prod = poly_mul(in_prod, poly_pow(s.var_at(u).poly(), w));
    Polynomial out_prod = Polynomial::one(n);
    for (const auto& [u, w] : out) out_prod = poly_mul(out_prod, poly_pow(s.var_at(u).poly(), w));

    const Polynomial& old_poly = s.var_at(v).poly();
    Polynomial new_poly(n);
    try {
        new_poly = poly_exact_div(poly_add(in_prod, out_prod), old_poly);
    } catch (const NotDivisible& e) {
        throw NotDivisible("mutate_seed: exchange at " + to_string(v) +
                           " is not an exact division (" + e.what() +
                           "); old variable: " + to_string(old_poly));
    }
    auto new_var = std::make_shared<ClusterVariable>(std::move(new_poly));

    // Tropical certificate.
    ExchangeCertificate cert(n);
    cert.in_labels = detail::weighted_label_sum(s, in, n);
    cert.out_labels = detail::weighted_label_sum(s, out, n);
    const Array& old_label = s.var_at(v).label();
    const Array max_label = tropical_sum(cert.in_labels, cert.out_labels);
    Array diff(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) {
            const long long d = max_label.at(i, j) - old_label.at(i, j);
            if (d < 0)
                throw TropicalRelationViolation(
                    "mutate_seed at " + to_string(v) + ": lex-max of exchange labels minus the old "
                    "label has a negative entry at (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
            diff.set(i, j, d);
        }
    if (auto viol = d_tight_violation(diff))
        throw TropicalRelationViolation("mutate_seed at " + to_string(v) +
                                        ": exchange label difference is not D-tight at (" +
                                        std::to_string(viol->first) + "," +
                                        std::to_string(viol->second) + ")");
    cert.expected_label = diff;
    cert.tight_ok = true;
    if (!(new_var->label() == diff))
        throw TropicalRelationViolation("mutate_seed at " + to_string(v) +
                                        ": new label does not match the tropical exchange label");

    Seed r;
    r.quiver = mutate_quiver(s.quiver, v);
    r.vars = s.vars;
    const auto& vs = s.quiver.vertices();
    const auto it = std::find(vs.begin(), vs.end(), v);
    r.vars[static_cast<std::size_t>(it - vs.begin())] = std::move(new_var);
    return {std::move(r), std::move(cert)};
}

// Canonical key of a seed: the lex-sorted labels of its mutable variables,
// flattened.  Two seeds with the same key carry the same cluster.
using SeedKey = std::vector<long long>;

inline SeedKey seed_key(const Seed& s) {
    std::vector<const Array*> labels;
    const auto& vs = s.quiver.vertices();
    for (std::size_t k = 0; k < vs.size(); ++k)
        if (!s.quiver.is_frozen(vs[k])) labels.push_back(&s.vars[k]->label());
    std::sort(labels.begin(), labels.end(), [](const Array* a, const Array* b) {
        return lex_compare(*a, *b) == std::strong_ordering::less;
    });
    SeedKey key;
    if (!labels.empty()) key.reserve(labels.size() * labels.front()->flat().size());
    for (const Array* a : labels)
        key.insert(key.end(), a->flat().begin(), a->flat().end());
    return key;
}

}  // namespace clusterfan
