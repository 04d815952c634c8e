#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fanpart/group.hpp"
#include "fanpart/torsion_poly.hpp"

namespace fanpart {

/// The set of (measure index, character index) pairs whose Fourier transforms
/// a partition must annihilate; this is the representation rho of the
/// certification criterion.
struct AnnihilationSpec {
    GroupSpec group;
    std::vector<std::pair<int, Tuple>> entries;  // (measure index >= 1, eps != 0)
    int m = 1;                                   // number of distinct measures

    void check() const {
        for (const auto& [i, eps] : entries) {
            if (i < 1 || i > m) throw std::domain_error("AnnihilationSpec: measure index out of range");
            if (eps.size() != group.orders.size())
                throw std::domain_error("AnnihilationSpec: eps rank mismatch");
            if (tuple_is_zero(eps))
                throw std::domain_error("AnnihilationSpec: the trivial character carries total mass and is never annihilated");
            for (std::size_t j = 0; j < eps.size(); ++j)
                if (eps[j] < 0 || eps[j] >= group.orders[j])
                    throw std::domain_error("AnnihilationSpec: eps out of range");
        }
    }
};

namespace detail {

/// Picks one representative of each conjugate pair {eps, -eps}: scanning
/// coordinates right to left, keep eps if the first coordinate not equal to
/// 0 or q_j/2 satisfies 2 eps_j < q_j. Self-conjugate eps (all coordinates in
/// {0, q_j/2}) are kept; their transforms are real for real measures and must
/// vanish too.
inline bool half_set_keeps(const std::vector<int>& orders, const Tuple& eps) {
    for (std::size_t j = eps.size(); j-- > 0;) {
        if (eps[j] == 0) continue;
        if (2 * eps[j] < orders[j]) return true;
        if (2 * eps[j] > orders[j]) return false;
        // eps_j == q_j/2 is its own negative; defer to earlier coordinates
    }
    return true;
}

inline void enumerate_dual(const std::vector<int>& orders, std::size_t j, Tuple& eps,
                           const std::function<void(const Tuple&)>& visit) {
    if (j == orders.size()) {
        visit(eps);
        return;
    }
    for (int v = 0; v < orders[j]; ++v) {
        eps[j] = v;
        enumerate_dual(orders, j + 1, eps, visit);
    }
}

}  // namespace detail

/// One representative per conjugate pair of nonzero characters; annihilating
/// these (plus conjugate symmetry of real measures) forces full equipartition
/// into Q = prod q_j regions.
inline std::vector<Tuple> equipartition_char_set(const std::vector<int>& orders) {
    std::vector<Tuple> out;
    Tuple eps(orders.size(), 0);
    detail::enumerate_dual(orders, 0, eps, [&](const Tuple& e) {
        if (tuple_is_zero(e)) return;
        if (detail::half_set_keeps(orders, e)) out.push_back(e);
    });
    return out;
}

/// The Makeev variant: also drop every eps whose coordinates are all
/// multiples of p. Annihilating the rest forces equipartition modulo the
/// subgroup H = Z_p^k.
inline std::vector<Tuple> makeev_char_set(const std::vector<int>& orders, int p) {
    for (int q : orders)
        if (q % p != 0) throw std::domain_error("makeev_char_set: p must divide every order");
    std::vector<Tuple> out;
    Tuple eps(orders.size(), 0);
    detail::enumerate_dual(orders, 0, eps, [&](const Tuple& e) {
        bool all_mult = true;
        for (int v : e)
            if (v % p != 0) all_mult = false;
        if (all_mult) return;
        if (detail::half_set_keeps(orders, e)) out.push_back(e);
    });
    return out;
}

inline AnnihilationSpec build_equipartition_set(const std::vector<int>& orders, int m) {
    AnnihilationSpec spec{GroupSpec::abelian(orders), {}, m};
    for (int i = 1; i <= m; ++i)
        for (const Tuple& e : equipartition_char_set(orders)) spec.entries.emplace_back(i, e);
    spec.check();
    return spec;
}

inline AnnihilationSpec build_makeev_set(const std::vector<int>& orders, int p, int m) {
    AnnihilationSpec spec{GroupSpec::abelian(orders), {}, m};
    for (int i = 1; i <= m; ++i)
        for (const Tuple& e : makeev_char_set(orders, p)) spec.entries.emplace_back(i, e);
    spec.check();
    return spec;
}

inline AnnihilationSpec build_custom_set(const std::vector<int>& orders,
                                         std::vector<std::pair<int, Tuple>> entries, int m) {
    AnnihilationSpec spec{GroupSpec::abelian(orders), std::move(entries), m};
    spec.check();
    return spec;
}

/// The pair-of-9-fans preset over (9,9): the full equipartition set with the
/// three characters trivial on the 3-fan refinement retained, taken with the
/// conjugate representatives that reproduce the closed form
/// 6 b1^10 b2^9 (b1^18 - b2^18). The "-literal" variant keeps the original
/// representatives; its polynomial is the unit multiple -f, certifying the
/// same dimension.
inline AnnihilationSpec build_prop51_set(int m = 1, bool literal = false) {
    std::vector<int> orders{9, 9};
    std::vector<std::pair<int, Tuple>> entries;
    for (int i = 1; i <= m; ++i) {
        for (const Tuple& e : equipartition_char_set(orders)) {
            if ((e[0] == 0 && e[1] == 3) || (e[0] == 3 && e[1] == 3) || (e[0] == 6 && e[1] == 3)) continue;
            if (literal)
                entries.emplace_back(i, e);
            else
                entries.emplace_back(i, Tuple{(9 - e[0]) % 9, (9 - e[1]) % 9});
        }
    }
    return build_custom_set(orders, std::move(entries), m);
}

/// Outcome of the polynomial criterion for one annihilation spec.
struct BoundReport {
    std::string name;
    AnnihilationSpec spec;
    TorsionPoly polynomial;
    std::optional<int> certified_dimension;
    std::string anchor;  // provenance note for the tables
};

/// Builds the product of linear forms over the annihilation-set entries (multiplicity as
/// a global exponent when entries repeat per measure uniformly) and extracts
/// the least non-membership dimension.
inline BoundReport certify(const AnnihilationSpec& spec, std::string name = "", std::string anchor = "") {
    spec.check();
    // Entries replicate the same character set across measures; multiply once
    // per distinct character of measure 1 and exponentiate by the replication
    // count when the structure allows, otherwise multiply everything.
    std::vector<Tuple> base;
    for (const auto& [i, e] : spec.entries)
        if (i == 1) base.push_back(e);
    TorsionPoly f = (base.size() * static_cast<std::size_t>(spec.m) == spec.entries.size())
                        ? product_of_linear_forms(spec.group.orders, base, static_cast<unsigned long>(spec.m))
                        : [&] {
                              std::vector<Tuple> all;
                              for (const auto& [i, e] : spec.entries) all.push_back(e);
                              return product_of_linear_forms(spec.group.orders, all, 1);
                          }();
    return BoundReport{std::move(name), spec, f, min_certified_dimension(f), std::move(anchor)};
}

/// Every certified bound the library reproduces, as a regression table.
inline std::vector<BoundReport> paper_table() {
    std::vector<BoundReport> table;
    auto add = [&](const char* name, AnnihilationSpec spec, const char* anchor) {
        table.push_back(certify(spec, name, anchor));
    };

    add("equipartition q=9 m=1", build_equipartition_set({9}, 1), "single 9-fan, one measure: d=4");
    for (int p : {3, 5, 7, 11})
        for (int m : {1, 2, 3}) {
            std::string nm = "equipartition p=" + std::to_string(p) + " m=" + std::to_string(m);
            add(nm.c_str(), build_equipartition_set({p}, m), "single p-fan: d = m(p-1)/2");
        }
    add("equipartition (3,3) m=2", build_equipartition_set({3, 3}, 2), "pair of 3-fans, two measures: d=4");
    add("equipartition (5,5) m=1", build_equipartition_set({5, 5}, 1), "pair of 5-fans, one measure: d=6");
    add("equipartition (3,3) m=2 (digit case n=0)", build_equipartition_set({3, 3}, 2), "d = 2*(3-1) = 4");
    add("equipartition (3,3) m=8 (digit case n=1)", build_equipartition_set({3, 3}, 8), "d = 2*(9-1) = 16");
    add("makeev q=15 p=3 m=1", build_makeev_set({15}, 3, 1), "each 3-fan of a 15-fan: d=5");
    add("makeev q=15 p=5 m=1", build_makeev_set({15}, 5, 1), "each 5-fan of a 15-fan: d=6");
    add("makeev (6,6) p=3 m=2", build_makeev_set({6, 6}, 3, 2), "four pairs of 3-fans: d=16");
    add("custom pair-of-9-fans", build_prop51_set(1), "9-fan plus 3-fans of a second 9-fan: d=27");
    return table;
}

}  // namespace fanpart
