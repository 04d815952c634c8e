#pragma once

#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace fanpart {

using complexd = std::complex<double>;

constexpr double kPi = 3.141592653589793238462643383279502884;

/// A finite abelian group Z_{q_1} x ... x Z_{q_k}, or the quaternion group Q8.
///
/// Abelian elements are tuples (g_1,...,g_k) with 0 <= g_j < q_j, enumerated
/// lexicographically (last coordinate fastest). Q8 elements use the fixed
/// order (+1, -1, +i, -i, +j, -j, +k, -k).
struct GroupSpec {
    std::vector<int> orders;
    bool is_q8 = false;

    static GroupSpec abelian(std::vector<int> qs) {
        for (int q : qs) {
            if (q < 2) throw std::domain_error("GroupSpec: every order must be >= 2");
        }
        if (qs.empty()) throw std::domain_error("GroupSpec: need at least one cyclic factor");
        return GroupSpec{std::move(qs), false};
    }
    static GroupSpec q8() { return GroupSpec{{}, true}; }

    std::size_t size() const {
        if (is_q8) return 8;
        std::size_t n = 1;
        for (int q : orders) n *= static_cast<std::size_t>(q);
        return n;
    }
    std::size_t rank() const { return is_q8 ? 1 : orders.size(); }
};

/// Tuple index of a group element or a character, componentwise in [0, q_j).
using Tuple = std::vector<int>;

inline std::size_t tuple_to_linear(const GroupSpec& g, const Tuple& t) {
    if (t.size() != g.orders.size()) throw std::domain_error("element rank mismatch");
    std::size_t idx = 0;
    for (std::size_t j = 0; j < t.size(); ++j) {
        if (t[j] < 0 || t[j] >= g.orders[j]) throw std::domain_error("element index out of range");
        idx = idx * static_cast<std::size_t>(g.orders[j]) + static_cast<std::size_t>(t[j]);
    }
    return idx;
}

inline Tuple linear_to_tuple(const GroupSpec& g, std::size_t idx) {
    Tuple t(g.orders.size());
    for (std::size_t j = g.orders.size(); j-- > 0;) {
        t[j] = static_cast<int>(idx % static_cast<std::size_t>(g.orders[j]));
        idx /= static_cast<std::size_t>(g.orders[j]);
    }
    return t;
}

/// chi_eps(g) = prod_j zeta_{q_j}^{eps_j * g_j}.
inline complexd character_value(const GroupSpec& g, const Tuple& eps, const Tuple& elem) {
    if (g.is_q8) throw std::domain_error("character_value: use q8_character for Q8");
    if (eps.size() != g.orders.size() || elem.size() != g.orders.size())
        throw std::domain_error("character_value: rank mismatch");
    double phase = 0.0;
    for (std::size_t j = 0; j < eps.size(); ++j) {
        if (eps[j] < 0 || eps[j] >= g.orders[j]) throw std::domain_error("character index out of range");
        if (elem[j] < 0 || elem[j] >= g.orders[j]) throw std::domain_error("element index out of range");
        phase += 2.0 * kPi * static_cast<double>(eps[j]) * static_cast<double>(elem[j]) /
                 static_cast<double>(g.orders[j]);
    }
    return std::polar(1.0, phase);
}

/// Negation -eps in the dual group, componentwise mod q_j.
inline Tuple tuple_negate(const GroupSpec& g, const Tuple& eps) {
    Tuple out(eps.size());
    for (std::size_t j = 0; j < eps.size(); ++j) out[j] = (g.orders[j] - eps[j]) % g.orders[j];
    return out;
}

inline bool tuple_is_zero(const Tuple& t) {
    for (int v : t)
        if (v != 0) return false;
    return true;
}

}  // namespace fanpart
