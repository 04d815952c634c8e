#pragma once

#include <vector>

#include "fanpart/group.hpp"

namespace fanpart {

/// Values of a function G -> C, one entry per group element in linear order.
struct GroupFunction {
    GroupSpec group;
    std::vector<complexd> values;

    void check() const {
        if (values.size() != group.size()) throw std::domain_error("GroupFunction: wrong number of entries");
    }
};

/// Full set of |G| Fourier coefficients, indexed like the dual group.
struct FourierCoefficients {
    GroupSpec group;
    std::vector<complexd> c;  // c[linear index of eps]

    const complexd& at(const Tuple& eps) const { return c[tuple_to_linear(group, eps)]; }
};

/// c_eps = (1/|G|) sum_g f(g) conj(chi_eps(g)).
inline FourierCoefficients fourier_transform(const GroupFunction& f) {
    f.check();
    const GroupSpec& g = f.group;
    if (g.is_q8) throw std::domain_error("fourier_transform: abelian only, use q8_fourier_transform");
    const std::size_t n = g.size();
    FourierCoefficients out{g, std::vector<complexd>(n)};
    for (std::size_t ei = 0; ei < n; ++ei) {
        Tuple eps = linear_to_tuple(g, ei);
        complexd acc = 0.0;
        for (std::size_t gi = 0; gi < n; ++gi) {
            acc += f.values[gi] * std::conj(character_value(g, eps, linear_to_tuple(g, gi)));
        }
        out.c[ei] = acc / static_cast<double>(n);
    }
    return out;
}

/// f(g) = sum_eps c_eps chi_eps(g).
inline GroupFunction fourier_inverse(const FourierCoefficients& coeffs) {
    const GroupSpec& g = coeffs.group;
    const std::size_t n = g.size();
    if (coeffs.c.size() != n) throw std::domain_error("fourier_inverse: missing coefficients");
    GroupFunction out{g, std::vector<complexd>(n)};
    for (std::size_t gi = 0; gi < n; ++gi) {
        Tuple elem = linear_to_tuple(g, gi);
        complexd acc = 0.0;
        for (std::size_t ei = 0; ei < n; ++ei) {
            acc += coeffs.c[ei] * character_value(g, linear_to_tuple(g, ei), elem);
        }
        out.values[gi] = acc;
    }
    return out;
}

}  // namespace fanpart
