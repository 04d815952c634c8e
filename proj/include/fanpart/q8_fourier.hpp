#pragma once

#include <array>
#include <complex>

#include "fanpart/fourier.hpp"
#include "fanpart/group.hpp"
#include "fanpart/quaternion.hpp"

namespace fanpart {

/// 2x2 complex matrix, row-major.
using Mat2 = std::array<complexd, 4>;

/// sigma: Q8 -> SU(2), the unit quaternion q = w + xi + yj + zk as
/// [[w+xi, y+zi], [-y+zi, w-xi]].
inline Mat2 q8_sigma(std::size_t g) {
    const Quaternion& q = q8_elements()[g];
    return {complexd(q.w, q.x), complexd(q.y, q.z), complexd(-q.y, q.z), complexd(q.w, -q.x)};
}

inline Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline complexd mat2_trace(const Mat2& a) { return a[0] + a[3]; }

/// Fourier data of a function on Q8: four scalar coefficients for the 1-dim
/// characters (indexed by eps in Z2 x Z2, linear order (0,0),(0,1),(1,0),(1,1))
/// and one 2x2 matrix coefficient for sigma.
struct Q8Transform {
    std::array<complexd, 4> c_eps;
    Mat2 c_sigma;

    static int eps_index(int e0, int e1) { return 2 * e0 + e1; }
};

/// c_eps = (1/8) sum_g f(g) chi_eps(g);  c_sigma = (1/8) sum_g f(g) sigma(g)^{-1}.
inline Q8Transform q8_fourier_transform(const GroupFunction& f) {
    if (!f.group.is_q8) throw std::domain_error("q8_fourier_transform: group must be Q8");
    f.check();
    Q8Transform out{};
    out.c_eps.fill(complexd(0.0));
    out.c_sigma.fill(complexd(0.0));
    for (std::size_t g = 0; g < 8; ++g) {
        const complexd v = f.values[g];
        for (int e0 = 0; e0 < 2; ++e0)
            for (int e1 = 0; e1 < 2; ++e1)
                out.c_eps[Q8Transform::eps_index(e0, e1)] += v * q8_character(e0, e1, g);
        const Mat2 sinv = q8_sigma(q8_inverse_index(g));
        for (int t = 0; t < 4; ++t) out.c_sigma[t] += v * sinv[t];
    }
    for (auto& c : out.c_eps) c /= 8.0;
    for (auto& c : out.c_sigma) c /= 8.0;
    return out;
}

/// f(g) = sum_eps c_eps chi_eps(g) + 2 Trace(c_sigma sigma(g)).
inline GroupFunction q8_fourier_inverse(const Q8Transform& t) {
    GroupFunction f{GroupSpec::q8(), std::vector<complexd>(8)};
    for (std::size_t g = 0; g < 8; ++g) {
        complexd acc = 0.0;
        for (int e0 = 0; e0 < 2; ++e0)
            for (int e1 = 0; e1 < 2; ++e1)
                acc += t.c_eps[Q8Transform::eps_index(e0, e1)] * q8_character(e0, e1, g);
        acc += 2.0 * mat2_trace(mat2_mul(t.c_sigma, q8_sigma(g)));
        f.values[g] = acc;
    }
    return f;
}

}  // namespace fanpart
