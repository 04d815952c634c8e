#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>

namespace fanpart {

/// Quaternion w + x i + y j + z k over doubles.
struct Quaternion {
    double w = 0, x = 0, y = 0, z = 0;

    Quaternion() = default;
    Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

    Quaternion conj() const { return {w, -x, -y, -z}; }
    double norm2() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }

    Quaternion operator+(const Quaternion& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
    Quaternion operator-(const Quaternion& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
    Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
    Quaternion operator*(const Quaternion& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }

    /// Real (Euclidean R^4) inner product.
    double dot(const Quaternion& o) const { return w * o.w + x * o.x + y * o.y + z * o.z; }
};

/// Fixed element order: +1, -1, +i, -i, +j, -j, +k, -k.
inline const std::array<Quaternion, 8>& q8_elements() {
    static const std::array<Quaternion, 8> elems = {{{1, 0, 0, 0},
                                                     {-1, 0, 0, 0},
                                                     {0, 1, 0, 0},
                                                     {0, -1, 0, 0},
                                                     {0, 0, 1, 0},
                                                     {0, 0, -1, 0},
                                                     {0, 0, 0, 1},
                                                     {0, 0, 0, -1}}};
    return elems;
}

inline const std::array<std::string, 8>& q8_element_names() {
    static const std::array<std::string, 8> names = {"+1", "-1", "+i", "-i", "+j", "-j", "+k", "-k"};
    return names;
}

/// Index of the inverse element in the fixed order.
inline std::size_t q8_inverse_index(std::size_t g) {
    // +1,-1 are self-inverse; otherwise +u <-> -u.
    if (g < 2) return g;
    return (g % 2 == 0) ? g + 1 : g - 1;
}

/// 1-dim character chi_eps (eps in Z2 x Z2) factoring through Q8/{+-1}.
/// chi_{(1,0)} has kernel {+-1, +-i}; chi_{(0,1)} has kernel {+-1, +-j}.
inline double q8_character(int eps0, int eps1, std::size_t g) {
    // coset of g in Q8/{+-1}: 0 -> {+-1}, 1 -> {+-i}, 2 -> {+-j}, 3 -> {+-k}
    const std::size_t coset = g / 2;
    int s = 1;
    if (eps0 && (coset == 2 || coset == 3)) s = -s;  // nontrivial off {+-1,+-i}
    if (eps1 && (coset == 1 || coset == 3)) s = -s;  // nontrivial off {+-1,+-j}
    return static_cast<double>(s);
}

}  // namespace fanpart
