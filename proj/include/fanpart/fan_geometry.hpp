#pragma once

#include <cmath>
#include <vector>

#include "fanpart/fourier.hpp"
#include "fanpart/group.hpp"
#include "fanpart/quaternion.hpp"

namespace fanpart {

/// Weighted point cloud in C^d; weights may be complex (a pair of real
/// measures).
struct PointCloud {
    int d = 0;
    std::vector<std::vector<complexd>> points;
    std::vector<complexd> weights;

    complexd total() const {
        complexd t = 0.0;
        for (const complexd& w : weights) t += w;
        return t;
    }
    void check() const {
        if (points.size() != weights.size()) throw std::domain_error("PointCloud: points/weights mismatch");
        for (const auto& p : points)
            if (static_cast<int>(p.size()) != d) throw std::domain_error("PointCloud: wrong point dimension");
    }
};

struct MeasureSet {
    int d = 0;
    std::vector<PointCloud> measures;
};

/// k fan centers x_j = (a_j, b_j) on the unit sphere of C^{d+1}.
struct FanConfig {
    int d = 0;
    std::vector<int> orders;
    std::vector<std::vector<complexd>> centers;  // each of length d+1, last entry is b_j

    void check() const {
        if (centers.size() != orders.size()) throw std::domain_error("FanConfig: one center per fan required");
        for (const auto& x : centers) {
            if (static_cast<int>(x.size()) != d + 1) throw std::domain_error("FanConfig: center dimension mismatch");
            double n2 = 0.0;
            for (const complexd& z : x) n2 += std::norm(z);
            if (std::abs(n2 - 1.0) > 1e-9) throw std::domain_error("FanConfig: center not on the unit sphere");
        }
    }

    /// Fan j is at infinity iff a_j = 0.
    bool at_infinity(std::size_t j, double tol = 1e-12) const {
        double n2 = 0.0;
        for (int i = 0; i < d; ++i) n2 += std::norm(centers[j][static_cast<std::size_t>(i)]);
        return n2 <= tol * tol;
    }
};

/// Sector arcs are half-open [2 pi r / q, 2 pi (r+1) / q); zero displacement
/// goes to sector 0.
inline int sector_index(complexd w, int q) {
    if (w == complexd(0.0)) return 0;
    double theta = std::arg(w);
    if (theta < 0) theta += 2.0 * kPi;
    double frac = static_cast<double>(q) * theta / (2.0 * kPi);
    // snap ulp-scale noise so points on a boundary ray land in the upper arc
    if (std::ceil(frac) - frac < 1e-12) frac = std::ceil(frac);
    int r = static_cast<int>(std::floor(frac));
    if (r >= q) r = 0;  // the snap can push theta to exactly 2 pi
    if (r < 0) r = 0;
    return r;
}

/// Hermitian displacement of u from the fan-j hyperplane: <u, a_j>_C - conj(b_j).
inline complexd fan_displacement(const std::vector<complexd>& u, const FanConfig& cfg, std::size_t j) {
    complexd z = 0.0;
    for (int i = 0; i < cfg.d; ++i)
        z += u[static_cast<std::size_t>(i)] * std::conj(cfg.centers[j][static_cast<std::size_t>(i)]);
    return z - std::conj(cfg.centers[j][static_cast<std::size_t>(cfg.d)]);
}

/// Region label (r_1,...,r_k) of a point; fans at infinity contribute 0.
inline Tuple classify(const std::vector<complexd>& u, const FanConfig& cfg) {
    Tuple r(cfg.orders.size(), 0);
    for (std::size_t j = 0; j < cfg.orders.size(); ++j) {
        if (cfg.at_infinity(j)) continue;
        r[j] = sector_index(fan_displacement(u, cfg, j), cfg.orders[j]);
    }
    return r;
}

/// Per-measure region masses. Accumulation is per-region compensated
/// summation, merged in fixed region order, so the result is independent of
/// any point sharding.
struct RegionMassTable {
    GroupSpec group;
    std::vector<std::vector<complexd>> masses;  // [measure][region linear index]

    GroupFunction as_function(std::size_t i) const { return GroupFunction{group, masses[i]}; }
};

inline RegionMassTable region_masses(const MeasureSet& ms, const FanConfig& cfg) {
    cfg.check();
    if (ms.d != cfg.d) throw std::domain_error("region_masses: dimension mismatch");
    GroupSpec g = GroupSpec::abelian(cfg.orders);
    const std::size_t n = g.size();
    RegionMassTable table{g, {}};
    for (const PointCloud& cloud : ms.measures) {
        cloud.check();
        std::vector<complexd> sum(n, complexd(0.0));
        std::vector<complexd> comp(n, complexd(0.0));  // Kahan compensation
        for (std::size_t t = 0; t < cloud.points.size(); ++t) {
            std::size_t idx = tuple_to_linear(g, classify(cloud.points[t], cfg));
            complexd y = cloud.weights[t] - comp[idx];
            complexd s = sum[idx] + y;
            comp[idx] = (s - sum[idx]) - y;
            sum[idx] = s;
        }
        table.masses.push_back(std::move(sum));
    }
    return table;
}

// ---------------------------------------------------------------------------
// Quaternionic cubical wedges for Q8.

/// Wedge center (a, b) in H^{d+1}, unit norm.
struct WedgeConfig {
    int d = 0;
    std::vector<Quaternion> center;  // length d+1, last entry is b

    void check() const {
        if (static_cast<int>(center.size()) != d + 1) throw std::domain_error("WedgeConfig: dimension mismatch");
        double n2 = 0.0;
        for (const Quaternion& q : center) n2 += q.norm2();
        if (std::abs(n2 - 1.0) > 1e-9) throw std::domain_error("WedgeConfig: center not on the unit sphere");
    }
};

/// Index into the fixed Q8 order of the cone containing v: the element g
/// maximizing the real inner product <v, g>. Ties break to the earliest
/// element; v = 0 goes to +1.
inline std::size_t wedge_index(const Quaternion& v) {
    std::size_t best = 0;
    double best_dot = q8_elements()[0].dot(v);
    for (std::size_t g = 1; g < 8; ++g) {
        double dg = q8_elements()[g].dot(v);
        if (dg > best_dot + 0.0) {
            best = g;
            best_dot = dg;
        }
    }
    return best;
}

/// Weighted point cloud in H^d: each point is d quaternions.
struct QuaternionCloud {
    int d = 0;
    std::vector<std::vector<Quaternion>> points;
    std::vector<complexd> weights;

    complexd total() const {
        complexd t = 0.0;
        for (const complexd& w : weights) t += w;
        return t;
    }
};

inline Quaternion wedge_displacement(const std::vector<Quaternion>& u, const WedgeConfig& cfg) {
    Quaternion z{0, 0, 0, 0};
    for (int i = 0; i < cfg.d; ++i)
        z = z + u[static_cast<std::size_t>(i)] * cfg.center[static_cast<std::size_t>(i)].conj();
    return z - cfg.center[static_cast<std::size_t>(cfg.d)].conj();
}

inline RegionMassTable wedge_region_masses(const std::vector<QuaternionCloud>& measures, const WedgeConfig& cfg) {
    cfg.check();
    RegionMassTable table{GroupSpec::q8(), {}};
    for (const QuaternionCloud& cloud : measures) {
        if (cloud.d != cfg.d) throw std::domain_error("wedge_region_masses: dimension mismatch");
        std::vector<complexd> sum(8, complexd(0.0));
        std::vector<complexd> comp(8, complexd(0.0));
        for (std::size_t t = 0; t < cloud.points.size(); ++t) {
            std::size_t idx = wedge_index(wedge_displacement(cloud.points[t], cfg));
            complexd y = cloud.weights[t] - comp[idx];
            complexd s = sum[idx] + y;
            comp[idx] = (s - sum[idx]) - y;
            sum[idx] = s;
        }
        table.masses.push_back(std::move(sum));
    }
    return table;
}

}  // namespace fanpart
