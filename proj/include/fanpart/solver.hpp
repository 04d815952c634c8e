#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fanpart/certifier.hpp"
#include "fanpart/fan_geometry.hpp"
#include "fanpart/fourier.hpp"
#include "fanpart/q8_fourier.hpp"

namespace fanpart {

struct SolverBudget {
    int max_evaluations = 40000;
    int restarts = 8;
    std::uint64_t seed = 0;
    double tolerance = 1e-3;  // relative hard residual
    double sigma0 = 0.35;     // initial angular smoothing width (radians)
};

struct SolveProblem {
    AnnihilationSpec spec;
    MeasureSet measures;
    SolverBudget budget;

    void check() const {
        spec.check();
        int max_idx = 0;
        for (const auto& [i, e] : spec.entries) max_idx = std::max(max_idx, i);
        if (max_idx > static_cast<int>(measures.measures.size()))
            throw std::domain_error("SolveProblem: spec references a missing measure");
    }
};

struct SolveResult {
    FanConfig config;
    double residual = 0.0;  // max_{(i,eps)} |c_{i,eps}| / |total_i|, hard classifier
    RegionMassTable table;
    bool converged = false;
    int evaluations = 0;
};

namespace detail {

/// Per-fan soft sector fractions for one point: von Mises weights about the
/// sector centers with concentration 1/sigma^2; sigma = 0 is the hard
/// one-hot assignment of sector_index.
inline void soft_fractions(complexd disp, int q, double sigma, std::vector<double>& frac) {
    frac.assign(static_cast<std::size_t>(q), 0.0);
    if (sigma <= 0.0) {
        frac[static_cast<std::size_t>(sector_index(disp, q))] = 1.0;
        return;
    }
    double theta = std::arg(disp);
    const double kappa = 1.0 / (sigma * sigma);
    // shift by the max exponent so at least one term survives underflow
    double best = -1e300;
    for (int r = 0; r < q; ++r) {
        double center = 2.0 * kPi * (r + 0.5) / q;
        double a = kappa * std::cos(theta - center);
        frac[static_cast<std::size_t>(r)] = a;
        best = std::max(best, a);
    }
    double sum = 0.0;
    for (double& w : frac) {
        w = std::exp(w - best);
        sum += w;
    }
    for (double& w : frac) w /= sum;
}

}  // namespace detail

/// Transforms c_{i,eps} for the annihilation-set entries from smoothed region masses.
/// Uses the product structure: c = (1/Q) sum_points w prod_j S_j(eps_j) with
/// S_j(e) = sum_r frac_j[r] zeta_{q_j}^{-e r}.
inline std::vector<complexd> soft_transforms(const FanConfig& cfg, const SolveProblem& prob, double sigma) {
    const auto& orders = cfg.orders;
    const std::size_t k = orders.size();
    const double Q = static_cast<double>(GroupSpec::abelian(orders).size());
    std::vector<complexd> out(prob.spec.entries.size(), complexd(0.0));

    std::vector<std::vector<double>> frac(k);
    std::vector<std::vector<complexd>> S(k);  // S[j][e]
    for (std::size_t mi = 0; mi < prob.measures.measures.size(); ++mi) {
        const PointCloud& cloud = prob.measures.measures[mi];
        for (std::size_t t = 0; t < cloud.points.size(); ++t) {
            for (std::size_t j = 0; j < k; ++j) {
                if (cfg.at_infinity(j)) {
                    frac[j].assign(static_cast<std::size_t>(orders[j]), 0.0);
                    frac[j][0] = 1.0;
                } else {
                    detail::soft_fractions(fan_displacement(cloud.points[t], cfg, j), orders[j], sigma, frac[j]);
                }
                S[j].assign(static_cast<std::size_t>(orders[j]), complexd(0.0));
                for (int e = 0; e < orders[j]; ++e) {
                    complexd acc = 0.0;
                    for (int r = 0; r < orders[j]; ++r)
                        acc += frac[j][static_cast<std::size_t>(r)] *
                               std::polar(1.0, -2.0 * kPi * e * r / orders[j]);
                    S[j][static_cast<std::size_t>(e)] = acc;
                }
            }
            for (std::size_t n = 0; n < prob.spec.entries.size(); ++n) {
                const auto& [i, eps] = prob.spec.entries[n];
                if (static_cast<std::size_t>(i - 1) != mi) continue;
                complexd prod = cloud.weights[t];
                for (std::size_t j = 0; j < k; ++j) prod *= S[j][static_cast<std::size_t>(eps[j])];
                out[n] += prod;
            }
        }
    }
    for (complexd& c : out) c /= Q;
    return out;
}

/// Penalty keeping the search away from the removed circles {0} x Z_{q_j}
/// (configurations there classify discontinuously).
inline double excluded_set_penalty(const FanConfig& cfg) {
    double pen = 0.0;
    const double margin = 0.2;
    for (std::size_t j = 0; j < cfg.orders.size(); ++j) {
        double a2 = 0.0;
        for (int i = 0; i < cfg.d; ++i) a2 += std::norm(cfg.centers[j][static_cast<std::size_t>(i)]);
        complexd b = cfg.centers[j][static_cast<std::size_t>(cfg.d)];
        double best = 1e300;
        for (int r = 0; r < cfg.orders[j]; ++r) {
            complexd zr = std::polar(1.0, 2.0 * kPi * r / cfg.orders[j]);
            best = std::min(best, std::sqrt(a2 + std::norm(b - zr)));
        }
        double gap = margin - best;
        if (gap > 0) pen += 10.0 * gap * gap;
    }
    return pen;
}

/// Sum of squared relative transform moduli over the annihilation-set entries, plus the
/// excluded-set penalty. Continuous in the config for sigma > 0.
inline double objective(const FanConfig& cfg, const SolveProblem& prob, double sigma) {
    std::vector<complexd> c = soft_transforms(cfg, prob, sigma);
    double total = 0.0;
    for (std::size_t n = 0; n < c.size(); ++n) {
        const auto& [i, eps] = prob.spec.entries[n];
        double t = std::abs(prob.measures.measures[static_cast<std::size_t>(i - 1)].total());
        double rel = (t > 0) ? std::abs(c[n]) / t : std::abs(c[n]);
        total += rel * rel;
    }
    return total + excluded_set_penalty(cfg);
}

/// Relative hard residual, recomputed through the exact classifier and the
/// plain group transform (independent of the smoothed path).
inline double hard_residual(const FanConfig& cfg, const SolveProblem& prob, RegionMassTable* table_out = nullptr) {
    RegionMassTable table = region_masses(prob.measures, cfg);
    double worst = 0.0;
    std::vector<FourierCoefficients> coeffs;
    for (std::size_t mi = 0; mi < table.masses.size(); ++mi)
        coeffs.push_back(fourier_transform(table.as_function(mi)));
    for (const auto& [i, eps] : prob.spec.entries) {
        double t = std::abs(prob.measures.measures[static_cast<std::size_t>(i - 1)].total());
        double v = std::abs(coeffs[static_cast<std::size_t>(i - 1)].at(eps));
        worst = std::max(worst, (t > 0) ? v / t : v);
    }
    if (table_out) *table_out = std::move(table);
    return worst;
}

namespace detail {

inline void normalize_center(std::vector<complexd>& x) {
    double n2 = 0.0;
    for (const complexd& z : x) n2 += std::norm(z);
    double n = std::sqrt(n2);
    if (n == 0.0) {
        x[0] = 1.0;
        return;
    }
    for (complexd& z : x) z /= n;
}

inline FanConfig random_config(int d, const std::vector<int>& orders, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    FanConfig cfg{d, orders, {}};
    for (std::size_t j = 0; j < orders.size(); ++j) {
        std::vector<complexd> x(static_cast<std::size_t>(d + 1));
        for (auto& z : x) z = complexd(gauss(rng), gauss(rng));
        normalize_center(x);
        cfg.centers.push_back(std::move(x));
    }
    return cfg;
}

inline FanConfig perturb_config(const FanConfig& cfg, double step, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    FanConfig out = cfg;
    for (auto& x : out.centers) {
        for (complexd& z : x) z += step * complexd(gauss(rng), gauss(rng));
        normalize_center(x);
    }
    return out;
}

}  // namespace detail

/// Multi-start (1+lambda) stochastic search with an annealed smoothing
/// schedule (sigma halved per stage down to hard assignment). Deterministic
/// under the seed. Budget exhaustion is a soft failure: best found result,
/// converged = false.
inline SolveResult solve(const SolveProblem& prob) {
    prob.check();
    const SolverBudget& budget = prob.budget;
    const int d = prob.measures.d;
    const std::vector<int>& orders = prob.spec.group.orders;

    SolveResult best;
    best.residual = 1e300;
    int evaluations = 0;
    const int lambda = 12;
    const int per_restart = std::max(lambda, budget.max_evaluations / std::max(1, budget.restarts));

    for (int restart = 0; restart < budget.restarts; ++restart) {
        std::mt19937_64 rng(budget.seed * 0x9e3779b97f4a7c15ULL + 0x100000001b3ULL * static_cast<std::uint64_t>(restart) + 1);
        FanConfig x = detail::random_config(d, orders, rng);

        std::vector<double> stages;
        for (double s = budget.sigma0; s > 0.01; s *= 0.5) stages.push_back(s);
        stages.push_back(0.0);  // hard polish

        int used = 0;
        for (double sigma : stages) {
            double fx = objective(x, prob, sigma);
            ++used;
            double step = (sigma > 0) ? 0.4 : 0.08;
            const int stage_evals = per_restart / static_cast<int>(stages.size());
            for (int it = 0; it < stage_evals / lambda && used < per_restart; ++it) {
                FanConfig best_prop = x;
                double best_val = fx;
                for (int c = 0; c < lambda; ++c) {
                    FanConfig prop = detail::perturb_config(x, step, rng);
                    double val = objective(prop, prob, sigma);
                    ++used;
                    if (val < best_val) {
                        best_val = val;
                        best_prop = std::move(prop);
                    }
                }
                if (best_val < fx) {
                    x = std::move(best_prop);
                    fx = best_val;
                    step = std::min(step * 1.3, 0.8);
                } else {
                    step = std::max(step * 0.7, 1e-5);
                }
            }
        }
        evaluations += used;

        RegionMassTable table;
        double res = hard_residual(x, prob, &table);
        if (res < best.residual) {
            best.config = std::move(x);
            best.residual = res;
            best.table = std::move(table);
        }
        if (best.residual < budget.tolerance) break;
    }
    best.evaluations = evaluations;
    best.converged = best.residual < budget.tolerance;
    return best;
}

// ---------------------------------------------------------------------------
// Verification of the partition claims implied by a spec.

enum class ClaimFamily { FullEquipartition, MakeevModuloH, PairOfNineFans, Q8ModuloZ4 };

struct VerifyReport {
    bool pass = false;
    double max_residual = 0.0;  // worst claim deviation relative to total mass
    std::vector<std::string> lines;
};

/// Full equipartition: every region mass total/Q.
inline VerifyReport verify_equipartition(const RegionMassTable& table, double tol) {
    VerifyReport rep;
    const double Q = static_cast<double>(table.group.size());
    for (std::size_t mi = 0; mi < table.masses.size(); ++mi) {
        complexd total = 0.0;
        for (const complexd& v : table.masses[mi]) total += v;
        double scale = std::max(std::abs(total), 1e-300);
        double worst = 0.0;
        for (const complexd& v : table.masses[mi]) worst = std::max(worst, std::abs(v - total / Q) / scale);
        rep.max_residual = std::max(rep.max_residual, worst);
        std::ostringstream os;
        os << "measure " << (mi + 1) << ": max |mass - total/" << Q << "| / total = " << worst;
        rep.lines.push_back(os.str());
    }
    rep.pass = rep.max_residual <= tol;
    return rep;
}

/// Makeev claim: masses constant on cosets of H = Z_p^k, where H is generated
/// by (q_j / p) in each coordinate.
inline VerifyReport verify_makeev(const RegionMassTable& table, int p, double tol) {
    VerifyReport rep;
    const GroupSpec& g = table.group;
    std::vector<Tuple> subgroup;
    {
        std::vector<int> t(g.orders.size(), 0);
        bool done = false;
        while (!done) {
            Tuple h(g.orders.size());
            for (std::size_t j = 0; j < h.size(); ++j) h[j] = t[j] * (g.orders[j] / p);
            subgroup.push_back(h);
            done = true;
            for (std::size_t j = 0; j < t.size(); ++j) {
                if (++t[j] < p) {
                    done = false;
                    break;
                }
                t[j] = 0;
            }
        }
    }
    for (std::size_t mi = 0; mi < table.masses.size(); ++mi) {
        complexd total = 0.0;
        for (const complexd& v : table.masses[mi]) total += v;
        double scale = std::max(std::abs(total), 1e-300);
        double worst = 0.0;
        for (std::size_t gi = 0; gi < g.size(); ++gi) {
            Tuple base = linear_to_tuple(g, gi);
            complexd m0 = table.masses[mi][gi];
            for (const Tuple& h : subgroup) {
                Tuple shifted(base.size());
                for (std::size_t j = 0; j < base.size(); ++j) shifted[j] = (base[j] + h[j]) % g.orders[j];
                worst = std::max(worst, std::abs(table.masses[mi][tuple_to_linear(g, shifted)] - m0) / scale);
            }
        }
        rep.max_residual = std::max(rep.max_residual, worst);
        std::ostringstream os;
        os << "measure " << (mi + 1) << ": max coset-mass deviation / total = " << worst;
        rep.lines.push_back(os.str());
    }
    rep.pass = rep.max_residual <= tol;
    return rep;
}

/// Pair-of-9-fans claim over (9,9): every union over j of R_{(k1, k2+3j)}
/// has mass total / 27.
inline VerifyReport verify_pair_of_nine_fans(const RegionMassTable& table, double tol) {
    VerifyReport rep;
    const GroupSpec& g = table.group;
    if (g.orders != std::vector<int>{9, 9}) throw std::domain_error("verify: claim requires orders (9,9)");
    for (std::size_t mi = 0; mi < table.masses.size(); ++mi) {
        complexd total = 0.0;
        for (const complexd& v : table.masses[mi]) total += v;
        double scale = std::max(std::abs(total), 1e-300);
        double worst = 0.0;
        for (int k1 = 0; k1 < 9; ++k1)
            for (int k2 = 0; k2 < 3; ++k2) {
                complexd s = 0.0;
                for (int j = 0; j < 3; ++j) s += table.masses[mi][tuple_to_linear(g, Tuple{k1, (k2 + 3 * j) % 9})];
                worst = std::max(worst, std::abs(s - total / 27.0) / scale);
            }
        rep.max_residual = std::max(rep.max_residual, worst);
        std::ostringstream os;
        os << "measure " << (mi + 1) << ": max |union mass - total/27| / total = " << worst;
        rep.lines.push_back(os.str());
    }
    rep.pass = rep.max_residual <= tol;
    return rep;
}

/// Q8 modulo-Z4 claim: every union W_{i^r} u W_{i^s j} has mass total / 4.
/// In the fixed order, {1, i, -1, -i} are indices {0, 2, 1, 3} and
/// {j, k, -j, -k} are {4, 6, 5, 7}.
inline VerifyReport verify_q8_mod_z4(const RegionMassTable& table, double tol) {
    VerifyReport rep;
    if (!table.group.is_q8) throw std::domain_error("verify: claim requires Q8 masses");
    static constexpr std::size_t z4[4] = {0, 2, 1, 3};
    static constexpr std::size_t jz4[4] = {4, 6, 5, 7};
    for (std::size_t mi = 0; mi < table.masses.size(); ++mi) {
        complexd total = 0.0;
        for (const complexd& v : table.masses[mi]) total += v;
        double scale = std::max(std::abs(total), 1e-300);
        double worst = 0.0;
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t s = 0; s < 4; ++s) {
                complexd u = table.masses[mi][z4[r]] + table.masses[mi][jz4[s]];
                worst = std::max(worst, std::abs(u - total / 4.0) / scale);
            }
        rep.max_residual = std::max(rep.max_residual, worst);
        std::ostringstream os;
        os << "measure " << (mi + 1) << ": max |wedge union - total/4| / total = " << worst;
        rep.lines.push_back(os.str());
    }
    rep.pass = rep.max_residual <= tol;
    return rep;
}

inline VerifyReport verify(const RegionMassTable& table, ClaimFamily family, double tol, int p = 0) {
    switch (family) {
        case ClaimFamily::FullEquipartition:
            return verify_equipartition(table, tol);
        case ClaimFamily::MakeevModuloH:
            if (p < 2) throw std::domain_error("verify: Makeev claim needs p");
            return verify_makeev(table, p, tol);
        case ClaimFamily::PairOfNineFans:
            return verify_pair_of_nine_fans(table, tol);
        case ClaimFamily::Q8ModuloZ4:
            return verify_q8_mod_z4(table, tol);
    }
    throw std::domain_error("verify: unknown claim family");
}

// ---------------------------------------------------------------------------
// Q8 objective (modulo-Z4 annihilation: everything except c_{(0,0)}, c_{(1,0)}).

inline double q8_objective(const WedgeConfig& cfg, const std::vector<QuaternionCloud>& measures) {
    RegionMassTable table = wedge_region_masses(measures, cfg);
    double total_obj = 0.0;
    for (std::size_t mi = 0; mi < table.masses.size(); ++mi) {
        Q8Transform tr = q8_fourier_transform(table.as_function(mi));
        double scale = std::max(std::abs(measures[mi].total()), 1e-300);
        double obj = std::norm(tr.c_eps[Q8Transform::eps_index(0, 1)] / scale) +
                     std::norm(tr.c_eps[Q8Transform::eps_index(1, 1)] / scale);
        for (const complexd& v : tr.c_sigma) obj += std::norm(v / scale);
        total_obj += obj;
    }
    return total_obj;
}

}  // namespace fanpart
