#pragma once

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "fanpart/certifier.hpp"
#include "fanpart/fan_geometry.hpp"
#include "fanpart/solver.hpp"

namespace fanpart {

using json = nlohmann::ordered_json;

inline json complex_to_json(const complexd& z) { return json::array({z.real(), z.imag()}); }
inline complexd complex_from_json(const json& j) { return complexd(j.at(0).get<double>(), j.at(1).get<double>()); }

// ---------------------------------------------------------------------------
// GroupFunction: {"orders":[...], "values":[[re,im],...]} in linear element order.

inline json group_function_to_json(const GroupFunction& f) {
    json j;
    j["orders"] = f.group.is_q8 ? json("Q8") : json(f.group.orders);
    json vals = json::array();
    for (const complexd& v : f.values) vals.push_back(complex_to_json(v));
    j["values"] = std::move(vals);
    return j;
}

inline GroupFunction group_function_from_json(const json& j) {
    GroupSpec g = j.at("orders").is_string() ? GroupSpec::q8()
                                             : GroupSpec::abelian(j.at("orders").get<std::vector<int>>());
    GroupFunction f{g, {}};
    for (const json& v : j.at("values")) f.values.push_back(complex_from_json(v));
    f.check();
    return f;
}

// ---------------------------------------------------------------------------
// TorsionPoly: {"orders":[...], "terms":[{"e":[...],"c":"<decimal>"}...]}
// sorted lexicographically by exponent (the term map already is).

inline json torsion_poly_to_json(const TorsionPoly& p) {
    json j;
    j["orders"] = p.orders();
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json t;
        t["e"] = e;
        t["c"] = c.str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline TorsionPoly torsion_poly_from_json(const json& j) {
    TorsionPoly p(j.at("orders").get<std::vector<int>>());
    for (const json& t : j.at("terms"))
        p.add_term(t.at("e").get<std::vector<int>>(), bigint(t.at("c").get<std::string>()));
    return p;
}

// ---------------------------------------------------------------------------
// AnnihilationSpec / BoundReport.

inline json annihilation_spec_to_json(const AnnihilationSpec& s) {
    json j;
    j["orders"] = s.group.orders;
    j["m"] = s.m;
    json entries = json::array();
    for (const auto& [i, eps] : s.entries) entries.push_back(json::array({i, eps}));
    j["entries"] = std::move(entries);
    return j;
}

inline AnnihilationSpec annihilation_spec_from_json(const json& j) {
    AnnihilationSpec s{GroupSpec::abelian(j.at("orders").get<std::vector<int>>()), {}, j.at("m").get<int>()};
    for (const json& e : j.at("entries")) s.entries.emplace_back(e.at(0).get<int>(), e.at(1).get<Tuple>());
    s.check();
    return s;
}

inline json bound_report_to_json(const BoundReport& r) {
    json j;
    j["name"] = r.name;
    j["spec"] = annihilation_spec_to_json(r.spec);
    j["polynomial"] = torsion_poly_to_json(r.polynomial);
    if (r.certified_dimension)
        j["certified_dimension"] = *r.certified_dimension;
    else
        j["certified_dimension"] = nullptr;
    j["anchor"] = r.anchor;
    return j;
}

// ---------------------------------------------------------------------------
// FanConfig / point clouds.

inline json fan_config_to_json(const FanConfig& cfg) {
    json j;
    j["d"] = cfg.d;
    j["orders"] = cfg.orders;
    json centers = json::array();
    for (const auto& x : cfg.centers) {
        json c = json::array();
        for (const complexd& z : x) c.push_back(complex_to_json(z));
        centers.push_back(std::move(c));
    }
    j["centers"] = std::move(centers);
    return j;
}

inline FanConfig fan_config_from_json(const json& j) {
    FanConfig cfg{j.at("d").get<int>(), j.at("orders").get<std::vector<int>>(), {}};
    for (const json& c : j.at("centers")) {
        std::vector<complexd> x;
        for (const json& z : c) x.push_back(complex_from_json(z));
        cfg.centers.push_back(std::move(x));
    }
    cfg.check();
    return cfg;
}

/// CSV columns: re_1, im_1, ..., re_d, im_d, weight_re, weight_im.
inline std::string cloud_to_csv(const PointCloud& cloud) {
    std::ostringstream os;
    os.precision(17);
    for (int i = 1; i <= cloud.d; ++i) os << "re" << i << ",im" << i << ",";
    os << "weight_re,weight_im\n";
    for (std::size_t t = 0; t < cloud.points.size(); ++t) {
        for (int i = 0; i < cloud.d; ++i)
            os << cloud.points[t][static_cast<std::size_t>(i)].real() << ","
               << cloud.points[t][static_cast<std::size_t>(i)].imag() << ",";
        os << cloud.weights[t].real() << "," << cloud.weights[t].imag() << "\n";
    }
    return os.str();
}

inline PointCloud cloud_from_csv(std::istream& in) {
    PointCloud cloud;
    std::string line;
    do {
        if (!std::getline(in, line)) throw std::runtime_error("cloud CSV: empty file");
    } while (!line.empty() && line[0] == '#');  // leading comment lines hold the manifest
    int cols = 1 + static_cast<int>(std::count(line.begin(), line.end(), ','));
    if (cols < 4 || cols % 2 != 0) throw std::runtime_error("cloud CSV: bad header");
    cloud.d = (cols - 2) / 2;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<double> vals;
        std::string cell;
        while (std::getline(ls, cell, ',')) vals.push_back(std::stod(cell));
        if (static_cast<int>(vals.size()) != cols) throw std::runtime_error("cloud CSV: bad row");
        std::vector<complexd> p;
        for (int i = 0; i < cloud.d; ++i)
            p.emplace_back(vals[static_cast<std::size_t>(2 * i)], vals[static_cast<std::size_t>(2 * i + 1)]);
        cloud.points.push_back(std::move(p));
        cloud.weights.emplace_back(vals[static_cast<std::size_t>(cols - 2)], vals[static_cast<std::size_t>(cols - 1)]);
    }
    return cloud;
}

inline PointCloud load_cloud_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cloud file: " + path);
    return cloud_from_csv(in);
}

// ---------------------------------------------------------------------------
// Deterministic cloud generators.

/// Uniform points in the unit ball of C^d ~ R^{2d}, unit weights.
inline PointCloud gen_uniform_ball(int d, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    PointCloud cloud;
    cloud.d = d;
    for (int t = 0; t < n; ++t) {
        std::vector<double> v(static_cast<std::size_t>(2 * d));
        double n2 = 0.0;
        for (double& x : v) {
            x = gauss(rng);
            n2 += x * x;
        }
        double radius = std::pow(unif(rng), 1.0 / (2.0 * d)) / std::sqrt(std::max(n2, 1e-300));
        std::vector<complexd> p;
        for (int i = 0; i < d; ++i)
            p.emplace_back(v[static_cast<std::size_t>(2 * i)] * radius, v[static_cast<std::size_t>(2 * i + 1)] * radius);
        cloud.points.push_back(std::move(p));
        cloud.weights.emplace_back(1.0, 0.0);
    }
    return cloud;
}

/// Mixture of isotropic Gaussian blobs with centers in the unit ball.
inline PointCloud gen_gaussian_mixture(int d, int n, int components, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_int_distribution<int> pick(0, components - 1);
    std::vector<std::vector<complexd>> centers;
    for (int c = 0; c < components; ++c) {
        std::vector<complexd> mu;
        for (int i = 0; i < d; ++i) mu.emplace_back(0.6 * gauss(rng), 0.6 * gauss(rng));
        centers.push_back(std::move(mu));
    }
    PointCloud cloud;
    cloud.d = d;
    for (int t = 0; t < n; ++t) {
        const auto& mu = centers[static_cast<std::size_t>(pick(rng))];
        std::vector<complexd> p;
        for (int i = 0; i < d; ++i)
            p.push_back(mu[static_cast<std::size_t>(i)] + 0.15 * complexd(gauss(rng), gauss(rng)));
        cloud.points.push_back(std::move(p));
        cloud.weights.emplace_back(1.0, 0.0);
    }
    return cloud;
}

/// floor((q-1)/2) tight clusters on the complex moment curve (z, z^2, ..., z^d);
/// a deliberately hard input family for fan equipartition.
inline PointCloud gen_moment_curve_clusters(int d, int q, int points_per_cluster, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int clusters = (q - 1) / 2;
    PointCloud cloud;
    cloud.d = d;
    for (int c = 0; c < clusters; ++c) {
        complexd z = std::polar(0.5 + 0.4 * (c + 1.0) / clusters, 2.0 * kPi * c / std::max(clusters, 1));
        std::vector<complexd> base;
        complexd zp = 1.0;
        for (int i = 0; i < d; ++i) {
            zp *= z;
            base.push_back(zp);
        }
        for (int t = 0; t < points_per_cluster; ++t) {
            std::vector<complexd> p = base;
            for (complexd& x : p) x += 0.01 * complexd(gauss(rng), gauss(rng));
            cloud.points.push_back(std::move(p));
            cloud.weights.emplace_back(1.0, 0.0);
        }
    }
    return cloud;
}

// ---------------------------------------------------------------------------
// Run manifests. The digest covers command, arguments, seed, version, and
// input digests; the timestamp is recorded but excluded so reruns compare
// equal.

inline constexpr const char* kToolVersion = "0.1.0";

inline std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

struct RunManifest {
    std::string command;
    std::vector<std::string> arguments;
    std::map<std::string, std::string> input_digests;
    std::uint64_t seed = 0;
    std::string timestamp;

    json to_json() const {
        json j;
        j["command"] = command;
        j["arguments"] = arguments;
        j["inputs"] = input_digests;
        j["seed"] = seed;
        j["version"] = kToolVersion;
        j["timestamp"] = timestamp;
        std::string digest_src = command;
        for (const auto& a : arguments) digest_src += "\x1f" + a;
        for (const auto& [k, v] : input_digests) digest_src += "\x1f" + k + "=" + v;
        digest_src += "\x1f" + std::to_string(seed) + "\x1f" + kToolVersion;
        j["digest"] = fnv1a_hex(digest_src);
        return j;
    }
};

inline std::string digest_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input for digest: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return fnv1a_hex(os.str());
}

}  // namespace fanpart
