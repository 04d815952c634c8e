#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "fanpart/fourier.hpp"
#include "fanpart/q8_fourier.hpp"

using namespace fanpart;

namespace {

GroupFunction random_function(const GroupSpec& g, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    GroupFunction f{g, {}};
    for (std::size_t i = 0; i < g.size(); ++i) f.values.emplace_back(gauss(rng), gauss(rng));
    return f;
}

double max_abs_diff(const std::vector<complexd>& a, const std::vector<complexd>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace

TEST_CASE("character values on cyclic groups") {
    GroupSpec z3 = GroupSpec::abelian({3});
    for (int g = 0; g < 3; ++g)
        CHECK(std::abs(character_value(z3, {0}, {g}) - complexd(1.0)) < 1e-12);

    GroupSpec z4 = GroupSpec::abelian({4});
    CHECK(std::abs(character_value(z4, {1}, {1}) - complexd(0.0, 1.0)) < 1e-12);

    GroupSpec z33 = GroupSpec::abelian({3, 3});
    // eps=(1,2), g=(1,1): exp(2 pi i (1+2)/3) = 1
    CHECK(std::abs(character_value(z33, {1, 2}, {1, 1}) - complexd(1.0)) < 1e-12);

    CHECK(std::abs(std::abs(character_value(z33, {2, 2}, {1, 2})) - 1.0) < 1e-12);
    CHECK_THROWS_AS(character_value(z3, {3}, {0}), std::domain_error);
    CHECK_THROWS_AS(character_value(z3, {0}, {5}), std::domain_error);
}

TEST_CASE("character orthogonality, exhaustive for small groups") {
    for (const auto& orders : std::vector<std::vector<int>>{{2}, {5}, {8}, {3, 4}, {2, 2, 2}, {4, 4, 4}}) {
        GroupSpec g = GroupSpec::abelian(orders);
        REQUIRE(g.size() <= 64);
        for (std::size_t ei = 0; ei < g.size(); ++ei)
            for (std::size_t di = 0; di < g.size(); ++di) {
                complexd acc = 0.0;
                for (std::size_t gi = 0; gi < g.size(); ++gi) {
                    Tuple elem = linear_to_tuple(g, gi);
                    acc += character_value(g, linear_to_tuple(g, ei), elem) *
                           std::conj(character_value(g, linear_to_tuple(g, di), elem));
                }
                acc /= static_cast<double>(g.size());
                CHECK(std::abs(acc - complexd(ei == di ? 1.0 : 0.0)) < 1e-12);
            }
    }
}

TEST_CASE("transform of constants and single characters") {
    GroupSpec z6 = GroupSpec::abelian({6});
    GroupFunction f{z6, std::vector<complexd>(6, complexd(5.0, 0.0))};
    FourierCoefficients c = fourier_transform(f);
    CHECK(std::abs(c.c[0] - complexd(5.0)) < 1e-12);
    for (std::size_t i = 1; i < 6; ++i) CHECK(std::abs(c.c[i]) < 1e-12);

    // c_1 = 1, rest 0 on Z4 -> f(g) = i^g
    FourierCoefficients coeffs{GroupSpec::abelian({4}), {0.0, 1.0, 0.0, 0.0}};
    GroupFunction g4 = fourier_inverse(coeffs);
    for (int g = 0; g < 4; ++g)
        CHECK(std::abs(g4.values[static_cast<std::size_t>(g)] - std::pow(complexd(0, 1), g)) < 1e-12);
}

TEST_CASE("c_0 carries average mass and real functions have conjugate symmetry") {
    std::mt19937_64 rng(42);
    GroupSpec z5 = GroupSpec::abelian({5});
    GroupFunction f{z5, {}};
    complexd total = 0.0;
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < 5; ++i) {
        f.values.emplace_back(gauss(rng), 0.0);
        total += f.values.back();
    }
    FourierCoefficients c = fourier_transform(f);
    CHECK(std::abs(c.c[0] - total / 5.0) < 1e-12);
    for (int e = 1; e < 5; ++e)
        CHECK(std::abs(c.c[static_cast<std::size_t>(5 - e)] - std::conj(c.c[static_cast<std::size_t>(e)])) < 1e-12);
}

TEST_CASE("inversion and Parseval on random functions") {
    std::mt19937_64 rng(7);
    for (const auto& orders : std::vector<std::vector<int>>{{3}, {4}, {9}, {3, 3}, {3, 4}, {6, 6}}) {
        GroupSpec g = GroupSpec::abelian(orders);
        for (int trial = 0; trial < 25; ++trial) {
            GroupFunction f = random_function(g, rng);
            FourierCoefficients c = fourier_transform(f);
            GroupFunction back = fourier_inverse(c);
            CHECK(max_abs_diff(f.values, back.values) < 1e-12);

            double lhs = 0.0, rhs = 0.0;
            for (const complexd& v : f.values) lhs += std::norm(v);
            lhs /= static_cast<double>(g.size());
            for (const complexd& v : c.c) rhs += std::norm(v);
            CHECK(std::abs(lhs - rhs) < 1e-12);
        }
    }
}

TEST_CASE("Q8 transform: constants, indicators, and the mod-Z4 profile") {
    GroupFunction f8{GroupSpec::q8(), std::vector<complexd>(8, complexd(8.0))};
    Q8Transform t = q8_fourier_transform(f8);
    CHECK(std::abs(t.c_eps[0] - complexd(8.0)) < 1e-12);
    for (int i = 1; i < 4; ++i) CHECK(std::abs(t.c_eps[static_cast<std::size_t>(i)]) < 1e-12);
    for (const complexd& v : t.c_sigma) CHECK(std::abs(v) < 1e-12);

    GroupFunction ind{GroupSpec::q8(), std::vector<complexd>(8, complexd(0.0))};
    ind.values[0] = 1.0;  // indicator of +1
    t = q8_fourier_transform(ind);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(t.c_eps[static_cast<std::size_t>(i)] - complexd(0.125)) < 1e-12);
    CHECK(std::abs(t.c_sigma[0] - complexd(0.125)) < 1e-12);
    CHECK(std::abs(t.c_sigma[3] - complexd(0.125)) < 1e-12);
    CHECK(std::abs(t.c_sigma[1]) < 1e-12);
    CHECK(std::abs(t.c_sigma[2]) < 1e-12);

    // +1 on {+-1, +-i}, -1 on {+-j, +-k}: exactly chi_{(1,0)}
    GroupFunction mod4{GroupSpec::q8(), {1, 1, 1, 1, -1, -1, -1, -1}};
    t = q8_fourier_transform(mod4);
    CHECK(std::abs(t.c_eps[Q8Transform::eps_index(1, 0)] - complexd(1.0)) < 1e-12);
    CHECK(std::abs(t.c_eps[Q8Transform::eps_index(0, 0)]) < 1e-12);
    CHECK(std::abs(t.c_eps[Q8Transform::eps_index(0, 1)]) < 1e-12);
    CHECK(std::abs(t.c_eps[Q8Transform::eps_index(1, 1)]) < 1e-12);
    for (const complexd& v : t.c_sigma) CHECK(std::abs(v) < 1e-12);
}

TEST_CASE("Q8 round trip and Plancherel") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        GroupFunction f = random_function(GroupSpec::q8(), rng);
        Q8Transform t = q8_fourier_transform(f);
        GroupFunction back = q8_fourier_inverse(t);
        CHECK(max_abs_diff(f.values, back.values) < 1e-12);

        double lhs = 0.0;
        for (const complexd& v : f.values) lhs += std::norm(v);
        lhs /= 8.0;
        double rhs = 0.0;
        for (const complexd& v : t.c_eps) rhs += std::norm(v);
        double frob = 0.0;
        for (const complexd& v : t.c_sigma) frob += std::norm(v);
        rhs += 2.0 * frob;  // dimension weight n_sigma = 2
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}
