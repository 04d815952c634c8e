#pragma once

#include <array>
#include <stdexcept>

namespace fanpart {

/// Element of Z[alpha,beta,gamma]/(2a, 2b, 8g, a^2, b^2, ab - 4g), truncated
/// above degree 12. Basis: 1, a, b, g, ag, bg, g^2, ag^2, bg^2, g^3 with
/// alpha/beta-type coefficients mod 2 and gamma-power coefficients mod 8
/// (constant term in Z, kept small here).
struct Q8CohElement {
    // index: 0:1  1:a  2:b  3:g  4:ag  5:bg  6:g2  7:ag2  8:bg2  9:g3
    std::array<long, 10> c{};

    static constexpr std::array<int, 10> kMod = {0, 2, 2, 8, 2, 2, 8, 2, 2, 8};

    void reduce() {
        for (int i = 0; i < 10; ++i) {
            if (kMod[i] == 0) continue;
            c[i] %= kMod[i];
            if (c[i] < 0) c[i] += kMod[i];
        }
    }

    static Q8CohElement zero() { return {}; }
    static Q8CohElement basis(int i, long coeff = 1) {
        Q8CohElement e;
        e.c[i] = coeff;
        e.reduce();
        return e;
    }
    static Q8CohElement alpha() { return basis(1); }
    static Q8CohElement beta() { return basis(2); }
    static Q8CohElement gamma() { return basis(3); }

    Q8CohElement operator+(const Q8CohElement& o) const {
        Q8CohElement out;
        for (int i = 0; i < 10; ++i) out.c[i] = c[i] + o.c[i];
        out.reduce();
        return out;
    }

    Q8CohElement operator*(const Q8CohElement& o) const {
        Q8CohElement out;
        for (int i = 0; i < 10; ++i) {
            if (c[i] == 0) continue;
            for (int j = 0; j < 10; ++j) {
                if (o.c[j] == 0) continue;
                mul_basis(i, j, c[i] * o.c[j], out);
            }
        }
        out.reduce();
        return out;
    }

    bool operator==(const Q8CohElement& o) const { return c == o.c; }
    bool is_zero() const {
        for (long v : c)
            if (v != 0) return false;
        return true;
    }

private:
    // Products of basis monomials; everything above degree 12 truncates to 0,
    // a^2 = b^2 = 0, ab = 4g.
    static void mul_basis(int i, int j, long coeff, Q8CohElement& out) {
        if (i > j) std::swap(i, j);
        // decompose basis index -> (alpha?, beta?, gamma power)
        static constexpr int A[10] = {0, 1, 0, 0, 1, 0, 0, 1, 0, 0};
        static constexpr int B[10] = {0, 0, 1, 0, 0, 1, 0, 0, 1, 0};
        static constexpr int Gp[10] = {0, 0, 0, 1, 1, 1, 2, 2, 2, 3};
        int a = A[i] + A[j], b = B[i] + B[j], g = Gp[i] + Gp[j];
        if (a >= 2 || b >= 2) return;  // a^2 = b^2 = 0
        if (a == 1 && b == 1) {        // ab = 4g
            a = 0;
            b = 0;
            g += 1;
            coeff *= 4;
        }
        if (g > 3) return;                 // truncated above degree 12
        if ((a || b) && g == 3) return;    // degree > 12
        int idx;
        if (a)
            idx = (g == 0) ? 1 : (g == 1 ? 4 : 7);
        else if (b)
            idx = (g == 0) ? 2 : (g == 1 ? 5 : 8);
        else
            idx = (g == 0) ? 0 : (g == 1 ? 3 : (g == 2 ? 6 : 9));
        out.c[idx] += coeff;
    }
};

/// Reduces (alpha + beta) * beta * gamma^2; the result is 4 gamma^3, nonzero
/// in the degree-12 part Z_8.
inline Q8CohElement q8_chern_check() {
    Q8CohElement g2 = Q8CohElement::gamma() * Q8CohElement::gamma();
    return (Q8CohElement::alpha() + Q8CohElement::beta()) * Q8CohElement::beta() * g2;
}

}  // namespace fanpart
