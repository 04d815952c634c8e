#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "fanpart/torsion_poly.hpp"

namespace fanpart {

inline bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

/// D(p,k) = det of the matrix with rows (b_1^{p^i},...,b_k^{p^i}), i = 0..k-1,
/// expanded as the signed sum over permutations, coefficients mod p.
inline TorsionPoly dickson(int p, int k) {
    if (!is_odd_prime(p)) throw std::domain_error("dickson: p must be an odd prime");
    if (k < 1) throw std::domain_error("dickson: k must be >= 1");
    std::vector<int> orders(static_cast<std::size_t>(k), p);
    TorsionPoly out(orders);

    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    // p-power ladder: pw[i] = p^i, fits easily for the small k used here.
    std::vector<long> pw(static_cast<std::size_t>(k), 1);
    for (std::size_t i = 1; i < pw.size(); ++i) pw[i] = pw[i - 1] * p;

    do {
        int sgn = 1;
        for (std::size_t a = 0; a < perm.size(); ++a)
            for (std::size_t b = a + 1; b < perm.size(); ++b)
                if (perm[a] > perm[b]) sgn = -sgn;
        TorsionPoly::Exponents e(static_cast<std::size_t>(k), 0);
        for (std::size_t pos = 0; pos < perm.size(); ++pos)
            e[static_cast<std::size_t>(perm[pos])] = static_cast<int>(pw[pos]);
        out.add_term(std::move(e), sgn);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Binomial coefficient C(n, r) mod p via Lucas's theorem: the product over
/// base-p digits of C(n_i, r_i); zero as soon as some digit of r exceeds the
/// matching digit of n. r > n returns 0 by the same convention.
inline long lucas_binomial(long n, long r, int p) {
    if (p < 2) throw std::domain_error("lucas_binomial: p must be prime");
    if (n < 0 || r < 0) throw std::domain_error("lucas_binomial: n, r must be >= 0");
    if (r > n) return 0;
    long result = 1;
    while (n > 0 || r > 0) {
        long nd = n % p, rd = r % p;
        if (rd > nd) return 0;
        // C(nd, rd) mod p with nd, rd < p
        long c = 1;
        for (long t = 0; t < rd; ++t) c = c * (nd - t) / (t + 1);
        result = (result * (c % p)) % p;
        n /= p;
        r /= p;
    }
    return result;
}

}  // namespace fanpart
