#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "fanpart/group.hpp"

namespace fanpart {

using bigint = boost::multiprecision::cpp_int;

/// Multivariate polynomial in Z[b_1,...,b_k]/(q_1 b_1,...,q_k b_k).
///
/// A monomial with support S = {j : e_j > 0} has coefficient group
/// Z/gcd{q_j : j in S}, since q_j annihilates anything divisible by b_j.
/// Canonical form stores such coefficients in [0, gcd); the constant term
/// stays in Z. Zero coefficients are never stored.
class TorsionPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, bigint>;

    TorsionPoly() = default;
    explicit TorsionPoly(std::vector<int> orders) : orders_(std::move(orders)) {
        for (int q : orders_)
            if (q < 2) throw std::domain_error("TorsionPoly: orders must be >= 2");
    }

    static TorsionPoly zero(std::vector<int> orders) { return TorsionPoly(std::move(orders)); }

    static TorsionPoly constant(std::vector<int> orders, bigint c) {
        TorsionPoly p(std::move(orders));
        p.add_term(Exponents(p.k(), 0), std::move(c));
        return p;
    }

    static TorsionPoly one(std::vector<int> orders) { return constant(std::move(orders), 1); }

    /// eps_1 b_1 + ... + eps_k b_k.
    static TorsionPoly linear_form(std::vector<int> orders, const Tuple& eps) {
        TorsionPoly p(orders);
        if (eps.size() != p.k()) throw std::domain_error("linear_form: rank mismatch");
        for (std::size_t j = 0; j < eps.size(); ++j) {
            if (eps[j] < 0 || eps[j] >= orders[j]) throw std::domain_error("linear_form: eps out of range");
            if (eps[j] == 0) continue;
            Exponents e(p.k(), 0);
            e[j] = 1;
            p.add_term(std::move(e), eps[j]);
        }
        return p;
    }

    static TorsionPoly monomial(std::vector<int> orders, Exponents e, bigint c) {
        TorsionPoly p(std::move(orders));
        p.add_term(std::move(e), std::move(c));
        return p;
    }

    std::size_t k() const { return orders_.size(); }
    const std::vector<int>& orders() const { return orders_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * b^e and renormalizes that term.
    void add_term(Exponents e, bigint c) {
        if (e.size() != k()) throw std::domain_error("add_term: rank mismatch");
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            c = reduce_coeff(e, std::move(c));
            if (c != 0) terms_.emplace(std::move(e), std::move(c));
        } else {
            it->second = reduce_coeff(e, it->second + c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    TorsionPoly operator+(const TorsionPoly& o) const {
        check_compatible(o);
        TorsionPoly out = *this;
        for (const auto& [e, c] : o.terms_) out.add_term(e, c);
        return out;
    }

    TorsionPoly operator-(const TorsionPoly& o) const {
        check_compatible(o);
        TorsionPoly out = *this;
        for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
        return out;
    }

    TorsionPoly operator*(const TorsionPoly& o) const {
        check_compatible(o);
        TorsionPoly out(orders_);
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : o.terms_) {
                Exponents e(k());
                for (std::size_t j = 0; j < k(); ++j) e[j] = ea[j] + eb[j];
                out.add_term(std::move(e), ca * cb);
            }
        }
        return out;
    }

    TorsionPoly pow(unsigned long n) const {
        TorsionPoly result = one(orders_);
        TorsionPoly base = *this;
        while (n > 0) {
            if (n & 1UL) result = result * base;
            base = base * base;
            n >>= 1UL;
        }
        return result;
    }

    bool operator==(const TorsionPoly& o) const { return orders_ == o.orders_ && terms_ == o.terms_; }
    bool operator!=(const TorsionPoly& o) const { return !(*this == o); }

    /// Torsion of the coefficient group of monomial e: gcd of orders over the
    /// support, or 0 (no reduction) for the constant term.
    long torsion_of(const Exponents& e) const {
        long t = 0;
        for (std::size_t j = 0; j < k(); ++j)
            if (e[j] > 0) t = std::gcd(t, static_cast<long>(orders_[j]));
        return t;
    }

private:
    void check_compatible(const TorsionPoly& o) const {
        if (orders_ != o.orders_) throw std::domain_error("TorsionPoly: mismatched orders");
    }

    bigint reduce_coeff(const Exponents& e, bigint c) const {
        long t = torsion_of(e);
        if (t == 0) return c;
        bigint r = c % t;
        if (r < 0) r += t;
        return r;
    }

    std::vector<int> orders_;
    TermMap terms_;
};

/// Product over the given character indices of (eps_1 b_1 + ... + eps_k b_k),
/// all raised to the power m. Empty list gives 1.
inline TorsionPoly product_of_linear_forms(const std::vector<int>& orders, const std::vector<Tuple>& eps_list,
                                           unsigned long m = 1) {
    TorsionPoly f = TorsionPoly::one(orders);
    for (const Tuple& eps : eps_list) f = f * TorsionPoly::linear_form(orders, eps);
    return f.pow(m);
}

/// True iff every monomial of f lies in (b_1^{d+1},...,b_k^{d+1}), i.e. has
/// some exponent >= d+1. Monomial ideals in a ring with monomial basis admit
/// term-wise membership.
inline bool in_monomial_ideal(const TorsionPoly& f, int d) {
    if (d < 0) throw std::domain_error("in_monomial_ideal: d must be >= 0");
    for (const auto& [e, c] : f.terms()) {
        bool covered = false;
        for (int ej : e)
            if (ej >= d + 1) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

/// Least d with f outside (b_1^{d+1},...,b_k^{d+1}): min over monomials of the
/// largest exponent. Zero polynomial lies in every ideal, giving nullopt.
inline std::optional<int> min_certified_dimension(const TorsionPoly& f) {
    if (f.is_zero()) return std::nullopt;
    int best = -1;
    for (const auto& [e, c] : f.terms()) {
        int m = 0;
        for (int ej : e) m = std::max(m, ej);
        if (best < 0 || m < best) best = m;
    }
    return best;
}

}  // namespace fanpart
