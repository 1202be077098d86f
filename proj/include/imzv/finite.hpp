#pragma once

// Per-prime components of finite multiple zeta values: multiple harmonic sums
// reduced mod p, their t-interpolation as polynomials over F_p, and the
// Bernoulli realization B_{p-k}/k of the finite single zeta.

#include "imzv/index.hpp"
#include "imzv/index_sum.hpp"
#include "imzv/kernels.hpp"
#include "imzv/polynomial.hpp"
#include "imzv/verdict.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace imzv {

/// Inverse table and harmonic-sum kernels for one odd prime.
class PrimeField
{
public:
    explicit PrimeField(std::uint64_t p)
        : p_(p)
    {
        if (p < 3 || !is_prime(p))
            throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
        inv_.assign(p, 0);
        inv_[1] = 1;
        for (std::uint64_t n = 2; n < p; ++n)
            inv_[n] = (p - mul_mod(p / n, inv_[p % n], p)) % p;
    }

    std::uint64_t prime() const noexcept { return p_; }
    std::uint64_t inverse(std::uint64_t n) const { return inv_.at(n % p_); }

    /// sum over 0 < n_1 < ... < n_r < p (or 1 <= n_1 <= ... <= n_r <= p-1 when star)
    /// of 1/(n_1^{k_1} ... n_r^{k_r}) mod p, by prefix sums in O(r p).
    std::uint64_t harmonic_sum(const Index& k, bool star) const
    {
        if (k.empty())
            return 1;
        std::vector<std::uint64_t> chain(p_, 0); // chain[n]: sum over chains ending at n
        for (std::uint64_t n = 1; n < p_; ++n)
            chain[n] = pow_mod(inv_[n], static_cast<std::uint64_t>(k[0]), p_);
        for (int j = 1; j < k.depth(); ++j) {
            std::vector<std::uint64_t> next(p_, 0);
            std::uint64_t prefix = 0;
            for (std::uint64_t n = 1; n < p_; ++n) {
                if (star)
                    prefix = (prefix + chain[n]) % p_;
                next[n] = mul_mod(pow_mod(inv_[n], static_cast<std::uint64_t>(k[j]), p_), prefix, p_);
                if (!star)
                    prefix = (prefix + chain[n]) % p_;
            }
            chain.swap(next);
        }
        std::uint64_t total = 0;
        for (std::uint64_t n = 1; n < p_; ++n)
            total = (total + chain[n]) % p_;
        return total;
    }

    /// p-component of the interpolated finite MZV of k, as a polynomial in t.
    ModPPoly zeta_t(const Index& k) const
    {
        ModPPoly out(p_);
        for (const auto& [l, c] : interpolate(k))
            out += reduce_mod_p(c, p_).scaled(harmonic_sum(l, false));
        return out;
    }

    /// Linear extension of zeta_t to Q[t]-combinations of indices.
    ModPPoly eval(const IndexSum& s) const
    {
        ModPPoly out(p_);
        for (const auto& [l, c] : s)
            out += reduce_mod_p(c, p_) * zeta_t(l);
        return out;
    }

    /// B_{p-k}/k mod p, the p-component of the finite analogue of zeta(k).
    std::uint64_t bernoulli_zeta(int k) const
    {
        if (k < 2 || static_cast<std::uint64_t>(k) + 2 > p_)
            throw std::domain_error("B_{p-k} not p-integral: need 2 <= k <= p-2 (k = " + std::to_string(k) +
                                    ", p = " + std::to_string(p_) + ")");
        return reduce_mod_p(bernoulli(static_cast<int>(p_) - k) / k, p_);
    }

private:
    std::uint64_t p_;
    std::vector<std::uint64_t> inv_;
};

inline std::uint64_t mhs_mod_p(const Index& k, std::uint64_t p, bool star)
{
    return PrimeField(p).harmonic_sum(k, star);
}

inline ModPPoly zeta_A_t(const Index& k, std::uint64_t p) { return PrimeField(p).zeta_t(k); }

inline ModPPoly eval_indexsum_A(const IndexSum& s, std::uint64_t p) { return PrimeField(p).eval(s); }

inline std::uint64_t frak_Z_A(int k, std::uint64_t p) { return PrimeField(p).bernoulli_zeta(k); }

namespace detail {

inline Json finite_value(std::uint64_t v, std::uint64_t p) { return Json{{"p", p}, {"value", v}}; }

inline Verdict compare_residues(std::string claim, std::uint64_t lhs, std::uint64_t rhs, std::uint64_t p)
{
    Verdict v{std::move(claim), lhs == rhs, nullptr};
    if (!v.pass)
        v.counterexample = Json{{"lhs", finite_value(lhs, p)}, {"rhs", finite_value(rhs, p)}};
    return v;
}

inline void require_guard(const Index& k, int m, std::uint64_t p)
{
    if (k.empty())
        throw std::invalid_argument("finite Ohno-type checks need a non-empty index");
    if (m < 0)
        throw std::invalid_argument("m must be non-negative");
    if (p <= static_cast<std::uint64_t>(k.weight() + m + 2))
        throw std::invalid_argument("prime " + std::to_string(p) + " too small: need p > wt(k) + m + 2");
}

// sum_{wt(e)=m, dep(e)=dep(k)} weight(k, e) * harmonic_sum(k + e)
template <typename Weight>
std::uint64_t shifted_sum(const PrimeField& F, const Index& k, int m, bool star, Weight&& weight)
{
    const std::uint64_t p = F.prime();
    std::uint64_t total = 0;
    for_each_composition(m, k.depth(), [&](const std::vector<int>& e) {
        const std::uint64_t w = reduce_mod_p(weight(k, e), p);
        total = (total + mul_mod(w, F.harmonic_sum(oplus(k, e), star), p)) % p;
    });
    return total;
}

// sum_{wt(e)=m, dep(e)=dep(k^v)} harmonic_sum((k^v + e)^v)
inline std::uint64_t hoffman_side_sum(const PrimeField& F, const Index& k, int m, bool star)
{
    const std::uint64_t p = F.prime();
    const Index kv = hoffman_dual(k);
    std::uint64_t total = 0;
    for_each_composition(m, kv.depth(), [&](const std::vector<int>& e) {
        total = (total + F.harmonic_sum(hoffman_dual(oplus(kv, e)), star)) % p;
    });
    return total;
}

inline Rat unit_weight(const Index&, std::span<const int>) { return 1; }

} // namespace detail

/// sum_{wt(e)=m} zeta_A(k + e) == sum_{wt(e)=m} zeta_A((k^v + e)^v) mod p.
inline Verdict check_oyama(const Index& k, int m, std::uint64_t p)
{
    detail::require_guard(k, m, p);
    const PrimeField F(p);
    return detail::compare_residues("ohno-F", detail::shifted_sum(F, k, m, false, detail::unit_weight),
                                    detail::hoffman_side_sum(F, k, m, false), p);
}

/// sum_{wt(e)=m} c2(k, e) zeta*_A(k + e) == sum_{wt(e)=m} zeta*_A((k^v + e)^v) mod p.
inline Verdict check_c2_star_ohno(const Index& k, int m, std::uint64_t p)
{
    detail::require_guard(k, m, p);
    const PrimeField F(p);
    return detail::compare_residues(
        "ohno-F-star", detail::shifted_sum(F, k, m, true, [](const Index& kk, std::span<const int> e) { return c2_coeff(kk, e); }),
        detail::hoffman_side_sum(F, k, m, true), p);
}

/// Interpolated finite Ohno-type relation as a polynomial identity in t over F_p:
///   zeta^t_A(g_m(k_up; t)_down) == sum_{wt(e)=m} zeta^t_A((k^v + e)^v).
/// Besides the identity itself, the value at t = 0 must match the plain shift sums
/// and the value at t = 1 the c2-weighted star sums, each computed directly from
/// harmonic sums.
inline Verdict check_interp_F_ohno(const Index& k, int m, std::uint64_t p)
{
    detail::require_guard(k, m, p);
    const PrimeField F(p);

    const IndexSum shifted = g_poly(m, arrow_up(k));
    for (const auto& [l, c] : shifted)
        if (!l.admissible())
            throw std::logic_error("g_m(k_up) has non-admissible support " + l.str());
    const ModPPoly lhs = F.eval(down(shifted));

    ModPPoly rhs(p);
    const Index kv = hoffman_dual(k);
    for_each_composition(m, kv.depth(), [&](const std::vector<int>& e) { rhs += F.zeta_t(hoffman_dual(oplus(kv, e))); });

    Verdict v{"ohno-interp-F", true, nullptr};
    Json failures = Json::object();
    if (!(lhs == rhs)) {
        failures["identity"] = Json{{"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
    }

    const std::uint64_t plain_lhs = detail::shifted_sum(F, k, m, false, detail::unit_weight);
    const std::uint64_t plain_rhs = detail::hoffman_side_sum(F, k, m, false);
    if (lhs(0) != plain_lhs || rhs(0) != plain_rhs || plain_lhs != plain_rhs)
        failures["t0"] = Json{{"lhs_at_0", lhs(0)}, {"shift_sum", plain_lhs}, {"rhs_at_0", rhs(0)}, {"hoffman_sum", plain_rhs}};

    const std::uint64_t star_lhs =
        detail::shifted_sum(F, k, m, true, [](const Index& kk, std::span<const int> e) { return c2_coeff(kk, e); });
    const std::uint64_t star_rhs = detail::hoffman_side_sum(F, k, m, true);
    if (lhs(1) != star_lhs || rhs(1) != star_rhs || star_lhs != star_rhs)
        failures["t1"] = Json{{"lhs_at_1", lhs(1)}, {"c2_star_sum", star_lhs}, {"rhs_at_1", rhs(1)}, {"hoffman_star_sum", star_rhs}};

    if (!failures.empty()) {
        v.pass = false;
        v.counterexample = failures;
    }
    return v;
}

/// Sum of zeta^t_A over admissible indices of weight k and depth r against
/// [sum_j {binom(k-1, j) + (-1)^r binom(k-1, r-1-j)} t^j (1-t)^{r-1-j}] * B_{p-k}/k.
inline Verdict check_sum_formula_F(int k, int r, std::uint64_t p)
{
    if (!(k > r && r >= 1))
        throw std::invalid_argument("sum formula needs k > r >= 1");
    if (p <= static_cast<std::uint64_t>(k + 2))
        throw std::invalid_argument("sum formula needs p > k + 2");
    const PrimeField F(p);
    ModPPoly lhs(p);
    for (const auto& idx : admissible_indices(k, r))
        lhs += F.zeta_t(idx);

    RatPoly coeff;
    const int sign = r % 2 == 0 ? 1 : -1;
    for (int j = 0; j <= r - 1; ++j)
        coeff += RatPoly(Rat(binom(k - 1, j) + sign * binom(k - 1, r - 1 - j))) * detail::t_pow(j) *
                 detail::one_minus_t_pow(r - 1 - j);
    const ModPPoly rhs = reduce_mod_p(coeff, p).scaled(F.bernoulli_zeta(k));
    return compare("sum-formula-F", lhs, rhs);
}

/// zeta_A(a, b) == (-1)^b binom(a+b, a) B_{p-a-b}/(a+b) mod p.
inline Verdict depth2_closed_form_check(int a, int b, std::uint64_t p)
{
    if (a < 1 || b < 1 || a + b < 2 || static_cast<std::uint64_t>(a + b) + 2 > p)
        throw std::invalid_argument("depth-2 closed form needs a, b >= 1 and a + b <= p - 2");
    const PrimeField F(p);
    const std::uint64_t lhs = F.harmonic_sum(Index{a, b}, false);
    const Rat c = Rat((b % 2 == 0 ? 1 : -1) * binom(a + b, a));
    const std::uint64_t rhs = mul_mod(reduce_mod_p(c, p), F.bernoulli_zeta(a + b), p);
    return detail::compare_residues("depth2-closed-form-F", lhs, rhs, p);
}

/// Polynomial identity in Q[t] behind the finite sum formula:
///   sum_{e=0}^{r-2} (-1)^{r-e} {sum_{j<=e} binom(k-r+e, j) t^j (1-t)^{e-j}} binom(k, r-e-1)
///   == sum_{j=0}^{r-1} {binom(k-1, j) + (-1)^r binom(k-1, r-1-j)} t^j (1-t)^{r-1-j}.
inline Verdict claim_identity_check(int k, int r)
{
    if (!(k > r && r >= 2))
        throw std::invalid_argument("coefficient identity needs k > r >= 2");
    RatPoly lhs;
    for (int e = 0; e <= r - 2; ++e) {
        RatPoly inner;
        for (int j = 0; j <= e; ++j)
            inner += RatPoly(Rat(binom(k - r + e, j))) * detail::t_pow(j) * detail::one_minus_t_pow(e - j);
        const int sign = (r - e) % 2 == 0 ? 1 : -1;
        lhs += RatPoly(Rat(sign * binom(k, r - e - 1))) * inner;
    }
    RatPoly rhs;
    const int sign = r % 2 == 0 ? 1 : -1;
    for (int j = 0; j <= r - 1; ++j)
        rhs += RatPoly(Rat(binom(k - 1, j) + sign * binom(k - 1, r - 1 - j))) * detail::t_pow(j) *
               detail::one_minus_t_pow(r - 1 - j);
    return compare("sum-coefficient-identity", lhs, rhs);
}

/// Star oracle: zeta^t_A(k) at t = 1 equals the directly summed star harmonic sum.
inline Verdict star_oracle_mod_p(const Index& k, std::uint64_t p)
{
    const PrimeField F(p);
    return detail::compare_residues("star-oracle-mod-p", F.zeta_t(k)(1), F.harmonic_sum(k, true), p);
}

/// sum_e ((k_down)^v + e)^v == sum_e ((k^dagger + e)^dagger)_down as index sums,
/// for non-empty admissible k.
inline Verdict hoffman_dual_shift_check(const Index& k, int m)
{
    if (k.empty() || !k.admissible())
        throw std::invalid_argument("hoffman_dual_shift_check needs a non-empty admissible index");
    const Index kv = hoffman_dual(arrow_down(k));
    IndexSum lhs;
    for_each_composition(m, kv.depth(), [&](const std::vector<int>& e) { lhs.add(hoffman_dual(oplus(kv, e)), RatPoly(1)); });
    return compare("hoffman-dual-shift", lhs, down(ohno_rhs(k, m, false)));
}

} // namespace imzv
