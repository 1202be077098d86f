#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace imzv {

/// Exact rational, always kept in lowest terms with positive denominator.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const Rat& q)
{
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "a/b", "a" or "-a/b".
inline Rat parse_rat(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator in \"" + s + "\"");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational number: \"" + s + "\"");
    }
}

/// Generalized binomial coefficient a(a-1)...(a-b+1)/b! for any integer a and b >= 0;
/// zero for b < 0. Gives binom(n-1, n) = [n == 0].
inline std::int64_t binom(std::int64_t a, std::int64_t b)
{
    if (b < 0)
        return 0;
    if (a >= 0 && b > a)
        return 0;
    if (a >= 0 && b > a - b)
        b = a - b;
    // running value is binom(a, i+1) at every step, so the division is exact
    __int128 r = 1;
    for (std::int64_t i = 0; i < b; ++i)
        r = r * (a - i) / (i + 1);
    return static_cast<std::int64_t>(r);
}

namespace detail {

// Integer-valued rationals skip the gcd normalization.
inline void add_to(Rat& a, const Rat& b, bool negate)
{
    if (denominator(a) == 1 && denominator(b) == 1) {
        BigInt n = numerator(a);
        if (negate)
            n -= numerator(b);
        else
            n += numerator(b);
        a = Rat(std::move(n));
        return;
    }
    if (negate)
        a -= b;
    else
        a += b;
}

inline Rat mul(const Rat& a, const Rat& b)
{
    if (denominator(a) == 1 && denominator(b) == 1)
        return Rat(BigInt(numerator(a) * numerator(b)));
    return a * b;
}

} // namespace detail

/// Univariate polynomial in t over Q, dense ascending coefficients, no trailing zeros.
class RatPoly
{
public:
    RatPoly() = default;

    RatPoly(int c) // NOLINT(google-explicit-constructor)
        : RatPoly(Rat(c))
    {
    }

    RatPoly(Rat c) // NOLINT(google-explicit-constructor)
    {
        if (c != 0)
            coeffs_.push_back(std::move(c));
    }

    explicit RatPoly(std::vector<Rat> coeffs)
        : coeffs_(std::move(coeffs))
    {
        trim();
    }

    static RatPoly t() { return RatPoly(std::vector<Rat>{0, 1}); }

    /// c * t^n
    static RatPoly monomial(Rat c, int n)
    {
        std::vector<Rat> v(static_cast<std::size_t>(n) + 1);
        v.back() = std::move(c);
        return RatPoly(std::move(v));
    }

    const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    Rat coeff(int n) const
    {
        return n >= 0 && n < static_cast<int>(coeffs_.size()) ? coeffs_[n] : Rat(0);
    }

    Rat operator()(const Rat& v) const
    {
        Rat acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * v + *it;
        return acc;
    }

    RatPoly& operator+=(const RatPoly& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            detail::add_to(coeffs_[i], o.coeffs_[i], false);
        trim();
        return *this;
    }

    RatPoly& operator-=(const RatPoly& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            detail::add_to(coeffs_[i], o.coeffs_[i], true);
        trim();
        return *this;
    }

    RatPoly& operator*=(const RatPoly& o)
    {
        *this = *this * o;
        return *this;
    }

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator-(RatPoly a)
    {
        for (auto& c : a.coeffs_)
            c = -c;
        return a;
    }

    friend RatPoly operator*(const RatPoly& a, const RatPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                detail::add_to(out[i + j], detail::mul(a.coeffs_[i], b.coeffs_[j]), false);
        }
        return RatPoly(std::move(out));
    }

    friend bool operator==(const RatPoly&, const RatPoly&) = default;

    RatPoly pow(int n) const
    {
        RatPoly r(1);
        for (int i = 0; i < n; ++i)
            r *= *this;
        return r;
    }

    std::string str() const
    {
        if (is_zero())
            return "0";
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0)
                continue;
            if (!s.empty())
                s += " + ";
            s += "(" + coeffs_[i].str() + ")";
            if (i == 1)
                s += "*t";
            else if (i > 1)
                s += "*t^" + std::to_string(i);
        }
        return s;
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<Rat> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const RatPoly& p) { return os << p.str(); }

/// 1 - t
inline RatPoly one_minus_t() { return RatPoly(std::vector<Rat>{1, -1}); }

// ---------------------------------------------------------------------------
// arithmetic mod p

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/// Inverse of a nonzero residue mod a prime.
inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p)
{
    a %= p;
    if (a == 0)
        throw std::domain_error("zero has no inverse mod " + std::to_string(p));
    return pow_mod(a, p - 2, p);
}

/// Reduces a p-integral rational mod p.
inline std::uint64_t reduce_mod_p(const Rat& q, std::uint64_t p)
{
    BigInt pp = p;
    BigInt den = denominator(q) % pp;
    if (den == 0)
        throw std::domain_error("non-p-integral coefficient " + to_string(q) + " for p = " + std::to_string(p));
    BigInt num = numerator(q) % pp;
    if (num < 0)
        num += pp;
    return mul_mod(num.convert_to<std::uint64_t>(), inv_mod(den.convert_to<std::uint64_t>(), p), p);
}

/// Polynomial in t over Z/pZ, coefficients in [0, p), no trailing zeros.
class ModPPoly
{
public:
    explicit ModPPoly(std::uint64_t p)
        : p_(p)
    {
    }

    ModPPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs)
        : p_(p), coeffs_(std::move(coeffs))
    {
        for (auto& c : coeffs_)
            c %= p_;
        trim();
    }

    static ModPPoly constant(std::uint64_t p, std::uint64_t c) { return ModPPoly(p, {c}); }

    std::uint64_t prime() const noexcept { return p_; }
    const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    std::uint64_t operator()(std::uint64_t v) const
    {
        std::uint64_t acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = (mul_mod(acc, v % p_, p_) + *it) % p_;
        return acc;
    }

    ModPPoly& operator+=(const ModPPoly& o)
    {
        check(o);
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] = (coeffs_[i] + o.coeffs_[i]) % p_;
        trim();
        return *this;
    }

    ModPPoly& operator-=(const ModPPoly& o)
    {
        check(o);
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] = (coeffs_[i] + p_ - o.coeffs_[i]) % p_;
        trim();
        return *this;
    }

    friend ModPPoly operator+(ModPPoly a, const ModPPoly& b) { return a += b; }
    friend ModPPoly operator-(ModPPoly a, const ModPPoly& b) { return a -= b; }

    friend ModPPoly operator*(const ModPPoly& a, const ModPPoly& b)
    {
        a.check(b);
        if (a.is_zero() || b.is_zero())
            return ModPPoly(a.p_);
        std::vector<std::uint64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] = (out[i + j] + mul_mod(a.coeffs_[i], b.coeffs_[j], a.p_)) % a.p_;
        return ModPPoly(a.p_, std::move(out));
    }

    ModPPoly scaled(std::uint64_t c) const
    {
        std::vector<std::uint64_t> out(coeffs_);
        for (auto& v : out)
            v = mul_mod(v, c, p_);
        return ModPPoly(p_, std::move(out));
    }

    friend bool operator==(const ModPPoly&, const ModPPoly&) = default;

    std::string str() const
    {
        if (is_zero())
            return "0";
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0)
                continue;
            if (!s.empty())
                s += " + ";
            s += std::to_string(coeffs_[i]);
            if (i == 1)
                s += "*t";
            else if (i > 1)
                s += "*t^" + std::to_string(i);
        }
        return s + " (mod " + std::to_string(p_) + ")";
    }

private:
    void check(const ModPPoly& o) const
    {
        if (o.p_ != p_)
            throw std::invalid_argument("mixing residues modulo different primes");
    }

    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::uint64_t p_;
    std::vector<std::uint64_t> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const ModPPoly& p) { return os << p.str(); }

inline ModPPoly reduce_mod_p(const RatPoly& f, std::uint64_t p)
{
    if (!is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    std::vector<std::uint64_t> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs())
        out.push_back(reduce_mod_p(c, p));
    return ModPPoly(p, std::move(out));
}

// ---------------------------------------------------------------------------
// Bernoulli numbers

namespace detail {

class BernoulliTable
{
public:
    Rat get(int n)
    {
        std::lock_guard lock(mutex_);
        while (static_cast<int>(values_.size()) <= n)
            extend();
        return values_[static_cast<std::size_t>(n)];
    }

private:
    // sum_{k=0}^{n} binom(n+1, k) B_k = 0
    void extend()
    {
        const int n = static_cast<int>(values_.size());
        if (n == 0) {
            values_.emplace_back(1);
            return;
        }
        if (n > 1 && n % 2 == 1) {
            values_.emplace_back(0);
            return;
        }
        Rat acc = 0;
        BigInt c = 1; // binom(n+1, k)
        for (int k = 0; k < n; ++k) {
            acc += Rat(c) * values_[static_cast<std::size_t>(k)];
            c = c * (n + 1 - k) / (k + 1);
        }
        values_.push_back(-acc / (n + 1));
    }

    std::mutex mutex_;
    std::vector<Rat> values_;
};

inline BernoulliTable& bernoulli_table()
{
    static BernoulliTable table;
    return table;
}

} // namespace detail

/// Bernoulli number B_n with B_1 = -1/2. Thread-safe, cached.
inline Rat bernoulli(int n)
{
    if (n < 0)
        throw std::invalid_argument("bernoulli: negative index");
    return detail::bernoulli_table().get(n);
}

} // namespace imzv
