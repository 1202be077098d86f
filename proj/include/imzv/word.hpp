#pragma once

#include "imzv/index.hpp"
#include "imzv/index_sum.hpp"
#include "imzv/kernels.hpp"
#include "imzv/polynomial.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace imzv {

/// Word over {x, y} packed into a 64-bit string; letter i (from the left) lives
/// at bit len-1-i, with x = 0 and y = 1.
class Word
{
public:
    static constexpr int max_length = 64;

    Word() = default;

    static Word x() { return Word(0, 1); }
    static Word y() { return Word(1, 1); }

    static Word parse(std::string_view s)
    {
        Word w;
        for (char c : s) {
            if (c != 'x' && c != 'y')
                throw std::invalid_argument("word letters must be x or y");
            w = w * (c == 'y' ? y() : x());
        }
        return w;
    }

    int length() const noexcept { return len_; }
    bool empty() const noexcept { return len_ == 0; }
    bool is_y(int i) const noexcept { return (bits_ >> (len_ - 1 - i)) & 1u; }

    friend Word operator*(const Word& a, const Word& b)
    {
        if (a.len_ + b.len_ > max_length)
            throw std::length_error("word longer than 64 letters");
        const std::uint64_t hi = b.len_ == 64 ? 0 : (a.bits_ << b.len_);
        return Word(hi | b.bits_, a.len_ + b.len_);
    }

    /// Reverses the word and swaps x <-> y.
    Word reversed_swapped() const
    {
        std::uint64_t out = 0;
        for (int i = 0; i < len_; ++i)
            out |= static_cast<std::uint64_t>(!((bits_ >> i) & 1u)) << (len_ - 1 - i);
        return Word(out, len_);
    }

    std::string str() const
    {
        std::string s;
        s.reserve(static_cast<std::size_t>(len_));
        for (int i = 0; i < len_; ++i)
            s += is_y(i) ? 'y' : 'x';
        return s;
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b)
    {
        if (auto c = a.len_ <=> b.len_; c != 0)
            return c;
        return a.bits_ <=> b.bits_;
    }

private:
    Word(std::uint64_t bits, int len)
        : bits_(bits), len_(len)
    {
    }

    std::uint64_t bits_ = 0;
    int len_ = 0;
};

/// (k_1, ..., k_r) -> y x^{k_1-1} ... y x^{k_r-1}
inline Word word_of_index(const Index& k)
{
    Word w;
    for (int p : k) {
        w = w * Word::y();
        for (int j = 1; j < p; ++j)
            w = w * Word::x();
    }
    return w;
}

inline Index index_of_word(const Word& w)
{
    if (w.empty())
        return {};
    if (!w.is_y(0))
        throw std::invalid_argument("word " + w.str() + " does not start with y");
    std::vector<int> parts;
    for (int i = 0; i < w.length(); ++i) {
        if (w.is_y(i))
            parts.push_back(1);
        else
            ++parts.back();
    }
    return Index(std::move(parts));
}

/// Element of Q<x,y>[t]: finite map word -> polynomial in t, no zero coefficients.
class NCPoly
{
public:
    using Map = std::map<Word, RatPoly>;

    NCPoly() = default;

    NCPoly(Word w, RatPoly c = RatPoly(1)) // NOLINT(google-explicit-constructor)
    {
        add(w, std::move(c));
    }

    static NCPoly one() { return NCPoly(Word{}); }

    void add(const Word& w, const RatPoly& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    const Map& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }

    RatPoly coeff(const Word& w) const
    {
        auto it = terms_.find(w);
        return it == terms_.end() ? RatPoly() : it->second;
    }

    NCPoly& operator+=(const NCPoly& o)
    {
        for (const auto& [w, c] : o.terms_)
            add(w, c);
        return *this;
    }

    NCPoly& operator-=(const NCPoly& o)
    {
        for (const auto& [w, c] : o.terms_)
            add(w, -c);
        return *this;
    }

    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }

    friend NCPoly operator*(const NCPoly& a, const NCPoly& b)
    {
        NCPoly out;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_)
                out.add(wa * wb, ca * cb);
        return out;
    }

    friend NCPoly operator*(const RatPoly& c, const NCPoly& a)
    {
        NCPoly out;
        if (c.is_zero())
            return out;
        for (const auto& [w, v] : a.terms_)
            out.add(w, c * v);
        return out;
    }

    friend bool operator==(const NCPoly&, const NCPoly&) = default;

    std::string str() const
    {
        if (is_zero())
            return "0";
        std::string s;
        for (const auto& [w, c] : terms_) {
            if (!s.empty())
                s += " + ";
            s += "[" + c.str() + "]" + (w.empty() ? std::string("1") : w.str());
        }
        return s;
    }

private:
    Map terms_;
};

inline NCPoly word_of(const IndexSum& s)
{
    NCPoly out;
    for (const auto& [k, c] : s)
        out.add(word_of_index(k), c);
    return out;
}

inline IndexSum index_sum_of(const NCPoly& p)
{
    IndexSum out;
    for (const auto& [w, c] : p)
        out.add(index_of_word(w), c);
    return out;
}

/// Power series in u truncated after u^order, coefficients in Q<x,y>[t].
class NCSeries
{
public:
    explicit NCSeries(int order)
        : coeffs_(checked(order) + 1)
    {
    }

    /// c * u^deg, dropped when deg exceeds the order.
    NCSeries(int order, const NCPoly& c, int deg = 0)
        : NCSeries(order)
    {
        if (deg < 0)
            throw std::invalid_argument("negative u-degree");
        if (deg <= order)
            coeffs_[static_cast<std::size_t>(deg)] = c;
    }

    static NCSeries one(int order) { return NCSeries(order, NCPoly::one()); }

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const NCPoly& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    NCPoly& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
    const std::vector<NCPoly>& coeffs() const noexcept { return coeffs_; }

    NCSeries truncated(int order) const
    {
        if (order > this->order())
            throw std::invalid_argument("cannot raise the truncation order");
        NCSeries out(order);
        for (int n = 0; n <= order; ++n)
            out[n] = (*this)[n];
        return out;
    }

    NCSeries& operator+=(const NCSeries& o)
    {
        check(o);
        for (std::size_t n = 0; n < coeffs_.size(); ++n)
            coeffs_[n] += o.coeffs_[n];
        return *this;
    }

    NCSeries& operator-=(const NCSeries& o)
    {
        check(o);
        for (std::size_t n = 0; n < coeffs_.size(); ++n)
            coeffs_[n] -= o.coeffs_[n];
        return *this;
    }

    friend NCSeries operator+(NCSeries a, const NCSeries& b) { return a += b; }
    friend NCSeries operator-(NCSeries a, const NCSeries& b) { return a -= b; }

    /// Concatenation product; u-degrees add and anything past the order is dropped.
    friend NCSeries operator*(const NCSeries& a, const NCSeries& b)
    {
        a.check(b);
        NCSeries out(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (a[i].is_zero())
                continue;
            for (int j = 0; i + j <= a.order(); ++j)
                if (!b[j].is_zero())
                    out[i + j] += a[i] * b[j];
        }
        return out;
    }

    friend NCSeries operator*(const RatPoly& c, const NCSeries& a)
    {
        NCSeries out(a.order());
        for (int n = 0; n <= a.order(); ++n)
            out[n] = c * a[n];
        return out;
    }

    friend bool operator==(const NCSeries&, const NCSeries&) = default;

    std::string str() const
    {
        std::string s;
        for (int n = 0; n <= order(); ++n)
            s += "u^" + std::to_string(n) + ": " + (*this)[n].str() + "\n";
        return s;
    }

private:
    static std::size_t checked(int order)
    {
        if (order < 0)
            throw std::invalid_argument("negative truncation order");
        return static_cast<std::size_t>(order);
    }

    void check(const NCSeries& o) const
    {
        if (o.order() != order())
            throw std::invalid_argument("truncation order mismatch");
    }

    std::vector<NCPoly> coeffs_;
};

inline NCSeries nc_mul(const NCSeries& a, const NCSeries& b) { return a * b; }

/// (1 - n)^{-1} = sum_j n^j for s = 1 - n where n has no u^0 term.
inline NCSeries nc_geom_inverse(const NCSeries& s)
{
    if (!(s[0] == NCPoly::one()))
        throw std::invalid_argument("geometric inverse needs constant term exactly 1");
    const int order = s.order();
    const NCSeries n = NCSeries::one(order) - s;
    NCSeries out = NCSeries::one(order);
    for (int j = 0; j < order; ++j)
        out = NCSeries::one(order) + n * out;
    return out;
}

/// Applies the algebra map that sends x -> image_x and y -> image_y, coefficients
/// in t and u untouched.
inline NCSeries substitute(const NCSeries& s, const NCSeries& image_x, const NCSeries& image_y)
{
    const int order = s.order();
    NCSeries out(order);
    for (int d = 0; d <= order; ++d) {
        const int rest = order - d;
        const NCSeries ix = image_x.truncated(rest);
        const NCSeries iy = image_y.truncated(rest);
        for (const auto& [w, c] : s[d]) {
            NCSeries img = NCSeries::one(rest);
            for (int i = 0; i < w.length(); ++i)
                img = img * (w.is_y(i) ? iy : ix);
            for (int n = 0; n <= rest; ++n)
                out[d + n] += c * img[n];
        }
    }
    return out;
}

/// sigma: x -> x, y -> y (1 - xu)^{-1}.
inline NCSeries sigma(const NCSeries& s)
{
    const int order = s.order();
    const NCSeries x(order, Word::x());
    const NCSeries y(order, Word::y());
    const NCSeries geom = nc_geom_inverse(NCSeries::one(order) - NCSeries(order, Word::x(), 1));
    return substitute(s, x, y * geom);
}

/// Anti-automorphism swapping x and y.
inline NCSeries tau(const NCSeries& s)
{
    NCSeries out(s.order());
    for (int n = 0; n <= s.order(); ++n)
        for (const auto& [w, c] : s[n])
            out[n].add(w.reversed_swapped(), c);
    return out;
}

/// I^t on words: keep the leading y, replace every later y by y + t x.
inline NCPoly interp_word(const NCPoly& p)
{
    NCPoly out;
    for (const auto& [w, c] : p) {
        if (!w.empty() && !w.is_y(0))
            throw std::invalid_argument("interp_word: " + w.str() + " is not an index word");
        std::vector<int> later_y;
        for (int i = 1; i < w.length(); ++i)
            if (w.is_y(i))
                later_y.push_back(i);
        const int g = static_cast<int>(later_y.size());
        for (unsigned mask = 0; mask < (1u << g); ++mask) {
            Word v;
            int plus = 0;
            std::size_t next = 0;
            for (int i = 0; i < w.length(); ++i) {
                bool letter_y = w.is_y(i);
                if (next < later_y.size() && later_y[next] == i) {
                    if (mask & (1u << next)) {
                        letter_y = false;
                        ++plus;
                    }
                    ++next;
                }
                v = v * (letter_y ? Word::y() : Word::x());
            }
            out.add(v, c * detail::t_pow(plus));
        }
    }
    return out;
}

inline NCSeries interp_word(const NCSeries& s)
{
    NCSeries out(s.order());
    for (int n = 0; n <= s.order(); ++n)
        out[n] = interp_word(s[n]);
    return out;
}

enum class XMode { direct, closed };

namespace detail {

inline NCSeries x_over_one_minus_xtu(int order)
{
    const NCSeries xtu(order, RatPoly::t() * NCPoly(Word::x()), 1);
    return NCSeries(order, Word::x()) * nc_geom_inverse(NCSeries::one(order) - xtu);
}

inline NCSeries power(const NCSeries& a, int n)
{
    NCSeries out = NCSeries::one(a.order());
    for (int i = 0; i < n; ++i)
        out = out * a;
    return out;
}

inline NCSeries x_direct(const Index& k, int order)
{
    NCSeries out(order);
    const int r = k.depth();
    for (int l = 1; l <= r; ++l) {
        for_each_splitting(r, l, [&](const std::vector<int>& sizes) {
            const auto shapes = block_shapes(k, sizes);
            for (int s = 0; s <= order; ++s) {
                for_each_composition(s, l, [&](const std::vector<int>& e) {
                    std::int64_t c = 1;
                    for (int b = 0; b < l && c != 0; ++b) {
                        const auto [w, d] = shapes[static_cast<std::size_t>(b)];
                        c *= binom(w - d + e[b] + (b == 0 ? 1 : 0) - 2, e[b]);
                    }
                    if (c == 0)
                        return;
                    Word word;
                    for (int b = 0; b < l; ++b) {
                        word = word * Word::y();
                        for (int j = 1; j < shapes[static_cast<std::size_t>(b)].first + e[b]; ++j)
                            word = word * Word::x();
                    }
                    out[s].add(word, RatPoly(Rat(c)) * t_pow(r - l + s));
                });
            }
        });
    }
    return out;
}

inline NCSeries x_closed(const Index& k, int order)
{
    const NCSeries a = x_over_one_minus_xtu(order);
    const NCSeries y(order, Word::y());
    const NCSeries xtu(order, RatPoly::t() * NCPoly(Word::x()), 1);
    const NCSeries xt(order, RatPoly::t() * NCPoly(Word::x()));
    const NCSeries joint = y * (NCSeries::one(order) - xtu) + xt;
    NCSeries out = y * power(a, k[0] - 1);
    for (int i = 1; i < k.depth(); ++i)
        out = out * joint * power(a, k[i] - 1);
    return out;
}

} // namespace detail

/// Generating series X(k), either from its splitting-sum definition or from the
/// product form y (x/(1-xtu))^{k_1-1} prod (y(1-xtu) + xt)(x/(1-xtu))^{k_l-1}.
inline NCSeries X_series(const Index& k, int order, XMode mode)
{
    if (k.empty())
        throw std::invalid_argument("X_series needs a non-empty index");
    return mode == XMode::direct ? detail::x_direct(k, order) : detail::x_closed(k, order);
}

/// y (1-xu)^{-1} (x/(1-xtu))^{k_1-1} prod (y (1-xtu)(1-xu)^{-1} + xt)(x/(1-xtu))^{k_l-1}
inline NCSeries genfun_h_closed(const Index& k, int order)
{
    if (k.empty())
        throw std::invalid_argument("genfun_h_closed needs a non-empty index");
    const NCSeries a = detail::x_over_one_minus_xtu(order);
    const NCSeries y(order, Word::y());
    const NCSeries one = NCSeries::one(order);
    const NCSeries xu_inv = nc_geom_inverse(one - NCSeries(order, Word::x(), 1));
    const NCSeries xtu(order, RatPoly::t() * NCPoly(Word::x()), 1);
    const NCSeries xt(order, RatPoly::t() * NCPoly(Word::x()));
    const NCSeries joint = y * (one - xtu) * xu_inv + xt;
    NCSeries out = y * xu_inv * detail::power(a, k[0] - 1);
    for (int i = 1; i < k.depth(); ++i)
        out = out * joint * detail::power(a, k[i] - 1);
    return out;
}

/// tau sigma tau applied to the closed form of X(k).
inline NCSeries dual_side_series(const Index& k, int order)
{
    if (k.empty() || !k.admissible())
        throw std::invalid_argument("dual_side_series needs a non-empty admissible index, got " + k.str());
    return tau(sigma(tau(X_series(k, order, XMode::closed))));
}

} // namespace imzv
