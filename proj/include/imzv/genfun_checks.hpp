#pragma once

#include "imzv/kernels.hpp"
#include "imzv/verdict.hpp"
#include "imzv/word.hpp"

#include <vector>

namespace imzv {

inline Verdict x_direct_closed_check(const Index& k, int order)
{
    return compare("X-direct-closed", X_series(k, order, XMode::direct), X_series(k, order, XMode::closed));
}

/// sigma(X(k)), the closed product for the generating series of h, and
/// sum_m u^m word(h_m(k)) must all coincide up to u^order.
inline std::vector<Verdict> sigma_x_genfun_checks(const Index& k, int order)
{
    const NCSeries via_sigma = sigma(X_series(k, order, XMode::closed));
    const NCSeries closed = genfun_h_closed(k, order);
    NCSeries from_h(order);
    for (int m = 0; m <= order; ++m)
        from_h[m] = word_of(h_poly(m, k));
    return {compare("sigma-X-vs-closed", via_sigma, closed), compare("closed-vs-h", closed, from_h)};
}

/// u^m coefficient of tau sigma tau X(k) against word(I^t(dual-side sum)) for m <= order.
inline Verdict dual_genfun_check(const Index& k, int order)
{
    const NCSeries lhs = dual_side_series(k, order);
    NCSeries rhs(order);
    for (int m = 0; m <= order; ++m)
        rhs[m] = word_of(ohno_rhs(k, m, true));
    return compare("dual-genfun", lhs, rhs);
}

/// tau on index words realizes the dual index.
inline Verdict dual_transport_check(const Index& k)
{
    return compare("dual-transport", index_of_word(word_of_index(k).reversed_swapped()), dual(k));
}

} // namespace imzv
