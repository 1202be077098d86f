#pragma once

#include "imzv/serialize.hpp"

#include <string>
#include <utility>

namespace imzv {

/// Outcome of one identity check. A failing verdict always carries the two sides
/// that disagreed.
struct Verdict
{
    std::string claim;
    bool pass = false;
    Json counterexample; // null when pass

    explicit operator bool() const noexcept { return pass; }
};

/// Exact comparison of two values that have a JSON form.
template <typename T>
Verdict compare(std::string claim, const T& lhs, const T& rhs)
{
    Verdict v{std::move(claim), lhs == rhs, nullptr};
    if (!v.pass)
        v.counterexample = Json{{"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
    return v;
}

} // namespace imzv
