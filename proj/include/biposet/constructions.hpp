#pragma once

// Building relation pairs from other relation pairs, and the standard
// generators (power sets under inclusion, integers under (<=, divides)).

#include "biposet/axioms.hpp"

#include <span>

namespace biposet {

inline constexpr unsigned default_powerset_cap = 12;

/// Component-wise intersection of one or more relation pairs of equal size.
inline Diamond intersect_many(std::span<const Diamond> ds)
{
    if (ds.empty())
        throw UsageError("intersection of an empty list");
    Rel r1 = ds.front().r1();
    Rel r2 = ds.front().r2();
    for (const Diamond& d : ds.subspan(1)) {
        if (d.size() != r1.size())
            throw UsageError("cannot intersect relation pairs of different sizes (" + std::to_string(r1.size()) +
                             " vs " + std::to_string(d.size()) + ")");
        r1 &= d.r1();
        r2 &= d.r2();
    }
    return Diamond(std::move(r1), std::move(r2));
}

inline Diamond intersect_many(std::initializer_list<Diamond> ds)
{
    return intersect_many(std::span<const Diamond>(ds.begin(), ds.size()));
}

/// Dual pair: each component transposed.
inline Diamond dual(const Diamond& d)
{
    return Diamond(d.r1().transpose(), d.r2().transpose());
}

/// Same ground set, dual relations. Not certified: the dual of a valid
/// structure need not satisfy the axioms.
inline BiPoset dual(const BiPoset& bp)
{
    return BiPoset(bp.ground(), dual(bp.diamond()));
}

/// Subset inclusion on all subsets of {0..k-1}, in bitmask order, labelled s<mask>.
inline BiPoset powerset_biposet(unsigned k, unsigned cap = default_powerset_cap)
{
    if (k > cap)
        throw ResourceError("power set of " + std::to_string(k) + " elements exceeds the cap of " +
                            std::to_string(cap));
    const std::size_t n = std::size_t{1} << k;
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t m = 0; m < n; ++m)
        labels.push_back("s" + std::to_string(m));
    Rel subset = Rel::from_predicate(n, [](Index a, Index b) { return (a & ~b) == 0; });
    return certify(BiPoset(GroundSet(std::move(labels)), Diamond(subset, subset)));
}

/// {1..k} under (<=, divides).
inline BiPoset divisibility_biposet(unsigned k)
{
    if (k < 1)
        throw UsageError("divisibility structure needs k >= 1");
    std::vector<std::string> labels;
    for (unsigned i = 1; i <= k; ++i)
        labels.push_back(std::to_string(i));
    Rel le = Rel::from_predicate(k, [](Index a, Index b) { return a <= b; });
    Rel divides = Rel::from_predicate(k, [](Index a, Index b) { return (b + 1) % (a + 1) == 0; });
    return certify(BiPoset(GroundSet(std::move(labels)), Diamond(std::move(le), std::move(divides))));
}

/// Positive divisors of m, ascending, under (<=, divides).
inline BiPoset divisors_biposet(unsigned m)
{
    if (m < 1)
        throw UsageError("divisors structure needs m >= 1");
    std::vector<unsigned> divs;
    for (unsigned i = 1; i <= m; ++i)
        if (m % i == 0)
            divs.push_back(i);
    std::vector<std::string> labels;
    for (unsigned v : divs)
        labels.push_back(std::to_string(v));
    const std::size_t n = divs.size();
    Rel le = Rel::from_predicate(n, [&](Index a, Index b) { return divs[a] <= divs[b]; });
    Rel divides = Rel::from_predicate(n, [&](Index a, Index b) { return divs[b] % divs[a] == 0; });
    return certify(BiPoset(GroundSet(std::move(labels)), Diamond(std::move(le), std::move(divides))));
}

} // namespace biposet
