#pragma once

// Chain-preserving maps, isomorphisms and isomorphism search.

#include "biposet/constructions.hpp"

#include <array>

namespace biposet {

using Triple = std::array<Index, 3>;

struct IsotoneResult {
    bool holds = true;
    std::optional<Triple> witness; // least (a,b,c) whose chain is not preserved

    explicit operator bool() const { return holds; }
};

/// Forward chain preservation: a r1 b r2 c in src implies
/// f(a) r1 f(b) r2 f(c) in dst.
inline IsotoneResult is_isotone(const Mapping& f, const Diamond& src, const Diamond& dst)
{
    if (f.src_size() != src.size() || f.dst_size() != dst.size())
        throw UsageError("mapping dimensions do not match the structures");
    const Rel& s1 = src.r1();
    const Rel& s2 = src.r2();
    const auto& img = f.image();
    for (Index a = 0; a < src.size(); ++a)
        for (Index b = 0; b < src.size(); ++b) {
            if (!s1.test(a, b))
                continue;
            if (!dst.r1().test(img[a], img[b])) {
                Index c = bits::first(s2.row(b));
                if (c != npos)
                    return {false, Triple{a, b, c}};
                continue;
            }
            for (Index c = 0; c < src.size(); ++c)
                if (s2.test(b, c) && !dst.r2().test(img[b], img[c]))
                    return {false, Triple{a, b, c}};
        }
    return {};
}

inline IsotoneResult is_isotone(const Mapping& f, const BiPoset& src, const BiPoset& dst)
{
    return is_isotone(f, src.diamond(), dst.diamond());
}

struct IsomorphismResult {
    bool holds = true;
    std::string reason;
    std::optional<Triple> witness; // least triple where the chain biconditional fails

    explicit operator bool() const { return holds; }
};

inline IsomorphismResult is_isomorphism(const Mapping& f, const Diamond& src, const Diamond& dst)
{
    if (f.src_size() != src.size() || f.dst_size() != dst.size())
        throw UsageError("mapping dimensions do not match the structures");
    if (!f.is_bijection())
        return {false, "mapping is not a bijection", std::nullopt};
    const auto& img = f.image();
    const std::size_t n = src.size();
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            for (Index c = 0; c < n; ++c) {
                bool lhs = src.r1().test(a, b) && src.r2().test(b, c);
                bool rhs = dst.r1().test(img[a], img[b]) && dst.r2().test(img[b], img[c]);
                if (lhs != rhs)
                    return {false, lhs ? "chain not preserved" : "chain not reflected", Triple{a, b, c}};
            }
    return {};
}

inline IsomorphismResult is_isomorphism(const Mapping& f, const BiPoset& src, const BiPoset& dst)
{
    require_valid(src);
    require_valid(dst);
    return is_isomorphism(f, src.diamond(), dst.diamond());
}

namespace detail {

// Out/in degrees in both components. With both relations reflexive,
// a r1 b iff a r1 b r2 b and a r2 b iff a r1 a r2 b, so isomorphisms
// preserve these degrees.
using DegreeSignature = std::array<std::size_t, 4>;

inline std::vector<DegreeSignature> degree_signatures(const Diamond& d)
{
    const std::size_t n = d.size();
    std::vector<DegreeSignature> sig(n, DegreeSignature{});
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            if (d.r1().test(a, b)) {
                ++sig[a][0];
                ++sig[b][1];
            }
            if (d.r2().test(a, b)) {
                ++sig[a][2];
                ++sig[b][3];
            }
        }
    return sig;
}

inline bool is_reflexive(const Diamond& d)
{
    for (Index a = 0; a < d.size(); ++a)
        if (!d.r1().test(a, a) || !d.r2().test(a, a))
            return false;
    return true;
}

class IsoSearch {
public:
    IsoSearch(const Diamond& src, const Diamond& dst)
        : src_(src), dst_(dst), n_(src.size()), img_(n_, npos), used_(n_, false),
          src_sig_(degree_signatures(src)), dst_sig_(degree_signatures(dst))
    {
        if (!is_reflexive(src) || !is_reflexive(dst)) {
            src_sig_.assign(n_, DegreeSignature{});
            dst_sig_.assign(n_, DegreeSignature{});
        }
    }

    std::optional<Mapping> run()
    {
        auto a = src_sig_, b = dst_sig_;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            return std::nullopt;
        if (!extend(0))
            return std::nullopt;
        return Mapping(n_, img_);
    }

private:
    bool src_chain(Index a, Index b, Index c) const { return src_.r1().test(a, b) && src_.r2().test(b, c); }
    bool dst_chain(Index a, Index b, Index c) const { return dst_.r1().test(a, b) && dst_.r2().test(b, c); }

    // Checks every triple over {0..i} that involves i.
    bool consistent(Index i) const
    {
        for (Index p = 0; p <= i; ++p)
            for (Index q = 0; q <= i; ++q) {
                const Index t[3][3] = {{i, p, q}, {p, i, q}, {p, q, i}};
                for (const auto& x : t)
                    if (src_chain(x[0], x[1], x[2]) != dst_chain(img_[x[0]], img_[x[1]], img_[x[2]]))
                        return false;
            }
        return true;
    }

    bool extend(Index i)
    {
        if (i == n_)
            return true;
        for (Index v = 0; v < n_; ++v) {
            if (used_[v] || src_sig_[i] != dst_sig_[v])
                continue;
            img_[i] = v;
            used_[v] = true;
            if (consistent(i) && extend(i + 1))
                return true;
            used_[v] = false;
        }
        img_[i] = npos;
        return false;
    }

    const Diamond& src_;
    const Diamond& dst_;
    std::size_t n_;
    std::vector<Index> img_;
    std::vector<bool> used_;
    std::vector<DegreeSignature> src_sig_, dst_sig_;
};

} // namespace detail

/// Lexicographically least isomorphism (in image order), if any.
inline std::optional<Mapping> find_isomorphism(const Diamond& src, const Diamond& dst)
{
    if (src.size() != dst.size())
        return std::nullopt;
    return detail::IsoSearch(src, dst).run();
}

inline std::optional<Mapping> find_isomorphism(const BiPoset& src, const BiPoset& dst)
{
    require_valid(src);
    require_valid(dst);
    return find_isomorphism(src.diamond(), dst.diamond());
}

/// An isomorphism from bp onto its dual, if bp is self dual.
inline std::optional<Mapping> self_dual_witness(const BiPoset& bp)
{
    require_valid(bp);
    return find_isomorphism(bp.diamond(), dual(bp.diamond()));
}

/// A -> complement of A on the power set of k elements, in bitmask order.
inline Mapping complement_mapping(unsigned k)
{
    const std::size_t n = std::size_t{1} << k;
    std::vector<Index> img(n);
    for (Index m = 0; m < n; ++m)
        img[m] = (n - 1) & ~m;
    return Mapping(n, std::move(img));
}

} // namespace biposet
