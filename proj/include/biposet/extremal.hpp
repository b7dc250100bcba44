#pragma once

// Greatest and least elements of each component, and the maximal/minimal
// greatest and least elements built from them.
//
// x is the r1-greatest element (a r1 x for all a), y the r2-greatest, u the
// r1-least and v the r2-least. The maximal greatest element is sup{x, y}
// and the minimal greatest element is inf{x, y}, both taken with respect to
// the two-component comparison; likewise sup/inf{u, v} for the least side.

#include "biposet/axioms.hpp"

#include <set>

namespace biposet {

enum class Direction { greatest, least };

/// Every element qualifying as a one-sided extreme. More than one qualifier
/// is possible when a component is not antisymmetric on its own.
struct SidedExtreme {
    std::vector<Index> qualifiers;

    std::optional<Index> unique() const
    {
        if (qualifiers.size() == 1)
            return qualifiers.front();
        return std::nullopt;
    }
    bool anomalous() const { return qualifiers.size() > 1; }
    bool absent() const { return qualifiers.empty(); }
};

/// Unvalidated form, for exploration and for duals that may fail the axioms.
inline SidedExtreme sided_extreme(const Diamond& d, int component, Direction dir)
{
    const Rel& r = d.component(component);
    const std::size_t n = d.size();
    SidedExtreme out;
    for (Index g = 0; g < n; ++g) {
        bool ok = true;
        for (Index a = 0; a < n && ok; ++a)
            ok = dir == Direction::greatest ? r.test(a, g) : r.test(g, a);
        if (ok)
            out.qualifiers.push_back(g);
    }
    return out;
}

inline SidedExtreme sided_extreme(const BiPoset& bp, int component, Direction dir)
{
    require_valid(bp);
    return sided_extreme(bp.diamond(), component, dir);
}

/// Candidate values of sup{x, y}; more than one means the supremum is ambiguous.
inline std::vector<Index> pair_sup(const Diamond& d, Index x, Index y)
{
    if (x == y)
        return {x};
    std::vector<Index> out;
    if (diamond_leq(d, x, y))
        out.push_back(y);
    if (diamond_leq(d, y, x))
        out.push_back(x);
    return out;
}

inline std::vector<Index> pair_inf(const Diamond& d, Index x, Index y)
{
    if (x == y)
        return {x};
    std::vector<Index> out;
    if (diamond_leq(d, x, y))
        out.push_back(x);
    if (diamond_leq(d, y, x))
        out.push_back(y);
    return out;
}

struct ExtremalReport {
    SidedExtreme x_side, y_side, u_side, v_side;
    std::optional<Index> x, y, u, v;
    std::optional<Index> g_max, g_min, l_max, l_min;
    bool bounded = false;
    std::vector<std::string> notes;
};

namespace detail {

inline std::optional<Index> single(const std::vector<Index>& values)
{
    if (values.size() == 1)
        return values.front();
    return std::nullopt;
}

inline void note_side(ExtremalReport& rep, const GroundSet& g, const SidedExtreme& s, const char* what)
{
    if (!s.anomalous())
        return;
    std::string msg = std::string(what) + " is not unique:";
    for (Index q : s.qualifiers)
        msg += " " + g.label(q);
    rep.notes.push_back(std::move(msg));
}

inline void note_pair(ExtremalReport& rep, const GroundSet& g, Index p, Index q, const std::vector<Index>& values,
                      const char* what)
{
    if (values.empty())
        rep.notes.push_back(g.label(p) + " and " + g.label(q) + " are incomparable; no " + what);
    else if (values.size() > 1)
        rep.notes.push_back(std::string(what) + " of " + g.label(p) + " and " + g.label(q) + " is ambiguous");
}

} // namespace detail

inline ExtremalReport extremal_report(const BiPoset& bp)
{
    require_valid(bp);
    const Diamond& d = bp.diamond();
    const GroundSet& g = bp.ground();

    ExtremalReport rep;
    rep.x_side = sided_extreme(d, 1, Direction::greatest);
    rep.y_side = sided_extreme(d, 2, Direction::greatest);
    rep.u_side = sided_extreme(d, 1, Direction::least);
    rep.v_side = sided_extreme(d, 2, Direction::least);
    rep.x = rep.x_side.unique();
    rep.y = rep.y_side.unique();
    rep.u = rep.u_side.unique();
    rep.v = rep.v_side.unique();
    detail::note_side(rep, g, rep.x_side, "r1-greatest element");
    detail::note_side(rep, g, rep.y_side, "r2-greatest element");
    detail::note_side(rep, g, rep.u_side, "r1-least element");
    detail::note_side(rep, g, rep.v_side, "r2-least element");

    if (rep.x && rep.y) {
        auto sup = pair_sup(d, *rep.x, *rep.y);
        auto inf = pair_inf(d, *rep.x, *rep.y);
        detail::note_pair(rep, g, *rep.x, *rep.y, sup, "maximal greatest element");
        detail::note_pair(rep, g, *rep.x, *rep.y, inf, "minimal greatest element");
        rep.g_max = detail::single(sup);
        rep.g_min = detail::single(inf);
    }
    if (rep.u && rep.v) {
        auto sup = pair_sup(d, *rep.u, *rep.v);
        auto inf = pair_inf(d, *rep.u, *rep.v);
        detail::note_pair(rep, g, *rep.u, *rep.v, sup, "maximal least element");
        detail::note_pair(rep, g, *rep.u, *rep.v, inf, "minimal least element");
        rep.l_max = detail::single(sup);
        rep.l_min = detail::single(inf);
    }
    rep.bounded = rep.g_max.has_value() && rep.l_min.has_value();
    return rep;
}

/// All values the sup/inf rule produces over every combination of
/// one-sided qualifiers. The uniqueness results say each set has at most
/// one element.
struct ExtremalCandidates {
    std::set<Index> g_max, g_min, l_max, l_min;
};

inline ExtremalCandidates extremal_candidates(const Diamond& d)
{
    ExtremalCandidates out;
    auto xs = sided_extreme(d, 1, Direction::greatest).qualifiers;
    auto ys = sided_extreme(d, 2, Direction::greatest).qualifiers;
    auto us = sided_extreme(d, 1, Direction::least).qualifiers;
    auto vs = sided_extreme(d, 2, Direction::least).qualifiers;
    for (Index x : xs)
        for (Index y : ys) {
            for (Index s : pair_sup(d, x, y))
                out.g_max.insert(s);
            for (Index s : pair_inf(d, x, y))
                out.g_min.insert(s);
        }
    for (Index u : us)
        for (Index v : vs) {
            for (Index s : pair_sup(d, u, v))
                out.l_max.insert(s);
            for (Index s : pair_inf(d, u, v))
                out.l_min.insert(s);
        }
    return out;
}

} // namespace biposet
