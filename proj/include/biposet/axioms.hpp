#pragma once

// Axiom checks for relation pairs, plus the classical single-relation
// partial order check.
//
// Every check returns the lexicographically least violating tuple in index
// order. The three pair axioms, with chains read as conjunctions:
//
//   reflexive:     a r1 a and a r2 a
//   antisymmetric: a r1 b r2 c, b r1 a r2 c, a r1 c r2 b  =>  a = b = c
//   transitive:    a r1 b r2 c, b r1 d r2 c, c r2 e  =>  a r1 d r2 c, a r1 b r2 e
//
// In the transitive axiom d r2 c and a r1 b already appear in the premise, so
// the conclusion reduces to (a r1 d) and (b r2 e).

#include "biposet/core.hpp"

#include <array>

namespace biposet {

namespace detail {

inline std::optional<ReflexiveWitness> find_reflexive_violation(const Diamond& d)
{
    for (Index a = 0; a < d.size(); ++a)
        if (!d.r1().test(a, a) || !d.r2().test(a, a))
            return ReflexiveWitness{a};
    return std::nullopt;
}

inline std::optional<AntisymmetricWitness> find_antisymmetric_violation(const Diamond& d, const Rel& pred2)
{
    const Rel& r1 = d.r1();
    const Rel& r2 = d.r2();
    const std::size_t words = r1.words_per_row();
    for (Index a = 0; a < d.size(); ++a) {
        auto succ1_a = r1.row(a);
        auto succ2_a = r2.row(a);
        for (Index b = 0; b < d.size(); ++b) {
            if (!bits::test(succ1_a, b) || !r1.test(b, a))
                continue;
            auto succ2_b = r2.row(b);
            auto pred2_b = pred2.row(b);
            for (std::size_t w = 0; w < words; ++w) {
                bits::Word cs = succ2_b[w] & succ2_a[w] & succ1_a[w] & pred2_b[w];
                if (a == b && a / bits::word_bits == w)
                    cs &= ~(bits::Word{1} << (a % bits::word_bits));
                if (cs != 0)
                    return AntisymmetricWitness{a, b, w * bits::word_bits + static_cast<Index>(std::countr_zero(cs))};
            }
        }
    }
    return std::nullopt;
}

inline std::optional<TransitiveWitness> find_transitive_violation(const Diamond& d, const Rel& pred2)
{
    const Rel& r1 = d.r1();
    const Rel& r2 = d.r2();
    const std::size_t words = r1.words_per_row();
    std::vector<bits::Word> ds(words);

    // For fixed (b, c) the premise is independent of a except through a r1 b,
    // and the conclusion splits: d ranges over succ1(b) & pred2(c), e over succ2(c).
    for (Index a = 0; a < d.size(); ++a) {
        auto succ1_a = r1.row(a);
        for (Index b = 0; b < d.size(); ++b) {
            if (!bits::test(succ1_a, b))
                continue;
            auto succ1_b = r1.row(b);
            auto succ2_b = r2.row(b);
            for (Index c = 0; c < d.size(); ++c) {
                if (!bits::test(succ2_b, c))
                    continue;
                auto es = r2.row(c);
                Index e0 = bits::first(es);
                if (e0 == npos)
                    continue;
                auto pred2_c = pred2.row(c);
                bool any_d = false;
                for (std::size_t w = 0; w < words; ++w) {
                    ds[w] = succ1_b[w] & pred2_c[w];
                    any_d = any_d || ds[w] != 0;
                }
                if (!any_d)
                    continue;
                std::span<const bits::Word> dspan(ds);
                Index d0 = bits::first(dspan);
                Index e_bad = bits::first_and_not(es, succ2_b);
                if (!bits::test(succ1_a, d0))
                    return TransitiveWitness{a, b, c, d0, e0, true, !bits::test(succ2_b, e0)};
                if (e_bad != npos)
                    return TransitiveWitness{a, b, c, d0, e_bad, false, true};
                Index d_bad = bits::first_and_not(dspan, succ1_a);
                if (d_bad != npos)
                    return TransitiveWitness{a, b, c, d_bad, e0, true, false};
            }
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Full verdict for all three axioms.
inline AxiomVerdict check_axioms(const Diamond& d)
{
    Rel pred2 = d.r2().transpose();
    AxiomVerdict v;
    v.reflexive_violation = detail::find_reflexive_violation(d);
    v.antisymmetric_violation = detail::find_antisymmetric_violation(d, pred2);
    v.transitive_violation = detail::find_transitive_violation(d, pred2);
    return v;
}

/// Short-circuiting yes/no variant of check_axioms.
inline bool is_pobr(const Diamond& d)
{
    if (detail::find_reflexive_violation(d))
        return false;
    Rel pred2 = d.r2().transpose();
    return !detail::find_antisymmetric_violation(d, pred2) && !detail::find_transitive_violation(d, pred2);
}

// Re-evaluate a stored witness against d. True iff it really violates.

inline bool violates(const Diamond& d, const ReflexiveWitness& w)
{
    return !chain(d, w.a, w.a, w.a);
}

inline bool violates(const Diamond& d, const AntisymmetricWitness& w)
{
    bool premise = chain(d, w.a, w.b, w.c) && chain(d, w.b, w.a, w.c) && chain(d, w.a, w.c, w.b);
    return premise && !(w.a == w.b && w.b == w.c);
}

inline bool violates(const Diamond& d, const TransitiveWitness& w)
{
    bool premise = chain(d, w.a, w.b, w.c) && chain(d, w.b, w.d, w.c) && d.r2().test(w.c, w.e);
    return premise && !(chain(d, w.a, w.d, w.c) && chain(d, w.a, w.b, w.e));
}

inline BiPoset certify(BiPoset bp)
{
    bp.certificate_ = check_axioms(bp.diamond());
    return bp;
}

/// Throws UsageError unless bp carries a passing certificate.
inline void require_valid(const BiPoset& bp)
{
    if (!bp.certificate())
        throw UsageError("structure has not been validated");
    if (!bp.certificate()->valid())
        throw UsageError("structure does not satisfy the binary poset axioms");
}

/// Verdict for one relation against the classical partial order axioms.
struct ClassicalVerdict {
    std::optional<Index> reflexive_violation;
    std::optional<std::array<Index, 2>> antisymmetric_violation;
    std::optional<std::array<Index, 3>> transitive_violation;

    bool reflexive() const { return !reflexive_violation; }
    bool antisymmetric() const { return !antisymmetric_violation; }
    bool transitive() const { return !transitive_violation; }
    bool valid() const { return reflexive() && antisymmetric() && transitive(); }
};

inline ClassicalVerdict check_classical_por(const Rel& r)
{
    ClassicalVerdict v;
    const std::size_t n = r.size();
    for (Index a = 0; a < n && !v.reflexive_violation; ++a)
        if (!r.test(a, a))
            v.reflexive_violation = a;
    for (Index a = 0; a < n && !v.antisymmetric_violation; ++a)
        for (Index b = 0; b < n; ++b)
            if (a != b && r.test(a, b) && r.test(b, a)) {
                v.antisymmetric_violation = std::array<Index, 2>{a, b};
                break;
            }
    for (Index a = 0; a < n && !v.transitive_violation; ++a) {
        auto succ_a = r.row(a);
        for (Index b = 0; b < n && !v.transitive_violation; ++b) {
            if (!r.test(a, b))
                continue;
            Index c = bits::first_and_not(r.row(b), succ_a);
            if (c != npos)
                v.transitive_violation = std::array<Index, 3>{a, b, c};
        }
    }
    return v;
}

} // namespace biposet
