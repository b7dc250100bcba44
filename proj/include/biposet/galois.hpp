#pragma once

// Galois connections between structures, compared with the two-component
// relation a <> b (a r1 b and a r2 b).
//
// A pair (f: P -> Q, g: Q -> P) is a connection when, for all a in P and
// b in Q,
//
//   hetero / monotone:  f(a) <> b  iff  a <> g(b)
//   antitone:           b <> f(a)  iff  a <> g(b)

#include "biposet/morphisms.hpp"

#include <numeric>

namespace biposet {

enum class GaloisMode { hetero, monotone, antitone };
enum class AdjointSide { right, left };

/// f goes P -> Q, g goes Q -> P.
class GaloisPair {
public:
    GaloisPair(Mapping f, Mapping g) : f_(std::move(f)), g_(std::move(g))
    {
        if (f_.src_size() != g_.dst_size() || f_.dst_size() != g_.src_size())
            throw UsageError("Galois pair mappings do not run between the same two sets");
    }

    const Mapping& f() const { return f_; }
    const Mapping& g() const { return g_; }

    /// The same two maps read in the opposite direction: (g, f) from Q to P.
    GaloisPair swapped() const { return GaloisPair(g_, f_); }

    friend bool operator==(const GaloisPair&, const GaloisPair&) = default;

private:
    Mapping f_;
    Mapping g_;
};

struct GaloisResult {
    bool holds = true;
    std::optional<std::pair<Index, Index>> witness; // least (a, b) breaking the biconditional

    explicit operator bool() const { return holds; }
};

namespace detail {

inline void require_pair_fits(const GaloisPair& pair, const Diamond& p, const Diamond& q)
{
    if (pair.f().src_size() != p.size() || pair.f().dst_size() != q.size())
        throw UsageError("Galois pair dimensions do not match the structures");
}

inline bool leq(const Diamond& d, Index a, Index b) { return d.r1().test(a, b) && d.r2().test(a, b); }

} // namespace detail

inline GaloisResult is_galois(const GaloisPair& pair, const Diamond& p, const Diamond& q,
                              GaloisMode mode = GaloisMode::hetero)
{
    detail::require_pair_fits(pair, p, q);
    const auto& f = pair.f().image();
    const auto& g = pair.g().image();
    for (Index a = 0; a < p.size(); ++a)
        for (Index b = 0; b < q.size(); ++b) {
            bool lhs = mode == GaloisMode::antitone ? detail::leq(q, b, f[a]) : detail::leq(q, f[a], b);
            if (lhs != detail::leq(p, a, g[b]))
                return {false, std::pair{a, b}};
        }
    return {};
}

inline GaloisResult is_galois(const GaloisPair& pair, const BiPoset& p, const BiPoset& q,
                              GaloisMode mode = GaloisMode::hetero)
{
    return is_galois(pair, p.diamond(), q.diamond(), mode);
}

struct AdjointProperties {
    bool f_isotone = false;
    bool g_isotone = false;
    bool unit_holds = false;   // a <> g(f(a)) for all a in P
    bool counit_holds = false; // f(g(b)) <> b for all b in Q

    bool all() const { return f_isotone && g_isotone && unit_holds && counit_holds; }
};

inline AdjointProperties check_adjoint_properties(const GaloisPair& pair, const Diamond& p, const Diamond& q)
{
    detail::require_pair_fits(pair, p, q);
    const auto& f = pair.f().image();
    const auto& g = pair.g().image();
    AdjointProperties out;
    out.f_isotone = is_isotone(pair.f(), p, q).holds;
    out.g_isotone = is_isotone(pair.g(), q, p).holds;
    out.unit_holds = true;
    for (Index a = 0; a < p.size() && out.unit_holds; ++a)
        out.unit_holds = detail::leq(p, a, g[f[a]]);
    out.counit_holds = true;
    for (Index b = 0; b < q.size() && out.counit_holds; ++b)
        out.counit_holds = detail::leq(q, f[g[b]], b);
    return out;
}

inline AdjointProperties check_adjoint_properties(const GaloisPair& pair, const BiPoset& p, const BiPoset& q)
{
    return check_adjoint_properties(pair, p.diamond(), q.diamond());
}

/// P -> Q -> R from P -> Q and Q -> R.
inline GaloisPair compose_galois(const GaloisPair& first, const GaloisPair& second)
{
    if (first.f().dst_size() != second.f().src_size())
        throw UsageError("cannot compose Galois pairs: middle structures differ in size");
    return GaloisPair(compose(second.f(), first.f()), compose(first.g(), second.g()));
}

inline constexpr std::size_t max_adjoint_results = 1'000'000;

/// Every partner map completing `given` to a connection between P and Q.
///
/// side = right: given is f: P -> Q, returns each g: Q -> P with (f, g) a connection.
/// side = left:  given is g: Q -> P, returns each f: P -> Q with (f, g) a connection.
///
/// The biconditional splits per point of the unknown map's domain, so the
/// candidate set is a product of per-point choices; results come back in
/// lexicographic image order.
inline std::vector<Mapping> find_adjoint(const Mapping& given, const Diamond& p, const Diamond& q, AdjointSide side,
                                         GaloisMode mode = GaloisMode::hetero)
{
    const bool right = side == AdjointSide::right;
    const std::size_t np = p.size(), nq = q.size();
    if (right ? (given.src_size() != np || given.dst_size() != nq)
              : (given.src_size() != nq || given.dst_size() != np))
        throw UsageError("mapping dimensions do not match the structures");

    const auto& h = given.image();
    auto q_side = [&](Index qa, Index qb) {
        return mode == GaloisMode::antitone ? detail::leq(q, qb, qa) : detail::leq(q, qa, qb);
    };

    const std::size_t domain = right ? nq : np;
    const std::size_t codomain = right ? np : nq;
    std::vector<std::vector<Index>> choices(domain);
    for (Index x = 0; x < domain; ++x) {
        for (Index cand = 0; cand < codomain; ++cand) {
            bool ok = true;
            if (right) {
                // g(x) = cand: for all a, f(a) ~ x iff a <> cand
                for (Index a = 0; a < np && ok; ++a)
                    ok = q_side(h[a], x) == detail::leq(p, a, cand);
            } else {
                // f(x) = cand: for all b, cand ~ b iff x <> g(b)
                for (Index b = 0; b < nq && ok; ++b)
                    ok = q_side(cand, b) == detail::leq(p, x, h[b]);
            }
            if (ok)
                choices[x].push_back(cand);
        }
        if (choices[x].empty())
            return {};
    }

    std::size_t total = 1;
    for (const auto& c : choices) {
        if (total > max_adjoint_results / c.size())
            throw ResourceError("too many adjoint candidates");
        total *= c.size();
    }

    std::vector<Mapping> out;
    out.reserve(total);
    std::vector<std::size_t> pos(domain, 0);
    std::vector<Index> img(domain);
    for (std::size_t k = 0; k < total; ++k) {
        for (Index x = 0; x < domain; ++x)
            img[x] = choices[x][pos[x]];
        out.emplace_back(codomain, img);
        for (Index x = domain; x-- > 0;) {
            if (++pos[x] < choices[x].size())
                break;
            pos[x] = 0;
        }
    }
    return out;
}

inline std::vector<Mapping> find_adjoint(const Mapping& given, const BiPoset& p, const BiPoset& q, AdjointSide side,
                                         GaloisMode mode = GaloisMode::hetero)
{
    require_valid(p);
    require_valid(q);
    return find_adjoint(given, p.diamond(), q.diamond(), side, mode);
}

/// Two structures with a pair of maps between them.
struct GaloisInstance {
    BiPoset p;
    BiPoset q;
    GaloisPair pair;
};

/// (iso, iso^-1) between src and dst.
inline GaloisInstance isomorphism_example(const BiPoset& src, const BiPoset& dst, const Mapping& iso)
{
    return {src, dst, GaloisPair(iso, iso.inverse())};
}

/// One element under (=, =), labelled "0".
inline BiPoset singleton_biposet()
{
    return certify(BiPoset(GroundSet({"0"}), Diamond(Rel::identity(1), Rel::identity(1))));
}

/// Everything in P collapses onto the singleton; the singleton goes back to `target`.
inline GaloisInstance singleton_example(const BiPoset& p, Index target)
{
    if (target >= p.size())
        throw UsageError("target element out of range");
    BiPoset q = singleton_biposet();
    return {p, q, GaloisPair(Mapping::constant(p.size(), 1, 0), Mapping::constant(1, p.size(), target))};
}

/// Exact non-negative fraction in lowest terms.
struct Rational {
    long num = 0;
    long den = 1;

    static Rational make(long n, long d)
    {
        if (d <= 0)
            throw UsageError("rational denominator must be positive");
        long g = std::gcd(n, d);
        if (g == 0)
            g = 1;
        return {n / g, d / g};
    }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

    long floor() const { return num / den; }

    /// "3" or "7_2" (labels may not contain '/').
    std::string label() const
    {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "_" + std::to_string(den);
    }
};

/// {0..max_value} under (<=, <=), the fractions p/q in [0, max_value] with
/// q <= max_denominator under (<=, <=), inclusion one way and integer part
/// the other.
inline GaloisInstance floor_embedding_example(long max_value = 5, long max_denominator = 2)
{
    if (max_value < 0 || max_denominator < 1)
        throw UsageError("floor example needs max_value >= 0 and max_denominator >= 1");

    std::vector<Rational> qs;
    for (long d = 1; d <= max_denominator; ++d)
        for (long n = 0; n <= max_value * d; ++n) {
            Rational r = Rational::make(n, d);
            if (std::find(qs.begin(), qs.end(), r) == qs.end())
                qs.push_back(r);
        }
    std::sort(qs.begin(), qs.end());

    const std::size_t np = static_cast<std::size_t>(max_value) + 1;
    std::vector<std::string> p_labels, q_labels;
    for (long i = 0; i <= max_value; ++i)
        p_labels.push_back(std::to_string(i));
    for (const Rational& r : qs)
        q_labels.push_back(r.label());

    Rel p_le = Rel::from_predicate(np, [](Index a, Index b) { return a <= b; });
    Rel q_le = Rel::from_predicate(qs.size(), [&](Index a, Index b) { return qs[a] <= qs[b]; });

    std::vector<Index> incl(np), integer_part(qs.size());
    for (Index i = 0; i < np; ++i)
        incl[i] = static_cast<Index>(std::find(qs.begin(), qs.end(), Rational::make(static_cast<long>(i), 1)) - qs.begin());
    for (Index j = 0; j < qs.size(); ++j)
        integer_part[j] = static_cast<Index>(qs[j].floor());

    BiPoset p = certify(BiPoset(GroundSet(std::move(p_labels)), Diamond(p_le, p_le)));
    BiPoset q = certify(BiPoset(GroundSet(std::move(q_labels)), Diamond(q_le, q_le)));
    return {std::move(p), std::move(q), GaloisPair(Mapping(qs.size(), std::move(incl)), Mapping(np, std::move(integer_part)))};
}

} // namespace biposet
