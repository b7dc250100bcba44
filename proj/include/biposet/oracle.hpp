#pragma once

// Exhaustive small-model enumeration and the claim registry.
//
// Candidate encoding: a reflexive relation pair on n elements is fixed by
// its off-diagonal bits. Bit k of the code is the k-th off-diagonal pair of
// r1 in row-major order; bit m + k is the same pair of r2, m = n(n-1).
// Canonical order is ascending code.
//
// Each claim is checked over a sequence of blocks (one per size tuple,
// smallest sizes first). A block is swept exhaustively when it fits the
// budget and uniformly sampled otherwise. The reported counterexample is the
// first in canonical order, so findings do not depend on the worker count.

#include "biposet/extremal.hpp"
#include "biposet/io.hpp"

#include <array>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <random>
#include <thread>
#include <unordered_set>

namespace biposet {

inline constexpr unsigned max_enumeration_size = 4;

inline std::size_t off_diagonal_pairs(unsigned n) { return std::size_t{n} * (n - 1); }

inline std::uint64_t candidate_count(unsigned n) { return std::uint64_t{1} << (2 * off_diagonal_pairs(n)); }

inline void require_enumerable(unsigned n)
{
    if (n < 1 || n > max_enumeration_size)
        throw UsageError("enumeration size must be between 1 and " + std::to_string(max_enumeration_size));
}

inline Diamond diamond_from_code(unsigned n, std::uint64_t code)
{
    const std::size_t m = off_diagonal_pairs(n);
    Rel r1 = Rel::identity(n), r2 = Rel::identity(n);
    std::size_t k = 0;
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            if (i == j)
                continue;
            if ((code >> k) & 1u)
                r1.set(i, j);
            if ((code >> (m + k)) & 1u)
                r2.set(i, j);
            ++k;
        }
    return Diamond(std::move(r1), std::move(r2));
}

/// Inverse of diamond_from_code; d must be reflexive.
inline std::uint64_t code_of(const Diamond& d)
{
    const std::size_t n = d.size();
    const std::size_t m = off_diagonal_pairs(static_cast<unsigned>(n));
    std::uint64_t code = 0;
    std::size_t k = 0;
    for (Index i = 0; i < n; ++i) {
        if (!d.r1().test(i, i) || !d.r2().test(i, i))
            throw UsageError("only reflexive relation pairs have a canonical code");
        for (Index j = 0; j < n; ++j) {
            if (i == j)
                continue;
            if (d.r1().test(i, j))
                code |= std::uint64_t{1} << k;
            if (d.r2().test(i, j))
                code |= std::uint64_t{1} << (m + k);
            ++k;
        }
    }
    return code;
}

/// Visits (code, diamond) for every relation pair on n elements that
/// satisfies the axioms, in canonical order.
template <typename Visit>
void enumerate_biposets(unsigned n, Visit&& visit)
{
    require_enumerable(n);
    const std::uint64_t total = candidate_count(n);
    for (std::uint64_t code = 0; code < total; ++code) {
        Diamond d = diamond_from_code(n, code);
        if (is_pobr(d))
            visit(code, d);
    }
}

inline std::vector<Diamond> enumerate_biposets(unsigned n)
{
    std::vector<Diamond> out;
    enumerate_biposets(n, [&](std::uint64_t, const Diamond& d) { out.push_back(d); });
    return out;
}

/// Cached enumeration; computed once per size.
inline const std::vector<Diamond>& valid_structures(unsigned n)
{
    require_enumerable(n);
    static std::array<std::once_flag, max_enumeration_size + 1> once;
    static std::array<std::vector<Diamond>, max_enumeration_size + 1> cache;
    std::call_once(once[n], [n] { cache[n] = enumerate_biposets(n); });
    return cache[n];
}

inline BiPoset as_structure(const Diamond& d) { return BiPoset(GroundSet::indexed(d.size()), d); }

/// Every total map from src_n to dst_n elements, lexicographic in image order.
inline std::vector<Mapping> all_mappings(std::size_t src_n, std::size_t dst_n)
{
    std::vector<Mapping> out;
    std::vector<Index> img(src_n, 0);
    if (dst_n == 0)
        return out;
    while (true) {
        out.emplace_back(dst_n, img);
        Index pos = src_n;
        while (pos > 0 && ++img[pos - 1] == dst_n)
            img[--pos] = 0;
        if (pos == 0)
            break;
    }
    return out;
}

inline std::vector<Mapping> all_bijections(std::size_t n)
{
    std::vector<Mapping> out;
    std::vector<Index> img(n);
    for (Index i = 0; i < n; ++i)
        img[i] = i;
    do
        out.emplace_back(n, img);
    while (std::next_permutation(img.begin(), img.end()));
    return out;
}

enum class ClaimId {
    intersect_closure,
    unique_gmax,
    unique_gmin,
    unique_lmax,
    unique_lmin,
    powerset_valid,
    iso_iff_isotone,
    duality_principle,
    powerset_self_dual,
    double_dual,
    galois_thm11_fwd,
    galois_thm11_bwd,
    galois_compose,
    adjoint_unique,
    galois_asymmetry,
};

inline constexpr std::array all_claims = {
    ClaimId::intersect_closure, ClaimId::unique_gmax,      ClaimId::unique_gmin,        ClaimId::unique_lmax,
    ClaimId::unique_lmin,       ClaimId::powerset_valid,   ClaimId::iso_iff_isotone,    ClaimId::duality_principle,
    ClaimId::powerset_self_dual, ClaimId::double_dual,     ClaimId::galois_thm11_fwd,   ClaimId::galois_thm11_bwd,
    ClaimId::galois_compose,    ClaimId::adjoint_unique,   ClaimId::galois_asymmetry,
};

inline const char* claim_name(ClaimId c)
{
    switch (c) {
    case ClaimId::intersect_closure: return "INTERSECT_CLOSURE";
    case ClaimId::unique_gmax: return "UNIQUE_GMAX";
    case ClaimId::unique_gmin: return "UNIQUE_GMIN";
    case ClaimId::unique_lmax: return "UNIQUE_LMAX";
    case ClaimId::unique_lmin: return "UNIQUE_LMIN";
    case ClaimId::powerset_valid: return "POWERSET_VALID";
    case ClaimId::iso_iff_isotone: return "ISO_IFF_ISOTONE";
    case ClaimId::duality_principle: return "DUALITY_PRINCIPLE";
    case ClaimId::powerset_self_dual: return "POWERSET_SELF_DUAL";
    case ClaimId::double_dual: return "DOUBLE_DUAL";
    case ClaimId::galois_thm11_fwd: return "GALOIS_THM11_FWD";
    case ClaimId::galois_thm11_bwd: return "GALOIS_THM11_BWD";
    case ClaimId::galois_compose: return "GALOIS_COMPOSE";
    case ClaimId::adjoint_unique: return "ADJOINT_UNIQUE";
    case ClaimId::galois_asymmetry: return "GALOIS_ASYMMETRY";
    }
    return "?";
}

inline std::optional<ClaimId> parse_claim(const std::string& name)
{
    for (ClaimId c : all_claims)
        if (name == claim_name(c))
            return c;
    return std::nullopt;
}

/// GALOIS_ASYMMETRY asserts existence: it is verified by an example, not
/// by the absence of violations.
inline bool is_existential(ClaimId c) { return c == ClaimId::galois_asymmetry; }

enum class Verdict { verified_at_scale, counterexample };

/// Concrete instance refuting (or, for existential claims, exhibiting) a claim.
struct Witness {
    std::vector<BiPoset> structures;
    std::vector<Mapping> mappings;
    std::vector<Index> tuple;
    std::string detail;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct Finding {
    ClaimId claim{};
    unsigned n_max = 0;
    Verdict verdict = Verdict::verified_at_scale;
    std::optional<Witness> witness;
    std::vector<std::size_t> witness_sizes; // structure sizes of the witness instance
    std::uint64_t instances_checked = 0;    // non-vacuous instances examined
    std::uint64_t violations = 0;           // for existential claims: examples found
    bool sampled = false;
    std::optional<std::uint64_t> budget;
    std::uint64_t seed = 0;

    friend bool operator==(const Finding&, const Finding&) = default;
};

inline constexpr std::uint64_t default_seed = 20240611;

struct ClaimOptions {
    unsigned n_min = 0; // 0 = smallest meaningful size for the claim
    unsigned n_max = 3;
    std::optional<std::uint64_t> budget; // per-block instance cap; absent = exhaustive
    std::uint64_t seed = default_seed;
    unsigned workers = 1;
};

namespace detail {

struct Outcome {
    enum Kind { vacuous, pass, hit } kind = pass;
    std::optional<Witness> witness;

    static Outcome skip() { return {vacuous, std::nullopt}; }
    static Outcome ok() { return {pass, std::nullopt}; }
    static Outcome found(Witness w) { return {hit, std::move(w)}; }
};

struct Block {
    std::vector<std::size_t> sizes;
    std::uint64_t count = 0;
    std::function<Outcome(std::uint64_t)> check;
};

struct BlockResult {
    std::uint64_t checked = 0;
    std::uint64_t hits = 0;
    std::uint64_t first_hit = std::numeric_limits<std::uint64_t>::max();
    std::optional<Witness> witness;
};

// k distinct values from [0, n), ascending (Floyd's algorithm).
inline std::vector<std::uint64_t> sample_indices(std::uint64_t n, std::uint64_t k, std::uint64_t seed,
                                                 std::uint64_t stream)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    std::mt19937_64 rng(seq);
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(k * 2));
    for (std::uint64_t j = n - k; j < n; ++j) {
        std::uniform_int_distribution<std::uint64_t> dist(0, j);
        std::uint64_t t = dist(rng);
        if (!chosen.insert(t).second)
            chosen.insert(j);
    }
    std::vector<std::uint64_t> out(chosen.begin(), chosen.end());
    std::sort(out.begin(), out.end());
    return out;
}

inline BlockResult run_range(const Block& block, const std::vector<std::uint64_t>* picks, std::uint64_t begin,
                             std::uint64_t end)
{
    BlockResult r;
    for (std::uint64_t k = begin; k < end; ++k) {
        std::uint64_t idx = picks ? (*picks)[k] : k;
        Outcome o = block.check(idx);
        if (o.kind == Outcome::vacuous)
            continue;
        ++r.checked;
        if (o.kind == Outcome::hit) {
            ++r.hits;
            if (!r.witness) {
                r.first_hit = idx;
                r.witness = std::move(o.witness);
            }
        }
    }
    return r;
}

inline BlockResult run_block(const Block& block, const ClaimOptions& opt, std::uint64_t stream, bool& sampled)
{
    std::vector<std::uint64_t> picks;
    const bool sample = opt.budget && block.count > *opt.budget;
    if (sample) {
        picks = sample_indices(block.count, *opt.budget, opt.seed, stream);
        sampled = true;
    }
    const std::uint64_t total = sample ? picks.size() : block.count;
    const unsigned workers = std::max(1u, opt.workers);
    const auto* pick_ptr = sample ? &picks : nullptr;
    if (workers == 1 || total < 2 * workers)
        return run_range(block, pick_ptr, 0, total);

    std::vector<BlockResult> parts(workers);
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t b = total * w / workers, e = total * (w + 1) / workers;
        threads.emplace_back([&, w, b, e] { parts[w] = run_range(block, pick_ptr, b, e); });
    }
    for (auto& t : threads)
        t.join();
    BlockResult merged;
    for (auto& p : parts) {
        merged.checked += p.checked;
        merged.hits += p.hits;
        if (p.witness && p.first_hit < merged.first_hit) {
            merged.first_hit = p.first_hit;
            merged.witness = std::move(p.witness);
        }
    }
    return merged;
}

inline std::string flags(const AdjointProperties& p)
{
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    return std::string("f isotone: ") + yn(p.f_isotone) + ", g isotone: " + yn(p.g_isotone) +
           ", unit: " + yn(p.unit_holds) + ", counit: " + yn(p.counit_holds);
}

inline std::string describe(const AxiomVerdict& v)
{
    std::string s;
    if (v.reflexive_violation)
        s += "reflexivity fails at " + std::to_string(v.reflexive_violation->a) + "; ";
    if (auto w = v.antisymmetric_violation)
        s += "antisymmetry fails at (" + std::to_string(w->a) + "," + std::to_string(w->b) + "," +
             std::to_string(w->c) + "); ";
    if (auto w = v.transitive_violation)
        s += "transitivity fails at (" + std::to_string(w->a) + "," + std::to_string(w->b) + "," +
             std::to_string(w->c) + "," + std::to_string(w->d) + "," + std::to_string(w->e) + ")" +
             (w->first_conclusion_fails ? " [a r1 d r2 c]" : "") + (w->second_conclusion_fails ? " [a r1 b r2 e]" : "") +
             "; ";
    if (s.empty())
        return "all axioms hold";
    s.resize(s.size() - 2);
    return s;
}

// Size tuples in canonical order: by largest component, then lexicographically.
inline std::vector<std::vector<std::size_t>> size_tuples(unsigned lo, unsigned hi, std::size_t arity)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> t(arity, lo);
    if (lo > hi)
        return out;
    while (true) {
        out.push_back(t);
        std::size_t pos = arity;
        while (pos > 0 && ++t[pos - 1] > hi)
            t[--pos] = lo;
        if (pos == 0)
            break;
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return *std::max_element(a.begin(), a.end()) < *std::max_element(b.begin(), b.end());
    });
    return out;
}

// Instance checks shared by the sweep and by replay. Each returns a witness
// when the instance refutes (or, for existential claims, exhibits) the claim.

inline std::optional<Witness> intersect_instance(const Diamond& a, const Diamond& b)
{
    Diamond meet = intersect_many({a, b});
    if (is_pobr(meet))
        return std::nullopt;
    return Witness{{as_structure(a), as_structure(b), as_structure(meet)}, {}, {}, describe(check_axioms(meet))};
}

inline std::optional<Witness> uniqueness_instance(ClaimId c, const Diamond& d)
{
    ExtremalCandidates ec = extremal_candidates(d);
    const std::set<Index>* s = nullptr;
    const char* what = "";
    switch (c) {
    case ClaimId::unique_gmax: s = &ec.g_max; what = "maximal greatest element"; break;
    case ClaimId::unique_gmin: s = &ec.g_min; what = "minimal greatest element"; break;
    case ClaimId::unique_lmax: s = &ec.l_max; what = "maximal least element"; break;
    default: s = &ec.l_min; what = "minimal least element"; break;
    }
    if (s->size() <= 1)
        return std::nullopt;
    return Witness{{as_structure(d)}, {}, std::vector<Index>(s->begin(), s->end()),
                   std::string(what) + " takes " + std::to_string(s->size()) + " distinct values"};
}

inline std::optional<Witness> powerset_valid_instance(unsigned k)
{
    BiPoset p = powerset_biposet(k);
    if (p.certified_valid())
        return std::nullopt;
    return Witness{{p}, {}, {k}, describe(*p.certificate())};
}

inline std::optional<Witness> iso_iff_isotone_instance(const Diamond& p, const Diamond& q, const Mapping& f)
{
    bool iso = is_isomorphism(f, p, q).holds;
    bool fwd = is_isotone(f, p, q).holds;
    bool back = is_isotone(f.inverse(), q, p).holds;
    if (iso == (fwd && back))
        return std::nullopt;
    return Witness{{as_structure(p), as_structure(q)}, {f}, {},
                   std::string("isomorphism: ") + (iso ? "yes" : "no") + ", isotone: " + (fwd ? "yes" : "no") +
                       ", inverse isotone: " + (back ? "yes" : "no")};
}

inline std::optional<Witness> duality_instance(const Diamond& d)
{
    Diamond dd = dual(d);
    if (is_pobr(dd))
        return std::nullopt;
    return Witness{{as_structure(d), as_structure(dd)}, {}, {}, "dual: " + describe(check_axioms(dd))};
}

inline std::optional<Witness> powerset_self_dual_instance(unsigned k)
{
    BiPoset p = powerset_biposet(k);
    Mapping c = complement_mapping(k);
    auto r = is_isomorphism(c, p.diamond(), dual(p.diamond()));
    if (r.holds)
        return std::nullopt;
    return Witness{{p, dual(p)}, {c}, r.witness ? std::vector<Index>(r.witness->begin(), r.witness->end()) : std::vector<Index>{},
                   "complement map: " + r.reason};
}

inline std::optional<Witness> double_dual_instance(const Diamond& d)
{
    Diamond dd = dual(dual(d));
    if (dd == d && is_isomorphism(Mapping::identity(d.size()), d, dd).holds)
        return std::nullopt;
    return Witness{{as_structure(d), as_structure(dd)}, {Mapping::identity(d.size())}, {}, "double dual differs"};
}

inline std::optional<Witness> thm11_fwd_instance(const Diamond& p, const Diamond& q, const Mapping& f, const Mapping& g)
{
    GaloisPair pair(f, g);
    if (!is_galois(pair, p, q).holds)
        return std::nullopt;
    AdjointProperties props = check_adjoint_properties(pair, p, q);
    if (props.all())
        return std::nullopt;
    return Witness{{as_structure(p), as_structure(q)}, {f, g}, {}, "connection holds but " + flags(props)};
}

inline std::optional<Witness> thm11_bwd_instance(const Diamond& p, const Diamond& q, const Mapping& f, const Mapping& g)
{
    GaloisPair pair(f, g);
    if (!check_adjoint_properties(pair, p, q).all())
        return std::nullopt;
    auto r = is_galois(pair, p, q);
    if (r.holds)
        return std::nullopt;
    return Witness{{as_structure(p), as_structure(q)}, {f, g}, {r.witness->first, r.witness->second},
                   "isotone with unit and counit, but the connection fails at (a, b)"};
}

inline std::optional<Witness> compose_instance(const Diamond& p, const Diamond& q, const Diamond& r,
                                               const GaloisPair& first, const GaloisPair& second)
{
    if (!is_galois(first, p, q).holds || !is_galois(second, q, r).holds)
        return std::nullopt;
    GaloisPair comp = compose_galois(first, second);
    auto res = is_galois(comp, p, r);
    if (res.holds)
        return std::nullopt;
    return Witness{{as_structure(p), as_structure(q), as_structure(r)},
                   {first.f(), first.g(), second.f(), second.g()},
                   {res.witness->first, res.witness->second},
                   "composite fails the connection at (a, c)"};
}

inline std::optional<Witness> adjoint_instance(const Diamond& p, const Diamond& q, const Mapping& given, AdjointSide side)
{
    auto adj = find_adjoint(given, p, q, side);
    if (adj.size() <= 1)
        return std::nullopt;
    std::vector<Mapping> maps{given};
    maps.insert(maps.end(), adj.begin(), adj.end());
    return Witness{{as_structure(p), as_structure(q)}, std::move(maps), {},
                   std::to_string(adj.size()) + (side == AdjointSide::right ? " right" : " left") +
                       " adjoints for the same map"};
}

inline std::optional<Witness> asymmetry_instance(const Diamond& p, const Diamond& q, const Mapping& f, const Mapping& g)
{
    GaloisPair pair(f, g);
    if (!is_galois(pair, p, q).holds || is_galois(pair.swapped(), q, p).holds)
        return std::nullopt;
    return Witness{{as_structure(p), as_structure(q)}, {f, g}, {}, "(f, g) connects P to Q but (g, f) does not connect Q to P"};
}

inline Outcome from(std::optional<Witness> w) { return w ? Outcome::found(std::move(*w)) : Outcome::ok(); }

inline std::vector<Block> single_structure_blocks(unsigned lo, unsigned hi,
                                                  std::function<std::optional<Witness>(const Diamond&)> check)
{
    std::vector<Block> blocks;
    for (unsigned n = std::max(lo, 1u); n <= hi; ++n)
        blocks.push_back({{n}, candidate_count(n), [n, check](std::uint64_t code) {
                              Diamond d = diamond_from_code(n, code);
                              if (!is_pobr(d))
                                  return Outcome::skip();
                              return from(check(d));
                          }});
    return blocks;
}

inline std::vector<Block> powerset_blocks(unsigned lo, unsigned hi, std::function<std::optional<Witness>(unsigned)> check)
{
    std::vector<Block> blocks;
    for (unsigned k = lo; k <= hi; ++k)
        blocks.push_back({{std::size_t{1} << k}, 1, [k, check](std::uint64_t) { return from(check(k)); }});
    return blocks;
}

using PairCheck = std::function<std::optional<Witness>(const Diamond&, const Diamond&)>;

inline std::vector<Block> pair_blocks(unsigned lo, unsigned hi, bool same_size,
                                      std::function<PairCheck(std::size_t, std::size_t)> make_check)
{
    std::vector<Block> blocks;
    for (const auto& t : size_tuples(std::max(lo, 1u), hi, 2)) {
        if (same_size && t[0] != t[1])
            continue;
        const auto& ps = valid_structures(static_cast<unsigned>(t[0]));
        const auto& qs = valid_structures(static_cast<unsigned>(t[1]));
        PairCheck check = make_check(t[0], t[1]);
        blocks.push_back({t, std::uint64_t{ps.size()} * qs.size(), [&ps, &qs, check](std::uint64_t idx) {
                              return from(check(ps[idx / qs.size()], qs[idx % qs.size()]));
                          }});
    }
    return blocks;
}

// All connections (f, g) from P to Q, lexicographic in (f, g).
inline std::vector<GaloisPair> galois_pairs(const Diamond& p, const Diamond& q, const std::vector<Mapping>& fs)
{
    std::vector<GaloisPair> out;
    for (const Mapping& f : fs)
        for (Mapping& g : find_adjoint(f, p, q, AdjointSide::right))
            out.emplace_back(f, std::move(g));
    return out;
}

inline std::vector<Block> claim_blocks(ClaimId claim, const ClaimOptions& opt)
{
    const unsigned lo = opt.n_min, hi = opt.n_max;
    switch (claim) {
    case ClaimId::intersect_closure:
        return pair_blocks(lo, hi, true, [](std::size_t, std::size_t) -> PairCheck { return intersect_instance; });

    case ClaimId::unique_gmax:
    case ClaimId::unique_gmin:
    case ClaimId::unique_lmax:
    case ClaimId::unique_lmin:
        return single_structure_blocks(lo, hi, [claim](const Diamond& d) { return uniqueness_instance(claim, d); });

    case ClaimId::powerset_valid:
        return powerset_blocks(lo, hi, powerset_valid_instance);

    case ClaimId::iso_iff_isotone:
        return pair_blocks(lo, hi, true, [](std::size_t n, std::size_t) -> PairCheck {
            auto bij = std::make_shared<std::vector<Mapping>>(all_bijections(n));
            return [bij](const Diamond& p, const Diamond& q) -> std::optional<Witness> {
                for (const Mapping& f : *bij)
                    if (auto w = iso_iff_isotone_instance(p, q, f))
                        return w;
                return std::nullopt;
            };
        });

    case ClaimId::duality_principle:
        return single_structure_blocks(lo, hi, duality_instance);

    case ClaimId::powerset_self_dual:
        return powerset_blocks(lo, hi, powerset_self_dual_instance);

    case ClaimId::double_dual:
        return single_structure_blocks(lo, hi, double_dual_instance);

    case ClaimId::galois_thm11_fwd:
        return pair_blocks(lo, hi, false, [](std::size_t np, std::size_t nq) -> PairCheck {
            auto fs = std::make_shared<std::vector<Mapping>>(all_mappings(np, nq));
            return [fs](const Diamond& p, const Diamond& q) -> std::optional<Witness> {
                for (const GaloisPair& gp : galois_pairs(p, q, *fs))
                    if (auto w = thm11_fwd_instance(p, q, gp.f(), gp.g()))
                        return w;
                return std::nullopt;
            };
        });

    case ClaimId::galois_thm11_bwd:
        return pair_blocks(lo, hi, false, [](std::size_t np, std::size_t nq) -> PairCheck {
            auto fs = std::make_shared<std::vector<Mapping>>(all_mappings(np, nq));
            auto gs = std::make_shared<std::vector<Mapping>>(all_mappings(nq, np));
            return [fs, gs](const Diamond& p, const Diamond& q) -> std::optional<Witness> {
                std::vector<const Mapping*> iso_g;
                for (const Mapping& g : *gs)
                    if (is_isotone(g, q, p).holds)
                        iso_g.push_back(&g);
                for (const Mapping& f : *fs) {
                    if (!is_isotone(f, p, q).holds)
                        continue;
                    for (const Mapping* g : iso_g)
                        if (auto w = thm11_bwd_instance(p, q, f, *g))
                            return w;
                }
                return std::nullopt;
            };
        });

    case ClaimId::adjoint_unique:
        return pair_blocks(lo, hi, false, [](std::size_t np, std::size_t nq) -> PairCheck {
            auto fs = std::make_shared<std::vector<Mapping>>(all_mappings(np, nq));
            auto gs = std::make_shared<std::vector<Mapping>>(all_mappings(nq, np));
            return [fs, gs](const Diamond& p, const Diamond& q) -> std::optional<Witness> {
                for (const Mapping& f : *fs)
                    if (auto w = adjoint_instance(p, q, f, AdjointSide::right))
                        return w;
                for (const Mapping& g : *gs)
                    if (auto w = adjoint_instance(p, q, g, AdjointSide::left))
                        return w;
                return std::nullopt;
            };
        });

    case ClaimId::galois_asymmetry:
        return pair_blocks(lo, hi, false, [](std::size_t np, std::size_t nq) -> PairCheck {
            auto fs = std::make_shared<std::vector<Mapping>>(all_mappings(np, nq));
            return [fs](const Diamond& p, const Diamond& q) -> std::optional<Witness> {
                for (const GaloisPair& gp : galois_pairs(p, q, *fs))
                    if (auto w = asymmetry_instance(p, q, gp.f(), gp.g()))
                        return w;
                return std::nullopt;
            };
        });

    case ClaimId::galois_compose: {
        std::vector<Block> blocks;
        for (const auto& t : size_tuples(std::max(lo, 1u), hi, 3)) {
            const auto& ps = valid_structures(static_cast<unsigned>(t[0]));
            const auto& qs = valid_structures(static_cast<unsigned>(t[1]));
            const auto& rs = valid_structures(static_cast<unsigned>(t[2]));
            auto fpq = std::make_shared<std::vector<Mapping>>(all_mappings(t[0], t[1]));
            auto fqr = std::make_shared<std::vector<Mapping>>(all_mappings(t[1], t[2]));
            const std::uint64_t nq = qs.size(), nr = rs.size();
            blocks.push_back({t, std::uint64_t{ps.size()} * nq * nr, [&ps, &qs, &rs, nq, nr, fpq, fqr](std::uint64_t idx) {
                                  const Diamond& p = ps[idx / (nq * nr)];
                                  const Diamond& q = qs[(idx / nr) % nq];
                                  const Diamond& r = rs[idx % nr];
                                  auto firsts = galois_pairs(p, q, *fpq);
                                  if (firsts.empty())
                                      return Outcome::ok();
                                  auto seconds = galois_pairs(q, r, *fqr);
                                  for (const auto& a : firsts)
                                      for (const auto& b : seconds)
                                          if (auto w = compose_instance(p, q, r, a, b))
                                              return Outcome::found(std::move(*w));
                                  return Outcome::ok();
                              }});
        }
        return blocks;
    }
    }
    return {};
}

} // namespace detail

/// Checks one claim at every size up to opt.n_max.
inline Finding verify_claim(ClaimId claim, const ClaimOptions& opt)
{
    if (opt.n_max > max_enumeration_size)
        throw UsageError("n_max must be at most " + std::to_string(max_enumeration_size));
    const bool powerset_claim = claim == ClaimId::powerset_valid || claim == ClaimId::powerset_self_dual;
    if (!powerset_claim && opt.n_max < 1)
        throw UsageError("n_max must be at least 1");

    Finding f;
    f.claim = claim;
    f.n_max = opt.n_max;
    f.budget = opt.budget;
    f.seed = opt.seed;

    auto blocks = detail::claim_blocks(claim, opt);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        detail::BlockResult r = detail::run_block(blocks[b], opt, b, f.sampled);
        f.instances_checked += r.checked;
        f.violations += r.hits;
        if (r.witness && !f.witness) {
            f.witness = std::move(r.witness);
            f.witness_sizes = blocks[b].sizes;
        }
    }

    if (is_existential(claim))
        f.verdict = f.witness ? Verdict::verified_at_scale : Verdict::counterexample;
    else
        f.verdict = f.witness ? Verdict::counterexample : Verdict::verified_at_scale;
    return f;
}

inline Finding verify_claim(ClaimId claim, unsigned n_max, std::optional<std::uint64_t> budget = std::nullopt,
                            std::uint64_t seed = default_seed, unsigned workers = 1)
{
    ClaimOptions opt;
    opt.n_max = n_max;
    opt.budget = budget;
    opt.seed = seed;
    opt.workers = workers;
    return verify_claim(claim, opt);
}

/// Re-evaluates a finding's witness through the public checks. True when the
/// witness still refutes the claim (or, for existential claims, still
/// exhibits it).
inline bool replay(ClaimId claim, const Witness& w)
{
    auto d = [&](std::size_t i) -> const Diamond& { return w.structures.at(i).diamond(); };
    auto m = [&](std::size_t i) -> const Mapping& { return w.mappings.at(i); };
    switch (claim) {
    case ClaimId::intersect_closure:
        return detail::intersect_instance(d(0), d(1)).has_value();
    case ClaimId::unique_gmax:
    case ClaimId::unique_gmin:
    case ClaimId::unique_lmax:
    case ClaimId::unique_lmin:
        return is_pobr(d(0)) && detail::uniqueness_instance(claim, d(0)).has_value();
    case ClaimId::powerset_valid:
        return !check_axioms(d(0)).valid();
    case ClaimId::iso_iff_isotone:
        return is_pobr(d(0)) && is_pobr(d(1)) && detail::iso_iff_isotone_instance(d(0), d(1), m(0)).has_value();
    case ClaimId::duality_principle:
        return is_pobr(d(0)) && !is_pobr(dual(d(0))) && dual(d(0)) == d(1);
    case ClaimId::powerset_self_dual:
        return !is_isomorphism(m(0), d(0), d(1)).holds;
    case ClaimId::double_dual:
        return dual(dual(d(0))) != d(0);
    case ClaimId::galois_thm11_fwd:
        return is_pobr(d(0)) && is_pobr(d(1)) && detail::thm11_fwd_instance(d(0), d(1), m(0), m(1)).has_value();
    case ClaimId::galois_thm11_bwd:
        return is_pobr(d(0)) && is_pobr(d(1)) && detail::thm11_bwd_instance(d(0), d(1), m(0), m(1)).has_value();
    case ClaimId::galois_compose:
        return detail::compose_instance(d(0), d(1), d(2), GaloisPair(m(0), m(1)), GaloisPair(m(2), m(3))).has_value();
    case ClaimId::adjoint_unique: {
        bool right = m(0).src_size() == d(0).size() && m(0).dst_size() == d(1).size();
        return detail::adjoint_instance(d(0), d(1), m(0), right ? AdjointSide::right : AdjointSide::left).has_value();
    }
    case ClaimId::galois_asymmetry:
        return detail::asymmetry_instance(d(0), d(1), m(0), m(1)).has_value();
    }
    return false;
}

inline bool replay(const Finding& f) { return f.witness && replay(f.claim, *f.witness); }

inline const char* verdict_name(Verdict v)
{
    return v == Verdict::verified_at_scale ? "verified-at-scale" : "counterexample";
}

/// Human-readable finding with the witness as .bpo / .map fragments.
inline std::string format_finding(const Finding& f)
{
    std::string out;
    out += "claim: " + std::string(claim_name(f.claim)) + "\n";
    out += "verdict: " + std::string(verdict_name(f.verdict)) + "\n";
    out += "scale: n <= " + std::to_string(f.n_max) + "\n";
    out += "instances checked: " + std::to_string(f.instances_checked) + "\n";
    out += std::string(is_existential(f.claim) ? "examples" : "violations") + ": " + std::to_string(f.violations) + "\n";
    out += "sweep: ";
    out += f.sampled ? "sampled (budget " + std::to_string(*f.budget) + " per size, seed " + std::to_string(f.seed) + ")"
                     : std::string("exhaustive");
    out += "\n";
    if (!f.witness)
        return out;
    const Witness& w = *f.witness;
    out += "witness sizes:";
    for (auto s : f.witness_sizes)
        out += " " + std::to_string(s);
    out += "\nwitness: " + w.detail + "\n";
    if (!w.tuple.empty()) {
        out += "tuple:";
        for (auto t : w.tuple)
            out += " " + std::to_string(t);
        out += "\n";
    }
    for (std::size_t i = 0; i < w.structures.size(); ++i)
        out += "# structure " + std::to_string(i) + "\n" + serialize_structure(w.structures[i]);
    for (std::size_t i = 0; i < w.mappings.size(); ++i) {
        const Mapping& mp = w.mappings[i];
        out += "# mapping " + std::to_string(i) + "\n";
        for (Index a = 0; a < mp.src_size(); ++a)
            out += "e" + std::to_string(a) + " -> e" + std::to_string(mp(a)) + "\n";
    }
    return out;
}

} // namespace biposet
