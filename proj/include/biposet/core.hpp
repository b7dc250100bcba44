#pragma once

// Ground sets, relations and relation pairs.
//
// Elements are dense indices 0..n-1 in label order; labels only matter at
// the I/O boundary. A relation is an n x n bit matrix stored row-major with
// one bitset per row, so successor sets are contiguous word spans.

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <tuple>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace biposet {

using Index = std::size_t;
inline constexpr Index npos = static_cast<Index>(-1);

/// Caller violated a precondition (bad index, mismatched dimensions, ...).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds a configured size cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace bits {

using Word = std::uint64_t;
inline constexpr std::size_t word_bits = 64;

constexpr std::size_t words_for(std::size_t n) { return (n + word_bits - 1) / word_bits; }

inline bool test(std::span<const Word> row, Index j)
{
    return (row[j / word_bits] >> (j % word_bits)) & 1u;
}

inline Index first(std::span<const Word> row)
{
    for (std::size_t w = 0; w < row.size(); ++w)
        if (row[w] != 0)
            return w * word_bits + static_cast<Index>(std::countr_zero(row[w]));
    return npos;
}

// Lowest index set in `a & ~b`.
inline Index first_and_not(std::span<const Word> a, std::span<const Word> b)
{
    for (std::size_t w = 0; w < a.size(); ++w) {
        Word x = a[w] & ~b[w];
        if (x != 0)
            return w * word_bits + static_cast<Index>(std::countr_zero(x));
    }
    return npos;
}

inline bool any(std::span<const Word> row)
{
    return std::any_of(row.begin(), row.end(), [](Word w) { return w != 0; });
}

inline std::size_t count(std::span<const Word> row)
{
    std::size_t c = 0;
    for (Word w : row)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

template <typename F>
void for_each(std::span<const Word> row, F&& f)
{
    for (std::size_t w = 0; w < row.size(); ++w) {
        Word x = row[w];
        while (x != 0) {
            f(w * word_bits + static_cast<Index>(std::countr_zero(x)));
            x &= x - 1;
        }
    }
}

} // namespace bits

/// Binary relation on {0..n-1}.
class Rel {
public:
    Rel() = default;
    explicit Rel(std::size_t n) : n_(n), words_(bits::words_for(n)), bits_(n * words_) {}

    static Rel identity(std::size_t n)
    {
        Rel r(n);
        for (Index i = 0; i < n; ++i)
            r.set(i, i);
        return r;
    }

    static Rel full(std::size_t n)
    {
        Rel r(n);
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j)
                r.set(i, j);
        return r;
    }

    template <typename Pred>
    static Rel from_predicate(std::size_t n, Pred&& holds)
    {
        Rel r(n);
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j)
                if (holds(i, j))
                    r.set(i, j);
        return r;
    }

    static Rel from_pairs(std::size_t n, std::initializer_list<std::pair<Index, Index>> pairs)
    {
        Rel r(n);
        for (auto [i, j] : pairs) {
            if (i >= n || j >= n)
                throw UsageError("relation pair out of range");
            r.set(i, j);
        }
        return r;
    }

    std::size_t size() const { return n_; }
    std::size_t words_per_row() const { return words_; }

    bool test(Index i, Index j) const
    {
        assert(i < n_ && j < n_);
        return (bits_[i * words_ + j / bits::word_bits] >> (j % bits::word_bits)) & 1u;
    }

    void set(Index i, Index j, bool value = true)
    {
        assert(i < n_ && j < n_);
        bits::Word mask = bits::Word{1} << (j % bits::word_bits);
        bits::Word& w = bits_[i * words_ + j / bits::word_bits];
        w = value ? (w | mask) : (w & ~mask);
    }

    /// Successor set of i.
    std::span<const bits::Word> row(Index i) const { return {bits_.data() + i * words_, words_}; }

    Rel transpose() const
    {
        Rel t(n_);
        for (Index i = 0; i < n_; ++i)
            bits::for_each(row(i), [&](Index j) { t.set(j, i); });
        return t;
    }

    Rel& operator&=(const Rel& other)
    {
        if (other.n_ != n_)
            throw UsageError("relation dimension mismatch");
        for (std::size_t k = 0; k < bits_.size(); ++k)
            bits_[k] &= other.bits_[k];
        return *this;
    }

    std::size_t count() const
    {
        return bits::count(std::span<const bits::Word>(bits_));
    }

    friend bool operator==(const Rel&, const Rel&) = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<bits::Word> bits_;
};

/// The relation pair (r1, r2) on one ground set.
class Diamond {
public:
    Diamond() = default;
    Diamond(Rel r1, Rel r2) : r1_(std::move(r1)), r2_(std::move(r2))
    {
        if (r1_.size() != r2_.size())
            throw UsageError("relation pair components differ in dimension");
    }

    const Rel& r1() const { return r1_; }
    const Rel& r2() const { return r2_; }
    const Rel& component(int which) const
    {
        if (which == 1)
            return r1_;
        if (which == 2)
            return r2_;
        throw UsageError("component must be 1 or 2");
    }
    std::size_t size() const { return r1_.size(); }

    friend bool operator==(const Diamond&, const Diamond&) = default;

private:
    Rel r1_;
    Rel r2_;
};

namespace detail {
inline void require_index(const Diamond& d, Index i)
{
    if (i >= d.size())
        throw UsageError("element index " + std::to_string(i) + " out of range for " +
                         std::to_string(d.size()) + " elements");
}
} // namespace detail

/// a r1 b r2 c, read as (a,b) in r1 and (b,c) in r2.
inline bool chain(const Diamond& d, Index a, Index b, Index c)
{
    detail::require_index(d, a);
    detail::require_index(d, b);
    detail::require_index(d, c);
    return d.r1().test(a, b) && d.r2().test(b, c);
}

/// a is below b in both components at once.
inline bool diamond_leq(const Diamond& d, Index a, Index b)
{
    detail::require_index(d, a);
    detail::require_index(d, b);
    return d.r1().test(a, b) && d.r2().test(a, b);
}

/// Ordered, pairwise distinct, nonempty element names.
class GroundSet {
public:
    GroundSet() = default;
    explicit GroundSet(std::vector<std::string> labels) : labels_(std::move(labels))
    {
        if (labels_.empty())
            throw UsageError("ground set must be non-empty");
        index_.reserve(labels_.size());
        for (Index i = 0; i < labels_.size(); ++i) {
            if (labels_[i].empty())
                throw UsageError("element labels must be non-empty");
            if (!index_.emplace(labels_[i], i).second)
                throw UsageError("duplicate element label '" + labels_[i] + "'");
        }
    }

    /// Labels prefix0, prefix1, ...
    static GroundSet indexed(std::size_t n, const std::string& prefix = "e")
    {
        std::vector<std::string> labels;
        labels.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            labels.push_back(prefix + std::to_string(i));
        return GroundSet(std::move(labels));
    }

    std::size_t size() const { return labels_.size(); }
    const std::string& label(Index i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }

    std::optional<Index> find(const std::string& label) const
    {
        auto it = index_.find(label);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.labels_ == b.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Index> index_;
};

// Axiom verdict types live here so BiPoset can carry one as a certificate.

struct ReflexiveWitness {
    Index a;
    friend bool operator==(const ReflexiveWitness&, const ReflexiveWitness&) = default;
};

struct AntisymmetricWitness {
    Index a, b, c;
    friend bool operator==(const AntisymmetricWitness&, const AntisymmetricWitness&) = default;
};

struct TransitiveWitness {
    Index a, b, c, d, e;
    bool first_conclusion_fails;  // a r1 d r2 c
    bool second_conclusion_fails; // a r1 b r2 e
    friend bool operator==(const TransitiveWitness&, const TransitiveWitness&) = default;
};

/// Per-axiom outcome. An absent witness means the axiom holds.
struct AxiomVerdict {
    std::optional<ReflexiveWitness> reflexive_violation;
    std::optional<AntisymmetricWitness> antisymmetric_violation;
    std::optional<TransitiveWitness> transitive_violation;

    bool reflexive() const { return !reflexive_violation; }
    bool antisymmetric() const { return !antisymmetric_violation; }
    bool transitive() const { return !transitive_violation; }
    bool valid() const { return reflexive() && antisymmetric() && transitive(); }

    friend bool operator==(const AxiomVerdict&, const AxiomVerdict&) = default;
};

class BiPoset;
inline BiPoset certify(BiPoset bp);

/// A ground set with a relation pair. The certificate is only set by certify().
class BiPoset {
public:
    BiPoset() = default;
    BiPoset(GroundSet ground, Diamond d) : ground_(std::move(ground)), d_(std::move(d))
    {
        if (ground_.size() != d_.size())
            throw UsageError("ground set has " + std::to_string(ground_.size()) +
                             " elements but relations have dimension " + std::to_string(d_.size()));
    }

    const GroundSet& ground() const { return ground_; }
    const Diamond& diamond() const { return d_; }
    std::size_t size() const { return d_.size(); }
    const std::optional<AxiomVerdict>& certificate() const { return certificate_; }
    bool certified_valid() const { return certificate_ && certificate_->valid(); }

    /// Bit equality of labels and relations; certificates are ignored.
    friend bool operator==(const BiPoset& a, const BiPoset& b)
    {
        return a.ground_ == b.ground_ && a.d_ == b.d_;
    }

private:
    friend BiPoset certify(BiPoset bp);

    GroundSet ground_;
    Diamond d_;
    std::optional<AxiomVerdict> certificate_;
};

/// Total function between ground sets of sizes src and dst.
class Mapping {
public:
    Mapping() = default;
    Mapping(std::size_t dst_size, std::vector<Index> image) : dst_n_(dst_size), img_(std::move(image))
    {
        for (Index v : img_)
            if (v >= dst_n_)
                throw UsageError("mapping image " + std::to_string(v) + " out of range for " +
                                 std::to_string(dst_n_) + " target elements");
    }

    static Mapping identity(std::size_t n)
    {
        std::vector<Index> img(n);
        for (Index i = 0; i < n; ++i)
            img[i] = i;
        return Mapping(n, std::move(img));
    }

    static Mapping constant(std::size_t src_size, std::size_t dst_size, Index value)
    {
        return Mapping(dst_size, std::vector<Index>(src_size, value));
    }

    std::size_t src_size() const { return img_.size(); }
    std::size_t dst_size() const { return dst_n_; }
    const std::vector<Index>& image() const { return img_; }
    Index operator()(Index a) const { return img_.at(a); }

    bool is_bijection() const
    {
        if (img_.size() != dst_n_)
            return false;
        std::vector<bool> hit(dst_n_, false);
        for (Index v : img_) {
            if (hit[v])
                return false;
            hit[v] = true;
        }
        return true;
    }

    Mapping inverse() const
    {
        if (!is_bijection())
            throw UsageError("mapping is not a bijection");
        std::vector<Index> inv(img_.size());
        for (Index i = 0; i < img_.size(); ++i)
            inv[img_[i]] = i;
        return Mapping(img_.size(), std::move(inv));
    }

    friend bool operator==(const Mapping&, const Mapping&) = default;
    friend auto operator<=>(const Mapping& a, const Mapping& b)
    {
        return std::tie(a.img_, a.dst_n_) <=> std::tie(b.img_, b.dst_n_);
    }

private:
    std::size_t dst_n_ = 0;
    std::vector<Index> img_;
};

/// outer after inner: a -> outer(inner(a)).
inline Mapping compose(const Mapping& outer, const Mapping& inner)
{
    if (inner.dst_size() != outer.src_size())
        throw UsageError("cannot compose: intermediate dimensions differ");
    std::vector<Index> img(inner.src_size());
    for (Index a = 0; a < img.size(); ++a)
        img[a] = outer(inner(a));
    return Mapping(outer.dst_size(), std::move(img));
}

} // namespace biposet
