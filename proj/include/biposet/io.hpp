#pragma once

// Text formats and DOT output.
//
// Structure files (.bpo), line oriented:
//
//   # comment
//   elements: a b c
//   r1: a b
//   r2: b c
//
// Names match [A-Za-z0-9_{}]+. Repeated pair lines are accepted once.
//
// Mapping files (.map) hold one `src -> dst` line per source element. A
// Galois pair file holds two mapping blocks introduced by `f:` and `g:`.

#include "biposet/galois.hpp"

#include <cctype>
#include <sstream>

namespace biposet {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(line ? what + ", line " + std::to_string(line) : what), line_(line)
    {
    }
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline bool valid_name(const std::string& s)
{
    if (s.empty())
        return false;
    for (unsigned char ch : s)
        if (!(std::isalnum(ch) || ch == '_' || ch == '{' || ch == '}'))
            return false;
    return true;
}

inline std::vector<std::string> split_ws(const std::string& s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;)
        out.push_back(tok);
    return out;
}

struct Line {
    std::size_t number;
    std::string text;
};

// Non-blank, non-comment lines with their 1-based numbers.
inline std::vector<Line> content_lines(const std::string& text)
{
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    for (std::size_t no = 1; std::getline(in, raw); ++no) {
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        auto first = raw.find_first_not_of(" \t");
        if (first == std::string::npos || raw[first] == '#')
            continue;
        auto last = raw.find_last_not_of(" \t");
        out.push_back({no, raw.substr(first, last - first + 1)});
    }
    return out;
}

inline bool starts_with_key(const std::string& line, const std::string& key, std::string& rest)
{
    if (line.compare(0, key.size(), key) != 0)
        return false;
    rest = line.substr(key.size());
    return true;
}

} // namespace detail

inline BiPoset parse_structure(const std::string& text)
{
    auto lines = detail::content_lines(text);
    if (lines.empty())
        throw ParseError("missing 'elements:' line", 0);

    std::string rest;
    if (!detail::starts_with_key(lines[0].text, "elements:", rest))
        throw ParseError("expected 'elements:' as the first declaration", lines[0].number);
    auto names = detail::split_ws(rest);
    if (names.empty())
        throw ParseError("a structure needs at least one element", lines[0].number);
    std::unordered_map<std::string, Index> index;
    for (const auto& name : names) {
        if (!detail::valid_name(name))
            throw ParseError("invalid element name '" + name + "'", lines[0].number);
        if (!index.emplace(name, index.size()).second)
            throw ParseError("duplicate element " + name, lines[0].number);
    }

    const std::size_t n = names.size();
    Rel r1(n), r2(n);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& ln = lines[k];
        Rel* target = nullptr;
        if (detail::starts_with_key(ln.text, "r1:", rest))
            target = &r1;
        else if (detail::starts_with_key(ln.text, "r2:", rest))
            target = &r2;
        else if (detail::starts_with_key(ln.text, "elements:", rest))
            throw ParseError("elements declared twice", ln.number);
        else
            throw ParseError("expected 'r1:' or 'r2:'", ln.number);
        auto toks = detail::split_ws(rest);
        if (toks.size() != 2)
            throw ParseError("a relation line needs exactly two element names", ln.number);
        Index ij[2];
        for (int t = 0; t < 2; ++t) {
            auto it = index.find(toks[t]);
            if (it == index.end())
                throw ParseError("undeclared element " + toks[t], ln.number);
            ij[t] = it->second;
        }
        target->set(ij[0], ij[1]);
    }
    return BiPoset(GroundSet(std::move(names)), Diamond(std::move(r1), std::move(r2)));
}

inline std::string serialize_structure(const BiPoset& bp)
{
    const auto& g = bp.ground();
    std::string out = "elements:";
    for (const auto& l : g.labels())
        out += " " + l;
    out += "\n";
    auto emit = [&](const Rel& r, const char* key) {
        for (Index i = 0; i < r.size(); ++i)
            bits::for_each(r.row(i), [&](Index j) { out += std::string(key) + " " + g.label(i) + " " + g.label(j) + "\n"; });
    };
    emit(bp.diamond().r1(), "r1:");
    emit(bp.diamond().r2(), "r2:");
    return out;
}

namespace detail {

inline Mapping parse_mapping_lines(const std::vector<Line>& lines, const GroundSet& src, const GroundSet& dst)
{
    std::vector<Index> img(src.size(), npos);
    for (const auto& ln : lines) {
        auto toks = split_ws(ln.text);
        if (toks.size() != 3 || toks[1] != "->")
            throw ParseError("expected '<source> -> <target>'", ln.number);
        auto a = src.find(toks[0]);
        if (!a)
            throw ParseError("undeclared element " + toks[0], ln.number);
        auto b = dst.find(toks[2]);
        if (!b)
            throw ParseError("undeclared element " + toks[2], ln.number);
        if (img[*a] != npos && img[*a] != *b)
            throw ParseError("conflicting images for " + toks[0], ln.number);
        img[*a] = *b;
    }
    for (Index a = 0; a < img.size(); ++a)
        if (img[a] == npos)
            throw ParseError("mapping is not total: no image for " + src.label(a), 0);
    return Mapping(dst.size(), std::move(img));
}

} // namespace detail

inline Mapping parse_mapping(const std::string& text, const GroundSet& src, const GroundSet& dst)
{
    return detail::parse_mapping_lines(detail::content_lines(text), src, dst);
}

inline std::string serialize_mapping(const Mapping& m, const GroundSet& src, const GroundSet& dst)
{
    if (m.src_size() != src.size() || m.dst_size() != dst.size())
        throw UsageError("mapping does not match the given ground sets");
    std::string out;
    for (Index a = 0; a < m.src_size(); ++a)
        out += src.label(a) + " -> " + dst.label(m(a)) + "\n";
    return out;
}

inline GaloisPair parse_galois_pair(const std::string& text, const GroundSet& p, const GroundSet& q)
{
    auto lines = detail::content_lines(text);
    std::vector<detail::Line> f_lines, g_lines;
    std::vector<detail::Line>* current = nullptr;
    bool seen_f = false, seen_g = false;
    for (const auto& ln : lines) {
        if (ln.text == "f:") {
            if (seen_f)
                throw ParseError("duplicate 'f:' block", ln.number);
            seen_f = true;
            current = &f_lines;
        } else if (ln.text == "g:") {
            if (seen_g)
                throw ParseError("duplicate 'g:' block", ln.number);
            seen_g = true;
            current = &g_lines;
        } else if (!current) {
            throw ParseError("expected 'f:' or 'g:' block header", ln.number);
        } else {
            current->push_back(ln);
        }
    }
    if (!seen_f || !seen_g)
        throw ParseError("a Galois pair file needs both 'f:' and 'g:' blocks", 0);
    return GaloisPair(detail::parse_mapping_lines(f_lines, p, q), detail::parse_mapping_lines(g_lines, q, p));
}

inline std::string serialize_galois_pair(const GaloisPair& pair, const GroundSet& p, const GroundSet& q)
{
    return "f:\n" + serialize_mapping(pair.f(), p, q) + "g:\n" + serialize_mapping(pair.g(), q, p);
}

enum class DotComponent { one, two, both };

/// Covering pairs of a partial order: a < b with nothing strictly between.
inline std::vector<std::pair<Index, Index>> covering_pairs(const Rel& r)
{
    std::vector<std::pair<Index, Index>> out;
    const std::size_t n = r.size();
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            if (a == b || !r.test(a, b))
                continue;
            bool covered = true;
            for (Index c = 0; c < n && covered; ++c)
                if (c != a && c != b && r.test(a, c) && r.test(c, b))
                    covered = false;
            if (covered)
                out.emplace_back(a, b);
        }
    return out;
}

/// Graphviz digraph, bottom-up. A component that is a classical partial
/// order is drawn as its covering relation; otherwise every off-diagonal
/// pair is drawn. r1 edges are solid, r2 edges dashed.
inline std::string emit_dot(const BiPoset& bp, DotComponent which)
{
    const auto& g = bp.ground();
    auto quote = [](const std::string& s) { return "\"" + s + "\""; };
    std::string out = "digraph biposet {\n  rankdir=BT;\n";
    for (const auto& l : g.labels())
        out += "  " + quote(l) + ";\n";

    auto edges = [&](int comp, const char* style) {
        const Rel& r = bp.diamond().component(comp);
        std::vector<std::pair<Index, Index>> es;
        if (check_classical_por(r).valid()) {
            out += "  // r" + std::to_string(comp) + ": covering relation\n";
            es = covering_pairs(r);
        } else {
            out += "  // r" + std::to_string(comp) + ": not a partial order, raw edges without reduction\n";
            for (Index a = 0; a < r.size(); ++a)
                for (Index b = 0; b < r.size(); ++b)
                    if (a != b && r.test(a, b))
                        es.emplace_back(a, b);
        }
        for (auto [a, b] : es)
            out += "  " + quote(g.label(a)) + " -> " + quote(g.label(b)) + " [style=" + style + ", label=\"r" +
                   std::to_string(comp) + "\"];\n";
    };
    if (which != DotComponent::two)
        edges(1, "solid");
    if (which != DotComponent::one)
        edges(2, "dashed");
    out += "}\n";
    return out;
}

} // namespace biposet
