#pragma once

#include "biposet.hpp"

#include <cstdio>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace support {

using namespace biposet;

// ({1,2,3}, (<=, divides))
inline BiPoset d2() { return divisibility_biposet(3); }

inline Diamond make(std::size_t n, std::initializer_list<std::pair<Index, Index>> r1,
                    std::initializer_list<std::pair<Index, Index>> r2)
{
    return Diamond(Rel::from_pairs(n, r1), Rel::from_pairs(n, r2));
}

inline Diamond delta(std::size_t n) { return Diamond(Rel::identity(n), Rel::identity(n)); }

/// Structural check of DOT text: header, quoted node declarations, edges
/// between declared nodes with a bracketed attribute list, comments, and a
/// closing brace. Returns an empty string when well formed, else the reason.
inline std::string dot_problem(const std::string& text, std::size_t* edge_count = nullptr)
{
    static const std::regex header(R"re(^digraph [A-Za-z_][A-Za-z0-9_]* \{$)re");
    static const std::regex attr(R"re(^[A-Za-z]+=[A-Za-z0-9_]+;$)re");
    static const std::regex node(R"re(^"([^"]+)";$)re");
    static const std::regex edge(R"re(^"([^"]+)" -> "([^"]+)" \[[a-z]+=[a-z]+(, [a-z]+=("[^"]*"|[a-z]+))*\];$)re");
    std::istringstream in(text);
    std::string line;
    std::set<std::string> nodes;
    std::size_t edges = 0;
    bool opened = false, closed = false;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(' ');
        std::string t = first == std::string::npos ? "" : line.substr(first);
        std::smatch m;
        if (closed)
            return "content after closing brace";
        if (!opened) {
            if (!std::regex_match(t, header))
                return "missing digraph header";
            opened = true;
        } else if (t == "}") {
            closed = true;
        } else if (t.empty() || t.rfind("//", 0) == 0 || std::regex_match(t, attr)) {
        } else if (std::regex_match(t, m, node)) {
            nodes.insert(m[1]);
        } else if (std::regex_match(t, m, edge)) {
            if (!nodes.count(m[1]) || !nodes.count(m[2]))
                return "edge to undeclared node: " + t;
            ++edges;
        } else {
            return "unrecognised line: " + t;
        }
    }
    if (!closed)
        return "missing closing brace";
    if (edge_count)
        *edge_count = edges;
    return "";
}

struct CliRun {
    int status = -1;
    std::string out;
};

/// Runs the command line tool through the shell; stderr is discarded.
inline CliRun run_cli(const std::string& args)
{
    CliRun r;
    std::string cmd = std::string(BIPOSET_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0)
        r.out.append(buf, got);
    int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

} // namespace support
