// Command line front end for the biposet library.
//
// Exit codes: 0 = property holds / structure valid, 1 = property fails,
// 2 = usage or parse error.

#include "biposet.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace biposet;

namespace {

constexpr int exit_holds = 0;
constexpr int exit_fails = 1;
constexpr int exit_usage = 2;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw UsageError("cannot write " + path);
    out << text;
}

BiPoset load(const std::string& path)
{
    try {
        return parse_structure(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), 0);
    }
}

BiPoset load_valid(const std::string& path)
{
    BiPoset bp = certify(load(path));
    if (!bp.certified_valid())
        throw UsageError(path + " does not satisfy the binary poset axioms (run `check` for details)");
    return bp;
}

std::string names(const GroundSet& g, std::initializer_list<Index> idx)
{
    std::string s = "(";
    for (Index i : idx)
        s += (s.size() > 1 ? " " : "") + g.label(i);
    return s + ")";
}

std::string describe_verdict(const BiPoset& bp, const AxiomVerdict& v)
{
    const auto& g = bp.ground();
    std::string out;
    out += "reflexive: ";
    out += v.reflexive() ? "pass\n" : "FAIL at " + names(g, {v.reflexive_violation->a}) + "\n";
    out += "antisymmetric: ";
    if (auto w = v.antisymmetric_violation)
        out += "FAIL at (a b c) = " + names(g, {w->a, w->b, w->c}) + "\n";
    else
        out += "pass\n";
    out += "transitive: ";
    if (auto w = v.transitive_violation) {
        out += "FAIL at (a b c d e) = " + names(g, {w->a, w->b, w->c, w->d, w->e});
        if (w->first_conclusion_fails)
            out += "; a r1 d r2 c fails";
        if (w->second_conclusion_fails)
            out += "; a r1 b r2 e fails";
        out += "\n";
    } else {
        out += "pass\n";
    }
    return out;
}

std::string opt_label(const GroundSet& g, const std::optional<Index>& i)
{
    return i ? g.label(*i) : std::string("-");
}

std::string qualifiers(const GroundSet& g, const SidedExtreme& s)
{
    if (s.absent())
        return "-";
    std::string out;
    for (Index q : s.qualifiers)
        out += (out.empty() ? "" : " ") + g.label(q);
    return out;
}

DotComponent parse_component(const std::string& c)
{
    if (c == "1")
        return DotComponent::one;
    if (c == "2")
        return DotComponent::two;
    return DotComponent::both;
}

GaloisMode parse_mode(const std::string& m)
{
    if (m == "monotone")
        return GaloisMode::monotone;
    if (m == "antitone")
        return GaloisMode::antitone;
    return GaloisMode::hetero;
}

std::string mapping_with_labels(const Mapping& m, std::size_t n_src, std::size_t n_dst)
{
    return serialize_mapping(m, GroundSet::indexed(n_src), GroundSet::indexed(n_dst));
}

void write_witness_files(const Finding& f, const std::string& dir)
{
    if (!f.witness)
        return;
    fs::create_directories(dir);
    const Witness& w = *f.witness;
    for (std::size_t i = 0; i < w.structures.size(); ++i)
        write_output(serialize_structure(w.structures[i]), (fs::path(dir) / ("structure" + std::to_string(i) + ".bpo")).string());
    for (std::size_t i = 0; i < w.mappings.size(); ++i) {
        const Mapping& m = w.mappings[i];
        write_output(mapping_with_labels(m, m.src_size(), m.dst_size()),
                     (fs::path(dir) / ("mapping" + std::to_string(i) + ".map")).string());
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Construct, validate and explore finite binary posets"};
    app.require_subcommand(1);

    std::string out_path;
    std::string file_a, file_b, file_c;
    std::vector<std::string> files;
    std::string component = "both";
    std::string mode = "hetero";
    std::string side = "right";
    std::string claim_name_arg;
    unsigned k = 0, n = 2, workers = 1;
    std::uint64_t budget = 0, seed = default_seed;

    auto* check = app.add_subcommand("check", "Check the binary poset axioms");
    check->add_option("file", file_a, "Structure file")->required();

    auto* classical = app.add_subcommand("classical-check", "Check components against the classical partial order axioms");
    classical->add_option("file", file_a, "Structure file")->required();
    classical->add_option("--component", component, "1, 2 or both")->check(CLI::IsMember({"1", "2", "both"}));

    auto* dual_cmd = app.add_subcommand("dual", "Write the dual structure");
    dual_cmd->add_option("file", file_a, "Structure file")->required();
    dual_cmd->add_option("--out", out_path, "Output file (default standard output)");

    auto* intersect = app.add_subcommand("intersect", "Intersect structures on the same elements");
    intersect->add_option("files", files, "Structure files")->required();
    intersect->add_option("--out", out_path, "Output file (default standard output)");

    auto* powerset = app.add_subcommand("powerset", "Subsets of a k-element set under inclusion");
    powerset->add_option("--k", k, "Base set size")->required();
    powerset->add_option("--out", out_path, "Output file (default standard output)");

    auto* divisibility = app.add_subcommand("divisibility", "{1..k} under (<=, divides)");
    divisibility->add_option("--k", k, "Largest element")->required()->check(CLI::PositiveNumber);
    divisibility->add_option("--out", out_path, "Output file (default standard output)");

    auto* extremal = app.add_subcommand("extremal", "Greatest/least element report; exit 0 iff bounded");
    extremal->add_option("file", file_a, "Structure file")->required();

    auto* iso = app.add_subcommand("iso", "Search for an isomorphism");
    iso->add_option("a", file_a, "Source structure")->required();
    iso->add_option("b", file_b, "Target structure")->required();
    iso->add_option("--out", out_path, "Output file for the mapping");

    auto* selfdual = app.add_subcommand("selfdual", "Search for an isomorphism onto the dual");
    selfdual->add_option("file", file_a, "Structure file")->required();
    selfdual->add_option("--out", out_path, "Output file for the mapping");

    auto* galois = app.add_subcommand("galois", "Galois connections");
    galois->require_subcommand(1);
    auto* gcheck = galois->add_subcommand("check", "Check a pair of maps");
    gcheck->add_option("p", file_a, "Structure P")->required();
    gcheck->add_option("q", file_b, "Structure Q")->required();
    gcheck->add_option("pair", file_c, "Pair file with f: and g: blocks")->required();
    gcheck->add_option("--mode", mode, "hetero, monotone or antitone")->check(CLI::IsMember({"hetero", "monotone", "antitone"}));
    auto* gadj = galois->add_subcommand("adjoint", "List every adjoint of a map");
    gadj->add_option("p", file_a, "Structure P")->required();
    gadj->add_option("q", file_b, "Structure Q")->required();
    gadj->add_option("map", file_c, "Mapping file (P -> Q for right, Q -> P for left)")->required();
    gadj->add_option("--side", side, "right or left")->check(CLI::IsMember({"right", "left"}));
    gadj->add_option("--mode", mode, "hetero, monotone or antitone")->check(CLI::IsMember({"hetero", "monotone", "antitone"}));
    gadj->add_option("--out", out_path, "Output file");

    auto* enumerate = app.add_subcommand("enumerate", "All structures on n elements");
    enumerate->add_option("--n", n, "Element count (1..4)")->required();
    enumerate->add_option("--out", out_path, "Directory for one .bpo file per structure");

    auto* hunt = app.add_subcommand("hunt", "Check a claim at small sizes; exit 0 iff verified");
    hunt->add_option("claim", claim_name_arg, "Claim identifier")->required();
    hunt->add_option("--n", n, "Largest size (1..4)");
    auto* budget_opt = hunt->add_option("--budget", budget, "Per-size instance cap; sample above it");
    hunt->add_option("--seed", seed, "Sampling seed");
    hunt->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    hunt->add_option("--out", out_path, "Directory for witness files");

    auto* dot = app.add_subcommand("dot", "Graphviz rendering");
    dot->add_option("file", file_a, "Structure file")->required();
    dot->add_option("--component", component, "1, 2 or both")->check(CLI::IsMember({"1", "2", "both"}));
    dot->add_option("--out", out_path, "Output file (default standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (check->parsed()) {
            BiPoset bp = certify(load(file_a));
            std::cout << describe_verdict(bp, *bp.certificate());
            std::cout << (bp.certified_valid() ? "valid binary poset\n" : "not a binary poset\n");
            return bp.certified_valid() ? exit_holds : exit_fails;
        }
        if (classical->parsed()) {
            BiPoset bp = load(file_a);
            bool all = true;
            for (int c : {1, 2}) {
                if ((component == "1" && c != 1) || (component == "2" && c != 2))
                    continue;
                ClassicalVerdict v = check_classical_por(bp.diamond().component(c));
                const auto& g = bp.ground();
                std::cout << "r" << c << ": ";
                if (v.valid()) {
                    std::cout << "partial order\n";
                    continue;
                }
                all = false;
                std::cout << "not a partial order;";
                if (v.reflexive_violation)
                    std::cout << " reflexivity fails at " << names(g, {*v.reflexive_violation}) << ";";
                if (auto w = v.antisymmetric_violation)
                    std::cout << " antisymmetry fails at " << names(g, {(*w)[0], (*w)[1]}) << ";";
                if (auto w = v.transitive_violation)
                    std::cout << " transitivity fails at " << names(g, {(*w)[0], (*w)[1], (*w)[2]}) << ";";
                std::cout << "\n";
            }
            return all ? exit_holds : exit_fails;
        }
        if (dual_cmd->parsed()) {
            write_output(serialize_structure(dual(load(file_a))), out_path);
            return exit_holds;
        }
        if (intersect->parsed()) {
            std::vector<BiPoset> bps;
            std::vector<Diamond> ds;
            for (const auto& f : files) {
                bps.push_back(load(f));
                if (!(bps.back().ground() == bps.front().ground()))
                    throw UsageError(f + " declares different elements than " + files.front());
                ds.push_back(bps.back().diamond());
            }
            write_output(serialize_structure(BiPoset(bps.front().ground(), intersect_many(ds))), out_path);
            return exit_holds;
        }
        if (powerset->parsed()) {
            write_output(serialize_structure(powerset_biposet(k)), out_path);
            return exit_holds;
        }
        if (divisibility->parsed()) {
            write_output(serialize_structure(divisibility_biposet(k)), out_path);
            return exit_holds;
        }
        if (extremal->parsed()) {
            BiPoset bp = load_valid(file_a);
            ExtremalReport r = extremal_report(bp);
            const auto& g = bp.ground();
            std::cout << "r1-greatest (x): " << qualifiers(g, r.x_side) << "\n"
                      << "r2-greatest (y): " << qualifiers(g, r.y_side) << "\n"
                      << "maximal greatest: " << opt_label(g, r.g_max) << "\n"
                      << "minimal greatest: " << opt_label(g, r.g_min) << "\n"
                      << "r1-least (u): " << qualifiers(g, r.u_side) << "\n"
                      << "r2-least (v): " << qualifiers(g, r.v_side) << "\n"
                      << "maximal least: " << opt_label(g, r.l_max) << "\n"
                      << "minimal least: " << opt_label(g, r.l_min) << "\n"
                      << "bounded: " << (r.bounded ? "yes" : "no") << "\n";
            for (const auto& note : r.notes)
                std::cout << "note: " << note << "\n";
            return r.bounded ? exit_holds : exit_fails;
        }
        if (iso->parsed()) {
            BiPoset a = load_valid(file_a), b = load_valid(file_b);
            auto m = find_isomorphism(a, b);
            if (!m) {
                std::cout << "no isomorphism\n";
                return exit_fails;
            }
            write_output(serialize_mapping(*m, a.ground(), b.ground()), out_path);
            return exit_holds;
        }
        if (selfdual->parsed()) {
            BiPoset a = load_valid(file_a);
            auto m = self_dual_witness(a);
            if (!m) {
                std::cout << "not self dual\n";
                return exit_fails;
            }
            write_output(serialize_mapping(*m, a.ground(), a.ground()), out_path);
            return exit_holds;
        }
        if (gcheck->parsed()) {
            BiPoset p = load(file_a), q = load(file_b);
            GaloisPair pair = parse_galois_pair(read_file(file_c), p.ground(), q.ground());
            auto r = is_galois(pair, p, q, parse_mode(mode));
            if (r.holds) {
                std::cout << "Galois connection\n";
                return exit_holds;
            }
            std::cout << "not a Galois connection; fails at (a b) = (" << p.ground().label(r.witness->first) << " "
                      << q.ground().label(r.witness->second) << ")\n"
                      << serialize_galois_pair(pair, p.ground(), q.ground());
            return exit_fails;
        }
        if (gadj->parsed()) {
            BiPoset p = load_valid(file_a), q = load_valid(file_b);
            const bool right = side == "right";
            Mapping given = right ? parse_mapping(read_file(file_c), p.ground(), q.ground())
                                  : parse_mapping(read_file(file_c), q.ground(), p.ground());
            auto adj = find_adjoint(given, p, q, right ? AdjointSide::right : AdjointSide::left, parse_mode(mode));
            if (adj.empty()) {
                std::cout << "no adjoint\n";
                return exit_fails;
            }
            std::string text;
            for (std::size_t i = 0; i < adj.size(); ++i) {
                text += "# adjoint " + std::to_string(i) + "\n";
                text += right ? serialize_mapping(adj[i], q.ground(), p.ground())
                              : serialize_mapping(adj[i], p.ground(), q.ground());
            }
            write_output(text, out_path);
            return exit_holds;
        }
        if (enumerate->parsed()) {
            require_enumerable(n);
            if (!out_path.empty())
                fs::create_directories(out_path);
            std::size_t count = 0;
            std::string listing;
            enumerate_biposets(n, [&](std::uint64_t code, const Diamond& d) {
                char name[64];
                std::snprintf(name, sizeof name, "n%u_%06llx", n, static_cast<unsigned long long>(code));
                std::string text = serialize_structure(as_structure(d));
                if (out_path.empty())
                    listing += std::string("# ") + name + "\n" + text;
                else
                    write_output(text, (fs::path(out_path) / (std::string(name) + ".bpo")).string());
                ++count;
            });
            std::cout << listing << "# " << count << " structures on " << n << " elements\n";
            return exit_holds;
        }
        if (hunt->parsed()) {
            auto claim = parse_claim(claim_name_arg);
            if (!claim) {
                std::string known;
                for (ClaimId c : all_claims)
                    known += std::string(" ") + claim_name(c);
                throw UsageError("unknown claim '" + claim_name_arg + "'; known:" + known);
            }
            ClaimOptions opt;
            opt.n_max = n;
            if (*budget_opt)
                opt.budget = budget;
            opt.seed = seed;
            opt.workers = workers;
            Finding f = verify_claim(*claim, opt);
            std::cout << format_finding(f);
            if (!out_path.empty())
                write_witness_files(f, out_path);
            return f.verdict == Verdict::verified_at_scale ? exit_holds : exit_fails;
        }
        if (dot->parsed()) {
            write_output(emit_dot(load(file_a), parse_component(component)), out_path);
            return exit_holds;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
