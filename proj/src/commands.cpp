#include "ramseg/commands.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramseg/arrangement_io.hpp"
#include "ramseg/catalog.hpp"
#include "ramseg/composer.hpp"
#include "ramseg/exponent.hpp"
#include "ramseg/export.hpp"

namespace ramseg {

namespace {

std::string set_str(const std::vector<std::size_t>& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
    return s + "}";
}

// Clique number by subset enumeration; only used for small cross-checks.
std::size_t exhaustive_clique_number(const LabeledGraph& g) {
    const std::size_t n = g.vertex_count();
    std::size_t best = 0;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size <= best) continue;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            if (mask >> i & 1U)
                for (std::size_t j = i + 1; j < n && ok; ++j)
                    if ((mask >> j & 1U) && !g.has_edge(i + 1, j + 1)) ok = false;
        if (ok) best = size;
    }
    return best;
}

struct Check {
    VerificationReport report;

    void expect(bool ok, const std::string& detail) {
        report.details.push_back(std::string(ok ? "ok   " : "FAIL ") + detail);
        if (!ok) report.passed = false;
    }
    void note(const std::string& detail) { report.details.push_back("     " + detail); }
};

VerificationReport timed(const std::string& name, const std::function<void(Check&)>& body) {
    Check c;
    c.report.check = name;
    c.report.passed = true;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("error: ") + e.what());
    }
    c.report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return c.report;
}

void check_table(Check& c, const SymbolicArrangement& arr, const LabeledGraph& expected, const std::string& label) {
    const LabeledGraph g = intersection_graph(arr);
    c.expect(g == expected, "symbolic intersection graph (" + std::to_string(g.edge_count()) +
                                " edges) equals " + label + " (" + std::to_string(expected.edge_count()) + " edges)");
    for (std::size_t i = 1; i <= g.vertex_count(); ++i)
        for (std::size_t j = i + 1; j <= g.vertex_count(); ++j)
            if (g.has_edge(i, j) != expected.has_edge(i, j))
                c.note("mismatch at pair {" + std::to_string(i) + "," + std::to_string(j) + "}");
    const Rational eps = find_valid_epsilon(arr);
    const NumericArrangement inst = instantiate(arr, eps);
    c.expect(intersection_graph(inst) == g, "numeric graph at eps = " + eps.str() + " matches the symbolic one");
}

VerificationReport verify_ma() {
    return timed("ma", [](Check& c) { check_table(c, build_ma(), cayley13(), "Cay(Z13;1,5)"); });
}

VerificationReport verify_mb() {
    return timed("mb", [](Check& c) { check_table(c, build_mb(), complement(cayley13()), "complement of Cay(Z13;1,5)"); });
}

VerificationReport verify_cayley_profile() {
    return timed("lemma1", [](Check& c) {
        const LabeledGraph cay = cayley13();
        const VertexSet clique = max_clique(cay);
        const VertexSet indep = max_independent_set(cay);
        c.expect(clique.size == 2 && is_clique(cay, clique.vertices) && clique.vertices.size() == 2,
                 "clique number " + std::to_string(clique.size) + ", witness " + set_str(clique.vertices));
        c.expect(indep.size == 4 && is_independent_set(cay, indep.vertices) && indep.vertices.size() == 4,
                 "independence number " + std::to_string(indep.size) + ", witness " + set_str(indep.vertices));
        const std::size_t bf_clique = exhaustive_clique_number(cay);
        const std::size_t bf_indep = exhaustive_clique_number(complement(cay));
        c.expect(bf_clique == 2 && bf_indep == 4, "exhaustive enumeration over 8192 subsets: omega = " +
                                                      std::to_string(bf_clique) + ", alpha = " + std::to_string(bf_indep));
    });
}

VerificationReport verify_m0() {
    return timed("m0", [](Check& c) {
        const M0Result m0 = build_m0();
        c.note("host eps = " + m0.host_epsilon.str() + ", guest radius = " + m0.guest_radius.str());
        c.expect(m0.arrangement.size() == 169, std::to_string(m0.arrangement.size()) + " segments");
        const LabeledGraph recomputed = intersection_graph(m0.arrangement);
        const LabeledGraph expected = lex_product(cayley13(), complement(cayley13()));
        c.expect(recomputed == expected, "exact intersection graph equals Cay[complement(Cay)]");
        const VertexSet clique = max_clique(recomputed);
        const VertexSet indep = max_independent_set(recomputed);
        c.expect(clique.size == 8 && is_clique(recomputed, clique.vertices),
                 "pairwise crossing: " + std::to_string(clique.size) + ", witness " + set_str(clique.vertices));
        c.expect(indep.size == 8 && is_independent_set(recomputed, indep.vertices),
                 "pairwise disjoint: " + std::to_string(indep.size) + ", witness " + set_str(indep.vertices));
    });
}

VerificationReport verify_exponent() {
    return timed("exponent", [](Check& c) {
        struct Case {
            unsigned long n0, k0;
            Rational bound;
        };
        for (const auto& [n0, k0, bound] : {Case{169, 8, Rational(24669, 10000)}, Case{5, 2, Rational(23219, 10000)},
                                            Case{27, 4, Rational(23774, 10000)}}) {
            const ExponentEnclosure enc = lower_bound_exponent(n0, k0);
            std::ostringstream os;
            os.precision(8);
            os << "log " << n0 << " / log " << k0 << " = " << enc.value << " in (" << enc.lower << ", " << enc.upper
               << "); certified > " << bound.to_double();
            c.expect(exponent_exceeds(n0, k0, bound) && enc.lower < enc.upper, os.str());
        }
        c.expect(exponent_below(169, 8, Rational(2467, 1000)), "log 169 / log 8 < 2.467 certified");
    });
}

void print_reports(std::ostream& out, const std::vector<VerificationReport>& reports, bool as_json) {
    if (as_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports)
            arr.push_back({{"check", r.check}, {"status", r.passed ? "pass" : "fail"}, {"details", r.details},
                           {"millis", r.millis}});
        out << arr.dump(2) << "\n";
        return;
    }
    for (const auto& r : reports) {
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.1f", r.millis);
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.check << " (" << ms << " ms)\n";
        for (const auto& d : r.details) out << "    " << d << "\n";
    }
}

// Writes through `write` to `path`, or to `out` when path is empty or "-".
void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& write) {
    if (path.empty() || path == "-") {
        write(out);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
    write(file);
}

std::optional<Rational> parse_epsilon(const std::string& text) {
    if (text.empty()) return std::nullopt;
    Rational eps = Rational::parse(text);
    if (eps.sign() <= 0) throw ArithmeticError("--epsilon must be positive");
    return eps;
}

NumericArrangement table_at(const SymbolicArrangement& arr, const std::optional<Rational>& eps) {
    return instantiate(arr, eps ? *eps : find_valid_epsilon(arr));
}

struct Options {
    std::string target;
    bool json = false;
    unsigned levels = 0;
    std::string mode = "graph";
    std::string out_path;
    std::size_t cap = 0;
    std::string input;
    std::string epsilon;
    std::string format;
    bool draw_stab = false;
};

int cmd_verify(const Options& o, std::ostream& out) {
    const auto reports = run_verification(o.target);
    print_reports(out, reports, o.json);
    for (const auto& r : reports)
        if (!r.passed) return kExitNegative;
    return kExitOk;
}

int cmd_compose(const Options& o, std::ostream& out) {
    const LabeledGraph cay = cayley13();
    if (o.mode == "graph") {
        const LabeledGraph g0 = lex_product(cay, complement(cay));
        const LabeledGraph g = iterate_graph(g0, o.levels, o.cap ? o.cap : 1'000'000);
        const std::string path = o.out_path.empty() ? "compose-L" + std::to_string(o.levels) + ".dot" : o.out_path;
        emit(path, out, [&](std::ostream& os) { write_dot(os, g, "M" + std::to_string(o.levels)); });
        RamseyProfile p;
        std::string how = "solved";
        if (g.vertex_count() <= 10'000) {
            p = ramsey_profile(g);
        } else {
            const RamseyProfile base = ramsey_profile(g0);
            p = {g.vertex_count(), 1, 1};
            for (unsigned i = 0; i <= o.levels; ++i) {
                p.k *= base.k;
                p.l *= base.l;
            }
            how = "structural (lexicographic product identity)";
        }
        out << "level " << o.levels << ": n = " << p.n << ", k = " << p.k << ", l = " << p.l << " [" << how
            << "]\n";
        if (path != "-") out << "wrote " << path << "\n";
        return kExitOk;
    }
    const NumericArrangement arr = compose_geometry(o.levels, o.cap ? o.cap : 28'561);
    const std::string path = o.out_path.empty() ? "compose-L" + std::to_string(o.levels) + ".json" : o.out_path;
    emit(path, out, [&](std::ostream& os) { os << arrangement_to_json(arr).dump(2) << "\n"; });
    const RamseyProfile p = ramsey_profile(intersection_graph(arr));
    out << "level " << o.levels << ": n = " << p.n << ", k = " << p.k << ", l = " << p.l << " [solved]\n";
    if (path != "-") out << "wrote " << path << "\n";
    return kExitOk;
}

int cmd_stab(const Options& o, std::ostream& out, std::ostream& err) {
    std::ifstream in(o.input, std::ios::binary);
    if (!in) {
        err << "error: cannot read '" << o.input << "'\n";
        return kExitUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    NumericArrangement arr;
    try {
        arr = parse_arrangement(buf.str()).numeric(parse_epsilon(o.epsilon));
    } catch (const std::exception& e) {
        err << "error: " << o.input << ": " << e.what() << "\n";
        return kExitUsage;
    }
    const auto line = find_stabbing_line(arr);
    if (!line) {
        out << "none\n";
        return kExitNegative;
    }
    out << "line: a = " << line->coeffs.a << ", b = " << line->coeffs.b << ", c = " << line->coeffs.c << "\n";
    return kExitOk;
}

int cmd_export(const Options& o, std::ostream& out, std::ostream& err) {
    const auto eps = parse_epsilon(o.epsilon);
    const bool is_table = o.target == "ma" || o.target == "mb";
    const bool is_graph = o.target == "cay" || o.target == "cay-complement";
    if (!is_table && !is_graph && o.target != "m0") {
        err << "error: unknown export target '" << o.target << "' (ma, mb, m0, cay, cay-complement)\n";
        return kExitUsage;
    }
    if (is_graph && o.format != "dot") {
        err << "error: target '" << o.target << "' is a graph; only --format dot is supported\n";
        return kExitUsage;
    }

    if (o.format == "dot") {
        LabeledGraph g;
        if (o.target == "cay") g = cayley13();
        else if (o.target == "cay-complement") g = complement(cayley13());
        else if (o.target == "m0") g = build_m0().graph;
        else g = intersection_graph(catalog_entry(o.target).arrangement);
        emit(o.out_path, out, [&](std::ostream& os) { write_dot(os, g, o.target == "cay-complement" ? "cay_complement" : o.target); });
        return kExitOk;
    }

    NumericArrangement arr;
    std::optional<Rational> parameter = eps;
    if (o.target == "m0") {
        M0Result m0 = build_m0();
        arr = std::move(m0.arrangement);
        parameter = m0.host_epsilon;
    } else if (o.format == "json" && !eps) {
        const auto doc = arrangement_to_json(catalog_entry(o.target).arrangement);
        emit(o.out_path, out, [&](std::ostream& os) { os << doc.dump(2) << "\n"; });
        return kExitOk;
    } else {
        const SymbolicArrangement& sym = catalog_entry(o.target).arrangement;
        parameter = eps ? *eps : find_valid_epsilon(sym);
        arr = table_at(sym, parameter);
    }

    if (o.format == "json") {
        emit(o.out_path, out, [&](std::ostream& os) { os << arrangement_to_json(arr, parameter).dump(2) << "\n"; });
        return kExitOk;
    }
    std::optional<StabLine> line;
    if (o.draw_stab) line = find_stabbing_line(arr);
    const std::string title = o.target + " at eps = " + (parameter ? parameter->str() : std::string("?"));
    emit(o.out_path, out, [&](std::ostream& os) { write_svg(os, arr, line, title); });
    return kExitOk;
}

}  // namespace

std::vector<VerificationReport> run_verification(const std::string& target) {
    if (target == "ma") return {verify_ma()};
    if (target == "mb") return {verify_mb()};
    if (target == "lemma1") return {verify_cayley_profile()};
    if (target == "m0") return {verify_m0()};
    if (target == "exponent") return {verify_exponent()};
    if (target == "all") return {verify_ma(), verify_mb(), verify_cayley_profile(), verify_m0(), verify_exponent()};
    throw std::invalid_argument("unknown verification target '" + target + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact construction and verification of Ramsey-type segment arrangements", "ramseg"};
    app.require_subcommand(1);
    Options o;

    auto* verify = app.add_subcommand("verify", "Run verification checks");
    verify->add_option("target", o.target, "ma | mb | lemma1 | m0 | exponent | all")->required();
    verify->add_flag("--json", o.json, "Machine-readable report");

    auto* compose = app.add_subcommand("compose", "Iterate the recursive construction");
    compose->add_option("--levels", o.levels, "Recursion depth (0 = M0)");
    compose->add_option("--mode", o.mode, "graph | geometry")->check(CLI::IsMember({"graph", "geometry"}));
    compose->add_option("--out", o.out_path, "Output file ('-' for stdout)");
    compose->add_option("--cap", o.cap, "Vertex (graph) or segment (geometry) cap");

    auto* stab = app.add_subcommand("stab", "Find a line meeting every segment of an arrangement file");
    stab->add_option("input", o.input, "Arrangement JSON file")->required();
    stab->add_option("--epsilon", o.epsilon, "Instantiate a symbolic file at this eps");

    auto* exp = app.add_subcommand("export", "Export catalog arrangements and graphs");
    exp->add_option("target", o.target, "ma | mb | m0 | cay | cay-complement")->required();
    exp->add_option("--format", o.format, "svg | dot | json")->required()->check(CLI::IsMember({"svg", "dot", "json"}));
    exp->add_option("--epsilon", o.epsilon, "Instantiation parameter for ma / mb");
    exp->add_option("--out", o.out_path, "Output file (default stdout)");
    exp->add_flag("--stab", o.draw_stab, "Draw a stabbing line in SVG output");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kExitUsage;
    }

    try {
        if (*verify) {
            if (o.target != "ma" && o.target != "mb" && o.target != "lemma1" && o.target != "m0" &&
                o.target != "exponent" && o.target != "all") {
                err << "error: unknown verification target '" << o.target << "'\n";
                return kExitUsage;
            }
            return cmd_verify(o, out);
        }
        if (*compose) return cmd_compose(o, out);
        if (*stab) return cmd_stab(o, out, err);
        if (*exp) return cmd_export(o, out, err);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const ArithmeticError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitNegative;
    }
    return kExitUsage;
}

}  // namespace ramseg
