// Command-line front end for the path-convexity toolkit. Talks to the core
// exclusively through the C API in pathconv.h.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathconv.h"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitSizeLimit = 4;
constexpr int kExitCheckFailed = 1;

struct CliError {
    int exit_code;
    std::string message;
};

[[noreturn]] void die(pathconv_status status) {
    const int code = status == PATHCONV_E_SIZE_LIMIT ? kExitSizeLimit : kExitInput;
    throw CliError{code, std::string(pathconv_last_error()) + " (" +
                             pathconv_status_name(status) + ")"};
}

void check(pathconv_status status) {
    if (status != PATHCONV_OK) die(status);
}

struct GraphDeleter { void operator()(pathconv_graph* g) const { pathconv_graph_free(g); } };
struct SpecDeleter { void operator()(pathconv_spec* s) const { pathconv_spec_free(s); } };
struct BoundsDeleter { void operator()(pathconv_bounds* b) const { pathconv_bounds_free(b); } };
struct IntervalDeleter {
    void operator()(pathconv_interval_result* r) const { pathconv_interval_result_free(r); }
};
struct HullDeleter { void operator()(pathconv_hull_trace* t) const { pathconv_hull_trace_free(t); } };
struct CertDeleter { void operator()(pathconv_certificate* c) const { pathconv_certificate_free(c); } };
struct SolverDeleter {
    void operator()(pathconv_solver_result* r) const { pathconv_solver_result_free(r); }
};

using GraphPtr = std::unique_ptr<pathconv_graph, GraphDeleter>;
using SpecPtr = std::unique_ptr<pathconv_spec, SpecDeleter>;
using BoundsPtr = std::unique_ptr<pathconv_bounds, BoundsDeleter>;
using IntervalPtr = std::unique_ptr<pathconv_interval_result, IntervalDeleter>;
using HullPtr = std::unique_ptr<pathconv_hull_trace, HullDeleter>;
using CertPtr = std::unique_ptr<pathconv_certificate, CertDeleter>;
using SolverPtr = std::unique_ptr<pathconv_solver_result, SolverDeleter>;

// Options shared by the graph-based subcommands.
struct CommonOptions {
    std::string graph_file;
    std::vector<std::string> spec_strings;
    std::vector<std::string> matrix_files;
    std::string s_list;
    int z = 0;
    long long bound = -1;
    bool json_output = false;
    bool generic = false;
    bool quiet = false;
    int cap = 0;
    unsigned seed = 1;
    std::string command_echo;
};

std::vector<int> parse_vertex_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) throw CliError{kExitInput, "-S: empty entry in vertex list '" + text + "'"};
        try {
            std::size_t pos = 0;
            const int v = std::stoi(token, &pos);
            if (pos != token.size()) throw std::invalid_argument(token);
            out.push_back(v);
        } catch (const std::exception&) {
            throw CliError{kExitInput, "-S: '" + token + "' is not a vertex number"};
        }
    }
    return out;
}

GraphPtr load_graph(const CommonOptions& opts) {
    if (opts.graph_file.empty()) throw CliError{kExitUsage, "missing required flag -g GRAPH_FILE"};
    pathconv_graph* g = nullptr;
    check(pathconv_graph_read(opts.graph_file.c_str(), &g));
    return GraphPtr(g);
}

struct SpecHandle {
    SpecPtr spec;
    json echo;  // what the payload reports: the spec string, or matrix JSON
};

std::vector<SpecHandle> load_specs(const CommonOptions& opts, bool allow_many) {
    std::vector<SpecHandle> out;
    for (const auto& text : opts.spec_strings) {
        pathconv_spec* s = nullptr;
        check(pathconv_spec_parse(text.c_str(), &s));
        out.push_back({SpecPtr(s), json(text)});
    }
    for (const auto& file : opts.matrix_files) {
        pathconv_spec* s = nullptr;
        check(pathconv_spec_load_matrices(file.c_str(), &s));
        SpecHandle handle{SpecPtr(s), json()};
        char* matrices = nullptr;
        check(pathconv_spec_matrices_json(handle.spec.get(), &matrices));
        handle.echo = json::parse(matrices);
        pathconv_string_free(matrices);
        out.push_back(std::move(handle));
    }
    if (out.empty())
        throw CliError{kExitUsage, "a convexity spec is required (--spec STRING or --matrices FILE)"};
    if (!allow_many && out.size() > 1)
        throw CliError{kExitUsage, "this subcommand takes exactly one --spec/--matrices"};
    return out;
}

BoundsPtr resolve(const GraphPtr& g, const SpecHandle& spec, const CommonOptions& opts) {
    pathconv_bounds* rb = nullptr;
    check(pathconv_resolve_bounds(spec.spec.get(), g.get(), opts.cap, &rb));
    return BoundsPtr(rb);
}

json graph_json(const GraphPtr& g) {
    json edges = json::array();
    const int m = pathconv_graph_m(g.get());
    const int* flat = pathconv_graph_edges(g.get());
    for (int t = 0; t < m; ++t) edges.push_back({flat[2 * t], flat[2 * t + 1]});
    return json{{"n", pathconv_graph_n(g.get())}, {"edges", edges}};
}

json set_json(const int* data, int count) {
    json out = json::array();
    for (int t = 0; t < count; ++t) out.push_back(data[t]);
    return out;
}

json witnesses_json(const IntervalPtr& result) {
    json out = json::object();
    const int count = pathconv_interval_witness_count(result.get());
    for (int t = 0; t < count; ++t) {
        int z = 0, u = 0, v = 0, len = 0;
        const int* path = nullptr;
        check(pathconv_interval_witness(result.get(), t, &z, &u, &v, &path, &len));
        out[std::to_string(z)] = set_json(path, len);
    }
    return out;
}

// The machine-readable payload has a fixed shape; anything volatile (wall
// time, file names) stays out of it.
struct Report {
    std::string problem;
    json graph = nullptr;
    json spec = nullptr;
    json result = json::object();
    json witnesses = json::object();
    std::vector<std::string> human_lines;

    json payload() const {
        return json{{"problem", problem},
                    {"graph", graph},
                    {"spec", spec},
                    {"result", result},
                    {"witnesses", witnesses}};
    }
};

int emit(const Report& report, const CommonOptions& opts,
         std::chrono::steady_clock::time_point started, int exit_code = 0) {
    if (opts.json_output) {
        std::cout << report.payload().dump() << "\n";
        return exit_code;
    }
    if (!opts.quiet) {
        if (!opts.command_echo.empty()) std::cout << "command: " << opts.command_echo << "\n";
        for (const auto& line : report.human_lines) std::cout << line << "\n";
        const auto elapsed =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
        char buf[64];
        std::snprintf(buf, sizeof buf, "time: %.2f ms", elapsed.count());
        std::cout << buf << "\n";
    }
    return exit_code;
}

std::string set_text(const json& arr) {
    std::string out = "{";
    for (std::size_t t = 0; t < arr.size(); ++t) {
        if (t) out += ", ";
        out += std::to_string(arr[t].get<int>());
    }
    return out + "}";
}

std::string path_text(const int* path, int len) {
    std::string out;
    for (int t = 0; t < len; ++t) {
        if (t) out += "-";
        out += std::to_string(path[t]);
    }
    return out;
}

std::string spec_line(const SpecHandle& spec) {
    if (spec.echo.is_string()) return "spec: " + spec.echo.get<std::string>();
    return "spec: matrices (n=" + std::to_string(spec.echo.value("n", 0)) + ")";
}

std::string graph_line(const CommonOptions& opts, const GraphPtr& g) {
    char digest[32];
    std::snprintf(digest, sizeof digest, "%016llx", pathconv_graph_digest(g.get()));
    return "graph: " + opts.graph_file + " (n=" + std::to_string(pathconv_graph_n(g.get())) +
           ", m=" + std::to_string(pathconv_graph_m(g.get())) + ", fnv1a=" + digest + ")";
}

// ---- subcommand bodies ---------------------------------------------------

int run_interval(const CommonOptions& opts, std::chrono::steady_clock::time_point started) {
    auto g = load_graph(opts);
    auto specs = load_specs(opts, false);
    auto rb = resolve(g, specs[0], opts);
    auto s = parse_vertex_list(opts.s_list);

    pathconv_interval_result* raw = nullptr;
    check(pathconv_interval(g.get(), rb.get(), s.data(), static_cast<int>(s.size()),
                            opts.generic ? 1 : 0, &raw));
    IntervalPtr result(raw);

    Report report;
    report.problem = "interval";
    report.graph = graph_json(g);
    report.spec = specs[0].echo;
    const json members =
        set_json(pathconv_interval_members(result.get()), pathconv_interval_member_count(result.get()));
    json added = json::array();
    for (const auto& member : members)
        if (std::find(s.begin(), s.end(), member.get<int>()) == s.end()) added.push_back(member);
    report.result = json{{"members", members}, {"added", added}};
    report.witnesses = witnesses_json(result);

    report.human_lines.push_back(graph_line(opts, g));
    report.human_lines.push_back(spec_line(specs[0]));
    report.human_lines.push_back("I(S) = " + set_text(members));
    for (int t = 0; t < pathconv_interval_witness_count(result.get()); ++t) {
        int z = 0, u = 0, v = 0, len = 0;
        const int* path = nullptr;
        check(pathconv_interval_witness(result.get(), t, &z, &u, &v, &path, &len));
        report.human_lines.push_back("  witness " + std::to_string(z) + ": " + path_text(path, len) +
                                     " (pair " + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    return emit(report, opts, started);
}

int run_member(const CommonOptions& opts, std::chrono::steady_clock::time_point started,
               bool hull_version) {
    auto g = load_graph(opts);
    auto specs = load_specs(opts, false);
    auto rb = resolve(g, specs[0], opts);
    auto s = parse_vertex_list(opts.s_list);
    if (opts.z == 0) throw CliError{kExitUsage, "missing required flag -z VERTEX"};

    Report report;
    report.graph = graph_json(g);
    report.spec = specs[0].echo;
    int member = 0;

    if (hull_version) {
        report.problem = "hullmember";
        check(pathconv_hull_contains(g.get(), rb.get(), s.data(), static_cast<int>(s.size()),
                                     opts.z, &member));
        report.result = json{{"member", member != 0}, {"z", opts.z}};
        report.human_lines.push_back(graph_line(opts, g));
        report.human_lines.push_back(spec_line(specs[0]));
        report.human_lines.push_back(std::string(member ? "yes" : "no") + ": vertex " +
                                     std::to_string(opts.z) + (member ? " lies in" : " is outside") +
                                     " H(S)");
    } else {
        report.problem = "member";
        std::vector<int> path_buf(pathconv_graph_n(g.get()) + 1);
        int u = 0, v = 0, len = 0;
        check(pathconv_interval_contains(g.get(), rb.get(), s.data(), static_cast<int>(s.size()),
                                         opts.z, &member, &u, &v, path_buf.data(),
                                         static_cast<int>(path_buf.size()), &len));
        const bool in_s = std::find(s.begin(), s.end(), opts.z) != s.end();
        report.result = json{{"member", member != 0}, {"z", opts.z}, {"in_s", in_s}};
        if (len > 0) report.witnesses[std::to_string(opts.z)] = set_json(path_buf.data(), len);
        report.human_lines.push_back(graph_line(opts, g));
        report.human_lines.push_back(spec_line(specs[0]));
        report.human_lines.push_back(std::string(member ? "yes" : "no") + ": vertex " +
                                     std::to_string(opts.z) + (member ? " lies in" : " is outside") +
                                     " I(S)");
        if (len > 0)
            report.human_lines.push_back("  witness: " + path_text(path_buf.data(), len) + " (pair " +
                                         std::to_string(u) + "," + std::to_string(v) + ")");
    }

    const int code = opts.quiet ? (member ? 0 : 1) : 0;
    return emit(report, opts, started, code);
}

int run_convex(const CommonOptions& opts, std::chrono::steady_clock::time_point started) {
    auto g = load_graph(opts);
    auto specs = load_specs(opts, false);
    auto rb = resolve(g, specs[0], opts);
    auto s = parse_vertex_list(opts.s_list);

    pathconv_certificate* raw = nullptr;
    check(pathconv_convex_test(g.get(), rb.get(), s.data(), static_cast<int>(s.size()),
                               opts.generic ? 1 : 0, &raw));
    CertPtr cert(raw);

    Report report;
    report.problem = "convex";
    report.graph = graph_json(g);
    report.spec = specs[0].echo;
    const bool convex = pathconv_certificate_is_convex(cert.get()) != 0;
    report.result = json{{"convex", convex}};
    report.human_lines.push_back(graph_line(opts, g));
    report.human_lines.push_back(spec_line(specs[0]));
    if (convex) {
        report.human_lines.push_back("convex: yes");
    } else {
        const json augmenting = set_json(pathconv_certificate_augmenting(cert.get()),
                                         pathconv_certificate_augmenting_count(cert.get()));
        report.result["augmenting"] = augmenting;
        int z = 0, u = 0, v = 0, len = 0;
        const int* path = nullptr;
        check(pathconv_certificate_witness(cert.get(), &z, &u, &v, &path, &len));
        report.witnesses[std::to_string(z)] = set_json(path, len);
        report.human_lines.push_back("convex: no");
        report.human_lines.push_back("  augmenting set I(S) = " + set_text(augmenting));
        report.human_lines.push_back("  witness " + std::to_string(z) + ": " + path_text(path, len) +
                                     " (pair " + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    return emit(report, opts, started);
}

int run_hull(const CommonOptions& opts, std::chrono::steady_clock::time_point started) {
    auto g = load_graph(opts);
    auto specs = load_specs(opts, false);
    auto rb = resolve(g, specs[0], opts);
    auto s = parse_vertex_list(opts.s_list);

    pathconv_hull_trace* raw = nullptr;
    check(pathconv_hull(g.get(), rb.get(), s.data(), static_cast<int>(s.size()),
                        opts.generic ? 1 : 0, &raw));
    HullPtr trace(raw);

    Report report;
    report.problem = "hull";
    report.graph = graph_json(g);
    report.spec = specs[0].echo;
    const int stages = pathconv_hull_stage_count(trace.get());
    json stages_json = json::array();
    for (int t = 0; t < stages; ++t)
        stages_json.push_back(
            set_json(pathconv_hull_stage(trace.get(), t), pathconv_hull_stage_size(trace.get(), t)));
    report.result = json{{"hull", stages_json.back()},
                         {"stages", stages_json},
                         {"iterations", stages - 1}};

    report.human_lines.push_back(graph_line(opts, g));
    report.human_lines.push_back(spec_line(specs[0]));
    report.human_lines.push_back("H(S) = " + set_text(stages_json.back()) + " after " +
                                 std::to_string(stages - 1) + " interval step(s)");
    for (int t = 0; t < stages; ++t)
        report.human_lines.push_back("  I^" + std::to_string(t) + "(S) = " +
                                     set_text(stages_json[t]));
    return emit(report, opts, started);
}

int run_solver(const CommonOptions& opts, std::chrono::steady_clock::time_point started,
               const std::string& which) {
    auto g = load_graph(opts);
    auto specs = load_specs(opts, false);
    auto rb = resolve(g, specs[0], opts);

    pathconv_solver_result* raw = nullptr;
    if (which == "cn")
        check(pathconv_convexity_number(g.get(), rb.get(), opts.cap, &raw));
    else if (which == "in")
        check(pathconv_interval_number(g.get(), rb.get(), opts.cap, &raw));
    else
        check(pathconv_hull_number(g.get(), rb.get(), opts.cap, &raw));
    SolverPtr result(raw);

    static const std::string names[3] = {"convexity number c(G)", "interval number i(G)",
                                         "hull number h(G)"};
    const std::string& name = which == "cn" ? names[0] : which == "in" ? names[1] : names[2];

    Report report;
    report.problem = which;
    report.graph = graph_json(g);
    report.spec = specs[0].echo;
    const int value = pathconv_solver_value(result.get());
    report.result = json{
        {"value", value},
        {"optimal_set", set_json(pathconv_solver_set(result.get()),
                                 pathconv_solver_set_size(result.get()))},
        {"explored", pathconv_solver_explored(result.get())},
        {"capped", pathconv_solver_capped(result.get()) != 0},
    };
    const std::string note = pathconv_solver_note(result.get());
    if (!note.empty()) report.result["note"] = note;
    if (opts.bound >= 0) {
        const bool yes = which == "cn" ? value >= opts.bound : value <= opts.bound;
        report.result["bound"] = opts.bound;
        report.result["decision"] = yes;
    }

    report.human_lines.push_back(graph_line(opts, g));
    report.human_lines.push_back(spec_line(specs[0]));
    report.human_lines.push_back(name + " = " + std::to_string(value) + " via " +
                                 set_text(report.result["optimal_set"]) + " (" +
                                 std::to_string(pathconv_solver_explored(result.get())) +
                                 " candidate sets)");
    if (!note.empty()) report.human_lines.push_back("note: " + note);
    if (opts.bound >= 0)
        report.human_lines.push_back(std::string("decision vs r=") + std::to_string(opts.bound) +
                                     ": " + (report.result["decision"].get<bool>() ? "yes" : "no"));
    return emit(report, opts, started);
}

int run_compare(const CommonOptions& opts, std::chrono::steady_clock::time_point started) {
    auto g = load_graph(opts);
    auto specs = load_specs(opts, true);
    auto s = parse_vertex_list(opts.s_list);

    Report report;
    report.problem = "compare";
    report.graph = graph_json(g);
    json spec_list = json::array();
    json rows = json::array();

    report.human_lines.push_back(graph_line(opts, g));
    for (const auto& spec : specs) {
        auto rb = resolve(g, spec, opts);

        pathconv_interval_result* iraw = nullptr;
        check(pathconv_interval(g.get(), rb.get(), s.data(), static_cast<int>(s.size()),
                                opts.generic ? 1 : 0, &iraw));
        IntervalPtr ires(iraw);

        pathconv_hull_trace* hraw = nullptr;
        check(pathconv_hull(g.get(), rb.get(), s.data(), static_cast<int>(s.size()),
                            opts.generic ? 1 : 0, &hraw));
        HullPtr hres(hraw);

        pathconv_certificate* craw = nullptr;
        check(pathconv_convex_test(g.get(), rb.get(), s.data(), static_cast<int>(s.size()),
                                   opts.generic ? 1 : 0, &craw));
        CertPtr cres(craw);

        const json members = set_json(pathconv_interval_members(ires.get()),
                                      pathconv_interval_member_count(ires.get()));
        const int last = pathconv_hull_stage_count(hres.get()) - 1;
        const json hull_set =
            set_json(pathconv_hull_stage(hres.get(), last), pathconv_hull_stage_size(hres.get(), last));
        const bool convex = pathconv_certificate_is_convex(cres.get()) != 0;

        spec_list.push_back(spec.echo);
        rows.push_back(json{{"spec", spec.echo},
                            {"interval", members},
                            {"hull", hull_set},
                            {"convex", convex}});
        const std::string label =
            spec.echo.is_string() ? spec.echo.get<std::string>() : "matrices";
        report.human_lines.push_back(label + ": I(S) = " + set_text(members) +
                                     "; H(S) = " + set_text(hull_set) +
                                     "; convex: " + (convex ? "yes" : "no"));
    }
    report.spec = spec_list;
    report.result = rows;
    return emit(report, opts, started);
}

int run_selfcheck(const CommonOptions& opts, std::chrono::steady_clock::time_point started) {
    char* text = nullptr;
    int checks = 0, failures = 0;
    check(pathconv_selfcheck(opts.seed, opts.cap, &text, &checks, &failures));
    std::string report_text = text ? text : "";
    pathconv_string_free(text);

    Report report;
    report.problem = "selfcheck";
    json lines = json::array();
    std::istringstream in(report_text);
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
        report.human_lines.push_back(line);
    }
    report.result = json{{"checks", checks}, {"failures", failures}, {"report", lines},
                         {"seed", opts.seed}};
    return emit(report, opts, started, failures == 0 ? 0 : kExitCheckFailed);
}

}  // namespace

int main(int argc, char** argv) {
    const auto started = std::chrono::steady_clock::now();

    CLI::App app{"pathconv - path-convexity toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("pathconv ") + pathconv_version());

    CommonOptions opts;
    std::string active;

    auto add_common = [&](CLI::App* sub, bool graph_based) {
        if (graph_based) {
            sub->add_option("-g,--graph", opts.graph_file, "graph file (edge-list or DIMACS-like)");
            sub->add_option("--spec", opts.spec_strings,
                            "convexity spec (preset:<name> or abcd:<a>,<b>,<c>,<d>)");
            sub->add_option("--matrices", opts.matrix_files, "JSON file with length matrices A,B,C,D");
        }
        sub->add_flag("--json", opts.json_output, "emit the machine-readable JSON payload");
        sub->add_option("--cap", opts.cap, "exhaustive-search size cap (solver/oracle/longest path)");
        sub->callback([&, sub] { active = sub->get_name(); });
        return sub;
    };

    auto* c_interval = add_common(app.add_subcommand("interval", "compute I(S) with witnesses"), true);
    c_interval->add_option("-S,--set", opts.s_list, "comma-separated vertex list");
    c_interval->add_flag("--generic", opts.generic, "force generic path enumeration");

    auto* c_member = add_common(app.add_subcommand("member", "does z belong to I(S)?"), true);
    c_member->add_option("-S,--set", opts.s_list, "comma-separated vertex list");
    c_member->add_option("-z", opts.z, "query vertex");
    c_member->add_flag("-q,--quiet", opts.quiet, "no output; exit 0 = yes, 1 = no");

    auto* c_convex = add_common(app.add_subcommand("convex", "is S convex?"), true);
    c_convex->add_option("-S,--set", opts.s_list, "comma-separated vertex list");
    c_convex->add_flag("--generic", opts.generic, "force generic path enumeration");

    auto* c_hullmember = add_common(app.add_subcommand("hullmember", "does z belong to H(S)?"), true);
    c_hullmember->add_option("-S,--set", opts.s_list, "comma-separated vertex list");
    c_hullmember->add_option("-z", opts.z, "query vertex");
    c_hullmember->add_flag("-q,--quiet", opts.quiet, "no output; exit 0 = yes, 1 = no");

    auto* c_hull = add_common(app.add_subcommand("hull", "compute H(S) with its stage trace"), true);
    c_hull->add_option("-S,--set", opts.s_list, "comma-separated vertex list");
    c_hull->add_flag("--generic", opts.generic, "force generic path enumeration");

    for (const char* name : {"cn", "in", "hn"}) {
        const char* blurb = name[0] == 'c'   ? "convexity number c(G)"
                            : name[0] == 'i' ? "interval number i(G)"
                                             : "hull number h(G)";
        auto* sub = add_common(app.add_subcommand(name, blurb), true);
        sub->add_option("--bound", opts.bound, "also answer the decision version against r");
    }

    auto* c_compare =
        add_common(app.add_subcommand("compare", "run several specs over one (graph, S)"), true);
    c_compare->add_option("-S,--set", opts.s_list, "comma-separated vertex list");
    c_compare->add_flag("--generic", opts.generic, "force generic path enumeration");

    auto* c_selfcheck =
        add_common(app.add_subcommand("selfcheck", "run the built-in differential suite"), false);
    c_selfcheck->add_option("--seed", opts.seed, "seed for the randomized suite");

    for (int t = 0; t < argc; ++t) {
        if (t) opts.command_echo += ' ';
        opts.command_echo += argv[t];
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (active == "interval") return run_interval(opts, started);
        if (active == "member") return run_member(opts, started, false);
        if (active == "convex") return run_convex(opts, started);
        if (active == "hullmember") return run_member(opts, started, true);
        if (active == "hull") return run_hull(opts, started);
        if (active == "cn" || active == "in" || active == "hn")
            return run_solver(opts, started, active);
        if (active == "compare") return run_compare(opts, started);
        if (active == "selfcheck") return run_selfcheck(opts, started);
        std::cerr << "error: unknown subcommand\n";
        return kExitUsage;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
