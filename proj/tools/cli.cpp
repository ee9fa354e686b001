#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vertex_energy.h"

namespace vel::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1.0";
constexpr const char* kEigenTolEnv = "VEL_EIG_TOL";

struct GraphDeleter {
    void operator()(vel_graph* g) const { vel_graph_free(g); }
};
struct ReportSetDeleter {
    void operator()(vel_report_set* s) const { vel_report_set_free(s); }
};
using GraphHandle = std::unique_ptr<vel_graph, GraphDeleter>;
using ReportSetHandle = std::unique_ptr<vel_report_set, ReportSetDeleter>;

/// Input or usage problem; always maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string api_error(vel_status status) {
    std::string message = vel_last_error();
    return message.empty() ? vel_status_string(status) : message;
}

void check(vel_status status) {
    if (status != VEL_OK) throw UsageError(api_error(status));
}

// Every emitted float goes through this: 15 significant digits, -0 folded to 0.
std::string format_number(double x) {
    if (x == 0.0) return "0";
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

json json_number(double x) {
    if (!std::isfinite(x)) return nullptr;
    return std::strtod(format_number(x).c_str(), nullptr);
}

json json_numbers(const std::vector<double>& xs) {
    json arr = json::array();
    for (double x : xs) arr.push_back(json_number(x));
    return arr;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

json envelope(const std::string& command, json inputs, json results) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["command"] = command;
    out["inputs"] = std::move(inputs);
    out["results"] = std::move(results);
    return out;
}

double eigen_tolerance() {
    const char* raw = std::getenv(kEigenTolEnv);
    if (raw == nullptr || *raw == '\0') return vel_verify_options_default().eigen_tol;
    char* end = nullptr;
    const double tol = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !(tol > 0.0) || !std::isfinite(tol)) {
        throw UsageError(std::string(kEigenTolEnv) + " must be a positive number, got '" + raw + "'");
    }
    return tol;
}

std::string read_source(const std::string& source, std::istream& in) {
    std::ostringstream buf;
    if (source == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(source, std::ios::binary);
    if (!file) throw UsageError("cannot open '" + source + "'");
    buf << file.rdbuf();
    return buf.str();
}

std::string source_name(const std::string& source) { return source == "-" ? "<stdin>" : source; }

GraphHandle load_graph(const std::string& source, const std::string& format, std::istream& in) {
    const std::string text = read_source(source, in);
    vel_graph* raw = nullptr;
    if (format == "edgelist") {
        const vel_status status = vel_graph_parse_edge_list(text.data(), text.size(), &raw);
        if (status != VEL_OK) throw UsageError(source_name(source) + ": " + api_error(status));
        return GraphHandle(raw);
    }

    // graph6: the first non-blank line holds the graph.
    std::size_t line_no = 0;
    std::size_t start = 0;
    std::string_view line;
    const std::string_view view(text);
    while (start <= view.size()) {
        std::size_t stop = view.find('\n', start);
        if (stop == std::string_view::npos) stop = view.size();
        ++line_no;
        line = view.substr(start, stop - start);
        start = stop + 1;
        if (line.find_first_not_of(" \t\r") != std::string_view::npos) break;
        line = {};
    }
    if (line.empty()) throw UsageError(source_name(source) + ": no graph6 data");
    const vel_status status = vel_graph_parse_graph6(line.data(), line.size(), &raw);
    if (status != VEL_OK) {
        throw UsageError(source_name(source) + ":" + std::to_string(line_no) + ": " + api_error(status));
    }
    return GraphHandle(raw);
}

std::string encode_graph(const vel_graph* g, const std::string& emit) {
    std::size_t length = 0;
    auto encoder = emit == "graph6" ? vel_graph_to_graph6 : vel_graph_to_edge_list;
    encoder(g, nullptr, 0, &length);
    std::string out(length + 1, '\0');
    check(encoder(g, out.data(), out.size(), &length));
    out.resize(length);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> graph_edges(const vel_graph* g) {
    const std::size_t count = vel_graph_edge_count(g);
    std::vector<std::size_t> flat(2 * count);
    check(vel_graph_edges(g, flat.data(), count));
    std::vector<std::pair<std::size_t, std::size_t>> edges(count);
    for (std::size_t k = 0; k < count; ++k) edges[k] = {flat[2 * k], flat[2 * k + 1]};
    return edges;
}

// ---------------------------------------------------------------- energy

struct EnergyArgs {
    std::string source = "-";
    std::string format = "edgelist";
    std::string output = "text";
};

int cmd_energy(const EnergyArgs& args, std::istream& in, std::ostream& out) {
    const double eig_tol = eigen_tolerance();
    const GraphHandle g = load_graph(args.source, args.format, in);
    const std::size_t n = vel_graph_vertex_count(g.get());
    std::vector<double> energies(n);
    std::vector<double> eigenvalues(n);
    double total = 0.0;
    check(vel_graph_vertex_energies(g.get(), eig_tol, energies.data(), n, &total));
    check(vel_graph_spectrum(g.get(), eig_tol, eigenvalues.data(), n));

    if (args.output == "json") {
        json inputs{{"source", args.source}, {"format", args.format}, {"eigen_tol", json_number(eig_tol)}};
        json results{{"vertex_count", n},
                     {"edge_count", vel_graph_edge_count(g.get())},
                     {"vertex_energies", json_numbers(energies)},
                     {"graph_energy", json_number(total)},
                     {"eigenvalues", json_numbers(eigenvalues)}};
        out << envelope("energy", std::move(inputs), std::move(results)).dump(2) << '\n';
    } else if (args.output == "csv") {
        out << "vertex,energy,graph_energy\n";
        for (std::size_t k = 0; k < n; ++k) out << k << ',' << format_number(energies[k]) << ',' << format_number(total) << '\n';
    } else {
        out << "vertex  energy\n";
        for (std::size_t k = 0; k < n; ++k) out << std::left << std::setw(8) << k << format_number(energies[k]) << '\n';
        out << "total   " << format_number(total) << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------- derive

struct DeriveArgs {
    std::string source = "-";
    std::string format = "edgelist";
    std::string op = "splitting";
    std::size_t m = 1;
    std::string emit = "edgelist";
    std::string output = "text";
};

int cmd_derive(const DeriveArgs& args, std::istream& in, std::ostream& out) {
    const GraphHandle base = load_graph(args.source, args.format, in);
    vel_graph* raw = nullptr;
    check(vel_graph_derive(base.get(), args.op == "shadow" ? VEL_DERIVE_SHADOW : VEL_DERIVE_SPLITTING, args.m, &raw));
    const GraphHandle derived(raw);

    const std::size_t base_n = vel_graph_vertex_count(base.get());
    const std::size_t n = vel_graph_vertex_count(derived.get());
    struct Label {
        std::size_t copy;
        std::size_t base;
    };
    std::vector<Label> labels(n);
    for (std::size_t k = 0; k < n; ++k) check(vel_vertex_label(k, base_n, &labels[k].copy, &labels[k].base));
    const std::string encoded = encode_graph(derived.get(), args.emit);

    if (args.output == "json") {
        json inputs{{"source", args.source}, {"format", args.format}, {"op", args.op}, {"m", args.m},
                    {"emit", args.emit}};
        json label_arr = json::array();
        for (std::size_t k = 0; k < n; ++k)
            label_arr.push_back({{"index", k}, {"copy", labels[k].copy}, {"base", labels[k].base}});
        json results{{"base_vertex_count", base_n},
                     {"vertex_count", n},
                     {"edge_count", vel_graph_edge_count(derived.get())},
                     {"graph", encoded},
                     {"labels", std::move(label_arr)}};
        out << envelope("derive", std::move(inputs), std::move(results)).dump(2) << '\n';
    } else if (args.output == "csv") {
        out << "index,copy,base\n";
        for (std::size_t k = 0; k < n; ++k) out << k << ',' << labels[k].copy << ',' << labels[k].base << '\n';
        out << '\n';
        if (args.emit == "graph6") {
            out << "graph6\n" << encoded << '\n';
        } else {
            out << "u,v\n";
            for (auto [u, v] : graph_edges(derived.get())) out << u << ',' << v << '\n';
        }
    } else {
        // The graph comes first so the output can be piped back into `energy`.
        out << encoded;
        if (encoded.empty() || encoded.back() != '\n') out << '\n';
        out << "# index copy base\n";
        for (std::size_t k = 0; k < n; ++k) out << "# " << k << ' ' << labels[k].copy << ' ' << labels[k].base << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::optional<std::string> source;
    std::optional<std::string> corpus;
    std::string format = "edgelist";
    std::size_t m_max = 4;
    double tol = 1e-8;
    std::uint64_t seed = 42;
    std::string output = "text";
};

int cmd_verify(const VerifyArgs& args, std::istream& in, std::ostream& out) {
    if (args.source && args.corpus) throw UsageError("give either an input graph or --corpus, not both");
    if (!(args.tol > 0.0)) throw UsageError("--tol must be positive");

    vel_verify_options options = vel_verify_options_default();
    options.tol = args.tol;
    options.eigen_tol = eigen_tolerance();

    std::vector<std::size_t> ms;
    for (std::size_t m = 1; m <= args.m_max; ++m) ms.push_back(m);

    vel_report_set* raw = nullptr;
    std::string source = args.source.value_or("-");
    if (args.corpus) {
        check(vel_verify_default_corpus(args.seed, ms.data(), ms.size(), &options, &raw));
    } else {
        const GraphHandle g = load_graph(source, args.format, in);
        check(vel_verify_graph(g.get(), source_name(source).c_str(), ms.data(), ms.size(), &options, &raw));
    }
    const ReportSetHandle set(raw);

    const std::size_t count = vel_report_set_size(set.get());
    std::vector<vel_report_view> reports(count);
    std::size_t passed = 0;
    for (std::size_t k = 0; k < count; ++k) {
        check(vel_report_set_get(set.get(), k, &reports[k]));
        passed += reports[k].passed ? 1 : 0;
    }
    const bool all_passed = passed == count;

    if (args.output == "json") {
        json inputs;
        inputs["source"] = args.corpus ? json(nullptr) : json(source);
        inputs["corpus"] = args.corpus ? json(*args.corpus) : json(nullptr);
        inputs["format"] = args.format;
        inputs["m_max"] = args.m_max;
        inputs["tol"] = json_number(args.tol);
        inputs["seed"] = args.seed;
        inputs["eigen_tol"] = json_number(options.eigen_tol);
        json arr = json::array();
        for (const auto& r : reports) {
            json item{{"claim", r.claim_name},
                      {"graph", r.graph_descriptor},
                      {"m", r.m},
                      {"max_abs_deviation", json_number(r.max_abs_deviation)},
                      {"tolerance", json_number(r.tolerance)},
                      {"passed", r.passed != 0}};
            item["per_vertex_deviations"] =
                r.deviations ? json_numbers({r.deviations, r.deviations + r.deviation_count}) : json(nullptr);
            if (*r.error != '\0') item["error"] = r.error;
            arr.push_back(std::move(item));
        }
        json results{{"all_passed", all_passed},
                     {"report_count", count},
                     {"passed_count", passed},
                     {"reports", std::move(arr)}};
        out << envelope("verify", std::move(inputs), std::move(results)).dump(2) << '\n';
    } else if (args.output == "csv") {
        out << "claim,graph,m,max_abs_deviation,tolerance,passed\n";
        for (const auto& r : reports) {
            out << r.claim_name << ',' << csv_field(r.graph_descriptor) << ',' << r.m << ','
                << format_number(r.max_abs_deviation) << ',' << format_number(r.tolerance) << ','
                << (r.passed ? "true" : "false") << '\n';
        }
    } else {
        out << std::left << std::setw(26) << "claim" << std::setw(16) << "graph" << std::setw(4) << "m"
            << std::setw(24) << "max_abs_deviation" << std::setw(10) << "tolerance" << "result\n";
        for (const auto& r : reports) {
            out << std::left << std::setw(26) << r.claim_name << std::setw(16) << r.graph_descriptor << std::setw(4)
                << r.m << std::setw(24) << format_number(r.max_abs_deviation) << std::setw(10)
                << format_number(r.tolerance) << (r.passed ? "PASS" : "FAIL");
            if (*r.error != '\0') out << "  (" << r.error << ')';
            out << '\n';
        }
        out << passed << '/' << count << " claims passed\n";
    }
    return all_passed ? kExitOk : kExitVerificationFailed;
}

void add_format_flags(CLI::App* cmd, std::string& format, std::string& output) {
    cmd->add_option("--format", format, "Input graph format")
        ->check(CLI::IsMember({"edgelist", "graph6"}))
        ->capture_default_str();
    cmd->add_option("--output", output, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Vertex energies of graphs and their m-splitting / m-shadow derived graphs", "vertex-energy"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(vel_version()));

    EnergyArgs energy;
    auto* energy_cmd = app.add_subcommand("energy", "Per-vertex energies and total graph energy");
    energy_cmd->add_option("input", energy.source, "Graph file, or - for standard input")->capture_default_str();
    add_format_flags(energy_cmd, energy.format, energy.output);

    DeriveArgs derive;
    auto* derive_cmd = app.add_subcommand("derive", "Build the m-splitting or m-shadow graph");
    derive_cmd->add_option("input", derive.source, "Graph file, or - for standard input")->capture_default_str();
    add_format_flags(derive_cmd, derive.format, derive.output);
    derive_cmd->add_option("--op", derive.op, "Construction")
        ->check(CLI::IsMember({"splitting", "shadow"}))
        ->capture_default_str();
    derive_cmd->add_option("--m", derive.m, "Number of added copies (splitting) or copies (shadow)")
        ->capture_default_str();
    derive_cmd->add_option("--emit", derive.emit, "Encoding of the derived graph")
        ->check(CLI::IsMember({"edgelist", "graph6"}))
        ->capture_default_str();

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check the closed-form vertex-energy laws numerically");
    verify_cmd->add_option("input", verify.source, "Graph file, or - for standard input");
    verify_cmd->add_option("--corpus", verify.corpus, "Built-in graph corpus")->check(CLI::IsMember({"default"}));
    add_format_flags(verify_cmd, verify.format, verify.output);
    verify_cmd->add_option("--m-max", verify.m_max, "Check m = 1..m-max")->capture_default_str();
    verify_cmd->add_option("--tol", verify.tol, "Tolerance for the derived-graph claims")->capture_default_str();
    verify_cmd->add_option("--seed", verify.seed, "Seed for the random graphs of the corpus")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (energy_cmd->parsed()) return cmd_energy(energy, in, out);
        if (derive_cmd->parsed()) return cmd_derive(derive, in, out);
        return cmd_verify(verify, in, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace vel::cli
