#include "vertex_energy.h"

#include <cstring>
#include <exception>
#include <string>

#include "derived.hpp"
#include "graph.hpp"
#include "spectral.hpp"
#include "verify.hpp"

struct vel_graph {
    vel::Graph graph;
};

struct vel_report_set {
    std::vector<vel::VerificationReport> reports;
};

namespace {

struct LastError {
    std::string message;
    std::size_t line = 0;
    std::size_t byte = 0;
};

thread_local LastError last_error;

vel_status fail(vel_status status, std::string message, std::size_t line = 0, std::size_t byte = 0) {
    last_error = {std::move(message), line, byte};
    return status;
}

// Maps the core's exception types onto status codes.
template <typename Fn>
vel_status guarded(Fn&& fn) noexcept {
    try {
        last_error = {};
        return fn();
    } catch (const vel::ParseError& e) {
        return fail(VEL_ERROR_PARSE, e.what(), e.line(), e.byte());
    } catch (const vel::ConvergenceError& e) {
        return fail(VEL_ERROR_NO_CONVERGENCE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(VEL_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(VEL_ERROR_INTERNAL, e.what());
    } catch (...) {
        return fail(VEL_ERROR_INTERNAL, "unknown error");
    }
}

vel_status emit_graph(vel::Graph g, vel_graph** out) {
    *out = new vel_graph{std::move(g)};
    return VEL_OK;
}

vel_status copy_string(const std::string& text, char* buffer, std::size_t capacity, std::size_t* length) {
    if (length != nullptr) *length = text.size();
    if (buffer == nullptr || capacity <= text.size()) {
        return fail(VEL_ERROR_BUFFER_TOO_SMALL, "buffer needs " + std::to_string(text.size() + 1) + " bytes");
    }
    std::memcpy(buffer, text.data(), text.size());
    buffer[text.size()] = '\0';
    return VEL_OK;
}

vel::VerifyOptions to_options(const vel_verify_options* options) {
    vel::VerifyOptions opts;
    if (options != nullptr) {
        opts.tol = options->tol;
        opts.eigen_tol = options->eigen_tol;
    }
    if (!(opts.tol > 0.0)) throw std::invalid_argument("verification tolerance must be positive");
    if (!(opts.eigen_tol > 0.0)) throw std::invalid_argument("eigensolver tolerance must be positive");
    return opts;
}

}  // namespace

extern "C" {

const char* vel_version(void) { return "1.0.0"; }

const char* vel_status_string(vel_status status) {
    switch (status) {
        case VEL_OK: return "ok";
        case VEL_ERROR_INVALID_ARGUMENT: return "invalid argument";
        case VEL_ERROR_PARSE: return "parse error";
        case VEL_ERROR_NO_CONVERGENCE: return "eigensolver did not converge";
        case VEL_ERROR_BUFFER_TOO_SMALL: return "buffer too small";
        case VEL_ERROR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* vel_last_error(void) { return last_error.message.c_str(); }

void vel_last_error_location(size_t* line, size_t* byte) {
    if (line != nullptr) *line = last_error.line;
    if (byte != nullptr) *byte = last_error.byte;
}

vel_status vel_graph_from_edges(size_t n, const size_t* endpoints, size_t edge_count, vel_graph** out) {
    return guarded([&] {
        if (out == nullptr || (endpoints == nullptr && edge_count > 0))
            return fail(VEL_ERROR_INVALID_ARGUMENT, "null pointer argument");
        std::vector<vel::Edge> edges;
        edges.reserve(edge_count);
        for (std::size_t k = 0; k < edge_count; ++k) edges.emplace_back(endpoints[2 * k], endpoints[2 * k + 1]);
        return emit_graph(vel::graph_from_edge_list(n, edges), out);
    });
}

vel_status vel_graph_parse_edge_list(const char* text, size_t length, vel_graph** out) {
    return guarded([&] {
        if (out == nullptr || (text == nullptr && length > 0))
            return fail(VEL_ERROR_INVALID_ARGUMENT, "null pointer argument");
        return emit_graph(vel::parse_edge_list(std::string_view(text, length)), out);
    });
}

vel_status vel_graph_parse_graph6(const char* text, size_t length, vel_graph** out) {
    return guarded([&] {
        if (out == nullptr || (text == nullptr && length > 0))
            return fail(VEL_ERROR_INVALID_ARGUMENT, "null pointer argument");
        return emit_graph(vel::parse_graph6(std::string_view(text, length)), out);
    });
}

vel_status vel_graph_named(vel_family family, size_t a, size_t b, vel_graph** out) {
    return guarded([&] {
        if (out == nullptr) return fail(VEL_ERROR_INVALID_ARGUMENT, "null pointer argument");
        vel::Family f;
        switch (family) {
            case VEL_FAMILY_PATH: f = vel::Family::path; break;
            case VEL_FAMILY_CYCLE: f = vel::Family::cycle; break;
            case VEL_FAMILY_COMPLETE: f = vel::Family::complete; break;
            case VEL_FAMILY_STAR: f = vel::Family::star; break;
            case VEL_FAMILY_COMPLETE_BIPARTITE: f = vel::Family::complete_bipartite; break;
            default: return fail(VEL_ERROR_INVALID_ARGUMENT, "unknown graph family");
        }
        return emit_graph(vel::named_graph(f, a, b), out);
    });
}

vel_status vel_graph_derive(const vel_graph* g, vel_derive_op op, size_t m, vel_graph** out) {
    return guarded([&] {
        if (g == nullptr || out == nullptr) return fail(VEL_ERROR_INVALID_ARGUMENT, "null pointer argument");
        switch (op) {
            case VEL_DERIVE_SPLITTING: return emit_graph(vel::m_splitting(g->graph, m), out);
            case VEL_DERIVE_SHADOW: return emit_graph(vel::m_shadow(g->graph, m), out);
        }
        return fail(VEL_ERROR_INVALID_ARGUMENT, "unknown derive operation");
    });
}

void vel_graph_free(vel_graph* g) { delete g; }

size_t vel_graph_vertex_count(const vel_graph* g) { return g == nullptr ? 0 : g->graph.vertex_count(); }

size_t vel_graph_edge_count(const vel_graph* g) { return g == nullptr ? 0 : g->graph.edge_count(); }

vel_status vel_graph_edges(const vel_graph* g, size_t* endpoints, size_t capacity_pairs) {
    return guarded([&] {
        if (g == nullptr) return fail(VEL_ERROR_INVALID_ARGUMENT, "null pointer argument");
        const auto& edges = g->graph.edges();
        if (endpoints == nullptr || capacity_pairs < edges.size())
            return fail(VEL_ERROR_BUFFER_TOO_SMALL, "edge buffer needs " + std::to_string(edges.size()) + " pairs");
        for (std::size_t k = 0; k < edges.size(); ++k) {
            endpoints[2 * k] = edges[k].first;
            endpoints[2 * k + 1] = edges[k].second;
        }
        return VEL_OK;
    });
}

vel_status vel_graph_to_graph6(const vel_graph* g, char* buffer, size_t capacity, size_t* length) {
    return guarded([&] {
        if (g == nullptr) return fail(VEL_ERROR_INVALID_ARGUMENT, "null pointer argument");
        return copy_string(vel::to_graph6(g->graph), buffer, capacity, length);
    });
}

vel_status vel_graph_to_edge_list(const vel_graph* g, char* buffer, size_t capacity, size_t* length) {
    return guarded([&] {
        if (g == nullptr) return fail(VEL_ERROR_INVALID_ARGUMENT, "null pointer argument");
        return copy_string(vel::to_edge_list(g->graph), buffer, capacity, length);
    });
}

vel_status vel_vertex_label(size_t flat_index, size_t base_vertex_count, size_t* copy_index, size_t* base_index) {
    return guarded([&] {
        if (copy_index == nullptr || base_index == nullptr)
            return fail(VEL_ERROR_INVALID_ARGUMENT, "null pointer argument");
        const auto label = vel::vertex_label(flat_index, base_vertex_count);
        *copy_index = label.copy_index;
        *base_index = label.base_index;
        return VEL_OK;
    });
}

vel_status vel_graph_spectrum(const vel_graph* g, double eigen_tol, double* eigenvalues, size_t capacity) {
    return guarded([&] {
        if (g == nullptr) return fail(VEL_ERROR_INVALID_ARGUMENT, "null pointer argument");
        const std::size_t n = g->graph.vertex_count();
        if (n > 0 && (eigenvalues == nullptr || capacity < n))
            return fail(VEL_ERROR_BUFFER_TOO_SMALL, "eigenvalue buffer needs " + std::to_string(n) + " entries");
        const auto s = vel::eigendecompose_symmetric(vel::adjacency_matrix(g->graph), eigen_tol);
        std::copy(s.eigenvalues.begin(), s.eigenvalues.end(), eigenvalues);
        return VEL_OK;
    });
}

vel_status vel_graph_vertex_energies(const vel_graph* g, double eigen_tol, double* energies, size_t capacity,
                                     double* graph_energy) {
    return guarded([&] {
        if (g == nullptr) return fail(VEL_ERROR_INVALID_ARGUMENT, "null pointer argument");
        const std::size_t n = g->graph.vertex_count();
        if (n > 0 && (energies == nullptr || capacity < n))
            return fail(VEL_ERROR_BUFFER_TOO_SMALL, "energy buffer needs " + std::to_string(n) + " entries");
        const auto s = vel::eigendecompose_symmetric(vel::adjacency_matrix(g->graph), eigen_tol);
        const auto e = vel::vertex_energies(s);
        std::copy(e.values.begin(), e.values.end(), energies);
        if (graph_energy != nullptr) *graph_energy = vel::graph_energy(s);
        return VEL_OK;
    });
}

vel_verify_options vel_verify_options_default(void) {
    return {vel::kDefaultTheoremTolerance, vel::kDefaultEigenTolerance};
}

vel_status vel_verify_graph(const vel_graph* g, const char* descriptor, const size_t* m_values, size_t m_count,
                            const vel_verify_options* options, vel_report_set** out) {
    return guarded([&] {
        if (g == nullptr || out == nullptr || (m_values == nullptr && m_count > 0))
            return fail(VEL_ERROR_INVALID_ARGUMENT, "null pointer argument");
        std::vector<vel::CorpusEntry> corpus{{descriptor != nullptr ? descriptor : "graph", g->graph}};
        auto reports = vel::run_suite(corpus, std::span(m_values, m_count), to_options(options));
        *out = new vel_report_set{std::move(reports)};
        return VEL_OK;
    });
}

vel_status vel_verify_default_corpus(uint64_t seed, const size_t* m_values, size_t m_count,
                                     const vel_verify_options* options, vel_report_set** out) {
    return guarded([&] {
        if (out == nullptr || (m_values == nullptr && m_count > 0))
            return fail(VEL_ERROR_INVALID_ARGUMENT, "null pointer argument");
        auto reports = vel::run_suite(vel::default_corpus(seed), std::span(m_values, m_count), to_options(options));
        *out = new vel_report_set{std::move(reports)};
        return VEL_OK;
    });
}

size_t vel_report_set_size(const vel_report_set* set) { return set == nullptr ? 0 : set->reports.size(); }

vel_status vel_report_set_get(const vel_report_set* set, size_t index, vel_report_view* out) {
    return guarded([&] {
        if (set == nullptr || out == nullptr) return fail(VEL_ERROR_INVALID_ARGUMENT, "null pointer argument");
        if (index >= set->reports.size()) return fail(VEL_ERROR_INVALID_ARGUMENT, "report index out of range");
        const auto& r = set->reports[index];
        out->claim = static_cast<vel_claim>(r.claim);
        out->claim_name = vel::to_string(r.claim).data();
        out->graph_descriptor = r.graph_descriptor.c_str();
        out->m = r.m;
        out->max_abs_deviation = r.max_abs_deviation;
        out->tolerance = r.tolerance;
        out->passed = r.passed ? 1 : 0;
        out->deviations = r.per_vertex_deviations ? r.per_vertex_deviations->data() : nullptr;
        out->deviation_count = r.per_vertex_deviations ? r.per_vertex_deviations->size() : 0;
        out->error = r.error.c_str();
        return VEL_OK;
    });
}

int vel_report_set_all_passed(const vel_report_set* set) {
    if (set == nullptr) return 0;
    for (const auto& r : set->reports)
        if (!r.passed) return 0;
    return 1;
}

void vel_report_set_free(vel_report_set* set) { delete set; }

}  // extern "C"
