#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <thread>

#include "derived.hpp"

namespace vel {

std::string_view to_string(Claim claim) {
    switch (claim) {
        case Claim::splitting_vertex_energy: return "splitting_vertex_energy";
        case Claim::splitting_total_energy: return "splitting_total_energy";
        case Claim::splitting_spectrum: return "splitting_spectrum";
        case Claim::shadow_vertex_energy: return "shadow_vertex_energy";
        case Claim::shadow_total_energy: return "shadow_total_energy";
        case Claim::shadow_spectrum: return "shadow_spectrum";
        case Claim::energy_partition: return "energy_partition";
    }
    return "unknown";
}

std::optional<Claim> claim_from_string(std::string_view name) {
    for (int k = 0; k <= static_cast<int>(Claim::energy_partition); ++k) {
        const auto claim = static_cast<Claim>(k);
        if (to_string(claim) == name) return claim;
    }
    return std::nullopt;
}

namespace {

struct Analysis {
    Spectrum spectrum;
    VertexEnergyVector energies;
    double energy = 0.0;
};

Analysis analyze(const Graph& g, double eigen_tol) {
    Analysis a;
    a.spectrum = eigendecompose_symmetric(adjacency_matrix(g), eigen_tol);
    a.energies = vertex_energies(a.spectrum);
    a.energy = graph_energy(a.spectrum);
    return a;
}

VerificationReport make_report(Claim claim, std::string_view descriptor, std::size_t m, double tol,
                               std::vector<double> deviations) {
    VerificationReport r;
    r.claim = claim;
    r.graph_descriptor = std::string(descriptor);
    r.m = m;
    r.tolerance = tol;
    for (double d : deviations) {
        if (std::isnan(d)) {
            r.max_abs_deviation = d;
            break;
        }
        r.max_abs_deviation = std::max(r.max_abs_deviation, d);
    }
    r.per_vertex_deviations = std::move(deviations);
    r.passed = r.max_abs_deviation <= tol;
    return r;
}

VerificationReport make_scalar_report(Claim claim, std::string_view descriptor, std::size_t m, double tol,
                                      double got, double want) {
    VerificationReport r;
    r.claim = claim;
    r.graph_descriptor = std::string(descriptor);
    r.m = m;
    r.tolerance = tol;
    r.max_abs_deviation = std::abs(got - want) / std::max(1.0, std::abs(want));
    r.passed = r.max_abs_deviation <= tol;
    return r;
}

VerificationReport make_failure(Claim claim, std::string_view descriptor, std::size_t m, double tol,
                                std::string error) {
    VerificationReport r;
    r.claim = claim;
    r.graph_descriptor = std::string(descriptor);
    r.m = m;
    r.tolerance = tol;
    r.max_abs_deviation = std::numeric_limits<double>::infinity();
    r.passed = false;
    r.error = std::move(error);
    return r;
}

std::vector<double> abs_differences(std::span<const double> got, std::span<const double> want) {
    if (got.size() != want.size()) return {std::numeric_limits<double>::infinity()};
    std::vector<double> out(got.size());
    for (std::size_t k = 0; k < got.size(); ++k) out[k] = std::abs(got[k] - want[k]);
    return out;
}

VerificationReport splitting_energy_report(const Analysis& base, const Analysis& split, std::size_t m, double tol,
                                           std::string_view descriptor) {
    const auto predicted = predicted_splitting_vertex_energies(base.energies, m);
    return make_report(Claim::splitting_vertex_energy, descriptor, m, tol,
                       abs_differences(split.energies.values, predicted.values));
}

VerificationReport shadow_energy_report(const Analysis& base, const Analysis& shadow, std::size_t m, double tol,
                                        std::string_view descriptor) {
    const auto predicted = predicted_shadow_vertex_energies(base.energies, m);
    return make_report(Claim::shadow_vertex_energy, descriptor, m, tol,
                       abs_differences(shadow.energies.values, predicted.values));
}

VerificationReport splitting_total_report(const Analysis& base, const Analysis& split, std::size_t m, double tol,
                                          std::string_view descriptor) {
    const double factor = std::sqrt(4.0 * static_cast<double>(m) + 1.0);
    return make_scalar_report(Claim::splitting_total_energy, descriptor, m, tol, split.energy, factor * base.energy);
}

VerificationReport shadow_total_report(const Analysis& base, const Analysis& shadow, std::size_t m, double tol,
                                       std::string_view descriptor) {
    return make_scalar_report(Claim::shadow_total_energy, descriptor, m, tol, shadow.energy,
                              static_cast<double>(m) * base.energy);
}

VerificationReport splitting_spectrum_report(const Analysis& base, const Analysis& split, std::size_t m, double tol,
                                             std::string_view descriptor) {
    const auto predicted = predicted_splitting_spectrum(base.spectrum.eigenvalues, m);
    return make_report(Claim::splitting_spectrum, descriptor, m, tol,
                       abs_differences(split.spectrum.eigenvalues, predicted));
}

VerificationReport shadow_spectrum_report(const Analysis& base, const Analysis& shadow, std::size_t m, double tol,
                                          std::string_view descriptor) {
    const auto predicted = predicted_shadow_spectrum(base.spectrum.eigenvalues, m);
    return make_report(Claim::shadow_spectrum, descriptor, m, tol,
                       abs_differences(shadow.spectrum.eigenvalues, predicted));
}

VerificationReport partition_report(const Analysis& base, double tol, std::string_view descriptor) {
    return make_scalar_report(Claim::energy_partition, descriptor, 0, tol, base.energies.sum(), base.energy);
}

void append_case(std::vector<VerificationReport>& out, const CorpusEntry& entry, std::size_t m,
                 const Analysis& base, const VerifyOptions& opts) {
    const std::string_view d = entry.descriptor;
    try {
        const Analysis split = analyze(m_splitting(entry.graph, m), opts.eigen_tol);
        out.push_back(splitting_energy_report(base, split, m, opts.tol, d));
        out.push_back(splitting_total_report(base, split, m, opts.tol, d));
        out.push_back(splitting_spectrum_report(base, split, m, opts.tol, d));
    } catch (const std::exception& e) {
        for (Claim c : {Claim::splitting_vertex_energy, Claim::splitting_total_energy, Claim::splitting_spectrum})
            out.push_back(make_failure(c, d, m, opts.tol, e.what()));
    }
    try {
        const Analysis shadow = analyze(m_shadow(entry.graph, m), opts.eigen_tol);
        out.push_back(shadow_energy_report(base, shadow, m, opts.tol, d));
        out.push_back(shadow_total_report(base, shadow, m, opts.tol, d));
        out.push_back(shadow_spectrum_report(base, shadow, m, opts.tol, d));
    } catch (const std::exception& e) {
        for (Claim c : {Claim::shadow_vertex_energy, Claim::shadow_total_energy, Claim::shadow_spectrum})
            out.push_back(make_failure(c, d, m, opts.tol, e.what()));
    }
}

std::vector<VerificationReport> run_entry(const CorpusEntry& entry, std::span<const std::size_t> m_values,
                                          const VerifyOptions& opts) {
    std::vector<VerificationReport> out;
    const double partition_tol = std::min(opts.tol, kPartitionTolerance);
    Analysis base;
    try {
        base = analyze(entry.graph, opts.eigen_tol);
    } catch (const std::exception& e) {
        out.push_back(make_failure(Claim::energy_partition, entry.descriptor, 0, partition_tol, e.what()));
        for (std::size_t m : m_values) {
            for (int k = 0; k < static_cast<int>(Claim::energy_partition); ++k)
                out.push_back(make_failure(static_cast<Claim>(k), entry.descriptor, m, opts.tol, e.what()));
        }
        return out;
    }
    out.push_back(partition_report(base, partition_tol, entry.descriptor));
    for (std::size_t m : m_values) append_case(out, entry, m, base, opts);
    return out;
}

}  // namespace

VerificationReport verify_splitting_theorem(const Graph& g, std::size_t m, const VerifyOptions& opts,
                                            std::string_view descriptor) {
    const Analysis base = analyze(g, opts.eigen_tol);
    const Analysis split = analyze(m_splitting(g, m), opts.eigen_tol);
    return splitting_energy_report(base, split, m, opts.tol, descriptor);
}

VerificationReport verify_shadow_theorem(const Graph& g, std::size_t m, const VerifyOptions& opts,
                                         std::string_view descriptor) {
    const Analysis base = analyze(g, opts.eigen_tol);
    const Analysis shadow = analyze(m_shadow(g, m), opts.eigen_tol);
    return shadow_energy_report(base, shadow, m, opts.tol, descriptor);
}

std::pair<VerificationReport, VerificationReport> verify_total_energy_factors(const Graph& g, std::size_t m,
                                                                              const VerifyOptions& opts,
                                                                              std::string_view descriptor) {
    const Analysis base = analyze(g, opts.eigen_tol);
    const Analysis split = analyze(m_splitting(g, m), opts.eigen_tol);
    const Analysis shadow = analyze(m_shadow(g, m), opts.eigen_tol);
    return {splitting_total_report(base, split, m, opts.tol, descriptor),
            shadow_total_report(base, shadow, m, opts.tol, descriptor)};
}

std::pair<VerificationReport, VerificationReport> verify_spectrum_maps(const Graph& g, std::size_t m,
                                                                       const VerifyOptions& opts,
                                                                       std::string_view descriptor) {
    const Analysis base = analyze(g, opts.eigen_tol);
    const Analysis split = analyze(m_splitting(g, m), opts.eigen_tol);
    const Analysis shadow = analyze(m_shadow(g, m), opts.eigen_tol);
    return {splitting_spectrum_report(base, split, m, opts.tol, descriptor),
            shadow_spectrum_report(base, shadow, m, opts.tol, descriptor)};
}

VerificationReport verify_energy_partition(const Graph& g, const VerifyOptions& opts, std::string_view descriptor) {
    return partition_report(analyze(g, opts.eigen_tol), opts.tol, descriptor);
}

std::vector<VerificationReport> run_suite(const std::vector<CorpusEntry>& corpus, std::span<const std::size_t> m_values,
                                          const VerifyOptions& opts) {
    if (corpus.empty()) throw std::invalid_argument("verification corpus is empty");
    for (std::size_t m : m_values) {
        if (m < 1) throw std::invalid_argument("m values must be at least 1");
    }

    std::vector<std::vector<VerificationReport>> per_entry(corpus.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < corpus.size(); k = next++) per_entry[k] = run_entry(corpus[k], m_values, opts);
    };
    const std::size_t workers =
        std::min<std::size_t>(corpus.size(), std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::vector<VerificationReport> out;
    for (auto& reports : per_entry) std::move(reports.begin(), reports.end(), std::back_inserter(out));
    std::stable_sort(out.begin(), out.end(), [](const VerificationReport& a, const VerificationReport& b) {
        if (a.graph_descriptor != b.graph_descriptor) return a.graph_descriptor < b.graph_descriptor;
        if (a.claim != b.claim) return a.claim < b.claim;
        return a.m < b.m;
    });
    return out;
}

Graph random_graph_half(std::size_t n, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng() >> 63) edges.emplace_back(i, j);
    return graph_from_edge_list(n, edges);
}

std::vector<CorpusEntry> default_corpus(std::uint64_t seed) {
    std::vector<CorpusEntry> out;
    auto add = [&out](std::string descriptor, Graph g) { out.push_back({std::move(descriptor), std::move(g)}); };

    for (std::size_t n = 1; n <= 8; ++n) add("P" + std::to_string(n), named_graph(Family::path, n));
    for (std::size_t n = 3; n <= 8; ++n) add("C" + std::to_string(n), named_graph(Family::cycle, n));
    for (std::size_t n = 2; n <= 6; ++n) add("K" + std::to_string(n), named_graph(Family::complete, n));
    for (std::size_t a = 1; a <= 4; ++a) {
        for (std::size_t b = a; a + b <= 8; ++b) {
            Graph g = a == 1 ? named_graph(Family::star, b) : named_graph(Family::complete_bipartite, a, b);
            add("K" + std::to_string(a) + "," + std::to_string(b), std::move(g));
        }
    }

    std::mt19937_64 rng(seed);
    for (std::size_t n : {5, 8, 12}) {
        for (int sample = 0; sample < 3; ++sample) {
            add("G(" + std::to_string(n) + ",1/2)#" + std::to_string(sample), random_graph_half(n, rng));
        }
    }

    add("P3+C4", disjoint_union(named_graph(Family::path, 3), named_graph(Family::cycle, 4)));
    add("K3+K1", disjoint_union(named_graph(Family::complete, 3), graph_from_edge_list(1, {})));
    add("E3", graph_from_edge_list(3, {}));
    return out;
}

}  // namespace vel
