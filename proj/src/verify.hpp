#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "spectral.hpp"

namespace vel {

inline constexpr double kDefaultTheoremTolerance = 1e-8;
inline constexpr double kPartitionTolerance = 1e-10;
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Declaration order is the report sort order within one graph.
enum class Claim {
    splitting_vertex_energy,
    splitting_total_energy,
    splitting_spectrum,
    shadow_vertex_energy,
    shadow_total_energy,
    shadow_spectrum,
    energy_partition,
};

std::string_view to_string(Claim claim);
std::optional<Claim> claim_from_string(std::string_view name);

/// Outcome of one numeric-vs-closed-form comparison. For the total-energy and
/// partition claims the deviation is relative: |got - want| / max(1, |want|).
/// per_vertex_deviations holds per-vertex (energy claims) or per-eigenvalue
/// (spectrum claims) absolute deviations.
struct VerificationReport {
    Claim claim = Claim::energy_partition;
    std::string graph_descriptor;
    std::size_t m = 0;
    double max_abs_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::optional<std::vector<double>> per_vertex_deviations;
    std::string error;  // non-empty when the computation itself failed
};

struct VerifyOptions {
    double tol = kDefaultTheoremTolerance;
    double eigen_tol = kDefaultEigenTolerance;
};

struct CorpusEntry {
    std::string descriptor;
    Graph graph;
};

VerificationReport verify_splitting_theorem(const Graph& g, std::size_t m, const VerifyOptions& opts = {},
                                            std::string_view descriptor = {});

VerificationReport verify_shadow_theorem(const Graph& g, std::size_t m, const VerifyOptions& opts = {},
                                         std::string_view descriptor = {});

/// first: splitting total energy, second: shadow total energy.
std::pair<VerificationReport, VerificationReport> verify_total_energy_factors(const Graph& g, std::size_t m,
                                                                              const VerifyOptions& opts = {},
                                                                              std::string_view descriptor = {});

/// first: splitting spectrum, second: shadow spectrum.
std::pair<VerificationReport, VerificationReport> verify_spectrum_maps(const Graph& g, std::size_t m,
                                                                       const VerifyOptions& opts = {},
                                                                       std::string_view descriptor = {});

/// Checks sum of vertex energies against graph energy using opts.tol.
VerificationReport verify_energy_partition(const Graph& g, const VerifyOptions& opts = {},
                                           std::string_view descriptor = {});

/// Runs the partition check once per graph (at min(opts.tol, kPartitionTolerance))
/// and the six derived-graph claims for every m. Cases run on a thread pool;
/// output is sorted by (descriptor, claim, m). Eigensolver failures become
/// failed reports. Throws std::invalid_argument on an empty corpus.
std::vector<VerificationReport> run_suite(const std::vector<CorpusEntry>& corpus, std::span<const std::size_t> m_values,
                                          const VerifyOptions& opts = {});

/// Paths P1..P8, cycles C3..C8, complete K2..K6, complete bipartite K{a,b}
/// with a <= b and a + b <= 8 (covers stars K1,1..K1,5), nine G(n, 1/2)
/// samples (three each for n = 5, 8, 12) drawn from `seed`, plus a
/// disconnected graph, a graph with an isolated vertex and an edgeless graph.
std::vector<CorpusEntry> default_corpus(std::uint64_t seed = kDefaultSeed);

/// Erdos-Renyi G(n, 1/2): each pair is an edge iff the top bit of the next
/// draw is set. Pairs are visited in (i, j), i < j, row order.
Graph random_graph_half(std::size_t n, std::mt19937_64& rng);

}  // namespace vel
