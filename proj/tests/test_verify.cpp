#include "doctest.h"

#include <cmath>
#include <set>

#include "derived.hpp"
#include "verify.hpp"

using namespace vel;

TEST_CASE("claim names round trip") {
    for (int k = 0; k <= static_cast<int>(Claim::energy_partition); ++k) {
        const auto claim = static_cast<Claim>(k);
        CHECK(claim_from_string(to_string(claim)) == claim);
    }
    CHECK_FALSE(claim_from_string("bogus").has_value());
}

TEST_CASE("verify_splitting_theorem") {
    const double r5 = std::sqrt(5.0);
    const auto k2 = verify_splitting_theorem(named_graph(Family::complete, 2), 1, {}, "K2");
    CHECK(k2.passed);
    CHECK(k2.claim == Claim::splitting_vertex_energy);
    CHECK(k2.graph_descriptor == "K2");
    CHECK(k2.max_abs_deviation < 1e-8);
    REQUIRE(k2.per_vertex_deviations);
    CHECK(k2.per_vertex_deviations->size() == 4);

    // Cross-check the numeric side directly against 3/sqrt5, 2/sqrt5.
    const auto numeric =
        vertex_energies(eigendecompose_symmetric(adjacency_matrix(splitting_graph(named_graph(Family::complete, 2)))));
    CHECK(numeric[0] == doctest::Approx(3 / r5).epsilon(1e-12));
    CHECK(numeric[3] == doctest::Approx(2 / r5).epsilon(1e-12));

    const auto c4 = verify_splitting_theorem(named_graph(Family::cycle, 4), 3);
    CHECK(c4.passed);
    const auto c4_numeric =
        vertex_energies(eigendecompose_symmetric(adjacency_matrix(m_splitting(named_graph(Family::cycle, 4), 3))));
    for (std::size_t k = 0; k < 4; ++k) CHECK(c4_numeric[k] == doctest::Approx(7 / std::sqrt(13.0)).epsilon(1e-10));
    for (std::size_t k = 4; k < 16; ++k) CHECK(c4_numeric[k] == doctest::Approx(2 / std::sqrt(13.0)).epsilon(1e-10));

    const auto empty = verify_splitting_theorem(graph_from_edge_list(2, {}), 2);
    CHECK(empty.passed);
    CHECK(empty.max_abs_deviation == 0.0);
}

TEST_CASE("verify_shadow_theorem") {
    const auto k2 = verify_shadow_theorem(named_graph(Family::complete, 2), 2);
    CHECK(k2.passed);
    const auto c4_energies =
        vertex_energies(eigendecompose_symmetric(adjacency_matrix(m_shadow(named_graph(Family::complete, 2), 2))));
    for (double e : c4_energies.values) CHECK(e == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(verify_shadow_theorem(named_graph(Family::path, 3), 3).passed);

    const auto identity = verify_shadow_theorem(named_graph(Family::complete_bipartite, 2, 3), 1);
    CHECK(identity.passed);
    CHECK(identity.max_abs_deviation < 1e-14);
}

TEST_CASE("verify_total_energy_factors") {
    const auto [split, shadow] = verify_total_energy_factors(named_graph(Family::complete, 2), 1);
    CHECK(split.claim == Claim::splitting_total_energy);
    CHECK(shadow.claim == Claim::shadow_total_energy);
    CHECK(split.passed);
    CHECK(shadow.passed);
    CHECK_FALSE(split.per_vertex_deviations.has_value());

    const double p4_energy = graph_energy(eigendecompose_symmetric(adjacency_matrix(named_graph(Family::path, 4))));
    CHECK(p4_energy == doctest::Approx(2 * std::sqrt(5.0)).epsilon(1e-12));

    const auto [s2, d2] = verify_total_energy_factors(named_graph(Family::complete, 2), 2);
    CHECK(s2.passed);
    CHECK(d2.passed);

    const auto [se, de] = verify_total_energy_factors(graph_from_edge_list(4, {}), 3);
    CHECK(se.max_abs_deviation == 0.0);
    CHECK(de.max_abs_deviation == 0.0);
}

TEST_CASE("verify_spectrum_maps") {
    const auto [split, shadow] = verify_spectrum_maps(named_graph(Family::complete, 2), 1);
    CHECK(split.passed);
    CHECK(shadow.passed);
    REQUIRE(split.per_vertex_deviations);
    CHECK(split.per_vertex_deviations->size() == 4);

    const auto [p3_split, p3_shadow] = verify_spectrum_maps(named_graph(Family::path, 3), 2);
    CHECK(p3_split.passed);
    CHECK(p3_shadow.passed);
    CHECK(p3_split.per_vertex_deviations->size() == 9);
}

TEST_CASE("verify_energy_partition") {
    VerifyOptions opts;
    opts.tol = kPartitionTolerance;
    CHECK(verify_energy_partition(named_graph(Family::complete, 2), opts).passed);
    CHECK(verify_energy_partition(named_graph(Family::path, 3), opts).passed);
    const auto empty = verify_energy_partition(graph_from_edge_list(3, {}), opts);
    CHECK(empty.passed);
    CHECK(empty.max_abs_deviation == 0.0);
    CHECK(empty.m == 0);
}

TEST_CASE("reports pass exactly when the deviation is within tolerance") {
    VerifyOptions opts;
    opts.tol = 1e-300;
    const auto r = verify_splitting_theorem(named_graph(Family::cycle, 5), 2, opts);
    CHECK(r.passed == (r.max_abs_deviation <= r.tolerance));
    CHECK(r.tolerance == 1e-300);
}

TEST_CASE("run_suite over the default corpus") {
    const std::vector<std::size_t> ms{1, 2, 3, 4};
    const auto corpus = default_corpus(kDefaultSeed);
    const auto reports = run_suite(corpus, ms);
    CHECK(reports.size() == corpus.size() * (1 + 6 * ms.size()));
    for (const auto& r : reports) {
        CAPTURE(r.graph_descriptor);
        CAPTURE(to_string(r.claim));
        CAPTURE(r.m);
        CHECK(r.passed);
        CHECK(r.error.empty());
        CHECK(r.passed == (r.max_abs_deviation <= r.tolerance));
    }
    for (std::size_t k = 1; k < reports.size(); ++k) {
        const auto& a = reports[k - 1];
        const auto& b = reports[k];
        const bool ordered = a.graph_descriptor < b.graph_descriptor ||
                             (a.graph_descriptor == b.graph_descriptor &&
                              (a.claim < b.claim || (a.claim == b.claim && a.m < b.m)));
        CHECK(ordered);
    }
}

TEST_CASE("run_suite edge cases") {
    const std::vector<CorpusEntry> single{{"E1", graph_from_edge_list(1, {})}};
    const std::vector<std::size_t> one{1};
    const auto reports = run_suite(single, one);
    CHECK(reports.size() == 7);
    for (const auto& r : reports) CHECK(r.passed);

    const auto partition_only = run_suite(default_corpus(), std::span<const std::size_t>{});
    CHECK(partition_only.size() == default_corpus().size());
    for (const auto& r : partition_only) {
        CHECK(r.claim == Claim::energy_partition);
        CHECK(r.tolerance == kPartitionTolerance);
    }

    CHECK_THROWS_AS(run_suite({}, one), std::invalid_argument);
    const std::vector<std::size_t> zero{0};
    CHECK_THROWS_AS(run_suite(single, zero), std::invalid_argument);
}

TEST_CASE("run_suite is deterministic") {
    const std::vector<std::size_t> ms{1, 3};
    const auto a = run_suite(default_corpus(7), ms);
    const auto b = run_suite(default_corpus(7), ms);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].graph_descriptor == b[k].graph_descriptor);
        CHECK(a[k].max_abs_deviation == b[k].max_abs_deviation);
        CHECK(a[k].per_vertex_deviations == b[k].per_vertex_deviations);
    }
}

TEST_CASE("deviations do not grow when the solver tolerance is tightened") {
    const std::vector<std::size_t> ms{1, 2, 3, 4};
    VerifyOptions base_opts;
    base_opts.eigen_tol = 1e-12;
    VerifyOptions tight_opts;
    tight_opts.eigen_tol = 1e-14;
    const auto corpus = default_corpus();
    const auto base = run_suite(corpus, ms, base_opts);
    const auto tight = run_suite(corpus, ms, tight_opts);
    REQUIRE(base.size() == tight.size());
    for (std::size_t k = 0; k < base.size(); ++k) {
        CAPTURE(base[k].graph_descriptor);
        CAPTURE(to_string(base[k].claim));
        // Deviations at the roundoff floor are compared against 1e-15 instead of 0.
        CHECK(tight[k].max_abs_deviation <= 10.0 * std::max(base[k].max_abs_deviation, 1e-15));
        CHECK(tight[k].passed);
    }
}

TEST_CASE("default corpus composition") {
    const auto corpus = default_corpus();
    std::set<std::string> names;
    std::size_t random = 0;
    bool has_disconnected = false;
    bool has_isolated = false;
    for (const auto& e : corpus) {
        names.insert(e.descriptor);
        if (e.descriptor.rfind("G(", 0) == 0) ++random;
        for (std::size_t v = 0; v < e.graph.vertex_count(); ++v)
            if (e.graph.degree(v) == 0 && e.graph.edge_count() > 0) has_isolated = true;
        if (e.descriptor == "P3+C4") has_disconnected = true;
    }
    CHECK(names.size() == corpus.size());
    CHECK(random == 9);
    CHECK(has_disconnected);
    CHECK(has_isolated);
    for (const char* name : {"P1", "P8", "C3", "C8", "K2", "K6", "K1,1", "K1,5", "K4,4", "K1,7", "K3,5"})
        CHECK(names.count(name) == 1);
    CHECK(names.count("K5,3") == 0);

    const auto again = default_corpus();
    for (std::size_t k = 0; k < corpus.size(); ++k) CHECK(corpus[k].graph == again[k].graph);
    const auto other = default_corpus(43);
    bool differs = false;
    for (std::size_t k = 0; k < corpus.size(); ++k) differs |= !(corpus[k].graph == other[k].graph);
    CHECK(differs);
}
