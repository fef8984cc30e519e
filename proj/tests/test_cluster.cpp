#include "xmlclust/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "xmlclust/rng.hpp"

using namespace xmlclust;

namespace {

std::vector<std::string> ids(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t s = 0; s < n; ++s) out.push_back("d" + std::to_string(s));
    return out;
}

std::vector<std::string> words(std::size_t p) {
    std::vector<std::string> out;
    for (std::size_t j = 0; j < p; ++j) out.push_back("w" + std::to_string(j));
    return out;
}

// Random dense counts with no all-zero row or column.
CountMatrix random_matrix(Rng& rng, std::size_t n, std::size_t p) {
    std::vector<std::vector<std::int64_t>> counts(
        n, std::vector<std::int64_t>(p, 0));
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t j = 0; j < p; ++j) {
            counts[s][j] = static_cast<std::int64_t>(rng.bounded(6));
        }
        counts[s][rng.bounded(p)] += 1;
    }
    for (std::size_t j = 0; j < p; ++j) counts[rng.bounded(n)][j] += 1;
    return CountMatrix::from_dense(ids(n), words(p), counts);
}

}  // namespace

TEST_SUITE("cluster") {

TEST_CASE("chi2_distance on a worked two-column example") {
    const std::vector<double> x{1.0, 0.0};
    const std::vector<double> g{0.0, 1.0};
    const std::vector<double> mass{0.5, 0.5};
    // profiles (1,0) vs (0,1): 2*(1)^2 + 2*(1)^2
    CHECK(chi2_distance(x, 1.0, g, 1.0, mass) == 4.0);
    CHECK(chi2_distance(g, 1.0, x, 1.0, mass) == 4.0);
    CHECK(chi2_distance(x, 1.0, x, 1.0, mass) == 0.0);
}

TEST_CASE("chi2_distance validates its inputs") {
    const std::vector<double> x{1.0, 0.0};
    const std::vector<double> short_g{1.0};
    const std::vector<double> mass{0.5, 0.5};
    CHECK_THROWS_AS(chi2_distance(x, 1.0, short_g, 1.0, mass),
                    std::invalid_argument);
    CHECK_THROWS_AS(chi2_distance(x, 0.0, x, 1.0, mass), std::invalid_argument);
    CHECK_THROWS_AS(chi2_distance(x, 1.0, x, 0.0, mass), std::invalid_argument);
    const std::vector<double> bad_mass{0.5, 0.0};
    CHECK_THROWS_AS(chi2_distance(x, 1.0, x, 1.0, bad_mass),
                    std::invalid_argument);
}

TEST_CASE("chi2_distance depends on profiles, not raw scale") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t p = 2 + rng.bounded(6);
        std::vector<double> x(p), g(p), mass(p);
        double xt = 0.0, gt = 0.0, mt = 0.0;
        for (std::size_t j = 0; j < p; ++j) {
            x[j] = static_cast<double>(rng.bounded(9));
            g[j] = static_cast<double>(rng.bounded(9));
            mass[j] = 1.0 + static_cast<double>(rng.bounded(5));
            xt += x[j];
            gt += g[j];
            mt += mass[j];
        }
        if (xt == 0.0 || gt == 0.0) continue;
        for (std::size_t j = 0; j < p; ++j) mass[j] /= mt;
        const double base = chi2_distance(x, xt, g, gt, mass);
        // doubling every count doubles the total: same profile, same value
        std::vector<double> x2(p);
        for (std::size_t j = 0; j < p; ++j) x2[j] = 2.0 * x[j];
        CHECK(chi2_distance(x2, 2.0 * xt, g, gt, mass) == base);
    }
}

TEST_CASE("assign picks the nearest prototype, ties to the smaller id") {
    const auto m = CountMatrix::from_dense(ids(2), words(2), {{1, 0}, {0, 1}});
    Prototype a{0, {1.0, 0.0}, 1.0};
    Prototype b{1, {0.0, 1.0}, 1.0};
    auto part = assign(m, {a, b});
    CHECK(part.assignment.at("d0") == 0);
    CHECK(part.assignment.at("d1") == 1);
    CHECK(part.k == 2);

    // identical prototypes: every document goes to the smaller id
    Prototype twin{7, {1.0, 0.0}, 1.0};
    Prototype twin2{3, {1.0, 0.0}, 1.0};
    part = assign(m, {twin, twin2});
    CHECK(part.assignment.at("d0") == 3);

    CHECK_THROWS_AS(assign(m, {}), std::invalid_argument);
    Prototype empty{0, {0.0, 0.0}, 0.0};
    CHECK_THROWS_AS(assign(m, {empty}), std::invalid_argument);
}

TEST_CASE("assign agrees with a direct argmin over chi2_distance") {
    Rng rng(99);
    const auto m = random_matrix(rng, 40, 6);
    const auto mass = m.col_mass();

    // prototypes from an arbitrary labeling
    Partition seed;
    seed.k = 4;
    for (std::size_t s = 0; s < m.n_docs(); ++s) {
        seed.assignment[m.doc_ids()[s]] = static_cast<int>(s % 4);
    }
    const auto prototypes = update_prototypes(m, seed);
    const auto part = assign(m, prototypes);

    for (std::size_t s = 0; s < m.n_docs(); ++s) {
        const auto row = m.dense_row(s);
        const auto total = static_cast<double>(m.row_total(s));
        int best_id = -1;
        double best = 0.0;
        for (const auto& proto : prototypes) {
            const double d2 =
                chi2_distance(row, total, proto.counts, proto.total, mass);
            if (best_id < 0 || d2 < best) {
                best = d2;
                best_id = proto.cluster_id;
            }
        }
        CHECK(part.assignment.at(m.doc_ids()[s]) == best_id);
    }
}

TEST_CASE("update_prototypes sums member rows per cluster") {
    const auto m = CountMatrix::from_dense(ids(3), words(2),
                                           {{2, 0}, {1, 1}, {0, 3}});
    Partition part;
    part.k = 2;
    part.assignment = {{"d0", 0}, {"d1", 0}, {"d2", 1}};
    const auto protos = update_prototypes(m, part);
    REQUIRE(protos.size() == 2);
    CHECK(protos[0].cluster_id == 0);
    CHECK(protos[0].counts == std::vector<double>{3.0, 1.0});
    CHECK(protos[0].total == 4.0);
    CHECK(protos[1].counts == std::vector<double>{0.0, 3.0});
    CHECK(protos[1].total == 3.0);
    // profile of the aggregate, not the average of profiles
    CHECK(protos[0].profile() == std::vector<double>{0.75, 0.25});

    // empty clusters yield no prototype
    Partition sparse;
    sparse.k = 3;
    sparse.assignment = {{"d0", 2}, {"d1", 2}, {"d2", 0}};
    const auto some = update_prototypes(m, sparse);
    REQUIRE(some.size() == 2);
    CHECK(some[0].cluster_id == 0);
    CHECK(some[1].cluster_id == 2);
}

TEST_CASE("two separable blobs reach a zero objective") {
    const auto m = CountMatrix::from_dense(
        ids(4), words(2), {{2, 0}, {1, 0}, {0, 1}, {0, 2}});
    ClusterOptions opts;
    opts.restarts = 10;
    opts.seed = 1;
    const auto run = cluster(m, 2, opts);
    CHECK(run.objective() == 0.0);
    CHECK(run.converged);
    const auto& a = run.partition.assignment;
    CHECK(a.at("d0") == a.at("d1"));
    CHECK(a.at("d2") == a.at("d3"));
    CHECK(a.at("d0") != a.at("d2"));
    REQUIRE(run.prototypes.size() == 2);
}

TEST_CASE("single cluster inertia matches the hand computation") {
    const auto m = CountMatrix::from_dense(ids(2), words(2), {{1, 0}, {0, 1}});
    ClusterOptions opts;
    opts.restarts = 1;
    const auto run = cluster(m, 1, opts);
    // both documents sit at chi2 distance 1 from the (1,1) pooled profile,
    // each carrying half the mass
    CHECK(run.objective() == 1.0);
    CHECK(run.converged);
    CHECK(run.partition.k == 1);
}

TEST_CASE("mixed document splits its weight into the objective") {
    const auto m = CountMatrix::from_dense(ids(3), words(2),
                                           {{2, 0}, {0, 2}, {1, 1}});
    ClusterOptions opts;
    opts.restarts = 1;
    const auto run = cluster(m, 1, opts);
    CHECK(run.objective() ==
          doctest::Approx(2.0 * (2.0 / 6.0)).epsilon(1e-14));
}

TEST_CASE("objective history never increases") {
    Rng rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 4 + rng.bounded(16);
        const std::size_t p = 2 + rng.bounded(7);
        const auto m = random_matrix(rng, n, p);
        const int k = 2 + static_cast<int>(rng.bounded(3));
        if (static_cast<std::size_t>(k) > n) continue;
        ClusterOptions opts;
        opts.restarts = 1;
        opts.seed = 1000 + static_cast<std::uint64_t>(trial);
        opts.max_iter = 100;
        const auto run = cluster(m, k, opts);
        REQUIRE_FALSE(run.objective_history.empty());
        for (std::size_t i = 1; i < run.objective_history.size(); ++i) {
            CHECK(run.objective_history[i] <=
                  run.objective_history[i - 1] + 1e-9);
        }
        CHECK(run.converged);
        CHECK(run.iterations <= opts.max_iter);
        // every document is labeled with a valid cluster id
        CHECK(run.partition.assignment.size() == n);
        for (const auto& [doc, label] : run.partition.assignment) {
            CHECK(label >= 0);
            CHECK(label < k);
        }
    }
}

TEST_CASE("fixed seeds reproduce the exact run") {
    Rng rng(5);
    const auto m = random_matrix(rng, 20, 5);
    ClusterOptions opts;
    opts.restarts = 4;
    opts.seed = 11;
    const auto a = cluster(m, 3, opts);
    const auto b = cluster(m, 3, opts);
    CHECK(a.partition.assignment == b.partition.assignment);
    CHECK(a.objective_history == b.objective_history);
    CHECK(a.seed == b.seed);
    CHECK(a.iterations == b.iterations);
}

TEST_CASE("more restarts never end worse") {
    Rng rng(6);
    const auto m = random_matrix(rng, 25, 6);
    ClusterOptions one;
    one.restarts = 1;
    one.seed = 3;
    ClusterOptions many = one;
    many.restarts = 8;
    const auto single = cluster(m, 4, one);
    const auto best = cluster(m, 4, many);
    CHECK(best.objective() <= single.objective() + 1e-12);
}

TEST_CASE("spread seeding separates orthogonal groups in one start") {
    const auto m = CountMatrix::from_dense(
        ids(4), words(2), {{4, 0}, {3, 0}, {0, 5}, {0, 2}});
    ClusterOptions opts;
    opts.restarts = 1;
    opts.seed = 1;
    opts.init = InitMode::Spread;
    const auto run = cluster(m, 2, opts);
    CHECK(run.objective() == 0.0);
    CHECK(run.converged);
    const auto& a = run.partition.assignment;
    CHECK(a.at("d0") == a.at("d1"));
    CHECK(a.at("d2") == a.at("d3"));
    CHECK(a.at("d0") != a.at("d2"));
}

TEST_CASE("duplicate documents with k = n stay stable") {
    // two identical documents force an empty cluster no matter what
    const auto m = CountMatrix::from_dense(ids(3), words(2),
                                           {{5, 0}, {5, 0}, {0, 5}});
    ClusterOptions opts;
    opts.restarts = 2;
    opts.max_iter = 10;
    const auto run = cluster(m, 3, opts);
    CHECK(run.partition.assignment.size() == 3);
    for (const auto& [doc, label] : run.partition.assignment) {
        CHECK(label >= 0);
        CHECK(label < 3);
    }
    CHECK(run.objective() == 0.0);

    ClusterOptions drop = opts;
    drop.empty_policy = EmptyPolicy::Drop;
    const auto dropped = cluster(m, 3, drop);
    CHECK(dropped.objective() == 0.0);
    CHECK(dropped.converged);
}

TEST_CASE("alternative distances run end to end") {
    Rng rng(8);
    const auto m = random_matrix(rng, 12, 4);
    for (const auto dist :
         {DistanceKind::Euclidean, DistanceKind::Cosine}) {
        ClusterOptions opts;
        opts.restarts = 2;
        opts.distance = dist;
        const auto run = cluster(m, 3, opts);
        CHECK(run.partition.assignment.size() == 12);
        CHECK(std::isfinite(run.objective()));
        for (std::size_t i = 1; i < run.objective_history.size(); ++i) {
            CHECK(run.objective_history[i] <=
                  run.objective_history[i - 1] + 1e-9);
        }
    }
}

TEST_CASE("option validation") {
    const auto m = CountMatrix::from_dense(ids(3), words(2),
                                           {{1, 0}, {0, 1}, {1, 1}});
    CHECK_THROWS_AS(cluster(m, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(cluster(m, 4, {}), std::invalid_argument);
    ClusterOptions bad;
    bad.restarts = 0;
    CHECK_THROWS_AS(cluster(m, 2, bad), std::invalid_argument);
    bad = {};
    bad.max_iter = 0;
    CHECK_THROWS_AS(cluster(m, 2, bad), std::invalid_argument);
}

TEST_CASE("assignments csv lists documents in id order") {
    Partition part;
    part.k = 2;
    part.assignment = {{"b", 0}, {"a", 1}};
    std::ostringstream out;
    write_assignments_csv(out, part);
    CHECK(out.str() == "doc_id,cluster_id\na,1\nb,0\n");
}

TEST_CASE("run metadata format") {
    ClusterRun run;
    run.seed = 7;
    run.iterations = 2;
    run.converged = true;
    run.objective_history = {2.5, 1.25};
    std::ostringstream out;
    write_run_metadata(out, run);
    CHECK(out.str() ==
          "seed = 7\n"
          "iterations = 2\n"
          "converged = true\n"
          "objective = 1.250000\n"
          "objective_history = 2.500000 1.250000\n");
}

TEST_CASE("labels_for maps matrix rows to cluster ids") {
    const auto m = CountMatrix::from_dense(ids(2), words(2), {{1, 0}, {0, 1}});
    Partition part;
    part.k = 2;
    part.assignment = {{"d0", 1}, {"d1", 0}};
    CHECK(part.labels_for(m) == std::vector<int>{1, 0});
}

}  // TEST_SUITE
