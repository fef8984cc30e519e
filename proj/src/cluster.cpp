#include "xmlclust/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "xmlclust/rng.hpp"

namespace xmlclust {

std::vector<double> Prototype::profile() const {
    std::vector<double> out(counts.size());
    for (std::size_t j = 0; j < counts.size(); ++j) out[j] = counts[j] / total;
    return out;
}

std::vector<int> Partition::labels_for(const CountMatrix& matrix) const {
    std::vector<int> labels;
    labels.reserve(matrix.n_docs());
    for (const auto& doc_id : matrix.doc_ids()) {
        const auto it = assignment.find(doc_id);
        if (it == assignment.end()) {
            throw std::invalid_argument("partition does not cover document " + doc_id);
        }
        labels.push_back(it->second);
    }
    return labels;
}

double chi2_distance(std::span<const double> x_counts, double x_total,
                     std::span<const double> g_counts, double g_total,
                     std::span<const double> col_mass) {
    if (x_total <= 0.0 || g_total <= 0.0) {
        throw std::invalid_argument("chi2_distance: zero-total profile");
    }
    if (x_counts.size() != g_counts.size() || x_counts.size() != col_mass.size()) {
        throw std::invalid_argument("chi2_distance: dimension mismatch");
    }
    double d2 = 0.0;
    for (std::size_t j = 0; j < x_counts.size(); ++j) {
        if (col_mass[j] <= 0.0) {
            throw std::invalid_argument("chi2_distance: non-positive column mass");
        }
        const double diff = x_counts[j] / x_total - g_counts[j] / g_total;
        d2 += diff * diff / col_mass[j];
    }
    return d2;
}

namespace {

// Precomputed per-run view of the matrix.
struct Workspace {
    const CountMatrix& matrix;
    std::vector<std::vector<double>> profiles;
    std::vector<double> weights;
    std::vector<double> inv_col_mass;  // empty unless chi2
    DistanceKind distance;

    Workspace(const CountMatrix& m, DistanceKind dist, WeightMode weighting)
        : matrix(m), distance(dist) {
        const auto n = m.n_docs();
        profiles.reserve(n);
        for (std::size_t s = 0; s < n; ++s) profiles.push_back(m.profile(s));
        weights.resize(n);
        for (std::size_t s = 0; s < n; ++s) {
            weights[s] = weighting == WeightMode::RowMass
                             ? static_cast<double>(m.row_total(s)) /
                                   static_cast<double>(m.total())
                             : 1.0 / static_cast<double>(n);
        }
        if (dist == DistanceKind::Chi2) {
            const auto mass = m.col_mass();
            inv_col_mass.resize(mass.size());
            for (std::size_t j = 0; j < mass.size(); ++j) {
                if (mass[j] <= 0.0) {
                    throw std::invalid_argument(
                        "clustering requires every vocabulary column to occur; "
                        "empty column " + m.vocab().word(j));
                }
                inv_col_mass[j] = 1.0 / mass[j];
            }
        }
    }

    double dist2(const std::vector<double>& a, const std::vector<double>& b) const {
        switch (distance) {
            case DistanceKind::Chi2: {
                double d2 = 0.0;
                for (std::size_t j = 0; j < a.size(); ++j) {
                    const double diff = a[j] - b[j];
                    d2 += diff * diff * inv_col_mass[j];
                }
                return d2;
            }
            case DistanceKind::Euclidean: {
                double d2 = 0.0;
                for (std::size_t j = 0; j < a.size(); ++j) {
                    const double diff = a[j] - b[j];
                    d2 += diff * diff;
                }
                return d2;
            }
            case DistanceKind::Cosine: {
                double dot = 0.0, na = 0.0, nb = 0.0;
                for (std::size_t j = 0; j < a.size(); ++j) {
                    dot += a[j] * b[j];
                    na += a[j] * a[j];
                    nb += b[j] * b[j];
                }
                if (na == 0.0 || nb == 0.0) return 1.0;
                return 1.0 - dot / std::sqrt(na * nb);
            }
        }
        return 0.0;
    }
};

struct ClusterAggregate {
    int cluster_id;
    std::vector<double> counts;
    double total;
    std::vector<double> profile;
};

std::vector<ClusterAggregate> aggregate(const Workspace& ws,
                                        const std::vector<int>& labels, int k) {
    const auto p = ws.matrix.n_words();
    std::vector<std::vector<double>> sums(k, std::vector<double>(p, 0.0));
    std::vector<double> totals(k, 0.0);
    std::vector<int> members(k, 0);
    for (std::size_t s = 0; s < labels.size(); ++s) {
        auto& sum = sums[labels[s]];
        for (const auto& [j, count] : ws.matrix.row(s)) {
            sum[j] += static_cast<double>(count);
        }
        totals[labels[s]] += static_cast<double>(ws.matrix.row_total(s));
        ++members[labels[s]];
    }
    std::vector<ClusterAggregate> out;
    for (int i = 0; i < k; ++i) {
        if (members[i] == 0) continue;
        ClusterAggregate agg;
        agg.cluster_id = i;
        agg.counts = std::move(sums[i]);
        agg.total = totals[i];
        agg.profile.resize(p);
        for (std::size_t j = 0; j < p; ++j) agg.profile[j] = agg.counts[j] / agg.total;
        out.push_back(std::move(agg));
    }
    return out;
}

double objective(const Workspace& ws, const std::vector<int>& labels,
                 const std::vector<ClusterAggregate>& aggs) {
    std::vector<const std::vector<double>*> profile_of(
        static_cast<std::size_t>(
            1 + *std::max_element(labels.begin(), labels.end())),
        nullptr);
    for (const auto& agg : aggs) {
        if (static_cast<std::size_t>(agg.cluster_id) >= profile_of.size()) continue;
        profile_of[agg.cluster_id] = &agg.profile;
    }
    double w = 0.0;
    for (std::size_t s = 0; s < labels.size(); ++s) {
        w += ws.weights[s] * ws.dist2(ws.profiles[s], *profile_of[labels[s]]);
    }
    return w;
}

std::vector<std::size_t> init_uniform(const Workspace& ws, int k, Rng& rng) {
    const auto n = ws.matrix.n_docs();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (int i = 0; i < k; ++i) {
        const auto j = i + static_cast<std::size_t>(
                               rng.bounded(static_cast<std::uint64_t>(n - i)));
        std::swap(order[i], order[j]);
    }
    order.resize(k);
    return order;
}

std::vector<std::size_t> init_spread(const Workspace& ws, int k, Rng& rng) {
    const auto n = ws.matrix.n_docs();
    std::vector<std::size_t> chosen;
    chosen.push_back(rng.bounded(n));
    std::vector<char> is_chosen(n, 0);
    is_chosen[chosen[0]] = 1;
    std::vector<double> d_min(n, std::numeric_limits<double>::infinity());
    while (chosen.size() < static_cast<std::size_t>(k)) {
        const auto& latest = ws.profiles[chosen.back()];
        double sum = 0.0;
        for (std::size_t s = 0; s < n; ++s) {
            d_min[s] = std::min(d_min[s], ws.dist2(ws.profiles[s], latest));
            if (!is_chosen[s]) sum += d_min[s];
        }
        std::size_t pick = n;
        if (sum > 0.0) {
            const double r = rng.uniform() * sum;
            double acc = 0.0;
            for (std::size_t s = 0; s < n; ++s) {
                if (is_chosen[s]) continue;
                acc += d_min[s];
                if (acc > r) {
                    pick = s;
                    break;
                }
            }
        }
        if (pick == n) {
            // all remaining mass zero (duplicate profiles): smallest unchosen
            for (std::size_t s = 0; s < n; ++s) {
                if (!is_chosen[s]) {
                    pick = s;
                    break;
                }
            }
        }
        is_chosen[pick] = 1;
        chosen.push_back(pick);
    }
    return chosen;
}

struct SingleRun {
    std::vector<int> labels;
    std::vector<ClusterAggregate> aggs;
    std::vector<double> history;
    int iterations = 0;
    bool converged = false;
};

SingleRun run_once(const Workspace& ws, int k, std::uint64_t seed,
                   const ClusterOptions& opts) {
    const auto n = ws.matrix.n_docs();
    Rng rng(seed);
    const auto seeds = opts.init == InitMode::Uniform ? init_uniform(ws, k, rng)
                                                      : init_spread(ws, k, rng);

    // initial prototypes are the seed documents themselves
    std::vector<ClusterAggregate> aggs;
    for (int i = 0; i < k; ++i) {
        ClusterAggregate agg;
        agg.cluster_id = i;
        agg.counts = ws.matrix.dense_row(seeds[i]);
        agg.total = static_cast<double>(ws.matrix.row_total(seeds[i]));
        agg.profile = ws.profiles[seeds[i]];
        aggs.push_back(std::move(agg));
    }

    SingleRun run;
    std::vector<int> labels(n, -1);
    for (int iter = 0; iter < opts.max_iter; ++iter) {
        // assignment: argmin distance, ties to the smallest cluster id
        std::vector<int> next(n, -1);
        for (std::size_t s = 0; s < n; ++s) {
            double best = std::numeric_limits<double>::infinity();
            int best_id = -1;
            for (const auto& agg : aggs) {
                const double d2 = ws.dist2(ws.profiles[s], agg.profile);
                if (d2 < best) {
                    best = d2;
                    best_id = agg.cluster_id;
                }
            }
            next[s] = best_id;
        }

        if (next == labels) {
            run.converged = true;
            break;
        }
        labels = std::move(next);

        if (opts.empty_policy == EmptyPolicy::Reseed) {
            std::vector<int> members(k, 0);
            for (const auto l : labels) ++members[l];
            std::vector<const std::vector<double>*> profile_of(k, nullptr);
            for (const auto& agg : aggs) profile_of[agg.cluster_id] = &agg.profile;
            for (int i = 0; i < k; ++i) {
                if (members[i] > 0) continue;
                // move the document farthest from its own prototype,
                // never emptying another cluster
                double worst = -1.0;
                std::size_t pick = n;
                for (std::size_t s = 0; s < n; ++s) {
                    if (members[labels[s]] < 2) continue;
                    if (profile_of[labels[s]] == nullptr) continue;
                    const double d2 =
                        ws.dist2(ws.profiles[s], *profile_of[labels[s]]);
                    if (d2 > worst) {
                        worst = d2;
                        pick = s;
                    }
                }
                if (pick == n) continue;  // nothing movable
                --members[labels[pick]];
                labels[pick] = i;
                members[i] = 1;
            }
        }

        aggs = aggregate(ws, labels, k);
        run.history.push_back(objective(ws, labels, aggs));
        ++run.iterations;
    }

    run.labels = std::move(labels);
    run.aggs = std::move(aggs);
    return run;
}

}  // namespace

Partition assign(const CountMatrix& matrix, const std::vector<Prototype>& prototypes,
                 DistanceKind distance) {
    if (prototypes.empty()) throw std::invalid_argument("assign: no prototypes");
    for (const auto& proto : prototypes) {
        if (proto.total <= 0.0) {
            throw std::invalid_argument("assign: empty prototype " +
                                        std::to_string(proto.cluster_id));
        }
    }
    Workspace ws(matrix, distance, WeightMode::RowMass);
    std::vector<std::pair<int, std::vector<double>>> profiles;
    profiles.reserve(prototypes.size());
    for (const auto& proto : prototypes) {
        profiles.emplace_back(proto.cluster_id, proto.profile());
    }

    Partition part;
    int max_id = 0;
    for (std::size_t s = 0; s < matrix.n_docs(); ++s) {
        double best = std::numeric_limits<double>::infinity();
        int best_id = -1;
        for (const auto& [cluster_id, profile] : profiles) {
            const double d2 = ws.dist2(ws.profiles[s], profile);
            if (d2 < best || (d2 == best && cluster_id < best_id)) {
                best = d2;
                best_id = cluster_id;
            }
        }
        part.assignment[matrix.doc_ids()[s]] = best_id;
        max_id = std::max(max_id, best_id);
    }
    part.k = max_id + 1;
    return part;
}

std::vector<Prototype> update_prototypes(const CountMatrix& matrix,
                                         const Partition& partition) {
    const auto labels = partition.labels_for(matrix);
    const int k = partition.k;
    Workspace ws(matrix, DistanceKind::Euclidean, WeightMode::RowMass);
    auto aggs = aggregate(ws, labels, k);
    std::vector<Prototype> out;
    out.reserve(aggs.size());
    for (auto& agg : aggs) {
        out.push_back({agg.cluster_id, std::move(agg.counts), agg.total});
    }
    return out;
}

ClusterRun cluster(const CountMatrix& matrix, int k, const ClusterOptions& opts) {
    const auto n = matrix.n_docs();
    if (k <= 0) throw std::invalid_argument("cluster: k must be positive");
    if (static_cast<std::size_t>(k) > n) {
        throw std::invalid_argument("cluster: k exceeds document count");
    }
    if (opts.restarts < 1 || opts.max_iter < 1) {
        throw std::invalid_argument("cluster: restarts and max_iter must be >= 1");
    }

    Workspace ws(matrix, opts.distance, opts.weighting);

    std::vector<SingleRun> runs(opts.restarts);
    auto job = [&](int r) { return run_once(ws, k, opts.seed + r, opts); };
    if (opts.restarts == 1) {
        runs[0] = job(0);
    } else {
        std::vector<std::future<SingleRun>> futures;
        futures.reserve(opts.restarts);
        for (int r = 0; r < opts.restarts; ++r) {
            futures.push_back(std::async(std::launch::async, job, r));
        }
        for (int r = 0; r < opts.restarts; ++r) runs[r] = futures[r].get();
    }

    // smallest final objective wins; equal objectives keep the earlier seed
    int best = 0;
    for (int r = 1; r < opts.restarts; ++r) {
        if (runs[r].history.back() < runs[best].history.back()) best = r;
    }

    const auto& winner = runs[best];
    ClusterRun result;
    result.seed = opts.seed + best;
    result.iterations = winner.iterations;
    result.converged = winner.converged;
    result.objective_history = winner.history;
    result.partition.k = k;
    for (std::size_t s = 0; s < n; ++s) {
        result.partition.assignment[matrix.doc_ids()[s]] = winner.labels[s];
    }
    for (const auto& agg : winner.aggs) {
        result.prototypes.push_back({agg.cluster_id, agg.counts, agg.total});
    }
    return result;
}

namespace {

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace

void write_assignments_csv(std::ostream& out, const Partition& partition) {
    out << "doc_id,cluster_id\n";
    for (const auto& [doc_id, cluster_id] : partition.assignment) {
        out << doc_id << ',' << cluster_id << '\n';
    }
}

void write_run_metadata(std::ostream& out, const ClusterRun& run) {
    out << "seed = " << run.seed << '\n';
    out << "iterations = " << run.iterations << '\n';
    out << "converged = " << (run.converged ? "true" : "false") << '\n';
    out << "objective = " << fmt6(run.objective()) << '\n';
    out << "objective_history =";
    for (const auto w : run.objective_history) out << ' ' << fmt6(w);
    out << '\n';
}

}  // namespace xmlclust
