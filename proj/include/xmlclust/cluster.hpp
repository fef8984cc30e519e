#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "xmlclust/vocab.hpp"

namespace xmlclust {

// Per-cluster aggregated counts: g_j = sum of member rows, column-wise.
struct Prototype {
    int cluster_id = 0;
    std::vector<double> counts;
    double total = 0.0;

    std::vector<double> profile() const;
};

struct Partition {
    std::map<std::string, int> assignment;  // doc_id -> cluster id
    int k = 0;

    std::vector<int> labels_for(const CountMatrix& matrix) const;
};

enum class EmptyPolicy { Reseed, Drop };
enum class InitMode { Uniform, Spread };
enum class DistanceKind { Chi2, Euclidean, Cosine };
enum class WeightMode { RowMass, Uniform };

struct ClusterOptions {
    int restarts = 10;
    int max_iter = 100;
    std::uint64_t seed = 1;
    EmptyPolicy empty_policy = EmptyPolicy::Reseed;
    InitMode init = InitMode::Uniform;
    DistanceKind distance = DistanceKind::Chi2;
    // RowMass makes the count-sum prototype the within-class optimum, so
    // the objective is provably non-increasing; Uniform has no such
    // guarantee and is offered for comparison runs only.
    WeightMode weighting = WeightMode::RowMass;
};

// d²(x, g) = Σ_j (1/c_j) (x_j/x. − g_j/g.)², the chi-square distance
// between the two count profiles under column masses c. Throws when a
// total is zero or some c_j is not positive.
double chi2_distance(std::span<const double> x_counts, double x_total,
                     std::span<const double> g_counts, double g_total,
                     std::span<const double> col_mass);

// Nearest-prototype assignment; ties go to the smallest cluster id.
Partition assign(const CountMatrix& matrix, const std::vector<Prototype>& prototypes,
                 DistanceKind distance = DistanceKind::Chi2);

// Count-sum prototypes of the non-empty classes, ordered by cluster id.
std::vector<Prototype> update_prototypes(const CountMatrix& matrix,
                                         const Partition& partition);

struct ClusterRun {
    Partition partition;
    std::vector<Prototype> prototypes;
    std::vector<double> objective_history;  // after each update step
    std::uint64_t seed = 0;                 // seed of the winning restart
    int iterations = 0;
    bool converged = false;

    double objective() const {
        return objective_history.empty() ? 0.0 : objective_history.back();
    }
};

// Iterated assign/update from `restarts` seeded starts; returns the run
// with the smallest final objective (ties: smaller restart seed).
ClusterRun cluster(const CountMatrix& matrix, int k, const ClusterOptions& opts = {});

void write_assignments_csv(std::ostream& out, const Partition& partition);
void write_run_metadata(std::ostream& out, const ClusterRun& run);

}  // namespace xmlclust
