#pragma once

#include <random>
#include <vector>

#include "lamid/reduced.hpp"

namespace lamid {

struct GreedyOptions {
    int pool_size = 32;          // Latin-hypercube candidate pool over the domain
    int max_hifi_solves = 24;    // total budget, including the 9 seed solves
    double energy_tol = 1e-8;    // POD truncation tolerance
    int n_max = -1;              // optional cap on the basis size
    double tol_stop = 1e-3;      // stop when max indicator < tol_stop * force scale
    int snapshot_stride = 1;     // keep every stride-th trajectory column
    int residual_stride = 10;
    unsigned seed = 7071u;
    int threads = 0;             // 0 = hardware concurrency
};

struct TrainingRecord {
    int iteration = 0;
    DamageParams chosen;
    double indicator = 0.0;  // max pool indicator, relative to the force scale
    int basis_size = 0;
};

struct GreedyResult {
    ReducedBasis basis;
    std::vector<TrainingRecord> log;
    bool reached_tolerance = false;
    int hifi_solves = 0;
};

/// Seeded Latin-hypercube sample of the parametric domain.
std::vector<DamageParams> latin_hypercube(const ParametricDomain& domain, int count,
                                          std::mt19937_64& rng);

/// Greedy global basis construction: seed with the 8 domain corners plus the
/// center, then repeatedly enrich at the pool candidate with the largest
/// residual indicator until the tolerance or the solve budget is hit.
GreedyResult greedy_train(const WaveguideModel& model, const ExcitationSignal& sig, double dt,
                          int steps, const GreedyOptions& options);

}  // namespace lamid
