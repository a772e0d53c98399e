#pragma once

#include <cstdint>
#include <vector>

#include "fedaux/types.hpp"

namespace fedaux {

struct PartitionConfig {
  std::size_t n_clients = 20;
  double alpha = 0.01;
  std::uint64_t seed = 0;
  int max_retries = 100;

  void validate() const;
};

struct Assignment {
  std::vector<std::vector<std::size_t>> client_indices;

  std::size_t n_clients() const { return client_indices.size(); }
  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& c : client_indices) t += c.size();
    return t;
  }
};

// Per-class Dirichlet split: for each class, draw proportions over clients
// from Dirichlet(alpha * 1) and apportion that class's (shuffled) examples by
// largest remainder. If some client ends up empty the whole partition is
// redrawn with an incremented seed, up to max_retries; if every retry leaves
// empty clients (structural at very small alpha), the last draw is repaired by
// moving one example from the largest client to each empty one. Deterministic
// given (dataset, config).
Assignment partition_dirichlet(const Dataset& dataset, const PartitionConfig& config);

// Per-client class fractions sorted descending, truncated (zero-padded) to k,
// plus the cross-client mean of each rank.
struct HeterogeneityStats {
  std::vector<std::vector<double>> per_client;  // each of length k
  std::vector<double> mean_ranked;              // length k
};

HeterogeneityStats heterogeneity_stats(const Assignment& assignment, const Dataset& dataset,
                                       int k);

}  // namespace fedaux
