/*
 * Copyright (c) 2026, CEL library developers.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CEL_SIMULATION_HPP
#define CEL_SIMULATION_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "cel/distribution.hpp"

namespace cel {

/// Counter-based uniform stream: every draw is a hash of
/// (seed, stream_index, counter), so identical (seed, stream_index) yield an
/// identical sequence on every platform, substreams are independent, and
/// streams can be handed to worker threads as plain values.
struct SeededStream {
  std::uint64_t seed = 0;
  std::uint64_t stream_index = 0;
  std::uint64_t counter = 0;

  std::uint64_t next_u64();
  /// Uniform draw on the open interval (0, 1); never returns 0 or 1.
  double next_open_unit();
};

/// n inverse-transform variates quantile(u) from CEL(theta).
std::vector<double> sample_cel(const CelDistribution& d, std::size_t n,
                               SeededStream& stream);

struct SimSummary {
  int n = 0;
  int replications = 0;
  double bias = 0.0;           // mean(theta_hat) - theta   (1/N divisor)
  double mse = 0.0;            // mean((theta_hat - theta)^2)
  double variance = 0.0;       // sample variance of theta_hat (1/(N-1))
  double mean_estimate = 0.0;  // theta + bias
  int failures = 0;            // non-converged fits, excluded from the stats
};

struct SimulationOptions {
  int threads = 0;  // 0 = hardware concurrency
  double fit_tol = 1e-10;
  double max_failure_fraction = 0.01;
};

/// Monte Carlo study of the maximum-likelihood estimator: for every sample
/// size, draws `replications` independent samples (stream_index = replication
/// index), fits CEL(theta) to each, and accumulates bias / MSE / variance /
/// mean estimate. Replications run in parallel; the reduction is a fixed
/// fold over replication index, so results do not depend on the thread
/// count. Throws ConvergenceError when more than max_failure_fraction of the
/// replications at any size fail to converge.
std::vector<SimSummary> run_simulation_study(const Theta& theta,
                                             std::span<const int> sizes,
                                             int replications,
                                             std::uint64_t seed,
                                             const SimulationOptions& opt = {});

}  // namespace cel

#endif  // CEL_SIMULATION_HPP
