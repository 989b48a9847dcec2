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

#include "cel/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "cel/fitting.hpp"
#include "cel/numerics.hpp"
#include "cel/sample.hpp"

namespace cel {

namespace {

constexpr std::uint64_t kWeyl = 0x9E3779B97F4A7C15ull;

// SplitMix64 finalizer (Stafford's mix 13).
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t SeededStream::next_u64() {
  const std::uint64_t tag = mix64(stream_index + 0xD1B54A32D192ED03ull);
  const std::uint64_t v = mix64((seed + kWeyl * (counter + 1)) ^ tag);
  ++counter;
  return v;
}

double SeededStream::next_open_unit() {
  // 53-bit mantissa shifted into (0, 1): the +0.5 offset excludes both ends.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

std::vector<double> sample_cel(const CelDistribution& d, std::size_t n,
                               SeededStream& stream) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = d.quantile(stream.next_open_unit());
  }
  return out;
}

std::vector<SimSummary> run_simulation_study(const Theta& theta,
                                             std::span<const int> sizes,
                                             int replications,
                                             std::uint64_t seed,
                                             const SimulationOptions& opt) {
  if (sizes.empty()) {
    throw std::invalid_argument("run_simulation_study: sizes must be nonempty");
  }
  if (replications < 2) {
    throw std::invalid_argument("run_simulation_study: replications must be >= 2");
  }
  for (int n : sizes) {
    if (n < 1) {
      throw std::invalid_argument("run_simulation_study: sizes must be >= 1");
    }
  }

  const CelDistribution dist(theta);
  unsigned thread_count = opt.threads > 0
                              ? static_cast<unsigned>(opt.threads)
                              : std::max(1u, std::thread::hardware_concurrency());
  thread_count = std::min<unsigned>(thread_count,
                                    static_cast<unsigned>(replications));

  std::vector<SimSummary> summaries;
  summaries.reserve(sizes.size());
  for (int n : sizes) {
    std::vector<double> estimates(static_cast<std::size_t>(replications),
                                  std::numeric_limits<double>::quiet_NaN());
    std::atomic<int> next_rep{0};
    auto worker = [&] {
      CelFitOptions fopt;
      fopt.tol = opt.fit_tol;
      for (;;) {
        const int rep = next_rep.fetch_add(1);
        if (rep >= replications) {
          return;
        }
        SeededStream stream{seed, static_cast<std::uint64_t>(rep), 0};
        std::vector<double> values =
            sample_cel(dist, static_cast<std::size_t>(n), stream);
        try {
          Sample sample(std::move(values), "sim");
          estimates[static_cast<std::size_t>(rep)] =
              fit_cel(sample, fopt).estimates[0];
        } catch (const std::exception&) {
          // Left as NaN; counted as a failure below. Letting anything
          // escape here would tear down the worker thread.
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (unsigned t = 0; t < thread_count; ++t) {
      pool.emplace_back(worker);
    }
    for (auto& t : pool) {
      t.join();
    }

    // Deterministic reduction in replication order.
    SimSummary summary;
    summary.n = n;
    summary.replications = replications;
    double sum = 0.0;
    double sum_sq_err = 0.0;
    int successes = 0;
    for (double est : estimates) {
      if (std::isnan(est)) {
        ++summary.failures;
        continue;
      }
      ++successes;
      sum += est;
      const double err = est - theta.value();
      sum_sq_err += err * err;
    }
    if (summary.failures >
        opt.max_failure_fraction * static_cast<double>(replications)) {
      throw ConvergenceError("run_simulation_study: " +
                             std::to_string(summary.failures) + " of " +
                             std::to_string(replications) +
                             " replications failed to converge at n=" +
                             std::to_string(n));
    }
    const double m = static_cast<double>(successes);
    const double mean = sum / m;
    summary.mean_estimate = mean;
    summary.bias = mean - theta.value();
    summary.mse = sum_sq_err / m;
    double ss = 0.0;
    for (double est : estimates) {
      if (!std::isnan(est)) {
        const double d = est - mean;
        ss += d * d;
      }
    }
    summary.variance = successes > 1 ? ss / (m - 1.0) : 0.0;
    summaries.push_back(summary);
  }
  return summaries;
}

}  // namespace cel
