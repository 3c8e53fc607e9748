// Copyright 2026 The Legal SBD Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <numeric>

#include "legal_sbd/crf.h"
#include "legal_sbd/errors.h"

namespace legal_sbd {
namespace crf {
namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

double l1_norm(std::span<const double> x) {
  double sum = 0.0;
  for (double v : x) sum += std::abs(v);
  return sum;
}

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

// Minimal-norm subgradient of f(x) + c1 * |x|_1.
void pseudo_gradient(std::span<const double> x, std::span<const double> g,
                     double c1, std::vector<double>& pg) {
  pg.resize(x.size());
  if (c1 == 0.0) {
    std::copy(g.begin(), g.end(), pg.begin());
    return;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0.0) {
      pg[i] = g[i] - c1;
    } else if (x[i] > 0.0) {
      pg[i] = g[i] + c1;
    } else if (g[i] + c1 < 0.0) {
      pg[i] = g[i] + c1;
    } else if (g[i] - c1 > 0.0) {
      pg[i] = g[i] - c1;
    } else {
      pg[i] = 0.0;
    }
  }
}

struct Correction {
  std::vector<double> s;
  std::vector<double> y;
  double sy;
};

// d = -H * pg by the L-BFGS two-loop recursion.
void two_loop(const std::deque<Correction>& memory,
              std::span<const double> pg, std::vector<double>& d) {
  d.assign(pg.begin(), pg.end());
  for (double& v : d) v = -v;
  std::vector<double> a(memory.size());
  for (std::size_t k = memory.size(); k-- > 0;) {
    const Correction& c = memory[k];
    a[k] = dot(c.s, d) / c.sy;
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= a[k] * c.y[i];
  }
  if (!memory.empty()) {
    const Correction& last = memory.back();
    const double gamma = last.sy / dot(last.y, last.y);
    for (double& v : d) v *= gamma;
  }
  for (std::size_t k = 0; k < memory.size(); ++k) {
    const Correction& c = memory[k];
    const double b = dot(c.y, d) / c.sy;
    for (std::size_t i = 0; i < d.size(); ++i) d[i] += (a[k] - b) * c.s[i];
  }
}

std::string fingerprint(std::span<const LabeledSequence> data) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xFF;
      h *= 1099511628211ULL;
    }
  };
  for (const LabeledSequence& seq : data) {
    for (char c : seq.id) mix(static_cast<unsigned char>(c));
    mix(seq.labels.size());
    for (Label l : seq.labels) mix(static_cast<std::uint64_t>(l));
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

Model train(const AttributeDictionary& attributes,
            std::span<const LabeledSequence> data, const TrainingConfig& config,
            const IterationCallback& on_iteration) {
  if (data.empty()) throw DataError("no training sequences");
  if (attributes.size() == 0) throw DataError("empty feature space");
  if (config.c1 < 0.0 || config.c2 < 0.0) {
    throw DataError("regularization coefficients must be non-negative");
  }
  if (config.max_iterations < 1) throw DataError("max_iterations must be >= 1");
  if (config.lbfgs_memory < 1) throw DataError("lbfgs_memory must be >= 1");
  for (const LabeledSequence& seq : data) {
    if (seq.labels.empty() || seq.labels.size() != seq.features.length()) {
      throw DataError("training sequence '" + seq.id +
                      "' is empty or has mismatched labels");
    }
  }

  Model model(attributes);
  const std::size_t dim = model.num_weights();
  const double c1 = config.c1;

  auto evaluate = [&](std::span<const double> x, ObjectiveValue* out) {
    std::copy(x.begin(), x.end(), model.weights().begin());
    *out = nll_and_gradient(model, data, config);
    return out->objective + c1 * l1_norm(x);
  };

  std::vector<double> x(dim, 0.0);
  ObjectiveValue current;
  double f = evaluate(x, &current);
  std::vector<double> pg;
  pseudo_gradient(x, current.gradient, c1, pg);

  std::deque<Correction> memory;
  std::vector<double> d;
  std::vector<double> x_new(dim);
  ObjectiveValue next;
  std::string stop_reason = "max_iterations";
  int iterations = 0;

  for (int k = 1; k <= config.max_iterations; ++k) {
    const double pg_norm = std::sqrt(dot(pg, pg));
    if (pg_norm == 0.0) {
      stop_reason = "zero gradient";
      break;
    }
    bool accepted = false;
    double step = 0.0;
    int evaluations = 0;
    double f_new = f;
    // A failed search with curvature memory retries once along -pg.
    for (int attempt = 0; attempt < 2 && !accepted; ++attempt) {
      if (attempt == 1) {
        if (memory.empty()) break;
        memory.clear();
      }
      two_loop(memory, pg, d);
      if (c1 > 0.0) {
        for (std::size_t i = 0; i < dim; ++i) {
          if (d[i] * pg[i] >= 0.0) d[i] = 0.0;
        }
      }
      if (dot(d, pg) >= 0.0) continue;
      step = memory.empty() ? 1.0 / pg_norm : 1.0;
      for (int ls = 0; ls < 40; ++ls, step *= 0.5) {
        for (std::size_t i = 0; i < dim; ++i) {
          x_new[i] = x[i] + step * d[i];
          if (c1 > 0.0) {
            const double orthant = x[i] != 0.0 ? sign(x[i]) : sign(-pg[i]);
            if (sign(x_new[i]) != orthant) x_new[i] = 0.0;
          }
        }
        f_new = evaluate(x_new, &next);
        ++evaluations;
        if (!std::isfinite(f_new)) continue;
        double decrease = 0.0;
        for (std::size_t i = 0; i < dim; ++i) decrease += pg[i] * (x_new[i] - x[i]);
        if (f_new <= f + 1e-4 * decrease) {
          accepted = true;
          break;
        }
      }
    }
    if (!accepted) {
      std::copy(x.begin(), x.end(), model.weights().begin());
      stop_reason = "line search failed";
      break;
    }

    Correction c;
    c.s.resize(dim);
    c.y.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      c.s[i] = x_new[i] - x[i];
      c.y[i] = next.gradient[i] - current.gradient[i];
    }
    c.sy = dot(c.s, c.y);
    if (c.sy > 1e-12) {
      memory.push_back(std::move(c));
      if (memory.size() > static_cast<std::size_t>(config.lbfgs_memory)) {
        memory.pop_front();
      }
    }

    const double f_old = f;
    std::swap(x, x_new);
    std::swap(current, next);
    f = f_new;
    pseudo_gradient(x, current.gradient, c1, pg);
    iterations = k;

    if (on_iteration) {
      IterationLog log;
      log.iteration = k;
      log.objective = f;
      log.step = step;
      log.active_weights = static_cast<std::size_t>(
          std::count_if(x.begin(), x.end(), [](double v) { return v != 0.0; }));
      log.evaluations = evaluations;
      on_iteration(log);
    }
    if (std::abs(f_old - f) / std::max(std::abs(f), 1.0) < config.convergence_tol) {
      stop_reason = "converged";
      break;
    }
  }

  std::copy(x.begin(), x.end(), model.weights().begin());
  for (double w : model.weights()) {
    if (!std::isfinite(w)) throw std::runtime_error("training diverged");
  }
  model.metadata.c1 = config.c1;
  model.metadata.c2 = config.c2;
  model.metadata.max_iterations = config.max_iterations;
  model.metadata.iterations_run = iterations;
  model.metadata.lbfgs_memory = config.lbfgs_memory;
  model.metadata.convergence_tol = config.convergence_tol;
  model.metadata.seed = config.seed;
  model.metadata.corpus_fingerprint = fingerprint(data);
  model.metadata.final_objective = f;
  model.metadata.stop_reason = stop_reason;
  model.prune();
  return model;
}

}  // namespace crf
}  // namespace legal_sbd
