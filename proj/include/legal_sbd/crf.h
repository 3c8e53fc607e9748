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

#ifndef LEGAL_SBD_CRF_H_
#define LEGAL_SBD_CRF_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "legal_sbd/bilou.h"
#include "legal_sbd/features.h"

namespace legal_sbd {
namespace crf {

// Interned attribute names ("0:special=End", "0:length", ...).
class AttributeDictionary {
 public:
  std::uint32_t intern(const std::string& name);
  std::optional<std::uint32_t> find(std::string_view name) const;

  const std::string& name(std::uint32_t id) const { return names_[id]; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t, Hash, std::equal_to<>> ids_;
};

struct AttributeValue {
  std::uint32_t id = 0;
  double value = 1.0;
};

// Attribute ids per position, in CSR layout.
class CompiledSequence {
 public:
  void add_position(std::span<const AttributeValue> attributes);

  std::size_t length() const { return offsets_.size() - 1; }
  std::span<const AttributeValue> at(std::size_t t) const {
    return {items_.data() + offsets_[t], offsets_[t + 1] - offsets_[t]};
  }

  // Positions [begin, end) as a new sequence.
  CompiledSequence slice(std::size_t begin, std::size_t end) const;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<AttributeValue> items_;
};

struct LabeledSequence {
  std::string id;
  CompiledSequence features;
  LabelSequence labels;
};

struct TrainingConfig {
  double c1 = 1.0;
  double c2 = 1e-3;
  int max_iterations = 100;
  int lbfgs_memory = 10;
  // Stop once |f_prev - f| / max(|f|, 1) falls below this.
  double convergence_tol = 1e-6;
  std::uint64_t seed = 0;
  // 0 means std::thread::hardware_concurrency().
  unsigned threads = 1;
};

struct IterationLog {
  int iteration = 0;
  double objective = 0.0;  // including the L1 term
  double step = 0.0;
  std::size_t active_weights = 0;
  int evaluations = 0;
};

struct ModelMetadata {
  double c1 = 0.0;
  double c2 = 0.0;
  int max_iterations = 0;
  int iterations_run = 0;
  int lbfgs_memory = 0;
  double convergence_tol = 0.0;
  std::uint64_t seed = 0;
  std::string corpus_fingerprint;
  double final_objective = 0.0;
  std::string stop_reason;
  // Free-form provenance such as the training data filter.
  std::map<std::string, std::string> extra;

  bool operator==(const ModelMetadata&) const = default;
};

inline constexpr int kModelFormatVersion = 1;

// Linear-chain CRF over the five BILOU labels. Weights live in one flat
// vector: |attributes| x 5 state weights (attribute-major), then the 5 x 5
// transition matrix (from-major), then start and end weights.
class Model {
 public:
  Model() = default;
  explicit Model(AttributeDictionary attributes);

  const AttributeDictionary& attributes() const { return attributes_; }
  std::size_t num_attributes() const { return attributes_.size(); }
  std::size_t num_weights() const { return weights_.size(); }

  std::span<double> weights() { return weights_; }
  std::span<const double> weights() const { return weights_; }

  double& state(std::uint32_t attribute, Label y) {
    return weights_[attribute * kNumLabels + index(y)];
  }
  double state(std::uint32_t attribute, Label y) const {
    return weights_[attribute * kNumLabels + index(y)];
  }
  double& transition(Label from, Label to) {
    return weights_[transition_offset() + index(from) * kNumLabels + index(to)];
  }
  double transition(Label from, Label to) const {
    return weights_[transition_offset() + index(from) * kNumLabels + index(to)];
  }
  double& start(Label y) { return weights_[start_offset() + index(y)]; }
  double start(Label y) const { return weights_[start_offset() + index(y)]; }
  double& end(Label y) { return weights_[end_offset() + index(y)]; }
  double end(Label y) const { return weights_[end_offset() + index(y)]; }

  std::size_t transition_offset() const {
    return attributes_.size() * kNumLabels;
  }
  std::size_t start_offset() const {
    return transition_offset() + kNumLabels * kNumLabels;
  }
  std::size_t end_offset() const { return start_offset() + kNumLabels; }

  // Weight of a named attribute, 0 when the attribute is unknown.
  double state_weight(std::string_view attribute, Label y) const;

  // Maps attributes onto this model's ids; unknown names are dropped.
  CompiledSequence compile(
      const std::vector<std::vector<Attribute>>& positions) const;
  CompiledSequence compile(const std::vector<FeatureVector>& positions) const;

  // Removes attributes whose five state weights are all zero.
  void prune();

  ModelMetadata metadata;

 private:
  static std::size_t index(Label y) { return static_cast<std::size_t>(y); }

  AttributeDictionary attributes_;
  std::vector<double> weights_ =
      std::vector<double>(kNumLabels * kNumLabels + 2 * kNumLabels, 0.0);
};

// Per-position state scores: scores[t * 5 + y].
std::vector<double> state_scores(const Model& model,
                                 const CompiledSequence& x);

double score(const Model& model, const CompiledSequence& x,
             const LabelSequence& y);

double log_partition(const Model& model, const CompiledSequence& x);

struct ForwardBackward {
  std::size_t length = 0;
  std::vector<double> state;  // state scores, [t * 5 + y]
  std::vector<double> alpha;  // log forward scores, [t * 5 + y]
  std::vector<double> beta;   // log backward scores, [t * 5 + y]
  double log_z = 0.0;

  // P(y_t = y).
  double marginal(std::size_t t, Label y) const;
};

ForwardBackward forward_backward(const Model& model,
                                 const CompiledSequence& x);

// Highest-scoring labeling. Ties go to the lowest label index at each
// backtracking step.
LabelSequence viterbi(const Model& model, const CompiledSequence& x);

struct ObjectiveValue {
  double objective = 0.0;
  std::vector<double> gradient;
};

// Negative log-likelihood of `batch` plus c2 * ||w||^2, and its gradient.
// The L1 term is left to the optimizer. Sequences are reduced in a fixed
// order, so the result does not depend on `config.threads`.
ObjectiveValue nll_and_gradient(const Model& model,
                                std::span<const LabeledSequence> batch,
                                const TrainingConfig& config);

using IterationCallback = std::function<void(const IterationLog&)>;

// Elastic-net maximum likelihood training with OWL-QN (plain L-BFGS when
// c1 == 0). The attribute dictionary must cover every id in `data`.
Model train(const AttributeDictionary& attributes,
            std::span<const LabeledSequence> data, const TrainingConfig& config,
            const IterationCallback& on_iteration = {});

std::string to_json(const Model& model);
Model from_json(std::string_view json);
void save_model(const Model& model, const std::string& path);
Model load_model(const std::string& path);

}  // namespace crf
}  // namespace legal_sbd

#endif  // LEGAL_SBD_CRF_H_
