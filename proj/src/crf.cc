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

#include "legal_sbd/crf.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "legal_sbd/errors.h"

namespace legal_sbd {
namespace crf {
namespace {

constexpr std::size_t L = kNumLabels;

double log_sum_exp(const double* v, std::size_t n) {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, v[i]);
  if (!std::isfinite(m)) return m;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += std::exp(v[i] - m);
  return m + std::log(sum);
}

Label label_at(std::size_t i) { return static_cast<Label>(i); }

// Adds one sequence's NLL to `objective` and its gradient into `grad`.
void accumulate(const Model& model, const LabeledSequence& seq,
                double* objective, std::vector<double>& grad) {
  const CompiledSequence& x = seq.features;
  const std::size_t n = x.length();
  const ForwardBackward fb = forward_backward(model, x);
  const std::vector<double>& s = fb.state;
  const double gold = score(model, x, seq.labels);
  const double nll = fb.log_z - gold;
  if (!std::isfinite(nll)) {
    double norm = 0.0;
    for (double w : model.weights()) norm += w * w;
    std::ostringstream msg;
    msg << "non-finite objective on sequence '" << seq.id
        << "' (log Z = " << fb.log_z << ", gold score = " << gold
        << ", weight norm = " << std::sqrt(norm) << ")";
    throw std::runtime_error(msg.str());
  }
  *objective += nll;

  const std::size_t trans = model.transition_offset();
  const std::size_t start = model.start_offset();
  const std::size_t end = model.end_offset();
  std::array<double, L> p{};
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t y = 0; y < L; ++y) {
      p[y] = std::exp(fb.alpha[t * L + y] + fb.beta[t * L + y] - fb.log_z);
    }
    p[static_cast<std::size_t>(seq.labels[t])] -= 1.0;
    for (const AttributeValue& a : x.at(t)) {
      double* g = grad.data() + static_cast<std::size_t>(a.id) * L;
      for (std::size_t y = 0; y < L; ++y) g[y] += a.value * p[y];
    }
    if (t == 0) {
      for (std::size_t y = 0; y < L; ++y) grad[start + y] += p[y];
    }
    if (t + 1 == n) {
      for (std::size_t y = 0; y < L; ++y) grad[end + y] += p[y];
    }
    if (t > 0) {
      for (std::size_t a = 0; a < L; ++a) {
        for (std::size_t b = 0; b < L; ++b) {
          grad[trans + a * L + b] += std::exp(
              fb.alpha[(t - 1) * L + a] + model.transition(label_at(a), label_at(b)) +
              s[t * L + b] + fb.beta[t * L + b] - fb.log_z);
        }
      }
      const auto prev = static_cast<std::size_t>(seq.labels[t - 1]);
      const auto cur = static_cast<std::size_t>(seq.labels[t]);
      grad[trans + prev * L + cur] -= 1.0;
    }
  }
}

}  // namespace

std::uint32_t AttributeDictionary::intern(const std::string& name) {
  auto it = ids_.find(name);
  if (it != ids_.end()) return it->second;
  const auto id = static_cast<std::uint32_t>(names_.size());
  names_.push_back(name);
  ids_.emplace(name, id);
  return id;
}

std::optional<std::uint32_t> AttributeDictionary::find(
    std::string_view name) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

void CompiledSequence::add_position(std::span<const AttributeValue> attributes) {
  items_.insert(items_.end(), attributes.begin(), attributes.end());
  offsets_.push_back(items_.size());
}

CompiledSequence CompiledSequence::slice(std::size_t begin,
                                         std::size_t end) const {
  CompiledSequence out;
  for (std::size_t t = begin; t < end; ++t) out.add_position(at(t));
  return out;
}

Model::Model(AttributeDictionary attributes)
    : attributes_(std::move(attributes)),
      weights_(attributes_.size() * kNumLabels + kNumLabels * kNumLabels +
                   2 * kNumLabels,
               0.0) {}

double Model::state_weight(std::string_view attribute, Label y) const {
  const auto id = attributes_.find(attribute);
  return id ? state(*id, y) : 0.0;
}

CompiledSequence Model::compile(
    const std::vector<std::vector<Attribute>>& positions) const {
  CompiledSequence out;
  std::vector<AttributeValue> buf;
  for (const auto& attrs : positions) {
    buf.clear();
    for (const Attribute& a : attrs) {
      if (const auto id = attributes_.find(a.name)) buf.push_back({*id, a.value});
    }
    out.add_position(buf);
  }
  return out;
}

CompiledSequence Model::compile(
    const std::vector<FeatureVector>& positions) const {
  std::vector<std::vector<Attribute>> attrs;
  attrs.reserve(positions.size());
  for (const FeatureVector& f : positions) attrs.push_back(binarize(f));
  return compile(attrs);
}

void Model::prune() {
  AttributeDictionary kept;
  std::vector<double> state_weights;
  for (std::uint32_t id = 0; id < attributes_.size(); ++id) {
    const double* w = weights_.data() + static_cast<std::size_t>(id) * L;
    if (std::all_of(w, w + L, [](double v) { return v == 0.0; })) continue;
    kept.intern(attributes_.name(id));
    state_weights.insert(state_weights.end(), w, w + L);
  }
  state_weights.insert(state_weights.end(),
                       weights_.begin() + static_cast<std::ptrdiff_t>(transition_offset()),
                       weights_.end());
  attributes_ = std::move(kept);
  weights_ = std::move(state_weights);
}

std::vector<double> state_scores(const Model& model,
                                 const CompiledSequence& x) {
  const std::size_t n = x.length();
  std::vector<double> s(n * L, 0.0);
  const std::span<const double> w = model.weights();
  for (std::size_t t = 0; t < n; ++t) {
    double* row = s.data() + t * L;
    for (const AttributeValue& a : x.at(t)) {
      const double* wa = w.data() + static_cast<std::size_t>(a.id) * L;
      for (std::size_t y = 0; y < L; ++y) row[y] += a.value * wa[y];
    }
  }
  return s;
}

double score(const Model& model, const CompiledSequence& x,
             const LabelSequence& y) {
  if (y.size() != x.length()) {
    throw DataError("label sequence length does not match feature sequence");
  }
  if (y.empty()) return 0.0;
  double total = model.start(y.front()) + model.end(y.back());
  for (std::size_t t = 0; t < y.size(); ++t) {
    for (const AttributeValue& a : x.at(t)) {
      total += a.value * model.state(a.id, y[t]);
    }
    if (t > 0) total += model.transition(y[t - 1], y[t]);
  }
  return total;
}

ForwardBackward forward_backward(const Model& model,
                                 const CompiledSequence& x) {
  const std::size_t n = x.length();
  ForwardBackward fb;
  fb.length = n;
  if (n == 0) return fb;
  fb.state = state_scores(model, x);
  const std::vector<double>& s = fb.state;
  fb.alpha.assign(n * L, 0.0);
  fb.beta.assign(n * L, 0.0);

  for (std::size_t y = 0; y < L; ++y) {
    fb.alpha[y] = model.start(label_at(y)) + s[y];
  }
  std::array<double, L> buf{};
  for (std::size_t t = 1; t < n; ++t) {
    for (std::size_t y = 0; y < L; ++y) {
      for (std::size_t p = 0; p < L; ++p) {
        buf[p] = fb.alpha[(t - 1) * L + p] +
                 model.transition(label_at(p), label_at(y));
      }
      fb.alpha[t * L + y] = log_sum_exp(buf.data(), L) + s[t * L + y];
    }
  }
  for (std::size_t y = 0; y < L; ++y) {
    fb.beta[(n - 1) * L + y] = model.end(label_at(y));
  }
  for (std::size_t t = n - 1; t-- > 0;) {
    for (std::size_t y = 0; y < L; ++y) {
      for (std::size_t q = 0; q < L; ++q) {
        buf[q] = model.transition(label_at(y), label_at(q)) +
                 s[(t + 1) * L + q] + fb.beta[(t + 1) * L + q];
      }
      fb.beta[t * L + y] = log_sum_exp(buf.data(), L);
    }
  }
  for (std::size_t y = 0; y < L; ++y) {
    buf[y] = fb.alpha[(n - 1) * L + y] + fb.beta[(n - 1) * L + y];
  }
  fb.log_z = log_sum_exp(buf.data(), L);
  return fb;
}

double ForwardBackward::marginal(std::size_t t, Label y) const {
  const auto i = t * L + static_cast<std::size_t>(y);
  return std::exp(alpha[i] + beta[i] - log_z);
}

double log_partition(const Model& model, const CompiledSequence& x) {
  const std::size_t n = x.length();
  if (n == 0) return 0.0;
  const std::vector<double> s = state_scores(model, x);
  std::array<double, L> prev{};
  std::array<double, L> cur{};
  std::array<double, L> buf{};
  for (std::size_t y = 0; y < L; ++y) prev[y] = model.start(label_at(y)) + s[y];
  for (std::size_t t = 1; t < n; ++t) {
    for (std::size_t y = 0; y < L; ++y) {
      for (std::size_t p = 0; p < L; ++p) {
        buf[p] = prev[p] + model.transition(label_at(p), label_at(y));
      }
      cur[y] = log_sum_exp(buf.data(), L) + s[t * L + y];
    }
    prev = cur;
  }
  for (std::size_t y = 0; y < L; ++y) prev[y] += model.end(label_at(y));
  return log_sum_exp(prev.data(), L);
}

LabelSequence viterbi(const Model& model, const CompiledSequence& x) {
  const std::size_t n = x.length();
  if (n == 0) return {};
  const std::vector<double> s = state_scores(model, x);
  std::vector<double> delta(n * L);
  std::vector<std::uint8_t> back(n * L, 0);
  for (std::size_t y = 0; y < L; ++y) {
    delta[y] = model.start(label_at(y)) + s[y];
  }
  for (std::size_t t = 1; t < n; ++t) {
    for (std::size_t y = 0; y < L; ++y) {
      std::size_t best = 0;
      double best_score = delta[(t - 1) * L] + model.transition(label_at(0), label_at(y));
      for (std::size_t p = 1; p < L; ++p) {
        const double v =
            delta[(t - 1) * L + p] + model.transition(label_at(p), label_at(y));
        if (v > best_score) {
          best_score = v;
          best = p;
        }
      }
      delta[t * L + y] = best_score + s[t * L + y];
      back[t * L + y] = static_cast<std::uint8_t>(best);
    }
  }
  std::size_t best = 0;
  double best_score = delta[(n - 1) * L] + model.end(label_at(0));
  for (std::size_t y = 1; y < L; ++y) {
    const double v = delta[(n - 1) * L + y] + model.end(label_at(y));
    if (v > best_score) {
      best_score = v;
      best = y;
    }
  }
  LabelSequence out(n);
  for (std::size_t t = n; t-- > 0;) {
    out[t] = label_at(best);
    best = back[t * L + best];
  }
  return out;
}

ObjectiveValue nll_and_gradient(const Model& model,
                                std::span<const LabeledSequence> batch,
                                const TrainingConfig& config) {
  if (batch.empty()) throw DataError("empty training batch");
  const std::size_t dim = model.num_weights();
  // Sequences are grouped into a fixed number of contiguous blocks whose
  // partial sums are added in block order, independent of thread count.
  constexpr std::size_t kMaxBlocks = 16;
  const std::size_t blocks = std::min(kMaxBlocks, batch.size());
  std::vector<std::vector<double>> partial_grad(blocks);
  std::vector<double> partial_obj(blocks, 0.0);
  std::vector<std::exception_ptr> errors(blocks);

  auto run_block = [&](std::size_t b) {
    try {
      partial_grad[b].assign(dim, 0.0);
      const std::size_t lo = batch.size() * b / blocks;
      const std::size_t hi = batch.size() * (b + 1) / blocks;
      for (std::size_t i = lo; i < hi; ++i) {
        accumulate(model, batch[i], &partial_obj[b], partial_grad[b]);
      }
    } catch (...) {
      errors[b] = std::current_exception();
    }
  };

  unsigned threads = config.threads == 0 ? std::thread::hardware_concurrency()
                                         : config.threads;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(blocks)));
  if (threads == 1) {
    for (std::size_t b = 0; b < blocks; ++b) run_block(b);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t b = w; b < blocks; b += threads) run_block(b);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  ObjectiveValue out;
  out.gradient.assign(dim, 0.0);
  for (std::size_t b = 0; b < blocks; ++b) {
    out.objective += partial_obj[b];
    for (std::size_t k = 0; k < dim; ++k) out.gradient[k] += partial_grad[b][k];
  }
  const std::span<const double> w = model.weights();
  for (std::size_t k = 0; k < dim; ++k) {
    out.objective += config.c2 * w[k] * w[k];
    out.gradient[k] += 2.0 * config.c2 * w[k];
  }
  return out;
}

}  // namespace crf
}  // namespace legal_sbd
