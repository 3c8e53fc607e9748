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

#include "legal_sbd/pipeline.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace legal_sbd {

std::vector<std::size_t> chunk_boundaries(const TokenSequence& seq,
                                          const LabelSequence& labels,
                                          std::size_t max_length) {
  std::vector<std::size_t> cuts;
  if (max_length == 0 || seq.size() <= max_length) return cuts;
  std::size_t chunk_start = 0;
  std::size_t last_cut = 0;  // most recent admissible cut after chunk_start
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (labels[i] == Label::O && seq[i].is_space() && i + 1 < seq.size()) {
      if (i + 1 - chunk_start > max_length && last_cut > chunk_start) {
        cuts.push_back(last_cut);
        chunk_start = last_cut;
      }
      last_cut = i + 1;
    }
  }
  if (seq.size() - chunk_start > max_length && last_cut > chunk_start) {
    cuts.push_back(last_cut);
  }
  return cuts;
}

TrainingSet build_training_set(const std::vector<Document>& docs,
                               std::size_t max_length,
                               const FeatureConfig& features) {
  TrainingSet set;
  std::vector<crf::AttributeValue> buf;
  for (const Document& doc : docs) {
    const TokenSequence seq = tokenize(doc.text, doc.id);
    if (seq.empty()) continue;
    const LabelSequence labels = encode_bilou(seq, doc.spans);
    crf::CompiledSequence compiled;
    for (const FeatureVector& f : extract_all(seq, features)) {
      buf.clear();
      for (const Attribute& a : binarize(f)) {
        buf.push_back({set.attributes.intern(a.name), a.value});
      }
      compiled.add_position(buf);
    }
    std::vector<std::size_t> cuts = chunk_boundaries(seq, labels, max_length);
    if (cuts.empty()) {
      set.sequences.push_back({doc.id, std::move(compiled), labels});
      continue;
    }
    cuts.push_back(seq.size());
    std::size_t begin = 0;
    for (std::size_t k = 0; k < cuts.size(); ++k) {
      crf::LabeledSequence part;
      part.id = doc.id + "#" + std::to_string(k);
      part.features = compiled.slice(begin, cuts[k]);
      part.labels.assign(labels.begin() + static_cast<std::ptrdiff_t>(begin),
                         labels.begin() + static_cast<std::ptrdiff_t>(cuts[k]));
      set.sequences.push_back(std::move(part));
      begin = cuts[k];
    }
  }
  return set;
}

Prediction Segmenter::predict(std::string_view text, std::string doc_id) const {
  Prediction out;
  out.tokens = tokenize(text, std::move(doc_id));
  if (out.tokens.empty()) return out;
  const crf::CompiledSequence x =
      model_.compile(extract_all(out.tokens, features_));
  out.labels = crf::viterbi(model_, x);
  out.spans = decode_bilou(out.tokens, out.labels);
  return out;
}

std::vector<Document> predict_documents(const Segmenter& segmenter,
                                        const std::vector<Document>& docs,
                                        unsigned threads) {
  std::vector<Document> out(docs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto work = [&] {
    try {
      for (std::size_t i = next++; i < docs.size() && !failed; i = next++) {
        Document d = docs[i];
        d.spans = segmenter.segment(d.text);
        out[i] = std::move(d);
      }
    } catch (...) {
      if (!failed.exchange(true)) error = std::current_exception();
    }
  };
  threads = std::max(1u, std::min<unsigned>(
                             threads, static_cast<unsigned>(docs.size())));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace legal_sbd
