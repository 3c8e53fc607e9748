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

#ifndef LEGAL_SBD_PIPELINE_H_
#define LEGAL_SBD_PIPELINE_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "legal_sbd/bilou.h"
#include "legal_sbd/corpus.h"
#include "legal_sbd/crf.h"
#include "legal_sbd/features.h"
#include "legal_sbd/tokenizer.h"

namespace legal_sbd {

struct TrainingSet {
  crf::AttributeDictionary attributes;
  std::vector<crf::LabeledSequence> sequences;
};

// One sequence per document. With max_length > 0, documents longer than
// that are cut after O-labeled whitespace tokens, so no sentence is split.
// Features are always extracted over the whole document first.
TrainingSet build_training_set(const std::vector<Document>& docs,
                               std::size_t max_length = 0,
                               const FeatureConfig& features = {});

// Positions at which a labeled sequence may be cut: one past each O-labeled
// whitespace token. Chunks are at most `max_length` long where possible.
std::vector<std::size_t> chunk_boundaries(const TokenSequence& seq,
                                          const LabelSequence& labels,
                                          std::size_t max_length);

struct Prediction {
  TokenSequence tokens;
  LabelSequence labels;
  std::vector<SentenceSpan> spans;
};

// Tokenize, extract features, decode with Viterbi and convert labels back to
// spans. The model is read-only, so one segmenter may be shared by threads.
class Segmenter {
 public:
  explicit Segmenter(const crf::Model& model, FeatureConfig features = {})
      : model_(model), features_(std::move(features)) {}

  Prediction predict(std::string_view text, std::string doc_id = {}) const;
  std::vector<SentenceSpan> segment(std::string_view text) const {
    return predict(text).spans;
  }

 private:
  const crf::Model& model_;
  FeatureConfig features_;
};

// Copies of `docs` with spans replaced by the segmenter's output. Documents
// are processed on up to `threads` threads; output order matches input.
std::vector<Document> predict_documents(const Segmenter& segmenter,
                                        const std::vector<Document>& docs,
                                        unsigned threads = 1);

}  // namespace legal_sbd

#endif  // LEGAL_SBD_PIPELINE_H_
