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

#ifndef LEGAL_SBD_EVAL_H_
#define LEGAL_SBD_EVAL_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "legal_sbd/corpus.h"
#include "legal_sbd/tokenizer.h"

namespace legal_sbd {

// Which span edges count as sentence boundaries.
enum class BoundaryMode { kBoth, kStart, kEnd };

std::optional<BoundaryMode> parse_boundary_mode(std::string_view name);

// One flag per reference token; true marks a sentence boundary.
using BoundaryVector = std::vector<bool>;

// Token i is a boundary iff it is the first or last reference token
// intersecting some span. Predicted spans may start or end inside a token,
// which is what decouples scoring from the predicting system's tokenizer.
// Throws DataError for a span outside the text.
BoundaryVector boundary_vector(const TokenSequence& reference,
                               const std::vector<SentenceSpan>& spans,
                               BoundaryMode mode = BoundaryMode::kBoth);

struct Counts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  Counts& operator+=(const Counts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    return *this;
  }
};

struct Scores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

Counts count(const BoundaryVector& gold, const BoundaryVector& pred);

// Binary scores on the boundary class. Zero denominators give 0.
Scores prf(const Counts& counts);
Scores prf(const BoundaryVector& gold, const BoundaryVector& pred);

struct DocumentScore {
  std::string doc_id;
  std::string language;
  DocType doc_type = DocType::kJudgment;
  Scores scores;
  Counts counts;
  std::size_t support = 0;  // gold boundaries
};

struct SubsetScore {
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
  Scores micro;
  std::size_t n_docs = 0;
};

struct EvalReport {
  std::vector<DocumentScore> per_document;  // sorted by doc_id
  std::map<std::pair<std::string, DocType>, SubsetScore> per_subset;
};

using PredictionMap = std::map<std::string, std::vector<SentenceSpan>>;

struct EvalOptions {
  BoundaryMode boundary = BoundaryMode::kBoth;
  // Score documents without a prediction against an empty span list.
  bool allow_missing = false;
};

// Throws DataError for predictions naming unknown documents and, unless
// allow_missing, for gold documents without predictions.
EvalReport evaluate(const std::vector<Document>& gold,
                    const PredictionMap& predictions,
                    const EvalOptions& options = {});

// Reads corpus-format JSONL holding predicted spans. Only "id" and "spans"
// are required. Spans are sorted by start and each start is clipped to the
// previous span's end; spans left empty are dropped.
PredictionMap read_foreign_predictions(std::istream& in);
PredictionMap import_foreign_predictions(const std::string& path);

PredictionMap predictions_from_documents(const std::vector<Document>& docs);

void write_report_json(const EvalReport& report, std::ostream& out);
void write_report_csv(const EvalReport& report, std::ostream& out);

}  // namespace legal_sbd

#endif  // LEGAL_SBD_EVAL_H_
