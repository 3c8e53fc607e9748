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

#include "legal_sbd/eval.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "json.hpp"
#include "legal_sbd/errors.h"

namespace legal_sbd {

std::optional<BoundaryMode> parse_boundary_mode(std::string_view name) {
  if (name == "both") return BoundaryMode::kBoth;
  if (name == "start") return BoundaryMode::kStart;
  if (name == "end") return BoundaryMode::kEnd;
  return std::nullopt;
}

BoundaryVector boundary_vector(const TokenSequence& reference,
                               const std::vector<SentenceSpan>& spans,
                               BoundaryMode mode) {
  BoundaryVector bits(reference.size(), false);
  const std::size_t text_length =
      reference.empty() ? 0 : reference.tokens.back().end;
  for (const SentenceSpan& span : spans) {
    if (span.start > span.end || span.end > text_length) {
      throw DataError("span [" + std::to_string(span.start) + ", " +
                      std::to_string(span.end) + ") outside text of length " +
                      std::to_string(text_length) +
                      (reference.doc_id.empty() ? "" : " in document '" +
                                                           reference.doc_id + "'"));
    }
    if (span.start == span.end) continue;
    // First token ending after span.start; tokens are contiguous.
    auto first = std::upper_bound(
        reference.tokens.begin(), reference.tokens.end(), span.start,
        [](std::size_t pos, const Token& t) { return pos < t.end; });
    auto last = std::lower_bound(
        reference.tokens.begin(), reference.tokens.end(), span.end,
        [](const Token& t, std::size_t pos) { return t.start < pos; });
    if (first == reference.tokens.end() || last == reference.tokens.begin()) {
      continue;
    }
    --last;
    if (mode != BoundaryMode::kEnd) bits[first - reference.tokens.begin()] = true;
    if (mode != BoundaryMode::kStart) bits[last - reference.tokens.begin()] = true;
  }
  return bits;
}

Counts count(const BoundaryVector& gold, const BoundaryVector& pred) {
  if (gold.size() != pred.size()) {
    throw DataError("boundary vectors differ in length: " +
                    std::to_string(gold.size()) + " vs " +
                    std::to_string(pred.size()));
  }
  Counts c;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] && pred[i]) {
      ++c.tp;
    } else if (pred[i]) {
      ++c.fp;
    } else if (gold[i]) {
      ++c.fn;
    }
  }
  return c;
}

Scores prf(const Counts& c) {
  Scores s;
  const auto tp = static_cast<double>(c.tp);
  if (c.tp + c.fp > 0) s.precision = tp / static_cast<double>(c.tp + c.fp);
  if (c.tp + c.fn > 0) s.recall = tp / static_cast<double>(c.tp + c.fn);
  if (s.precision + s.recall > 0.0) {
    s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  }
  return s;
}

Scores prf(const BoundaryVector& gold, const BoundaryVector& pred) {
  return prf(count(gold, pred));
}

EvalReport evaluate(const std::vector<Document>& gold,
                    const PredictionMap& predictions,
                    const EvalOptions& options) {
  std::map<std::string, const Document*> by_id;
  for (const Document& doc : gold) by_id[doc.id] = &doc;
  for (const auto& [id, spans] : predictions) {
    if (!by_id.count(id)) {
      throw DataError("prediction for unknown document '" + id + "'");
    }
  }

  EvalReport report;
  const std::vector<SentenceSpan> none;
  std::map<std::pair<std::string, DocType>, Counts> micro;
  for (const auto& [id, doc] : by_id) {
    auto it = predictions.find(id);
    if (it == predictions.end() && !options.allow_missing) {
      throw DataError("missing prediction for document '" + id + "'");
    }
    const TokenSequence ref = tokenize(doc->text, doc->id);
    const BoundaryVector g = boundary_vector(ref, doc->spans, options.boundary);
    const BoundaryVector p = boundary_vector(
        ref, it == predictions.end() ? none : it->second, options.boundary);
    DocumentScore ds;
    ds.doc_id = id;
    ds.language = doc->language;
    ds.doc_type = doc->doc_type;
    ds.counts = count(g, p);
    ds.scores = prf(ds.counts);
    ds.support = ds.counts.tp + ds.counts.fn;
    micro[{doc->language, doc->doc_type}] += ds.counts;
    report.per_document.push_back(std::move(ds));
  }

  for (const DocumentScore& ds : report.per_document) {
    SubsetScore& s = report.per_subset[{ds.language, ds.doc_type}];
    s.macro_precision += ds.scores.precision;
    s.macro_recall += ds.scores.recall;
    s.macro_f1 += ds.scores.f1;
    ++s.n_docs;
  }
  for (auto& [key, s] : report.per_subset) {
    const auto n = static_cast<double>(s.n_docs);
    s.macro_precision /= n;
    s.macro_recall /= n;
    s.macro_f1 /= n;
    s.micro = prf(micro[key]);
  }
  return report;
}

PredictionMap read_foreign_predictions(std::istream& in) {
  using Json = nlohmann::json;
  PredictionMap out;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "line " + std::to_string(line_number);
    try {
      const Json j = Json::parse(line);
      const auto id = j.at("id").get<std::string>();
      std::vector<SentenceSpan> spans;
      for (const auto& s : j.at("spans")) {
        const auto start = s.at("start").get<std::int64_t>();
        const auto end = s.at("end").get<std::int64_t>();
        if (start < 0 || end < start) {
          throw DataError(where + ": invalid span in document '" + id + "'");
        }
        spans.push_back({static_cast<std::size_t>(start),
                         static_cast<std::size_t>(end)});
      }
      std::stable_sort(spans.begin(), spans.end(),
                       [](const SentenceSpan& a, const SentenceSpan& b) {
                         return a.start < b.start;
                       });
      std::vector<SentenceSpan> clipped;
      std::size_t prev_end = 0;
      for (SentenceSpan s : spans) {
        s.start = std::max(s.start, prev_end);
        if (s.start >= s.end) continue;
        prev_end = s.end;
        clipped.push_back(s);
      }
      if (!out.emplace(id, std::move(clipped)).second) {
        throw DataError(where + ": duplicate prediction for '" + id + "'");
      }
    } catch (const Json::exception& e) {
      throw DataError(where + ": malformed prediction record: " + e.what());
    }
  }
  return out;
}

PredictionMap import_foreign_predictions(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open prediction file " + path);
  try {
    return read_foreign_predictions(in);
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

PredictionMap predictions_from_documents(const std::vector<Document>& docs) {
  PredictionMap out;
  for (const Document& doc : docs) out[doc.id] = doc.spans;
  return out;
}

void write_report_json(const EvalReport& report, std::ostream& out) {
  using Json = nlohmann::ordered_json;
  Json j;
  Json docs = Json::array();
  for (const DocumentScore& d : report.per_document) {
    docs.push_back({{"doc_id", d.doc_id},
                    {"language", d.language},
                    {"type", std::string(doc_type_name(d.doc_type))},
                    {"precision", d.scores.precision},
                    {"recall", d.scores.recall},
                    {"f1", d.scores.f1},
                    {"support", d.support},
                    {"tp", d.counts.tp},
                    {"fp", d.counts.fp},
                    {"fn", d.counts.fn}});
  }
  Json subsets = Json::array();
  for (const auto& [key, s] : report.per_subset) {
    subsets.push_back({{"language", key.first},
                       {"type", std::string(doc_type_name(key.second))},
                       {"macro_p", s.macro_precision},
                       {"macro_r", s.macro_recall},
                       {"macro_f1", s.macro_f1},
                       {"micro_p", s.micro.precision},
                       {"micro_r", s.micro.recall},
                       {"micro_f1", s.micro.f1},
                       {"n_docs", s.n_docs}});
  }
  j["per_document"] = std::move(docs);
  j["per_subset"] = std::move(subsets);
  out << j.dump(2) << '\n';
}

void write_report_csv(const EvalReport& report, std::ostream& out) {
  out << "scope,language,type,doc_id,precision,recall,f1,micro_f1,support,"
         "n_docs\n";
  out << std::setprecision(6) << std::fixed;
  for (const auto& [key, s] : report.per_subset) {
    out << "subset," << key.first << ',' << doc_type_name(key.second) << ",,"
        << s.macro_precision << ',' << s.macro_recall << ',' << s.macro_f1
        << ',' << s.micro.f1 << ",," << s.n_docs << '\n';
  }
  for (const DocumentScore& d : report.per_document) {
    out << "document," << d.language << ',' << doc_type_name(d.doc_type) << ','
        << d.doc_id << ',' << d.scores.precision << ',' << d.scores.recall
        << ',' << d.scores.f1 << ",," << d.support << ",\n";
  }
}

}  // namespace legal_sbd
