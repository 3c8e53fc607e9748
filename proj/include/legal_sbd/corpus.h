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

#ifndef LEGAL_SBD_CORPUS_H_
#define LEGAL_SBD_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace legal_sbd {

enum class DocType { kJudgment, kLaw };

std::string_view doc_type_name(DocType type);
std::optional<DocType> parse_doc_type(std::string_view name);

inline constexpr std::string_view kSentenceLabel = "Sentence";

// Half-open range of scalar offsets into Document::text.
struct SentenceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string label{kSentenceLabel};

  bool operator==(const SentenceSpan&) const = default;
};

struct Document {
  std::string id;
  std::string language;
  DocType doc_type = DocType::kJudgment;
  std::string text;  // UTF-8, "\r\n" already folded to "\n"
  std::vector<SentenceSpan> spans;

  bool operator==(const Document&) const = default;
};

// Throws DataError naming the document if spans are unsorted, overlap, fall
// outside the text, or cover only whitespace, or if the text is empty.
void validate_document(const Document& doc);

// Parses one JSONL record. "\r\n" in the text is folded to "\n" and span
// offsets are shifted to match. `line_number` is only used in diagnostics.
// With require_spans false a record without "spans" gets an empty list,
// which is how unannotated input for prediction is read.
Document parse_document(std::string_view json_line, std::size_t line_number,
                        bool require_spans = true);

std::vector<Document> read_corpus(std::istream& in, bool require_spans = true);
std::vector<Document> load_corpus(const std::string& path,
                                  bool require_spans = true);

std::string to_jsonl(const Document& doc);
void write_corpus(const std::vector<Document>& docs, std::ostream& out);
void save_corpus(const std::vector<Document>& docs, const std::string& path);

struct CorpusSplit {
  std::uint64_t seed = 0;
  std::vector<std::string> train;
  std::vector<std::string> validation;
  std::vector<std::string> test;
};

// Random 60/20/20 split by document, stratified by language. Validation and
// test each get round-half-up(0.2 * N) documents in total; the per-language
// shares are apportioned by largest remainder. Requires N >= 5.
CorpusSplit split_corpus(const std::vector<Document>& docs, std::uint64_t seed);

// Throws DataError unless `split` partitions exactly the ids of `docs`.
void check_split(const CorpusSplit& split, const std::vector<Document>& docs);

std::string split_to_json(const CorpusSplit& split);
CorpusSplit split_from_json(std::string_view json);
CorpusSplit load_split(const std::string& path);
void save_split(const CorpusSplit& split, const std::string& path);

struct SubsetStats {
  std::size_t documents = 0;
  std::size_t sentences = 0;
  // Non-whitespace tokens intersecting a sentence span.
  std::size_t tokens = 0;
  // All tokens intersecting a sentence span, whitespace included.
  std::size_t tokens_with_whitespace = 0;
  // Non-whitespace tokens anywhere in the documents.
  std::size_t document_tokens = 0;
};

using StatsKey = std::pair<std::string, DocType>;  // (language, doc_type)
using StatsTable = std::map<StatsKey, SubsetStats>;

StatsTable corpus_stats(const std::vector<Document>& docs);

// CSV with a header row and a trailing "all,all" total row (omitted for an
// empty table).
void write_stats_csv(const StatsTable& table, std::ostream& out);

struct HistogramBin {
  std::size_t lo = 0;  // inclusive token counts
  std::size_t hi = 0;
  std::size_t count = 0;
  double frequency = 0.0;  // relative to included sentences of the doc type
};

struct LengthHistogram {
  std::vector<HistogramBin> bins;
  std::size_t included = 0;
  std::size_t excluded = 0;  // sentences longer than the cutoff
};

// Sentence lengths in non-whitespace tokens, bucketed [1..bin], [bin+1..2bin],
// and so on, per document type. Sentences longer than `cutoff` are counted in
// `excluded` only.
std::map<DocType, LengthHistogram> length_histogram(
    const std::vector<Document>& docs, std::size_t bin_size,
    std::size_t cutoff);

void write_histogram_csv(const std::map<DocType, LengthHistogram>& hist,
                         std::size_t cutoff, std::ostream& out);

// Per-sentence token counts (non-whitespace tokens intersecting each span),
// in document and span order.
std::vector<std::size_t> sentence_lengths(const Document& doc);

}  // namespace legal_sbd

#endif  // LEGAL_SBD_CORPUS_H_
