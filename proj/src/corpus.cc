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

#include "legal_sbd/corpus.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "legal_sbd/errors.h"
#include "legal_sbd/tokenizer.h"
#include "legal_sbd/unicode.h"

namespace legal_sbd {
namespace {

using Json = nlohmann::ordered_json;

std::string doc_label(const std::string& id) { return "document '" + id + "'"; }

// Uniform integer in [0, bound) from the raw engine output. Implemented here
// rather than with std::uniform_int_distribution so splits do not depend on
// the standard library in use.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() -
                              (std::mt19937_64::max() % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return x % bound;
}

void shuffle(std::vector<std::string>& ids, std::mt19937_64& rng) {
  for (std::size_t i = ids.size(); i > 1; --i) {
    std::swap(ids[i - 1], ids[bounded(rng, i)]);
  }
}

std::size_t round_half_up_fifth(std::size_t n) {
  // round(0.2 * n) with halves rounded up, in exact integer arithmetic.
  return (2 * n + 5) / 10;
}

// Spreads `total` units over groups with fractional quotas. Each group first
// gets floor(quota); the rest go to the largest fractional parts, ties broken
// by group order, skipping groups with no capacity left.
std::vector<std::size_t> apportion(const std::vector<double>& quotas,
                                   const std::vector<std::size_t>& capacity,
                                   std::size_t total) {
  std::vector<std::size_t> out(quotas.size());
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < quotas.size(); ++i) {
    out[i] = std::min(static_cast<std::size_t>(std::floor(quotas[i])),
                      capacity[i]);
    assigned += out[i];
  }
  std::vector<std::size_t> order(quotas.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return quotas[a] - std::floor(quotas[a]) > quotas[b] - std::floor(quotas[b]);
  });
  while (assigned < total) {
    bool progressed = false;
    for (std::size_t i : order) {
      if (assigned == total) break;
      if (out[i] < capacity[i]) {
        ++out[i];
        ++assigned;
        progressed = true;
      }
    }
    if (!progressed) break;
  }
  return out;
}

}  // namespace

std::string_view doc_type_name(DocType type) {
  return type == DocType::kLaw ? "law" : "judgment";
}

std::optional<DocType> parse_doc_type(std::string_view name) {
  if (name == "judgment") return DocType::kJudgment;
  if (name == "law") return DocType::kLaw;
  return std::nullopt;
}

void validate_document(const Document& doc) {
  if (doc.id.empty()) throw DataError("document with empty id");
  if (doc.text.empty()) throw DataError(doc_label(doc.id) + ": empty text");
  if (!unicode::is_valid_utf8(doc.text)) {
    throw DataError(doc_label(doc.id) + ": text is not valid UTF-8");
  }
  const std::u32string chars = unicode::decode_utf8(doc.text);
  for (std::size_t i = 0; i < doc.spans.size(); ++i) {
    const SentenceSpan& span = doc.spans[i];
    if (span.label != kSentenceLabel) {
      throw DataError(doc_label(doc.id) + ": unknown span label '" +
                      span.label + "'");
    }
    if (span.start >= span.end || span.end > chars.size()) {
      throw DataError(doc_label(doc.id) + ": span out of range [" +
                      std::to_string(span.start) + ", " +
                      std::to_string(span.end) + ") for text of length " +
                      std::to_string(chars.size()));
    }
    if (i > 0 && doc.spans[i - 1].end > span.start) {
      throw DataError(doc_label(doc.id) + ": overlapping or unsorted spans at [" +
                      std::to_string(span.start) + ", " +
                      std::to_string(span.end) + ")");
    }
    const bool has_content =
        std::any_of(chars.begin() + static_cast<std::ptrdiff_t>(span.start),
                    chars.begin() + static_cast<std::ptrdiff_t>(span.end),
                    [](char32_t c) { return !unicode::is_space(c); });
    if (!has_content) {
      throw DataError(doc_label(doc.id) + ": whitespace-only span [" +
                      std::to_string(span.start) + ", " +
                      std::to_string(span.end) + ")");
    }
  }
}

Document parse_document(std::string_view json_line, std::size_t line_number,
                        bool require_spans) {
  const std::string where = "line " + std::to_string(line_number);
  Json j;
  try {
    j = Json::parse(json_line);
  } catch (const Json::parse_error& e) {
    throw DataError(where + ": malformed JSON: " + e.what());
  }
  if (!j.is_object()) throw DataError(where + ": record is not a JSON object");

  Document doc;
  try {
    doc.id = j.at("id").get<std::string>();
    const std::string label = doc_label(doc.id);
    doc.language = j.at("language").get<std::string>();
    if (doc.language.empty()) throw DataError(label + ": empty language");
    const auto type_name = j.at("type").get<std::string>();
    const auto type = parse_doc_type(type_name);
    if (!type) throw DataError(label + ": unknown type '" + type_name + "'");
    doc.doc_type = *type;
    std::string raw = j.at("text").get<std::string>();
    const Json no_spans = Json::array();
    const Json& span_list =
        require_spans || j.contains("spans") ? j.at("spans") : no_spans;
    for (const auto& s : span_list) {
      SentenceSpan span;
      const auto start = s.at("start").get<std::int64_t>();
      const auto end = s.at("end").get<std::int64_t>();
      if (start < 0 || end < 0) {
        throw DataError(label + ": span out of range (negative offset)");
      }
      span.start = static_cast<std::size_t>(start);
      span.end = static_cast<std::size_t>(end);
      if (s.contains("label")) span.label = s.at("label").get<std::string>();
      doc.spans.push_back(std::move(span));
    }

    // Fold CRLF. Every removed '\r' shifts later offsets left by one.
    if (raw.find("\r\n") != std::string::npos) {
      const std::u32string chars = unicode::decode_utf8(raw);
      std::vector<std::size_t> removed_before(chars.size() + 1, 0);
      std::u32string folded;
      folded.reserve(chars.size());
      std::size_t removed = 0;
      for (std::size_t i = 0; i < chars.size(); ++i) {
        removed_before[i] = removed;
        if (chars[i] == U'\r' && i + 1 < chars.size() && chars[i + 1] == U'\n') {
          ++removed;
        } else {
          folded.push_back(chars[i]);
        }
      }
      removed_before[chars.size()] = removed;
      for (SentenceSpan& span : doc.spans) {
        if (span.end > chars.size() || span.start > span.end) continue;
        span.start -= removed_before[span.start];
        span.end -= removed_before[span.end];
      }
      raw = unicode::encode_utf8(folded);
    }
    doc.text = std::move(raw);
  } catch (const Json::exception& e) {
    throw DataError(where + ": bad record" +
                    (doc.id.empty() ? std::string() : " for " + doc_label(doc.id)) +
                    ": " + e.what());
  }
  validate_document(doc);
  return doc;
}

std::vector<Document> read_corpus(std::istream& in, bool require_spans) {
  std::vector<Document> docs;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    Document doc = parse_document(line, line_number, require_spans);
    if (!seen.insert(doc.id).second) {
      throw DataError("line " + std::to_string(line_number) +
                      ": duplicate " + doc_label(doc.id));
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<Document> load_corpus(const std::string& path,
                                  bool require_spans) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open corpus file " + path);
  try {
    return read_corpus(in, require_spans);
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

std::string to_jsonl(const Document& doc) {
  Json j;
  j["id"] = doc.id;
  j["language"] = doc.language;
  j["type"] = std::string(doc_type_name(doc.doc_type));
  j["text"] = doc.text;
  Json spans = Json::array();
  for (const SentenceSpan& s : doc.spans) {
    spans.push_back(Json{{"start", s.start}, {"end", s.end}, {"label", s.label}});
  }
  j["spans"] = std::move(spans);
  return j.dump();
}

void write_corpus(const std::vector<Document>& docs, std::ostream& out) {
  for (const Document& doc : docs) out << to_jsonl(doc) << '\n';
}

void save_corpus(const std::vector<Document>& docs, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  write_corpus(docs, out);
}

CorpusSplit split_corpus(const std::vector<Document>& docs, std::uint64_t seed) {
  const std::size_t n = docs.size();
  if (n < 5) {
    throw DataError("corpus too small to split: " + std::to_string(n) +
                    " documents, need at least 5");
  }
  std::map<std::string, std::vector<std::string>> by_language;
  for (const Document& doc : docs) by_language[doc.language].push_back(doc.id);

  std::vector<double> quotas;
  std::vector<std::size_t> sizes;
  for (auto& [lang, ids] : by_language) {
    std::sort(ids.begin(), ids.end());
    quotas.push_back(0.2 * static_cast<double>(ids.size()));
    sizes.push_back(ids.size());
  }
  const std::size_t held_out = round_half_up_fifth(n);
  const std::vector<std::size_t> validation = apportion(quotas, sizes, held_out);
  std::vector<std::size_t> remaining(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    remaining[i] = sizes[i] - validation[i];
  }
  const std::vector<std::size_t> test = apportion(quotas, remaining, held_out);

  CorpusSplit split;
  split.seed = seed;
  std::mt19937_64 rng(seed);
  std::size_t g = 0;
  for (auto& [lang, ids] : by_language) {
    shuffle(ids, rng);
    const auto v = static_cast<std::ptrdiff_t>(validation[g]);
    const auto t = static_cast<std::ptrdiff_t>(test[g]);
    split.validation.insert(split.validation.end(), ids.begin(), ids.begin() + v);
    split.test.insert(split.test.end(), ids.begin() + v, ids.begin() + v + t);
    split.train.insert(split.train.end(), ids.begin() + v + t, ids.end());
    ++g;
  }
  if (split.train.empty()) throw DataError("split left no training documents");
  return split;
}

void check_split(const CorpusSplit& split, const std::vector<Document>& docs) {
  std::multiset<std::string> expected;
  for (const Document& doc : docs) expected.insert(doc.id);
  std::multiset<std::string> got;
  for (const auto* part : {&split.train, &split.validation, &split.test}) {
    got.insert(part->begin(), part->end());
  }
  if (got != expected) {
    throw DataError("split does not partition the corpus document ids");
  }
}

std::string split_to_json(const CorpusSplit& split) {
  Json j;
  j["seed"] = split.seed;
  j["train"] = split.train;
  j["validation"] = split.validation;
  j["test"] = split.test;
  return j.dump(2);
}

CorpusSplit split_from_json(std::string_view json) {
  try {
    const Json j = Json::parse(json);
    CorpusSplit split;
    split.seed = j.at("seed").get<std::uint64_t>();
    split.train = j.at("train").get<std::vector<std::string>>();
    split.validation = j.at("validation").get<std::vector<std::string>>();
    split.test = j.at("test").get<std::vector<std::string>>();
    return split;
  } catch (const Json::exception& e) {
    throw DataError(std::string("malformed split file: ") + e.what());
  }
}

CorpusSplit load_split(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open split file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return split_from_json(buf.str());
}

void save_split(const CorpusSplit& split, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  out << split_to_json(split) << '\n';
}

std::vector<std::size_t> sentence_lengths(const Document& doc) {
  const TokenSequence seq = tokenize(doc.text, doc.id);
  std::vector<std::size_t> lengths;
  lengths.reserve(doc.spans.size());
  std::size_t t = 0;
  for (const SentenceSpan& span : doc.spans) {
    while (t < seq.size() && seq[t].end <= span.start) ++t;
    std::size_t count = 0;
    for (std::size_t k = t; k < seq.size() && seq[k].start < span.end; ++k) {
      if (!seq[k].is_space()) ++count;
    }
    lengths.push_back(count);
  }
  return lengths;
}

StatsTable corpus_stats(const std::vector<Document>& docs) {
  StatsTable table;
  for (const Document& doc : docs) {
    SubsetStats& row = table[{doc.language, doc.doc_type}];
    const TokenSequence seq = tokenize(doc.text, doc.id);
    ++row.documents;
    row.sentences += doc.spans.size();
    row.document_tokens += count_content_tokens(seq);
    std::size_t t = 0;
    for (const SentenceSpan& span : doc.spans) {
      while (t < seq.size() && seq[t].end <= span.start) ++t;
      for (std::size_t k = t; k < seq.size() && seq[k].start < span.end; ++k) {
        ++row.tokens_with_whitespace;
        if (!seq[k].is_space()) ++row.tokens;
      }
    }
  }
  return table;
}

void write_stats_csv(const StatsTable& table, std::ostream& out) {
  out << "language,type,documents,sentences,tokens,tokens_with_whitespace,"
         "document_tokens\n";
  SubsetStats total;
  auto row = [&out](std::string_view lang, std::string_view type,
                    const SubsetStats& s) {
    out << lang << ',' << type << ',' << s.documents << ',' << s.sentences
        << ',' << s.tokens << ',' << s.tokens_with_whitespace << ','
        << s.document_tokens << '\n';
  };
  for (const auto& [key, s] : table) {
    row(key.first, doc_type_name(key.second), s);
    total.documents += s.documents;
    total.sentences += s.sentences;
    total.tokens += s.tokens;
    total.tokens_with_whitespace += s.tokens_with_whitespace;
    total.document_tokens += s.document_tokens;
  }
  if (!table.empty()) row("all", "all", total);
}

std::map<DocType, LengthHistogram> length_histogram(
    const std::vector<Document>& docs, std::size_t bin_size,
    std::size_t cutoff) {
  if (bin_size == 0) throw DataError("histogram bin size must be at least 1");
  std::map<DocType, std::map<std::size_t, std::size_t>> counts;
  std::map<DocType, LengthHistogram> out;
  for (const Document& doc : docs) {
    LengthHistogram& h = out[doc.doc_type];
    auto& bins = counts[doc.doc_type];
    for (std::size_t len : sentence_lengths(doc)) {
      if (len > cutoff) {
        ++h.excluded;
        continue;
      }
      ++h.included;
      // Length 0 cannot occur for valid spans; keep it in the first bin.
      ++bins[len == 0 ? 0 : (len - 1) / bin_size];
    }
  }
  for (auto& [type, h] : out) {
    for (const auto& [index, count] : counts[type]) {
      HistogramBin bin;
      bin.lo = index * bin_size + 1;
      bin.hi = (index + 1) * bin_size;
      bin.count = count;
      bin.frequency = static_cast<double>(count) / static_cast<double>(h.included);
      h.bins.push_back(bin);
    }
  }
  return out;
}

void write_histogram_csv(const std::map<DocType, LengthHistogram>& hist,
                         std::size_t cutoff, std::ostream& out) {
  out << "type,bin,count,frequency\n";
  for (const auto& [type, h] : hist) {
    for (const HistogramBin& bin : h.bins) {
      out << doc_type_name(type) << ',' << bin.lo << '-' << bin.hi << ','
          << bin.count << ',' << std::setprecision(6) << bin.frequency << '\n';
    }
    out << doc_type_name(type) << ",>" << cutoff << ',' << h.excluded << ",\n";
  }
}

}  // namespace legal_sbd
