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
#include <set>
#include <sstream>

#include "doctest.h"
#include "legal_sbd/corpus.h"
#include "legal_sbd/errors.h"
#include "legal_sbd/synthetic.h"

namespace legal_sbd {
namespace {

const char* kMinimal =
    R"({"id":"d1","language":"fr","type":"law","text":"A. B.","spans":[{"start":0,"end":2,"label":"Sentence"},{"start":3,"end":5,"label":"Sentence"}]})";

std::vector<Document> corpus_of(const std::string& jsonl) {
  std::istringstream in(jsonl);
  return read_corpus(in);
}

Document make_doc(std::string id, std::string lang, DocType type) {
  Document d;
  d.id = std::move(id);
  d.language = std::move(lang);
  d.doc_type = type;
  d.text = "Texte.";
  d.spans = {{0, 6}};
  return d;
}

std::string error_of(const std::string& jsonl) {
  try {
    corpus_of(jsonl);
  } catch (const DataError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("minimal well-formed record") {
  const auto docs = corpus_of(kMinimal);
  REQUIRE(docs.size() == 1);
  CHECK(docs[0].id == "d1");
  CHECK(docs[0].doc_type == DocType::kLaw);
  CHECK(docs[0].spans.size() == 2);
  CHECK(docs[0].spans[1] == SentenceSpan{3, 5});
}

TEST_CASE("load errors name the problem and the document") {
  const std::string out_of_range =
      R"({"id":"d2","language":"fr","type":"law","text":"A. B.","spans":[{"start":0,"end":6}]})";
  CHECK(error_of(out_of_range).find("span out of range") != std::string::npos);
  CHECK(error_of(out_of_range).find("d2") != std::string::npos);

  const std::string overlap =
      R"({"id":"d3","language":"fr","type":"law","text":"A. B.","spans":[{"start":0,"end":3},{"start":2,"end":5}]})";
  CHECK(error_of(overlap).find("overlapping") != std::string::npos);
  CHECK(error_of(overlap).find("d3") != std::string::npos);

  const std::string malformed = std::string(kMinimal) + "\n{\"id\": \n";
  CHECK(error_of(malformed).find("line 2") != std::string::npos);

  CHECK(error_of(R"({"id":"d4","language":"fr","type":"decree","text":"A.","spans":[]})")
            .find("unknown type") != std::string::npos);
  CHECK(error_of(R"({"id":"d5","language":"fr","type":"law","text":"","spans":[]})")
            .find("empty text") != std::string::npos);
  CHECK(error_of(R"({"id":"d6","language":"fr","type":"law","text":"A.  B.","spans":[{"start":2,"end":4}]})")
            .find("whitespace-only") != std::string::npos);
  CHECK(error_of(std::string(kMinimal) + "\n" + kMinimal).find("duplicate") !=
        std::string::npos);
}

TEST_CASE("offsets count scalar values, not bytes") {
  const auto docs = corpus_of(
      R"({"id":"u","language":"fr","type":"judgment","text":"Été. Oui.","spans":[{"start":0,"end":4},{"start":5,"end":9}]})");
  CHECK(docs[0].spans[1].end == 9);
}

TEST_CASE("CRLF is folded and offsets follow") {
  const auto docs = corpus_of(
      R"({"id":"c","language":"fr","type":"law","text":"A.\r\nB.\r\nC.","spans":[{"start":0,"end":2},{"start":4,"end":6},{"start":8,"end":10}]})");
  CHECK(docs[0].text == "A.\nB.\nC.");
  CHECK(docs[0].spans[1] == SentenceSpan{3, 5});
  CHECK(docs[0].spans[2] == SentenceSpan{6, 8});
}

TEST_CASE("save then load is the identity") {
  SyntheticOptions opts;
  opts.documents = 12;
  opts.abbreviation_rate = 0.3;
  std::vector<Document> docs = generate_synthetic_corpus(opts);
  docs.push_back(corpus_of(kMinimal)[0]);
  std::ostringstream out;
  write_corpus(docs, out);
  std::istringstream in(out.str());
  const auto again = read_corpus(in);
  CHECK(again == docs);
  std::ostringstream out2;
  write_corpus(again, out2);
  CHECK(out2.str() == out.str());
}

TEST_CASE("split sizes follow 60/20/20") {
  std::vector<Document> docs;
  for (int i = 0; i < 10; ++i) {
    docs.push_back(make_doc("d" + std::to_string(i), "fr", DocType::kLaw));
  }
  const CorpusSplit s = split_corpus(docs, 42);
  CHECK(s.train.size() == 6);
  CHECK(s.validation.size() == 2);
  CHECK(s.test.size() == 2);
  CHECK_NOTHROW(check_split(s, docs));

  const CorpusSplit again = split_corpus(docs, 42);
  CHECK(again.train == s.train);
  CHECK(again.validation == s.validation);
  CHECK(again.test == s.test);

  // Half rounds up: 0.2 * 13 = 2.6 -> 3; 0.2 * 12.5 would be 2.5 -> 3.
  docs.push_back(make_doc("d10", "fr", DocType::kLaw));
  docs.push_back(make_doc("d11", "fr", DocType::kLaw));
  docs.push_back(make_doc("d12", "fr", DocType::kLaw));
  CHECK(split_corpus(docs, 1).validation.size() == 3);
}

TEST_CASE("split is a stratified partition for every seed") {
  std::vector<Document> docs;
  const char* langs[] = {"fr", "es", "it", "de", "en", "pt"};
  for (int i = 0; i < 37; ++i) {
    docs.push_back(make_doc("doc" + std::to_string(i), langs[i % 6],
                            i % 3 ? DocType::kJudgment : DocType::kLaw));
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const CorpusSplit s = split_corpus(docs, seed);
    REQUIRE_NOTHROW(check_split(s, docs));
    REQUIRE(s.validation.size() == 7);  // round(7.4)
    REQUIRE(s.test.size() == 7);
    std::map<std::string, int> held_out;
    for (const auto* part : {&s.validation, &s.test}) {
      for (const auto& id : *part) {
        ++held_out[langs[std::stoi(id.substr(3)) % 6]];
      }
    }
    for (const auto& [lang, n] : held_out) REQUIRE(n <= 4);
  }
  CHECK(split_corpus(docs, 1).train != split_corpus(docs, 2).train);
}

TEST_CASE("split rejects tiny corpora") {
  std::vector<Document> docs;
  for (int i = 0; i < 4; ++i) {
    docs.push_back(make_doc("d" + std::to_string(i), "fr", DocType::kLaw));
  }
  CHECK_THROWS_AS(split_corpus(docs, 1), DataError);
  docs.push_back(make_doc("d4", "fr", DocType::kLaw));
  const CorpusSplit s = split_corpus(docs, 1);
  CHECK(s.train.size() == 3);
}

TEST_CASE("split file round trip and validation") {
  std::vector<Document> docs;
  for (int i = 0; i < 6; ++i) {
    docs.push_back(make_doc("d" + std::to_string(i), "es", DocType::kJudgment));
  }
  const CorpusSplit s = split_corpus(docs, 9);
  const CorpusSplit back = split_from_json(split_to_json(s));
  CHECK(back.seed == 9);
  CHECK(back.train == s.train);
  CHECK(back.test == s.test);
  CorpusSplit broken = back;
  broken.train.push_back(broken.test.front());
  CHECK_THROWS_AS(check_split(broken, docs), DataError);
}

TEST_CASE("corpus stats") {
  CHECK(corpus_stats({}).empty());
  std::ostringstream empty_csv;
  write_stats_csv({}, empty_csv);
  const std::string header = empty_csv.str();
  CHECK(std::count(header.begin(), header.end(), '\n') == 1);

  const auto docs = corpus_of(kMinimal);
  const StatsTable table = corpus_stats(docs);
  const SubsetStats& s = table.at({"fr", DocType::kLaw});
  CHECK(s.documents == 1);
  CHECK(s.sentences == 2);
  CHECK(s.tokens == 4);
  CHECK(s.tokens_with_whitespace == 4);
  CHECK(s.document_tokens == 4);

  SyntheticOptions opts;
  opts.documents = 20;
  const auto syn = generate_synthetic_corpus(opts);
  std::size_t spans = 0;
  for (const Document& d : syn) spans += d.spans.size();
  std::size_t counted = 0;
  for (const auto& [key, row] : corpus_stats(syn)) counted += row.sentences;
  CHECK(counted == spans);

  std::ostringstream csv;
  write_stats_csv(table, csv);
  CHECK(csv.str() ==
        "language,type,documents,sentences,tokens,tokens_with_whitespace,"
        "document_tokens\nfr,law,1,2,4,4,4\nall,all,1,2,4,4,4\n");
}

TEST_CASE("length histogram") {
  Document d = make_doc("h", "fr", DocType::kJudgment);
  d.text = "Un deux trois quatre cinq six.";  // 7 tokens
  d.spans = {{0, 30}};
  auto hist = length_histogram({d}, 5, 101);
  REQUIRE(hist.at(DocType::kJudgment).bins.size() == 1);
  const HistogramBin& bin = hist.at(DocType::kJudgment).bins[0];
  CHECK(bin.lo == 6);
  CHECK(bin.hi == 10);
  CHECK(bin.frequency == 1.0);

  hist = length_histogram({d}, 5, 6);
  CHECK(hist.at(DocType::kJudgment).excluded == 1);
  CHECK(hist.at(DocType::kJudgment).bins.empty());

  std::ostringstream csv;
  write_histogram_csv(length_histogram({d}, 5, 101), 101, csv);
  CHECK(csv.str() == "type,bin,count,frequency\njudgment,6-10,1,1\njudgment,>101,0,\n");
  CHECK_THROWS_AS(length_histogram({d}, 0, 10), DataError);
}

}  // namespace legal_sbd
