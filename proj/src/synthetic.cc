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

#include "legal_sbd/synthetic.h"

#include <array>
#include <cstdio>
#include <random>
#include <string>
#include <string_view>

#include "legal_sbd/unicode.h"

namespace legal_sbd {
namespace {

constexpr std::array<std::string_view, 5> kLanguages = {"fr", "es", "it", "en",
                                                        "de"};

constexpr std::array<std::string_view, 16> kOpeners = {
    "Le", "La", "El", "Il", "The", "Der", "Die", "Les",
    "En", "Dans", "Con", "Nach", "Per", "Under", "Selon", "Los"};

constexpr std::array<std::string_view, 40> kWords = {
    "tribunal", "recours",   "article",  "juge",      "sentencia", "ley",
    "código",   "decreto",   "corte",    "appello",   "diritto",   "court",
    "appeal",   "statute",   "gericht",  "urteil",    "gesetz",    "partie",
    "demande",  "est",       "entré",    "à",         "l'école",   "contrato",
    "obligación", "prova",   "sentenza", "claimant",  "defendant", "klage",
    "rechts",   "que",       "de",       "del",       "of",        "und",
    "décision", "élément",   "über",     "niño"};

constexpr std::array<std::string_view, 8> kNames = {
    "Silva", "Müller", "Dupont", "García", "Rossi", "Smith", "Schmidt", "Álvarez"};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t bound) {
    const std::uint64_t max = std::mt19937_64::max();
    const std::uint64_t limit = max - (max % bound + 1) % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x > limit);
    return static_cast<std::size_t>(x % bound);
  }
  std::size_t between(std::size_t lo, std::size_t hi) {
    return lo + below(hi - lo + 1);
  }
  double unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  template <typename Array>
  std::string_view pick(const Array& items) {
    return items[below(items.size())];
  }

 private:
  std::mt19937_64 engine_;
};

std::string abbreviation(Rng& rng) {
  const std::string num = std::to_string(rng.between(1, 400));
  switch (rng.below(6)) {
    case 0: return "art. " + num;
    case 1: return "Sr(a). " + std::string(rng.pick(kNames));
    case 2: return "n. " + num;
    case 3: return "Dr. " + std::string(rng.pick(kNames));
    case 4: return "cf. art. " + num;
    default: return "al. " + num;
  }
}

std::string sentence(Rng& rng, double abbreviation_rate) {
  std::string s(rng.pick(kOpeners));
  const std::size_t words = rng.between(3, 14);
  const std::size_t abbr_at =
      rng.unit() < abbreviation_rate ? rng.between(1, words) : words + 1;
  for (std::size_t w = 1; w <= words; ++w) {
    s += ' ';
    if (w == abbr_at) {
      s += abbreviation(rng);
      continue;
    }
    const std::size_t r = rng.below(20);
    if (r < 14) {
      s += rng.pick(kWords);
    } else if (r < 16) {
      s += std::to_string(rng.between(1, 2024));
    } else if (r < 17) {
      s += rng.pick(kNames);
    } else if (r < 18) {
      s += "(" + std::string(rng.pick(kWords)) + ")";
    } else {
      s += std::string(rng.pick(kWords)) + ",";
    }
  }
  const std::size_t t = rng.below(10);
  s += t < 8 ? '.' : (t < 9 ? '!' : '?');
  return s;
}

}  // namespace

std::vector<Document> generate_synthetic_corpus(const SyntheticOptions& options) {
  Rng rng(options.seed);
  std::vector<Document> docs;
  docs.reserve(options.documents);
  for (std::size_t d = 0; d < options.documents; ++d) {
    Document doc;
    char id[32];
    std::snprintf(id, sizeof(id), "syn-%04zu", d);
    doc.id = id;
    doc.language = std::string(kLanguages[d % kLanguages.size()]);
    doc.doc_type = d % 2 == 0 ? DocType::kJudgment : DocType::kLaw;
    const std::size_t n = rng.between(options.min_sentences, options.max_sentences);
    std::size_t offset = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k > 0) {
        doc.text += ' ';
        ++offset;
      }
      const std::string s = sentence(rng, options.abbreviation_rate);
      const std::size_t len = unicode::length(s);
      doc.spans.push_back({offset, offset + len});
      doc.text += s;
      offset += len;
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

}  // namespace legal_sbd
