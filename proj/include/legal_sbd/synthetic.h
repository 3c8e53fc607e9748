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

#ifndef LEGAL_SBD_SYNTHETIC_H_
#define LEGAL_SBD_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "legal_sbd/corpus.h"

namespace legal_sbd {

struct SyntheticOptions {
  std::size_t documents = 50;
  std::size_t min_sentences = 8;
  std::size_t max_sentences = 20;
  std::uint64_t seed = 1;
  // Probability that a sentence carries a period-bearing abbreviation such
  // as "art. 12" or "Sr(a). Silva" in its interior.
  double abbreviation_rate = 0.0;
};

// Generated legal-flavoured documents in which every sentence ends with a
// terminator and the next sentence follows after one space with an
// uppercase word. Languages cycle through fr, es, it, en, de; types
// alternate between judgment and law.
std::vector<Document> generate_synthetic_corpus(const SyntheticOptions& options);

}  // namespace legal_sbd

#endif  // LEGAL_SBD_SYNTHETIC_H_
