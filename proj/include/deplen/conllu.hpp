// Copyright 2026 The deplen Authors
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

// Reader for the subset of CoNLL-U needed for length analysis: only the ID,
// FORM and HEAD columns are consumed. Multiword ranges ("3-4") and empty
// nodes ("5.1") are skipped before the tree is validated.

#ifndef DEPLEN_CONLLU_HPP_
#define DEPLEN_CONLLU_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "deplen/tree.hpp"

namespace deplen {

struct ConlluOptions {
  // Remove tokens whose form is made only of punctuation. A removed token
  // must be a non-root leaf; otherwise the whole sentence is rejected.
  bool drop_punctuation = false;
};

struct ConlluDocument {
  std::vector<DepTree> trees;
  // Line number of the first token line of each tree.
  std::vector<std::size_t> first_lines;
  // One message per sentence rejected by punctuation removal.
  std::vector<std::string> rejected;
};

ConlluDocument ReadConllu(std::string_view text, const ConlluOptions& options = {});

inline std::vector<DepTree> ParseConllu(std::string_view text,
                                        const ConlluOptions& options = {}) {
  return ReadConllu(text, options).trees;
}

// Writes ID, FORM and HEAD; all other columns are "_".
std::string ToConllu(std::span<const DepTree> trees);

}  // namespace deplen

#endif  // DEPLEN_CONLLU_HPP_
