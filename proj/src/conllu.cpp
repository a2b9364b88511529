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

#include "deplen/conllu.hpp"

#include <charconv>
#include <optional>
#include <utility>

#include "deplen/error.hpp"

namespace deplen {
namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::optional<int> ParseNonNegative(std::string_view s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 0) {
    return std::nullopt;
  }
  return value;
}

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

struct PendingToken {
  std::string form;
  int head = 0;
  std::size_t line = 0;
};

class Reader {
 public:
  Reader(const ConlluOptions& options, ConlluDocument* doc)
      : options_(options), doc_(doc) {}

  void AddLine(std::string_view line, std::size_t line_no) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (IsBlank(line)) {
      Flush();
      return;
    }
    if (line.front() == '#') return;

    const auto fields = SplitTabs(line);
    if (fields.size() < 7) {
      throw ParseError(line_no, "expected at least 7 tab-separated columns, got " +
                                    std::to_string(fields.size()));
    }
    const std::string_view id = fields[0];
    if (id.find('-') != std::string_view::npos ||
        id.find('.') != std::string_view::npos) {
      return;
    }
    const auto index = ParseNonNegative(id);
    if (!index || *index == 0) {
      throw ParseError(line_no, "malformed ID '" + std::string(id) + "'");
    }
    if (*index != static_cast<int>(pending_.size()) + 1) {
      throw ParseError(line_no, "expected ID " + std::to_string(pending_.size() + 1) +
                                    ", got " + std::string(id));
    }
    const auto head = ParseNonNegative(fields[6]);
    if (!head) {
      throw ParseError(line_no, "malformed HEAD '" + std::string(fields[6]) + "'");
    }
    if (fields[1].empty()) {
      throw ParseError(line_no, "empty FORM");
    }
    if (pending_.empty()) first_line_ = line_no;
    pending_.push_back(PendingToken{std::string(fields[1]), *head, line_no});
  }

  void Flush() {
    if (pending_.empty()) return;
    ++sentence_count_;
    std::vector<PendingToken> tokens = std::move(pending_);
    pending_.clear();
    if (options_.drop_punctuation && !DropPunctuation(tokens)) return;

    std::vector<Token> built;
    std::vector<int> heads;
    built.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      built.push_back(MakeToken(static_cast<int>(i) + 1, std::move(tokens[i].form)));
      heads.push_back(tokens[i].head);
    }
    try {
      doc_->trees.push_back(BuildTree(std::move(built), std::move(heads)));
    } catch (const Error& e) {
      throw Error(e.code(), "sentence " + std::to_string(sentence_count_) +
                                " (line " + std::to_string(first_line_) +
                                "): " + e.what());
    }
    doc_->first_lines.push_back(first_line_);
  }

 private:
  // Removes punctuation leaves and renumbers. Returns false if the sentence
  // had to be rejected.
  bool DropPunctuation(std::vector<PendingToken>& tokens) {
    const int n = static_cast<int>(tokens.size());
    std::vector<bool> drop(n, false);
    for (int i = 0; i < n; ++i) drop[i] = IsPunctuation(tokens[i].form);
    std::vector<int> new_index(n + 1, 0);
    int kept = 0;
    for (int i = 0; i < n; ++i) {
      if (!drop[i]) new_index[i + 1] = ++kept;
    }
    auto reject = [&](const std::string& why) {
      doc_->rejected.push_back("sentence " + std::to_string(sentence_count_) +
                               " (line " + std::to_string(first_line_) + "): " + why);
      return false;
    };
    for (int i = 0; i < n; ++i) {
      const int h = tokens[i].head;
      if (h > n) continue;  // reported by BuildTree
      if (drop[i] && h == kRootHead) {
        return reject("punctuation token '" + tokens[i].form + "' is the root");
      }
      if (!drop[i] && h != kRootHead && drop[h - 1]) {
        return reject("punctuation token '" + tokens[h - 1].form +
                      "' has dependents");
      }
    }
    if (kept == 0) return reject("sentence consists only of punctuation");
    std::vector<PendingToken> out;
    out.reserve(kept);
    for (int i = 0; i < n; ++i) {
      if (drop[i]) continue;
      PendingToken t = std::move(tokens[i]);
      if (t.head != kRootHead && t.head <= n) t.head = new_index[t.head];
      out.push_back(std::move(t));
    }
    tokens = std::move(out);
    return true;
  }

  const ConlluOptions& options_;
  ConlluDocument* doc_;
  std::vector<PendingToken> pending_;
  std::size_t first_line_ = 0;
  std::size_t sentence_count_ = 0;
};

}  // namespace

ConlluDocument ReadConllu(std::string_view text, const ConlluOptions& options) {
  ConlluDocument doc;
  Reader reader(options, &doc);
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    reader.AddLine(text.substr(start, end - start), ++line_no);
    start = end + 1;
  }
  reader.Flush();
  return doc;
}

std::string ToConllu(std::span<const DepTree> trees) {
  std::string out;
  for (const DepTree& tree : trees) {
    for (const Token& t : tree.tokens()) {
      out += std::to_string(t.index);
      out += '\t';
      out += t.form.empty() ? std::string("_") : t.form;
      out += "\t_\t_\t_\t_\t";
      out += std::to_string(tree.head(t.index));
      out += "\t_\t_\t_\n";
    }
    out += '\n';
  }
  return out;
}

}  // namespace deplen
