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

#include "deplen/tree.hpp"

#include <algorithm>
#include <string>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "deplen/error.hpp"

namespace deplen {

const char* UnitName(Unit unit) {
  return unit == Unit::kWords ? "words" : "chars";
}

Unit ParseUnit(std::string_view name) {
  if (name == "words") return Unit::kWords;
  if (name == "chars" || name == "characters") return Unit::kCharacters;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown unit '" + std::string(name) + "' (expected words|chars)");
}

int CharLength(std::string_view utf8) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::kInternal, "ICU NFC normalizer unavailable");
  }
  const icu::UnicodeString raw = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  const icu::UnicodeString composed = nfc->normalize(raw, status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::kInternal, "NFC normalization failed");
  }
  return composed.countChar32();
}

bool IsPunctuation(std::string_view utf8) {
  if (utf8.empty()) return false;
  const icu::UnicodeString text = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  for (int32_t i = 0; i < text.length();) {
    const UChar32 c = text.char32At(i);
    if (!u_ispunct(c)) return false;
    i += U16_LENGTH(c);
  }
  return true;
}

Token MakeToken(int index, std::string form) {
  const int length = CharLength(form);
  return Token{index, std::move(form), length};
}

Token MakeSyntheticToken(int index, int char_length) {
  return Token{index, std::string(), char_length};
}

bool DepTree::HasEdge(const Edge& edge) const {
  return edge.dependent >= 1 && edge.dependent <= static_cast<int>(size()) &&
         edge.head != kRootHead && head(edge.dependent) == edge.head;
}

bool DepTree::Dominates(int ancestor, int node) const {
  while (depths_[node - 1] > depths_[ancestor - 1]) node = head(node);
  return node == ancestor;
}

DepTree BuildTree(std::vector<Token> tokens, std::vector<int> heads) {
  const int n = static_cast<int>(tokens.size());
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "tree has no tokens");
  if (heads.size() != tokens.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::to_string(n) + " heads, got " +
                    std::to_string(heads.size()));
  }
  for (int i = 0; i < n; ++i) {
    const Token& t = tokens[i];
    if (t.index != i + 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "token at offset " + std::to_string(i) + " has index " +
                      std::to_string(t.index));
    }
    if (t.char_length < 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "token " + std::to_string(t.index) + " has char_length < 1");
    }
    if (!t.form.empty() && CharLength(t.form) != t.char_length) {
      throw Error(ErrorCode::kInvalidArgument,
                  "token " + std::to_string(t.index) +
                      " char_length does not match its form");
    }
    const int h = heads[i];
    if (h < 0 || h > n) {
      throw Error(ErrorCode::kDisconnected,
                  "token " + std::to_string(i + 1) + " is attached to " +
                      std::to_string(h) + ", which is not in the sentence");
    }
    if (h == i + 1) {
      throw Error(ErrorCode::kCycle,
                  "token " + std::to_string(i + 1) + " is its own head");
    }
  }

  // Each walk up the head chain either reaches the root or revisits a token
  // from the same walk.
  std::vector<int> walk_id(n, 0);
  std::vector<bool> settled(n, false);
  for (int start = 1; start <= n; ++start) {
    int v = start;
    while (v != kRootHead && !settled[v - 1]) {
      if (walk_id[v - 1] == start) {
        throw Error(ErrorCode::kCycle,
                    "head relation has a cycle through token " + std::to_string(v));
      }
      walk_id[v - 1] = start;
      v = heads[v - 1];
    }
    for (v = start; v != kRootHead && !settled[v - 1]; v = heads[v - 1]) {
      settled[v - 1] = true;
    }
  }

  const auto roots = std::count(heads.begin(), heads.end(), kRootHead);
  if (roots != 1) {
    throw Error(ErrorCode::kMultiRoot,
                "expected exactly one root, found " + std::to_string(roots));
  }

  DepTree tree;
  tree.tokens_ = std::move(tokens);
  tree.heads_ = std::move(heads);
  tree.children_.assign(n, {});
  for (int d = 1; d <= n; ++d) {
    const int h = tree.heads_[d - 1];
    if (h == kRootHead) {
      tree.root_ = d;
    } else {
      tree.edges_.push_back(Edge{h, d});
      tree.children_[h - 1].push_back(d);
    }
  }

  // Preorder from the root gives depths; its reverse gives subtree sizes.
  std::vector<int> preorder;
  preorder.reserve(n);
  std::vector<int> stack{tree.root_};
  tree.depths_.assign(n, 0);
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    preorder.push_back(v);
    for (int c : tree.children_[v - 1]) {
      tree.depths_[c - 1] = tree.depths_[v - 1] + 1;
      stack.push_back(c);
    }
  }
  if (static_cast<int>(preorder.size()) != n) {
    throw Error(ErrorCode::kDisconnected, "tree does not span all tokens");
  }
  tree.subtree_sizes_.assign(n, 1);
  for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
    const int h = tree.heads_[*it - 1];
    if (h != kRootHead) tree.subtree_sizes_[h - 1] += tree.subtree_sizes_[*it - 1];
  }
  if (tree.edges_.size() != tree.size() - 1) {
    throw Error(ErrorCode::kInternal, "edge count is not n - 1");
  }
  return tree;
}

DepTree BuildTree(std::span<const int> char_lengths, std::vector<int> heads) {
  std::vector<Token> tokens;
  tokens.reserve(char_lengths.size());
  for (std::size_t i = 0; i < char_lengths.size(); ++i) {
    tokens.push_back(MakeSyntheticToken(static_cast<int>(i) + 1, char_lengths[i]));
  }
  return BuildTree(std::move(tokens), std::move(heads));
}

Linearization Linearization::Identity(std::size_t n) {
  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i) + 1;
  return FromOrder(std::move(order));
}

Linearization Linearization::FromOrder(std::vector<int> order) {
  const int n = static_cast<int>(order.size());
  Linearization lin;
  lin.positions_.assign(n, 0);
  for (int k = 0; k < n; ++k) {
    const int t = order[k];
    if (t < 1 || t > n || lin.positions_[t - 1] != 0) {
      throw Error(ErrorCode::kInvalidArgument, "order is not a permutation of 1..n");
    }
    lin.positions_[t - 1] = k + 1;
  }
  lin.order_ = std::move(order);
  return lin;
}

Linearization Linearization::FromPositions(std::span<const int> positions) {
  const int n = static_cast<int>(positions.size());
  std::vector<int> order(n, 0);
  for (int t = 1; t <= n; ++t) {
    const int p = positions[t - 1];
    if (p < 1 || p > n || order[p - 1] != 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "positions are not a permutation of 1..n");
    }
    order[p - 1] = t;
  }
  return FromOrder(std::move(order));
}

Linearization Linearization::Reversed() const {
  return FromOrder(std::vector<int>(order_.rbegin(), order_.rend()));
}

bool IsProjective(const DepTree& tree, const Linearization& lin) {
  if (lin.size() != tree.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "linearization size does not match the tree");
  }
  for (const Edge& e : tree.edges()) {
    const int a = std::min(lin.position(e.head), lin.position(e.dependent));
    const int b = std::max(lin.position(e.head), lin.position(e.dependent));
    for (int p = a + 1; p < b; ++p) {
      if (!tree.Dominates(e.head, lin.token_at(p))) return false;
    }
  }
  return true;
}

}  // namespace deplen
