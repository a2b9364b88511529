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

// Dependency tree data model. Tokens are numbered 1..n in the order they were
// given; a Linearization assigns each token a position 1..n, independently of
// that numbering. All types are immutable once built.

#ifndef DEPLEN_TREE_HPP_
#define DEPLEN_TREE_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace deplen {

// Head value marking the root token.
inline constexpr int kRootHead = 0;

enum class Unit { kWords, kCharacters };

const char* UnitName(Unit unit);
// "words", "chars" or "characters".
Unit ParseUnit(std::string_view name);

struct Token {
  int index = 0;
  std::string form;
  int char_length = 0;  // lambda: characters of the NFC-normalized form
};

// Number of Unicode code points of the NFC normalization of a UTF-8 string.
int CharLength(std::string_view utf8);

// True iff `utf8` is non-empty and every code point is punctuation.
bool IsPunctuation(std::string_view utf8);

// Token whose char_length is derived from the form.
Token MakeToken(int index, std::string form);
// Synthetic token with an empty form.
Token MakeSyntheticToken(int index, int char_length);

struct Edge {
  int head = 0;
  int dependent = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class DepTree {
 public:
  std::size_t size() const { return tokens_.size(); }
  std::span<const Token> tokens() const { return tokens_; }
  const Token& token(int index) const { return tokens_[index - 1]; }
  int head(int index) const { return heads_[index - 1]; }
  int root() const { return root_; }

  // n - 1 edges, sorted by dependent index.
  std::span<const Edge> edges() const { return edges_; }
  std::span<const int> children(int index) const { return children_[index - 1]; }
  int subtree_size(int index) const { return subtree_sizes_[index - 1]; }
  bool HasEdge(const Edge& edge) const;
  // True iff `ancestor` lies on the path from `node` to the root (inclusive).
  bool Dominates(int ancestor, int node) const;

 private:
  friend DepTree BuildTree(std::vector<Token> tokens, std::vector<int> heads);
  DepTree() = default;

  std::vector<Token> tokens_;
  std::vector<int> heads_;
  int root_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> children_;
  std::vector<int> subtree_sizes_;
  std::vector<int> depths_;
};

// Validates and builds a tree. heads[i] is the head of tokens[i] (kRootHead
// for the root). tokens[i].index must equal i + 1.
//
// Errors: kInvalidArgument (empty input, size mismatch, bad token fields),
// kDisconnected (a head names a token that does not exist), kCycle,
// kMultiRoot.
DepTree BuildTree(std::vector<Token> tokens, std::vector<int> heads);

// Convenience: synthetic tokens of the given character lengths.
DepTree BuildTree(std::span<const int> char_lengths, std::vector<int> heads);

class Linearization {
 public:
  // Token i at position i.
  static Linearization Identity(std::size_t n);
  // order[k] is the token placed at position k + 1.
  static Linearization FromOrder(std::vector<int> order);
  // positions[i] is the position of token i + 1.
  static Linearization FromPositions(std::span<const int> positions);

  std::size_t size() const { return order_.size(); }
  int position(int token) const { return positions_[token - 1]; }
  int token_at(int position) const { return order_[position - 1]; }
  // Tokens in position order.
  const std::vector<int>& order() const { return order_; }
  const std::vector<int>& positions() const { return positions_; }
  Linearization Reversed() const;

  // Lexicographic on order().
  friend bool operator==(const Linearization& a, const Linearization& b) {
    return a.order_ == b.order_;
  }
  friend auto operator<=>(const Linearization& a, const Linearization& b) {
    return a.order_ <=> b.order_;
  }

 private:
  std::vector<int> order_;
  std::vector<int> positions_;
};

// Every edge's span contains only descendants of the edge's head.
// Throws kInvalidArgument if the sizes differ.
bool IsProjective(const DepTree& tree, const Linearization& lin);

}  // namespace deplen

#endif  // DEPLEN_TREE_HPP_
