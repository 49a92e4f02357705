// Copyright 2026 The docloom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Hierarchical structure text (HST): a line-oriented grammar for
// relation-rich document content. A document is a title line followed by a
// <content>...</content> block. Inside the block, <h1>..<h6> lines open
// paragraphs, "Key: Value" lines form pairs, a trailing colon opens a key
// whose nested children follow, and leading hyphens give nesting depth
// (one level per hyphen; "- - " and "--" are equivalent on input).

#pragma once

#include <string>
#include <vector>

#include "util/error.hpp"

namespace docloom::hst {

enum class NodeKind { header, key, value, key_value, free_text };

enum class SourceLang { latin, cjk, mixed };

struct HstNode {
  NodeKind kind = NodeKind::free_text;
  int header_level = 0;     // 1..6 for header nodes
  std::string text;         // header/free text, key text (keeps the ':'), or leaf value
  std::string value_text;   // inline value; key_value nodes only
  int depth = 0;            // 0 at paragraph level, parent depth + 1 below
  std::vector<HstNode> children;
};

// Parsed document. `paragraphs` holds the depth-0 nodes in document order;
// header nodes open paragraphs, and the depth-0 nodes that follow a header
// belong to its paragraph.
struct HstTree {
  std::string title;
  std::vector<HstNode> paragraphs;
  SourceLang source_lang = SourceLang::latin;
};

struct Diagnostic {
  Errc kind = Errc::missing_content_tag;
  int line = 0;  // 1-based line in the input; 0 when not tied to a line
  std::string message;
};

// Throws Error (code + line in detail()) on malformed input.
HstTree parse_hst(const std::string& input);

// Canonical form: "<hN> ", "- " per depth level, "Key: value" inline pairs,
// trailing colon for keys with children, LF line endings, trailing newline.
// parse_hst(write_hst(t)) is structurally equal to t for any tree that
// satisfies the node invariants (keys end with ':', leaf texts do not end
// with ':' or start with '-', no embedded newlines or tag lines).
std::string write_hst(const HstTree& tree);

// Empty iff parse_hst succeeds; otherwise one diagnostic per failure
// (parsing stops at the first error, so at most one today).
std::vector<Diagnostic> validate_hst(const std::string& input);

// Title plus node-by-node equality on (kind, level, text, value, depth,
// children). source_lang is derived from content and not compared.
bool structurally_equal(const HstTree& a, const HstTree& b);
bool structurally_equal(const HstNode& a, const HstNode& b);

SourceLang classify_language(const HstTree& tree);

// Total node count including inline values (one per key_value).
int count_nodes(const HstTree& tree);

}  // namespace docloom::hst
