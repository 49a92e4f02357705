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

#include "support/treegen.hpp"

#include <array>

namespace docloom::testsupport {

using hst::HstNode;
using hst::HstTree;
using hst::NodeKind;
using util::SplitMix64;

namespace {

constexpr std::array<const char*, 24> kWords = {
    "alpha",  "beta",   "gamma",  "delta", "epsilon", "report", "invoice",
    "total",  "name",   "date",   "city",  "amount",  "status", "phone",
    "office", "region", "item",   "note",  "code",    "tax",    "summary",
    "grade",  "school", "branch",
};

constexpr std::array<const char*, 6> kCjkWords = {
    "姓名", "日期", "学校", "金额", "备注", "城市",
};

// Depth-1+ rows under construction share this shape with the parser's rows.
void add_children(HstNode* parent, SplitMix64& gen, int* budget, int depth) {
  if (*budget <= 0 || depth > 4) return;
  const int n = 1 + static_cast<int>(gen.below(3));
  for (int i = 0; i < n && *budget > 0; ++i) {
    HstNode child;
    child.depth = depth;
    const uint64_t pick = gen.below(10);
    if (pick < 4) {
      child.kind = NodeKind::key_value;
      child.text = random_word(gen) + ":";
      child.value_text = random_word(gen);
      *budget -= 2;
    } else if (pick < 7) {
      child.kind = NodeKind::key;
      child.text = random_word(gen) + ":";
      *budget -= 1;
      add_children(&child, gen, budget, depth + 1);
    } else {
      child.kind = NodeKind::value;
      child.text = random_word(gen);
      *budget -= 1;
    }
    if (child.kind == NodeKind::key_value && gen.below(4) == 0) {
      add_children(&child, gen, budget, depth + 1);
    }
    parent->children.push_back(std::move(child));
  }
}

}  // namespace

std::string random_word(SplitMix64& gen, bool cjk) {
  if (cjk) return kCjkWords[gen.below(kCjkWords.size())];
  std::string w = kWords[gen.below(kWords.size())];
  if (gen.below(3) == 0) {
    w += ' ';
    w += kWords[gen.below(kWords.size())];
  }
  if (gen.below(4) == 0) w += std::to_string(gen.below(1000));
  return w;
}

HstTree random_tree(uint64_t seed, int target_nodes) {
  SplitMix64 gen(seed);
  HstTree tree;
  tree.title = random_word(gen) + " " + random_word(gen);
  int budget = target_nodes;
  while (budget > 0) {
    HstNode header;
    header.kind = NodeKind::header;
    header.header_level = 1 + static_cast<int>(gen.below(3));
    header.text = random_word(gen);
    header.depth = 0;
    budget -= 1;
    if (gen.below(4) == 0) add_children(&header, gen, &budget, 1);
    tree.paragraphs.push_back(std::move(header));

    const int n = 1 + static_cast<int>(gen.below(4));
    for (int i = 0; i < n && budget > 0; ++i) {
      HstNode node;
      node.depth = 0;
      const uint64_t pick = gen.below(10);
      if (pick < 5) {
        node.kind = NodeKind::key_value;
        node.text = random_word(gen) + ":";
        node.value_text = random_word(gen);
        budget -= 2;
      } else if (pick < 8) {
        node.kind = NodeKind::key;
        node.text = random_word(gen) + ":";
        budget -= 1;
        add_children(&node, gen, &budget, 1);
      } else {
        node.kind = NodeKind::free_text;
        node.text = random_word(gen);
        budget -= 1;
      }
      tree.paragraphs.push_back(std::move(node));
    }
  }
  tree.source_lang = hst::classify_language(tree);
  return tree;
}

seq::LayoutDoc random_layout_doc(uint64_t seed, int n) {
  SplitMix64 gen(seed);
  seq::LayoutDoc doc;
  doc.width = 600 + static_cast<int>(gen.below(600));
  doc.height = 800 + static_cast<int>(gen.below(600));
  doc.doc_id = "doc" + std::to_string(seed);
  for (int i = 0; i < n; ++i) {
    seq::LayoutEntity e;
    e.text = random_word(gen, gen.below(6) == 0);
    ann::Box box;
    box.x1 = static_cast<int>(gen.below(static_cast<uint64_t>(doc.width - 60)));
    box.y1 = static_cast<int>(gen.below(static_cast<uint64_t>(doc.height - 30)));
    box.x2 = box.x1 + 20 + static_cast<int>(gen.below(40));
    box.y2 = box.y1 + 10 + static_cast<int>(gen.below(20));
    e.box = box;
    doc.entities.push_back(std::move(e));
  }
  return doc;
}

}  // namespace docloom::testsupport
