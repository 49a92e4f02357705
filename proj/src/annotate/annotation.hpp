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

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hst/hst.hpp"
#include "render/glyph.hpp"
#include "util/error.hpp"

namespace docloom::ann {

enum class Category { header, key, value, other };

const char* category_name(Category c);

struct Box {
  int x1 = 0, y1 = 0, x2 = 0, y2 = 0;

  bool operator==(const Box&) const = default;
  int width() const { return x2 - x1; }
  int height() const { return y2 - y1; }
  long long area() const { return static_cast<long long>(width()) * height(); }
};

// One text segment at OCR granularity. Links are directed parent->child
// pairs; each pair is stored once, on the parent, with first == own id.
struct Entity {
  int id = 0;
  std::string text;
  std::optional<Box> box;
  Category category = Category::other;
  std::vector<std::pair<int, int>> links;
};

struct DocumentAnnotation {
  int width = 0;
  int height = 0;
  std::vector<Entity> entities;
};

// Pairing between tree nodes and the entity ids they produced, in reading
// order. The title contributes the first visit with node == nullptr.
struct NodeEntities {
  const hst::HstNode* node = nullptr;
  int primary_id = 0;  // header, key, value, or other entity of the node
  int value_id = -1;   // inline value of a key_value node
};

// Pre-order extraction: title and headers -> header, key sides -> key,
// values and leaf hyphen items -> value, free text -> other. key_value
// nodes yield two entities plus a [key, value] link; every parent node
// links to each direct child's primary entity. Boxes stay absent.
DocumentAnnotation extract_entities(const hst::HstTree& tree);

// The node/entity pairing behind extract_entities; same order, same ids.
// Pointers remain valid while `tree` is alive.
std::vector<NodeEntities> entity_map(const hst::HstTree& tree);

// FUNSD-style JSON: {"form":[{id,text,box,label,linking,words}]}. Links are
// mirrored onto both endpoints; word boxes split the entity box
// proportionally to glyph advances, with each inter-word space attached to
// the gap before the next word. Requires every box present (MissingBox).
std::string export_funsd(const DocumentAnnotation& ann, const render::GlyphModel& gm);

// Inverse of export_funsd for externally produced files. Mirrored links
// collapse back to one parent-side pair.
DocumentAnnotation parse_funsd(const std::string& json);

// Longest-path level per entity over the link DAG (roots at 0).
// Throws CyclicLinks when the graph has a cycle.
std::vector<int> entity_levels(const DocumentAnnotation& doc);

struct HierarchyStats {
  // avg_per_level[d] = average number of level-d entities per document;
  // sized to cover levels 0..max(5, deepest observed).
  std::vector<double> avg_per_level;
  double avg_entities = 0.0;
  int n_docs = 0;
};

HierarchyStats hierarchy_stats(const std::vector<DocumentAnnotation>& corpus);

std::string hierarchy_stats_json(const HierarchyStats& stats);

}  // namespace docloom::ann
