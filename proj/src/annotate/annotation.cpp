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

#include "annotate/annotation.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

#include <json.hpp>

#include "util/text.hpp"

namespace docloom::ann {

using json = nlohmann::ordered_json;

const char* category_name(Category c) {
  switch (c) {
    case Category::header: return "header";
    case Category::key: return "key";
    case Category::value: return "value";
    case Category::other: return "other";
  }
  return "other";
}

namespace {

Category leaf_category(const hst::HstNode& node) {
  switch (node.kind) {
    case hst::NodeKind::header: return Category::header;
    case hst::NodeKind::key:
    case hst::NodeKind::key_value: return Category::key;
    case hst::NodeKind::value: return Category::value;
    case hst::NodeKind::free_text: return Category::other;
  }
  return Category::other;
}

struct Extractor {
  DocumentAnnotation ann;
  std::vector<NodeEntities> visits;

  int add_entity(std::string text, Category category) {
    Entity e;
    e.id = static_cast<int>(ann.entities.size());
    e.text = std::move(text);
    e.category = category;
    ann.entities.push_back(std::move(e));
    return ann.entities.back().id;
  }

  // Returns the node's primary entity id so the parent can link to it.
  int visit(const hst::HstNode& node) {
    NodeEntities v;
    v.node = &node;
    v.primary_id = add_entity(node.text, leaf_category(node));
    if (node.kind == hst::NodeKind::key_value) {
      v.value_id = add_entity(node.value_text, Category::value);
      ann.entities[v.primary_id].links.emplace_back(v.primary_id, v.value_id);
    }
    visits.push_back(v);
    const int primary = v.primary_id;
    for (const auto& child : node.children) {
      const int child_id = visit(child);
      ann.entities[primary].links.emplace_back(primary, child_id);
    }
    return primary;
  }
};

Category category_from_name(const std::string& name) {
  if (name == "header") return Category::header;
  if (name == "key" || name == "question") return Category::key;
  if (name == "value" || name == "answer") return Category::value;
  return Category::other;
}

}  // namespace

DocumentAnnotation extract_entities(const hst::HstTree& tree) {
  Extractor ex;
  ex.add_entity(tree.title, Category::header);
  for (const auto& node : tree.paragraphs) ex.visit(node);
  return std::move(ex.ann);
}

std::vector<NodeEntities> entity_map(const hst::HstTree& tree) {
  Extractor ex;
  NodeEntities title;
  title.node = nullptr;
  title.primary_id = ex.add_entity(tree.title, Category::header);
  ex.visits.push_back(title);
  for (const auto& node : tree.paragraphs) ex.visit(node);
  return std::move(ex.visits);
}

std::string export_funsd(const DocumentAnnotation& ann, const render::GlyphModel& gm) {
  // Mirror each [parent, child] pair onto both endpoint records.
  std::vector<std::vector<std::pair<int, int>>> linking(ann.entities.size());
  for (const auto& e : ann.entities) {
    for (const auto& [parent, child] : e.links) {
      linking[parent].emplace_back(parent, child);
      if (child >= 0 && child < static_cast<int>(linking.size())) {
        linking[child].emplace_back(parent, child);
      }
    }
  }

  json form = json::array();
  for (const auto& e : ann.entities) {
    if (!e.box) {
      throw Error(Errc::missing_box, "entity " + std::to_string(e.id) + " has no box", e.id);
    }
    const Box& box = *e.box;
    json rec;
    rec["id"] = e.id;
    rec["text"] = e.text;
    rec["box"] = {box.x1, box.y1, box.x2, box.y2};
    rec["label"] = category_name(e.category);
    json links = json::array();
    for (const auto& [p, c] : linking[e.id]) links.push_back({p, c});
    rec["linking"] = std::move(links);

    // Word boxes: advance-proportional split; each inter-word space belongs
    // to the span before the next word, so "John Smith" in width 100 splits
    // at 50 under equal ratios.
    json words = json::array();
    const auto cps = util::decode_utf8(e.text);
    std::vector<size_t> byte_of(cps.size() + 1, 0);
    {
      size_t byte = 0;
      for (size_t i = 0; i < cps.size(); ++i) {
        byte_of[i] = byte;
        const char32_t cp = cps[i];
        byte += cp < 0x80 ? 1 : cp < 0x800 ? 2 : cp < 0x10000 ? 3 : 4;
      }
      byte_of[cps.size()] = e.text.size();
    }
    std::vector<double> prefix(cps.size() + 1, 0.0);
    for (size_t i = 0; i < cps.size(); ++i) {
      prefix[i + 1] = prefix[i] + glyph_ratio(gm, cps[i]);
    }
    const double total = prefix.back();
    std::vector<std::pair<size_t, size_t>> spans;  // [first, last) codepoint
    size_t i = 0;
    while (i < cps.size()) {
      while (i < cps.size() && (cps[i] == U' ' || cps[i] == U'\t')) ++i;
      if (i >= cps.size()) break;
      size_t j = i;
      while (j < cps.size() && cps[j] != U' ' && cps[j] != U'\t') ++j;
      spans.emplace_back(i, j);
      i = j;
    }
    for (size_t k = 0; k < spans.size(); ++k) {
      const int left = k == 0 ? box.x1
                              : box.x1 + static_cast<int>(std::llround(
                                             box.width() * prefix[spans[k].first] / total));
      const int right = k + 1 == spans.size()
                            ? box.x2
                            : box.x1 + static_cast<int>(std::llround(
                                           box.width() * prefix[spans[k + 1].first] / total));
      const std::string word = e.text.substr(
          byte_of[spans[k].first], byte_of[spans[k].second] - byte_of[spans[k].first]);
      words.push_back({{"text", word}, {"box", {left, box.y1, right, box.y2}}});
    }
    rec["words"] = std::move(words);
    form.push_back(std::move(rec));
  }
  json root;
  root["form"] = std::move(form);
  return root.dump();
}

DocumentAnnotation parse_funsd(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_json, std::string("annotation file: ") + e.what());
  }
  DocumentAnnotation ann;
  if (!root.is_object() || !root.contains("form") || !root["form"].is_array()) {
    throw Error(Errc::invalid_json, "annotation file: missing \"form\" array");
  }
  std::set<std::pair<int, int>> pairs;
  for (const auto& rec : root["form"]) {
    Entity e;
    e.id = rec.at("id").get<int>();
    e.text = rec.at("text").get<std::string>();
    const auto& b = rec.at("box");
    e.box = Box{b.at(0).get<int>(), b.at(1).get<int>(), b.at(2).get<int>(), b.at(3).get<int>()};
    e.category = category_from_name(rec.at("label").get<std::string>());
    for (const auto& link : rec.value("linking", json::array())) {
      pairs.emplace(link.at(0).get<int>(), link.at(1).get<int>());
    }
    ann.entities.push_back(std::move(e));
  }
  std::sort(ann.entities.begin(), ann.entities.end(),
            [](const Entity& a, const Entity& b) { return a.id < b.id; });
  for (const auto& [parent, child] : pairs) {
    for (auto& e : ann.entities) {
      if (e.id == parent) {
        e.links.emplace_back(parent, child);
        break;
      }
    }
  }
  return ann;
}

std::vector<int> entity_levels(const DocumentAnnotation& doc) {
  const int n = static_cast<int>(doc.entities.size());
  std::vector<std::vector<int>> children(n);
  std::vector<int> indegree(n, 0);
  for (const auto& e : doc.entities) {
    for (const auto& [parent, child] : e.links) {
      if (parent < 0 || parent >= n || child < 0 || child >= n) {
        throw Error(Errc::cyclic_links, "link endpoint out of range");
      }
      children[parent].push_back(child);
      ++indegree[child];
    }
  }
  // Kahn's algorithm; level(v) = longest path from any root.
  std::vector<int> level(n, 0);
  std::deque<int> queue;
  for (int i = 0; i < n; ++i) {
    if (indegree[i] == 0) queue.push_back(i);
  }
  int processed = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    ++processed;
    for (const int c : children[v]) {
      level[c] = std::max(level[c], level[v] + 1);
      if (--indegree[c] == 0) queue.push_back(c);
    }
  }
  if (processed != n) {
    throw Error(Errc::cyclic_links, "link graph has a cycle");
  }
  return level;
}

HierarchyStats hierarchy_stats(const std::vector<DocumentAnnotation>& corpus) {
  HierarchyStats stats;
  stats.n_docs = static_cast<int>(corpus.size());
  std::vector<long long> level_totals;
  long long entity_total = 0;
  for (size_t d = 0; d < corpus.size(); ++d) {
    std::vector<int> levels;
    try {
      levels = entity_levels(corpus[d]);
    } catch (const Error& e) {
      throw Error(Errc::cyclic_links,
                  "document " + std::to_string(d) + ": " + e.what(), static_cast<long>(d));
    }
    entity_total += static_cast<long long>(levels.size());
    for (const int lv : levels) {
      if (lv >= static_cast<int>(level_totals.size())) level_totals.resize(lv + 1, 0);
      ++level_totals[lv];
    }
  }
  // Match the reporting shape: columns for levels 0..5 even when shallower.
  level_totals.resize(std::max<size_t>(level_totals.size(), 6), 0);
  if (stats.n_docs > 0) {
    for (const long long t : level_totals) {
      stats.avg_per_level.push_back(static_cast<double>(t) / stats.n_docs);
    }
    stats.avg_entities = static_cast<double>(entity_total) / stats.n_docs;
  } else {
    stats.avg_per_level.assign(6, 0.0);
  }
  return stats;
}

std::string hierarchy_stats_json(const HierarchyStats& stats) {
  json out;
  out["n_docs"] = stats.n_docs;
  out["avg_entities_per_doc"] = stats.avg_entities;
  json levels = json::array();
  for (const double v : stats.avg_per_level) levels.push_back(v);
  out["avg_per_level"] = std::move(levels);
  return out.dump(2) + "\n";
}

}  // namespace docloom::ann
