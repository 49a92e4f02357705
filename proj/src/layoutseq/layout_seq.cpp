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

#include "layoutseq/layout_seq.hpp"

#include <charconv>

#include <json.hpp>

#include "util/rng.hpp"
#include "util/text.hpp"

namespace docloom::seq {

using json = nlohmann::json;

namespace {

std::string fill_token(int i) { return "<FILL_" + std::to_string(i) + ">"; }

void append_box(std::string* out, const ann::Box& b) {
  *out += '[';
  *out += std::to_string(b.x1);
  *out += ',';
  *out += std::to_string(b.y1);
  *out += ',';
  *out += std::to_string(b.x2);
  *out += ',';
  *out += std::to_string(b.y2);
  *out += ']';
}

// Entity list shared by the full and the masked serialization.
std::string serialize_with(const LayoutDoc& doc, bool masked) {
  std::string out;
  out += "{\"width\":";
  out += std::to_string(doc.width);
  out += ",\"height\":";
  out += std::to_string(doc.height);
  out += ",\"entities\":[";
  for (size_t i = 0; i < doc.entities.size(); ++i) {
    const auto& e = doc.entities[i];
    if (i > 0) out += ',';
    out += "{\"text\":\"";
    out += util::json_escape(e.text);
    out += "\",\"box\":";
    if (masked) {
      out += "[\"";
      out += fill_token(static_cast<int>(i) + 1);
      out += "\"]";
    } else {
      if (!e.box) {
        throw Error(Errc::missing_box, "entity " + std::to_string(i) + " has no box",
                    static_cast<long>(i));
      }
      append_box(&out, *e.box);
    }
    out += '}';
  }
  out += "]}";
  return out;
}

bool parse_int_strict(std::string_view s, long long* out) {
  s = util::strip(s);
  if (s.empty()) return false;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  const auto res = std::from_chars(first, last, *out);
  return res.ec == std::errc{} && res.ptr == last;
}

std::optional<Violation> coords_from_value(const json& value, const std::string& key,
                                           ann::Box* out) {
  long long c[4];
  if (value.is_string()) {
    const std::string s = value.get<std::string>();
    std::vector<std::string_view> parts;
    size_t start = 0;
    const std::string_view sv(s);
    while (true) {
      const auto comma = sv.find(',', start);
      if (comma == std::string_view::npos) {
        parts.push_back(sv.substr(start));
        break;
      }
      parts.push_back(sv.substr(start, comma - start));
      start = comma + 1;
    }
    if (parts.size() != 4) return Violation{Errc::bad_coordinate_arity, key};
    for (int i = 0; i < 4; ++i) {
      if (!parse_int_strict(parts[i], &c[i])) {
        return Violation{Errc::non_integer_coordinate, key};
      }
    }
  } else if (value.is_array()) {
    if (value.size() != 4) return Violation{Errc::bad_coordinate_arity, key};
    for (int i = 0; i < 4; ++i) {
      if (!value[i].is_number_integer()) {
        return Violation{Errc::non_integer_coordinate, key};
      }
      c[i] = value[i].get<long long>();
    }
  } else {
    return Violation{Errc::bad_coordinate_arity, key};
  }
  for (int i = 0; i < 4; ++i) {
    if (c[i] < INT32_MIN || c[i] > INT32_MAX) {
      return Violation{Errc::non_integer_coordinate, key};
    }
  }
  *out = ann::Box{static_cast<int>(c[0]), static_cast<int>(c[1]), static_cast<int>(c[2]),
                  static_cast<int>(c[3])};
  return std::nullopt;
}

}  // namespace

std::string Violation::to_string() const {
  std::string s = errc_name(code);
  if (!detail.empty()) {
    s += '(';
    s += detail;
    s += ')';
  }
  return s;
}

std::string serialize_layout(const LayoutDoc& doc) { return serialize_with(doc, false); }

MaskedLayout mask_layout(const LayoutDoc& doc) {
  MaskedLayout masked;
  masked.text = serialize_with(doc, true);
  masked.mask_count = static_cast<int>(doc.entities.size());
  return masked;
}

FillParseResult parse_fill_map(const std::string& output, int expected_n) {
  json root;
  try {
    root = json::parse(output);
  } catch (const json::exception&) {
    return Violation{Errc::invalid_json, ""};
  }
  if (!root.is_object()) {
    return Violation{Errc::invalid_json, "top-level value is not an object"};
  }
  for (int i = 1; i <= expected_n; ++i) {
    if (!root.contains(fill_token(i))) {
      return Violation{Errc::missing_token, fill_token(i)};
    }
  }
  for (const auto& [key, value] : root.items()) {
    (void)value;
    bool expected = false;
    for (int i = 1; i <= expected_n; ++i) {
      if (key == fill_token(i)) {
        expected = true;
        break;
      }
    }
    if (!expected) return Violation{Errc::extra_token, key};
  }
  FillMap fills;
  for (int i = 1; i <= expected_n; ++i) {
    ann::Box box;
    if (auto violation = coords_from_value(root[fill_token(i)], fill_token(i), &box)) {
      return *violation;
    }
    fills[i] = box;
  }
  return fills;
}

std::string apply_fill(const MaskedLayout& masked, const FillMap& fills) {
  std::string out = masked.text;
  for (int i = 1; i <= masked.mask_count; ++i) {
    const std::string needle = "[\"" + fill_token(i) + "\"]";
    const auto pos = out.find(needle);
    if (pos == std::string::npos) {
      throw Error(Errc::missing_token, fill_token(i) + " not present in masked sequence", i);
    }
    const auto it = fills.find(i);
    if (it == fills.end()) {
      throw Error(Errc::missing_token, fill_token(i) + " not present in fill map", i);
    }
    std::string replacement;
    append_box(&replacement, it->second);
    out.replace(pos, needle.size(), replacement);
  }
  return out;
}

std::string fill_map_to_string(const FillMap& fills) {
  std::string out = "{";
  bool first = true;
  for (const auto& [i, b] : fills) {
    if (!first) out += ',';
    first = false;
    out += '"';
    out += fill_token(i);
    out += "\":\"";
    out += std::to_string(b.x1) + ", " + std::to_string(b.y1) + ", " + std::to_string(b.x2) +
           ", " + std::to_string(b.y2);
    out += '"';
  }
  out += '}';
  return out;
}

LayoutDoc permute_entities(const LayoutDoc& doc, uint64_t seed) {
  LayoutDoc out = doc;
  util::deterministic_shuffle(out.entities, seed);
  return out;
}

LayoutDoc with_fills(const LayoutDoc& doc, const FillMap& fills) {
  LayoutDoc out = doc;
  for (size_t i = 0; i < out.entities.size(); ++i) {
    const auto it = fills.find(static_cast<int>(i) + 1);
    if (it == fills.end()) {
      throw Error(Errc::missing_token, fill_token(static_cast<int>(i) + 1) + " absent",
                  static_cast<long>(i) + 1);
    }
    out.entities[i].box = it->second;
  }
  return out;
}

int upsample_weight(const std::map<std::string, int>& weights, const std::string& source) {
  if (const auto it = weights.find(source); it != weights.end()) return it->second;
  if (source == "funsd" || source == "xfund") return 4;  // form sources
  return 1;
}

std::vector<TrainingPair> build_training_pairs(const std::vector<LayoutDoc>& corpus,
                                               uint64_t seed,
                                               const std::map<std::string, int>& weights,
                                               int token_budget,
                                               PairBuildStats* stats) {
  std::vector<TrainingPair> pairs;
  PairBuildStats local;
  for (size_t d = 0; d < corpus.size(); ++d) {
    const auto& doc = corpus[d];
    const int weight = upsample_weight(weights, doc.source);
    for (int r = 0; r < weight; ++r) {
      const uint64_t pair_seed = util::mix_seed(seed, d, static_cast<uint64_t>(r));
      const LayoutDoc permuted = permute_entities(doc, pair_seed);
      const MaskedLayout masked = mask_layout(permuted);
      if (token_budget > 0 &&
          masked.text.size() > static_cast<size_t>(token_budget) * 4) {
        ++local.dropped_over_budget;
        continue;
      }
      FillMap fills;
      for (size_t i = 0; i < permuted.entities.size(); ++i) {
        if (!permuted.entities[i].box) {
          throw Error(Errc::missing_box, "training doc " + doc.doc_id + " has unboxed entity");
        }
        fills[static_cast<int>(i) + 1] = *permuted.entities[i].box;
      }
      TrainingPair pair;
      pair.input = masked.text;
      pair.target = fill_map_to_string(fills);
      pair.source = doc.source;
      pair.doc_id = doc.doc_id;
      pair.seed = pair_seed;
      pairs.push_back(std::move(pair));
      ++local.emitted;
    }
  }
  if (stats) *stats = local;
  return pairs;
}

LayoutDoc parse_layout_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_json, std::string("layout file: ") + e.what());
  }
  if (!root.is_object() || !root.contains("width") || !root.contains("height") ||
      !root.contains("entities") || !root["entities"].is_array()) {
    throw Error(Errc::invalid_json, "layout file: expects width, height, entities");
  }
  LayoutDoc doc;
  doc.width = root["width"].get<int>();
  doc.height = root["height"].get<int>();
  doc.source = root.value("source", std::string("generated"));
  doc.doc_id = root.value("doc_id", std::string());
  for (const auto& rec : root["entities"]) {
    LayoutEntity e;
    e.text = rec.at("text").get<std::string>();
    if (rec.contains("box") && rec["box"].is_array() && rec["box"].size() == 4 &&
        rec["box"][0].is_number_integer()) {
      e.box = ann::Box{rec["box"][0].get<int>(), rec["box"][1].get<int>(),
                       rec["box"][2].get<int>(), rec["box"][3].get<int>()};
    }
    doc.entities.push_back(std::move(e));
  }
  return doc;
}

std::string training_pair_jsonl_line(const TrainingPair& pair) {
  nlohmann::ordered_json line;
  line["input"] = pair.input;
  line["target"] = pair.target;
  line["source"] = pair.source;
  line["doc_id"] = pair.doc_id;
  line["seed"] = pair.seed;
  return line.dump();
}

}  // namespace docloom::seq
