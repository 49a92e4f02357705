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

// Layout wire format and masking protocol. A document layout serializes to
// compact JSON with fixed key order:
//
//   {"width":W,"height":H,"entities":[{"text":t,"box":[x1,y1,x2,y2]},...]}
//
// Masking replaces each box with ["<FILL_i>"] (1-based, entity order); the
// model answers with a map from fill tokens to coordinates. Training pairs
// are (masked input, fill map) with the guarantee that substituting the
// target back into the input reproduces the full serialization byte-exactly.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "annotate/annotation.hpp"
#include "util/error.hpp"

namespace docloom::seq {

struct LayoutEntity {
  std::string text;
  std::optional<ann::Box> box;
};

struct LayoutDoc {
  int width = 0;
  int height = 0;
  std::vector<LayoutEntity> entities;  // order is significant
  std::string source = "generated";    // up-sampling tag
  std::string doc_id;
};

struct MaskedLayout {
  std::string text;    // S(D\M)
  int mask_count = 0;  // N
};

// Token index (1-based) -> box; a complete map holds exactly 1..N.
using FillMap = std::map<int, ann::Box>;

// A protocol failure; the sample it came from is excluded, not repaired.
struct Violation {
  Errc code = Errc::invalid_json;
  std::string detail;  // offending token or message

  std::string to_string() const;
};

using FillParseResult = std::variant<FillMap, Violation>;

// Requires every box present (throws MissingBox).
std::string serialize_layout(const LayoutDoc& doc);

// Boxes may be uniformly absent (inference from content only).
MaskedLayout mask_layout(const LayoutDoc& doc);

// Accepts coordinate values as "x1, y1, x2, y2" strings (optional spaces
// around commas) or 4-integer lists. Any violation excludes the sample:
// InvalidJson, MissingToken, ExtraToken, BadCoordinateArity,
// NonIntegerCoordinate.
FillParseResult parse_fill_map(const std::string& output, int expected_n);

// Textual substitution of ["<FILL_i>"] by [x1,y1,x2,y2]. For a map holding
// the true boxes this reproduces serialize_layout of the source document
// byte-exactly. Throws MissingToken when a token is absent from the text.
std::string apply_fill(const MaskedLayout& masked, const FillMap& fills);

// Canonical model-target form: {"<FILL_1>":"x1, y1, x2, y2",...}.
std::string fill_map_to_string(const FillMap& fills);

// Uniformly random, seed-deterministic entity permutation.
LayoutDoc permute_entities(const LayoutDoc& doc, uint64_t seed);

// Puts `fills` (token i -> entity i-1) onto the doc's entities.
LayoutDoc with_fills(const LayoutDoc& doc, const FillMap& fills);

struct TrainingPair {
  std::string input;
  std::string target;
  std::string source;
  std::string doc_id;
  uint64_t seed = 0;
};

struct PairBuildStats {
  size_t emitted = 0;
  size_t dropped_over_budget = 0;
};

// Each doc repeats per its source weight (explicit map first, then the
// built-in form-source default of 4 for funsd/xfund, else 1), with a fresh
// permutation per repeat. Pairs whose input exceeds the token budget
// (chars/4 proxy) are dropped and counted, never raised.
std::vector<TrainingPair> build_training_pairs(const std::vector<LayoutDoc>& corpus,
                                               uint64_t seed,
                                               const std::map<std::string, int>& weights,
                                               int token_budget,
                                               PairBuildStats* stats = nullptr);

int upsample_weight(const std::map<std::string, int>& weights, const std::string& source);

// Wire parsing for OCR ingestion and layout files; accepts the exact
// serialize_layout schema plus optional "source" and "doc_id" fields.
LayoutDoc parse_layout_json(const std::string& text);

std::string training_pair_jsonl_line(const TrainingPair& pair);

}  // namespace docloom::seq
