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

// Random generators for property tests. Generated trees satisfy the node
// invariants the canonical writer requires: keys end with ':', leaf texts
// never end with ':' or start with '-', and no text contains a newline,
// a ": " sequence (outside the key's trailing colon), or a tag line.

#pragma once

#include <cstdint>
#include <string>

#include "hst/hst.hpp"
#include "layoutseq/layout_seq.hpp"
#include "util/rng.hpp"

namespace docloom::testsupport {

// Valid random tree with roughly `target_nodes` nodes (title excluded).
hst::HstTree random_tree(uint64_t seed, int target_nodes);

// Layout doc with `n` entities and non-degenerate boxes inside the canvas.
seq::LayoutDoc random_layout_doc(uint64_t seed, int n);

std::string random_word(util::SplitMix64& gen, bool cjk = false);

}  // namespace docloom::testsupport
