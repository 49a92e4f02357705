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

#include <string_view>

namespace docloom::render {

// Deterministic per-character width model standing in for real font
// metrics: every glyph advances by ratio x font size, rounded up to whole
// pixels per glyph. Keeps layout math identical across platforms while the
// SVG names a real font family.
struct GlyphModel {
  double advance_ratio_latin = 0.6;
  double advance_ratio_cjk = 1.0;
  double font_scale = 0.75;  // fraction of box height used as font size
};

double glyph_ratio(const GlyphModel& gm, char32_t cp);

// ceil(font_size x ratio), in pixels.
int glyph_advance(const GlyphModel& gm, char32_t cp, double font_size);

// Sum of per-glyph advances.
int text_width(const GlyphModel& gm, std::string_view text, double font_size);

}  // namespace docloom::render
