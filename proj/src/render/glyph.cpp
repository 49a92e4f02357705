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

#include "render/glyph.hpp"

#include <cmath>

#include "util/text.hpp"

namespace docloom::render {

double glyph_ratio(const GlyphModel& gm, char32_t cp) {
  return util::is_cjk(cp) ? gm.advance_ratio_cjk : gm.advance_ratio_latin;
}

int glyph_advance(const GlyphModel& gm, char32_t cp, double font_size) {
  return static_cast<int>(std::ceil(font_size * glyph_ratio(gm, cp)));
}

int text_width(const GlyphModel& gm, std::string_view text, double font_size) {
  int width = 0;
  for (const char32_t cp : util::decode_utf8(text)) {
    width += glyph_advance(gm, cp, font_size);
  }
  return width;
}

}  // namespace docloom::render
