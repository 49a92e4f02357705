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

#include <stdexcept>
#include <string>

namespace docloom {

enum class Errc {
  // hst
  missing_content_tag,
  unbalanced_content_tag,
  depth_jump,
  empty_header,
  // annotation
  missing_box,
  cyclic_links,
  // layout protocol
  invalid_json,
  missing_token,
  extra_token,
  bad_coordinate_arity,
  non_integer_coordinate,
  // engine
  endpoint_unreachable,
  excluded,
  canvas_overflow,
  degenerate_box,
  out_of_canvas,
  // render
  misaligned_annotation,
  raster_backend_unavailable,
  // instruct
  no_value_child,
  // infrastructure
  io_error,
  bad_config,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message, long detail = -1)
      : std::runtime_error(std::move(message)), code_(code), detail_(detail) {}

  Errc code() const { return code_; }

  // Line number, entity id, or fill-token index, depending on the error.
  long detail() const { return detail_; }

 private:
  Errc code_;
  long detail_;
};

}  // namespace docloom
