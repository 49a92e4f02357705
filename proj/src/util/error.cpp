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

#include "util/error.hpp"

namespace docloom {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::missing_content_tag: return "MissingContentTag";
    case Errc::unbalanced_content_tag: return "UnbalancedContentTag";
    case Errc::depth_jump: return "DepthJump";
    case Errc::empty_header: return "EmptyHeader";
    case Errc::missing_box: return "MissingBox";
    case Errc::cyclic_links: return "CyclicLinks";
    case Errc::invalid_json: return "InvalidJson";
    case Errc::missing_token: return "MissingToken";
    case Errc::extra_token: return "ExtraToken";
    case Errc::bad_coordinate_arity: return "BadCoordinateArity";
    case Errc::non_integer_coordinate: return "NonIntegerCoordinate";
    case Errc::endpoint_unreachable: return "EndpointUnreachable";
    case Errc::excluded: return "Excluded";
    case Errc::canvas_overflow: return "CanvasOverflow";
    case Errc::degenerate_box: return "DegenerateBox";
    case Errc::out_of_canvas: return "OutOfCanvas";
    case Errc::misaligned_annotation: return "MisalignedAnnotation";
    case Errc::raster_backend_unavailable: return "RasterBackendUnavailable";
    case Errc::no_value_child: return "NoValueChild";
    case Errc::io_error: return "IoError";
    case Errc::bad_config: return "BadConfig";
  }
  return "Unknown";
}

}  // namespace docloom
