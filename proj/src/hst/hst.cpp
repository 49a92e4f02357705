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

#include "hst/hst.hpp"

#include <cstddef>
#include <string_view>

#include "util/text.hpp"

namespace docloom::hst {

namespace {

constexpr std::string_view kContentOpen = "<content>";
constexpr std::string_view kContentClose = "</content>";

// One lexed body line before tree assembly.
struct Row {
  int depth = 0;
  NodeKind kind = NodeKind::free_text;
  int header_level = 0;
  std::string text;
  std::string value_text;
  int line = 0;
};

// <hN>TEXT with an optional space after the tag. Returns level or 0.
int match_header(std::string_view line, std::string_view* text_out) {
  if (line.size() < 4 || line[0] != '<' || line[1] != 'h' || line[3] != '>') return 0;
  const char level_ch = line[2];
  if (level_ch < '1' || level_ch > '6') return 0;
  auto rest = line.substr(4);
  if (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
  *text_out = rest;
  return level_ch - '0';
}

// Consumes the leading hyphen run. Each hyphen may be followed by spaces,
// so "- - x", "-- x" and "-x" all count hyphens the same way.
int strip_hyphens(std::string_view* line) {
  int depth = 0;
  auto s = *line;
  while (!s.empty() && s.front() == '-') {
    s.remove_prefix(1);
    ++depth;
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  }
  *line = s;
  return depth;
}

// Splits at the first ": " or a trailing ':'. The key side keeps the colon.
Row classify_text(std::string_view text, int depth) {
  Row row;
  row.depth = depth;
  const auto sep = text.find(": ");
  if (sep != std::string_view::npos) {
    row.kind = NodeKind::key_value;
    row.text = std::string(text.substr(0, sep + 1));
    row.value_text = std::string(text.substr(sep + 2));
    return row;
  }
  if (!text.empty() && text.back() == ':') {
    row.kind = NodeKind::key;
    row.text = std::string(text);
    return row;
  }
  row.kind = depth == 0 ? NodeKind::free_text : NodeKind::value;
  row.text = std::string(text);
  return row;
}

// Rows form a pre-order flattening; children of rows[pos] are the following
// rows while their depth exceeds rows[pos].depth.
HstNode build_node(const std::vector<Row>& rows, size_t* pos) {
  const Row& row = rows[*pos];
  HstNode node;
  node.kind = row.kind;
  node.header_level = row.header_level;
  node.text = row.text;
  node.value_text = row.value_text;
  node.depth = row.depth;
  ++*pos;
  while (*pos < rows.size() && rows[*pos].depth > row.depth) {
    node.children.push_back(build_node(rows, pos));
  }
  if (!node.children.empty() &&
      (node.kind == NodeKind::value || node.kind == NodeKind::free_text)) {
    // Values and free text are leaves; a non-colon line with children is
    // canonicalized into a key.
    node.kind = NodeKind::key;
    if (node.text.empty() || node.text.back() != ':') node.text += ':';
  }
  return node;
}

void collect_text(const HstNode& node, std::string* out) {
  *out += node.text;
  *out += node.value_text;
  for (const auto& child : node.children) collect_text(child, out);
}

void write_node(const HstNode& node, std::string* out) {
  if (node.kind == NodeKind::header) {
    *out += "<h";
    *out += static_cast<char>('0' + node.header_level);
    *out += "> ";
    *out += node.text;
  } else {
    for (int i = 0; i < node.depth; ++i) *out += "- ";
    *out += node.text;
    if (node.kind == NodeKind::key_value) {
      *out += ' ';
      *out += node.value_text;
    }
  }
  *out += '\n';
  for (const auto& child : node.children) write_node(child, out);
}

int count_subtree(const HstNode& node) {
  int n = node.kind == NodeKind::key_value ? 2 : 1;
  for (const auto& child : node.children) n += count_subtree(child);
  return n;
}

}  // namespace

HstTree parse_hst(const std::string& input) {
  const auto lines = util::split_lines(input);

  // Locate the content block. Line numbers are 1-based.
  int open_line = 0;
  int close_line = 0;
  for (size_t i = 0; i < lines.size(); ++i) {
    const auto stripped = util::strip(lines[i]);
    if (open_line == 0 && stripped == kContentOpen) {
      open_line = static_cast<int>(i) + 1;
    } else if (open_line != 0 && close_line == 0 && stripped == kContentClose) {
      close_line = static_cast<int>(i) + 1;
    } else if (open_line != 0 && close_line == 0 && stripped == kContentOpen) {
      throw Error(Errc::unbalanced_content_tag, "nested <content> tag", static_cast<int>(i) + 1);
    }
  }
  if (open_line == 0) {
    throw Error(Errc::missing_content_tag, "no <content> tag found", 0);
  }
  if (close_line == 0) {
    throw Error(Errc::unbalanced_content_tag, "missing </content> tag", open_line);
  }

  HstTree tree;
  for (int i = 0; i < open_line - 1; ++i) {
    const auto stripped = util::strip(lines[i]);
    if (!stripped.empty()) {
      tree.title = std::string(stripped);
      break;
    }
  }
  if (tree.title.empty()) {
    throw Error(Errc::empty_header, "missing document title before <content>", open_line);
  }

  // Lex body lines into rows, enforcing the depth rule as we go.
  std::vector<Row> rows;
  int prev_depth = -1;
  for (int i = open_line; i < close_line - 1; ++i) {
    const int line_no = i + 1;
    auto stripped = util::strip(lines[i]);
    if (stripped.empty()) continue;

    std::string_view header_text;
    if (const int level = match_header(stripped, &header_text)) {
      const auto text = util::strip(header_text);
      if (text.empty()) {
        throw Error(Errc::empty_header, "header with empty text", line_no);
      }
      Row row;
      row.kind = NodeKind::header;
      row.header_level = level;
      row.text = std::string(text);
      row.line = line_no;
      rows.push_back(std::move(row));
      prev_depth = 0;
      continue;
    }

    const int depth = strip_hyphens(&stripped);
    if (stripped.empty()) continue;  // bare hyphen run, nothing to attach
    if (depth > prev_depth + 1) {
      throw Error(Errc::depth_jump, "nesting depth may grow by at most one per line", line_no);
    }
    Row row = classify_text(stripped, depth);
    row.line = line_no;
    rows.push_back(std::move(row));
    prev_depth = depth;
  }

  size_t pos = 0;
  while (pos < rows.size()) {
    tree.paragraphs.push_back(build_node(rows, &pos));
  }
  tree.source_lang = classify_language(tree);
  return tree;
}

std::string write_hst(const HstTree& tree) {
  std::string out;
  out += tree.title;
  out += '\n';
  out += kContentOpen;
  out += '\n';
  for (const auto& node : tree.paragraphs) write_node(node, &out);
  out += kContentClose;
  out += '\n';
  return out;
}

std::vector<Diagnostic> validate_hst(const std::string& input) {
  std::vector<Diagnostic> diags;
  try {
    parse_hst(input);
  } catch (const Error& e) {
    diags.push_back(Diagnostic{e.code(), static_cast<int>(e.detail()), e.what()});
  }
  return diags;
}

bool structurally_equal(const HstNode& a, const HstNode& b) {
  if (a.kind != b.kind || a.header_level != b.header_level || a.depth != b.depth ||
      a.text != b.text || a.value_text != b.value_text ||
      a.children.size() != b.children.size()) {
    return false;
  }
  for (size_t i = 0; i < a.children.size(); ++i) {
    if (!structurally_equal(a.children[i], b.children[i])) return false;
  }
  return true;
}

bool structurally_equal(const HstTree& a, const HstTree& b) {
  if (a.title != b.title || a.paragraphs.size() != b.paragraphs.size()) return false;
  for (size_t i = 0; i < a.paragraphs.size(); ++i) {
    if (!structurally_equal(a.paragraphs[i], b.paragraphs[i])) return false;
  }
  return true;
}

SourceLang classify_language(const HstTree& tree) {
  std::string all = tree.title;
  for (const auto& node : tree.paragraphs) collect_text(node, &all);
  bool has_cjk = false;
  bool has_latin = false;
  for (const char32_t cp : util::decode_utf8(all)) {
    if (util::is_cjk(cp)) has_cjk = true;
    if (util::is_ascii_letter(cp)) has_latin = true;
  }
  if (has_cjk && has_latin) return SourceLang::mixed;
  if (has_cjk) return SourceLang::cjk;
  return SourceLang::latin;
}

int count_nodes(const HstTree& tree) {
  int n = 1;  // title
  for (const auto& node : tree.paragraphs) n += count_subtree(node);
  return n;
}

}  // namespace docloom::hst
