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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "hst/hst.hpp"
#include "support/treegen.hpp"

using namespace docloom;
using hst::HstNode;
using hst::HstTree;
using hst::NodeKind;

namespace {

HstNode node(NodeKind kind, std::string text, int depth, std::vector<HstNode> children = {}) {
  HstNode n;
  n.kind = kind;
  n.text = std::move(text);
  n.depth = depth;
  n.children = std::move(children);
  return n;
}

HstNode kv(std::string key, std::string value, int depth, std::vector<HstNode> children = {}) {
  HstNode n = node(NodeKind::key_value, std::move(key), depth, std::move(children));
  n.value_text = std::move(value);
  return n;
}

HstNode header(int level, std::string text) {
  HstNode n = node(NodeKind::header, std::move(text), 0);
  n.header_level = level;
  return n;
}

}  // namespace

TEST_CASE("parse: title, paragraph header, inline pair") {
  const auto tree = hst::parse_hst("Title\n<content>\n<h1>Info\nName: John\n</content>");
  CHECK(tree.title == "Title");
  REQUIRE(tree.paragraphs.size() == 2);
  CHECK(tree.paragraphs[0].kind == NodeKind::header);
  CHECK(tree.paragraphs[0].header_level == 1);
  CHECK(tree.paragraphs[0].text == "Info");
  CHECK(tree.paragraphs[1].kind == NodeKind::key_value);
  CHECK(tree.paragraphs[1].text == "Name:");
  CHECK(tree.paragraphs[1].value_text == "John");
  CHECK(tree.source_lang == hst::SourceLang::latin);
}

TEST_CASE("parse: empty content block") {
  const auto tree = hst::parse_hst("T\n<content>\n</content>");
  CHECK(tree.title == "T");
  CHECK(tree.paragraphs.empty());
}

TEST_CASE("parse: three-level nesting matches hand-built tree") {
  const auto tree = hst::parse_hst("T\n<content>\n<h1>P\nItems:\n- A: 1\n-- note\n</content>");

  HstTree expected;
  expected.title = "T";
  expected.paragraphs.push_back(header(1, "P"));
  expected.paragraphs.push_back(
      node(NodeKind::key, "Items:", 0,
           {kv("A:", "1", 1, {node(NodeKind::value, "note", 2)})}));
  CHECK(hst::structurally_equal(tree, expected));
}

TEST_CASE("parse: colon splitting keeps the first ': ' only") {
  const auto tree = hst::parse_hst("T\n<content>\nTime: 12:30\n</content>");
  REQUIRE(tree.paragraphs.size() == 1);
  CHECK(tree.paragraphs[0].kind == NodeKind::key_value);
  CHECK(tree.paragraphs[0].text == "Time:");
  CHECK(tree.paragraphs[0].value_text == "12:30");
}

TEST_CASE("parse: hyphen spellings '--' and '- -' agree") {
  const auto a = hst::parse_hst("T\n<content>\nK:\n- A: 1\n-- note\n</content>");
  const auto b = hst::parse_hst("T\n<content>\nK:\n- A: 1\n- - note\n</content>");
  CHECK(hst::structurally_equal(a, b));
}

TEST_CASE("parse: depth-0 non-colon line is free text, nested one is value") {
  const auto tree = hst::parse_hst("T\n<content>\nloose remark\nK:\n- nested\n</content>");
  REQUIRE(tree.paragraphs.size() == 2);
  CHECK(tree.paragraphs[0].kind == NodeKind::free_text);
  REQUIRE(tree.paragraphs[1].children.size() == 1);
  CHECK(tree.paragraphs[1].children[0].kind == NodeKind::value);
}

TEST_CASE("parse: header may own hyphen children") {
  const auto tree = hst::parse_hst("T\n<content>\n<h2>Sec\n- Name: John\n</content>");
  REQUIRE(tree.paragraphs.size() == 1);
  CHECK(tree.paragraphs[0].kind == NodeKind::header);
  REQUIRE(tree.paragraphs[0].children.size() == 1);
  CHECK(tree.paragraphs[0].children[0].kind == NodeKind::key_value);
  CHECK(tree.paragraphs[0].children[0].depth == 1);
}

TEST_CASE("parse: CRLF input tolerated") {
  const auto tree = hst::parse_hst("T\r\n<content>\r\nName: John\r\n</content>\r\n");
  REQUIRE(tree.paragraphs.size() == 1);
  CHECK(tree.paragraphs[0].value_text == "John");
}

TEST_CASE("parse: cjk and mixed language detection") {
  const auto zh = hst::parse_hst("表格\n<content>\n姓名: 张三\n</content>");
  CHECK(zh.source_lang == hst::SourceLang::cjk);
  const auto mixed = hst::parse_hst("表格 Form\n<content>\n姓名: 张三\n</content>");
  CHECK(mixed.source_lang == hst::SourceLang::mixed);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_WITH_AS(hst::parse_hst("T\nName: John\n"), "no <content> tag found", Error);
  try {
    hst::parse_hst("T\n<content>\nName: John\n");
    FAIL("expected UnbalancedContentTag");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unbalanced_content_tag);
  }
  try {
    hst::parse_hst("T\n<content>\n<h1>\n</content>");
    FAIL("expected EmptyHeader");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::empty_header);
  }
  try {
    hst::parse_hst("<content>\nName: John\n</content>");
    FAIL("expected missing title");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::empty_header);
  }
}

TEST_CASE("validate: ok, unbalanced, and depth jump with line numbers") {
  CHECK(hst::validate_hst("T\n<content>\n<h1>Info\nName: John\n</content>").empty());

  const auto missing = hst::validate_hst("T\n<content>\nName: John\n");
  REQUIRE(missing.size() == 1);
  CHECK(missing[0].kind == Errc::unbalanced_content_tag);

  // Line 4 is "- a", line 5 is "--- b": depth 1 -> 3 is a jump.
  const auto jump = hst::validate_hst("T\n<content>\nK:\n- a\n--- b\n</content>");
  REQUIRE(jump.size() == 1);
  CHECK(jump[0].kind == Errc::depth_jump);
  CHECK(jump[0].line == 5);
}

TEST_CASE("write: canonical form of the worked example") {
  const auto tree = hst::parse_hst("Title\n<content>\n<h1>Info\nName: John\n</content>");
  CHECK(hst::write_hst(tree) == "Title\n<content>\n<h1> Info\nName: John\n</content>\n");
}

TEST_CASE("write: empty tree") {
  HstTree tree;
  tree.title = "T";
  CHECK(hst::write_hst(tree) == "T\n<content>\n</content>\n");
}

TEST_CASE("write: canonical hyphen style uses one space per hyphen") {
  const auto tree = hst::parse_hst("T\n<content>\nK:\n- A: 1\n-- note\n</content>");
  CHECK(hst::write_hst(tree) == "T\n<content>\nK:\n- A: 1\n- - note\n</content>\n");
}

TEST_CASE("round-trip: parse after write is identity on random trees") {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    const auto tree = testsupport::random_tree(seed, 50);
    const auto text = hst::write_hst(tree);
    const auto back = hst::parse_hst(text);
    CAPTURE(seed);
    REQUIRE(hst::structurally_equal(tree, back));
  }
}

TEST_CASE("round-trip: serialize(parse()) is a fixed point") {
  // Non-canonical spellings collapse after one pass and then stay put.
  const std::string messy = "T\n\n<content>\n<h1>Sec\nK:\n--  x\n- -y\nA:  b\n</content>\ntrailing";
  const auto once = hst::write_hst(hst::parse_hst(messy));
  const auto twice = hst::write_hst(hst::parse_hst(once));
  CHECK(once == twice);
}

TEST_CASE("parse: non-colon line with children becomes a key") {
  const auto tree = hst::parse_hst("T\n<content>\nK:\n- group\n-- leaf\n</content>");
  REQUIRE(tree.paragraphs.size() == 1);
  const auto& group = tree.paragraphs[0].children[0];
  CHECK(group.kind == NodeKind::key);
  CHECK(group.text == "group:");
  REQUIRE(group.children.size() == 1);
  CHECK(group.children[0].kind == NodeKind::value);
}

TEST_CASE("node depth equals parent depth plus one") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const auto tree = testsupport::random_tree(seed, 40);
    std::function<void(const HstNode&, int)> walk = [&](const HstNode& n, int depth) {
      CHECK(n.depth == depth);
      for (const auto& c : n.children) walk(c, depth + 1);
    };
    for (const auto& p : tree.paragraphs) walk(p, 0);
  }
}
