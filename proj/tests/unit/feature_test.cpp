// Copyright 2026 The hmiforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>
#include <set>

#include "hmiforge/feature/configuration.hpp"
#include "hmiforge/feature/feature_expr.hpp"
#include "hmiforge/feature/feature_model.hpp"
#include "oracle.hpp"
#include "random_models.hpp"
#include "test_data.hpp"

using namespace hmiforge;
using namespace hmiforge::testing;

namespace {

const char* const kM1 = "featuremodel M1 { root A feature A { mandatory B optional C } }";
const char* const kM2 = "featuremodel M2 { root A feature A { xor { X, Y, Z } } }";
const char* const kM3 =
    "featuremodel M3 { root A feature A { optional B optional C } C requires B }";

std::vector<std::string> codes_of(const Diagnostics& ds) {
  std::vector<std::string> out;
  for (const auto& d : ds) out.push_back(d.code);
  return out;
}

std::vector<std::string> parse_errors(const std::string& text) {
  return codes_of(parse_feature_model(text).diagnostics);
}

std::vector<std::vector<std::string>> listing(const FeatureModel& fm) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : enumerate_configurations(fm)) out.push_back(c.sorted());
  return out;
}

FeatureExpr expr(const std::string& text) {
  auto p = parse_feature_expr(text);
  REQUIRE_MESSAGE(p.ok(), render(p.diagnostics));
  return *p.value;
}

}  // namespace

TEST_SUITE("feature") {

TEST_CASE("M1 parses to A with mandatory B and optional C") {
  const auto parsed = parse_feature_model(kM1);
  REQUIRE(parsed.ok());
  const FeatureModel& fm = *parsed.value;
  CHECK(fm.name == "M1");
  CHECK(fm.root == "A");
  CHECK(fm.features.size() == 3);
  const Feature* a = fm.find("A");
  REQUIRE(a != nullptr);
  REQUIRE(a->groups.size() == 2);
  CHECK(a->groups[0].kind == GroupKind::mandatory);
  CHECK(a->groups[0].children == std::vector<std::string>{"B"});
  CHECK(a->groups[1].kind == GroupKind::optional);
  CHECK(a->groups[1].children == std::vector<std::string>{"C"});
  CHECK(fm.find("B")->parent == "A");
  CHECK(fm.find("C")->parent == "A");
  CHECK(fm.find("A")->parent.empty());
  CHECK(fm.constraints.empty());
}

TEST_CASE("feature model parse errors") {
  CHECK(parse_errors("featuremodel X { root A feature A { mandatory B } feature A { } }") ==
        std::vector<std::string>{"E_DUPLICATE_FEATURE"});
  CHECK(parse_errors("") == std::vector<std::string>{"E_SYNTAX"});
  CHECK(parse_errors("featuremodel X { root A feature A { xor { B } } }") ==
        std::vector<std::string>{"E_SYNTAX"});
  CHECK(parse_errors("featuremodel X { root A feature A { optional feature } }") ==
        std::vector<std::string>{"E_SYNTAX"});
  CHECK(parse_errors("featuremodel X { root A feature A { optional B } feature C { optional B } }") ==
        std::vector<std::string>{"E_UNKNOWN_ROOT", "E_MULTIPLE_PARENTS"});
  CHECK(parse_errors("featuremodel X { root A feature A { optional A } }") ==
        std::vector<std::string>{"E_CYCLE"});
  CHECK(parse_errors("featuremodel X { root A feature A { optional B } B requires Q }") ==
        std::vector<std::string>{"E_UNKNOWN_FEATURE"});
  CHECK(parse_errors("featuremodel X { root A feature A { optional B } B requires B }") ==
        std::vector<std::string>{"E_SYNTAX"});
}

TEST_CASE("parse errors point at the offending token") {
  const auto parsed =
      parse_feature_model("featuremodel X {\n  root A\n  feature A { mandatory B }\n  feature A { }\n}", "x.fm");
  REQUIRE(parsed.diagnostics.size() == 1);
  const SourceSpan& s = *parsed.diagnostics[0].span;
  CHECK(s.file == "x.fm");
  CHECK(s.start_line == 4);
  CHECK(s.start_col == 11);
}

TEST_CASE("validity on M1") {
  const FeatureModel fm = must_parse_fm(kM1);
  CHECK(is_valid_configuration(fm, {"A", "B"}).valid);

  const Verdict missing = is_valid_configuration(fm, {"A", "C"});
  CHECK_FALSE(missing.valid);
  CHECK(codes_of(missing.violations) == std::vector<std::string>{"E_MANDATORY_MISSING"});
  CHECK(missing.violations[0].message.find("'B'") != std::string::npos);

  const Verdict unknown = is_valid_configuration(fm, {"A", "B", "Q"});
  CHECK_FALSE(unknown.valid);
  CHECK(codes_of(unknown.violations) == std::vector<std::string>{"E_UNKNOWN_FEATURE"});
}

TEST_CASE("validity reports one violation per broken rule instance") {
  const FeatureModel fm = must_parse_fm(
      "featuremodel V { root R feature R { mandatory M xor { X, Y } optional O } "
      "feature O { optional P } P requires M X excludes O }");
  CHECK(codes_of(is_valid_configuration(fm, {}).violations) ==
        std::vector<std::string>{"E_ROOT_NOT_SELECTED"});
  CHECK(codes_of(is_valid_configuration(fm, {"R", "M", "X", "Y"}).violations) ==
        std::vector<std::string>{"E_XOR_VIOLATION"});
  CHECK(codes_of(is_valid_configuration(fm, {"R", "M"}).violations) ==
        std::vector<std::string>{"E_XOR_VIOLATION"});
  CHECK(codes_of(is_valid_configuration(fm, {"R", "M", "X", "P"}).violations) ==
        std::vector<std::string>{"E_ORPHAN_SELECTION"});
  CHECK(codes_of(is_valid_configuration(fm, {"R", "X", "O", "P"}).violations) ==
        std::vector<std::string>{"E_MANDATORY_MISSING", "E_REQUIRES_VIOLATION",
                                 "E_EXCLUDES_VIOLATION"});
  CHECK(is_valid_configuration(fm, {"R", "M", "Y", "O", "P"}).valid);
}

TEST_CASE("enumeration of the reference models") {
  CHECK(listing(must_parse_fm(kM1)) ==
        std::vector<std::vector<std::string>>{{"A", "B"}, {"A", "B", "C"}});
  CHECK(listing(must_parse_fm(kM2)) ==
        std::vector<std::vector<std::string>>{{"A", "X"}, {"A", "Y"}, {"A", "Z"}});
  CHECK(listing(must_parse_fm(kM3)) ==
        std::vector<std::vector<std::string>>{{"A"}, {"A", "B"}, {"A", "B", "C"}});
}

TEST_CASE("counting") {
  CHECK(count_configurations(must_parse_fm(kM1)) == 2);
  CHECK(count_configurations(must_parse_fm(kM2)) == 3);
  CHECK(count_configurations(must_parse_fm(kM3)) == 3);
  CHECK(count_configurations(must_parse_fm("featuremodel R { root A }")) == 1);
}

TEST_CASE("enumeration refuses models above the cap") {
  std::string text = "featuremodel Big { root R feature R {";
  for (int i = 0; i < 21; ++i) text += " optional F" + std::to_string(i);
  text += " } }";
  const FeatureModel fm = must_parse_fm(text);
  try {
    enumerate_configurations(fm);
    FAIL("expected E_TOO_LARGE");
  } catch (const DiagnosticError& e) {
    CHECK(e.code() == "E_TOO_LARGE");
  }
  CHECK(count_configurations(fm, 22) == (std::size_t{1} << 21));
}

TEST_CASE("enumeration equals filtering all subsets by the validity check") {
  Rng rng(21);
  for (int i = 0; i < 60; ++i) {
    const FmShape shape = random_fm_shape(rng, 10, 3);
    const FeatureModel fm = must_parse_fm(write_feature_model(shape));
    std::vector<std::vector<std::string>> filtered;
    for (std::uint32_t mask = 0; mask < (1u << shape.size()); ++mask) {
      const auto names = oracle_names(shape, mask);
      if (is_valid_configuration(fm, Configuration(std::set<std::string>(names.begin(), names.end()))).valid) {
        filtered.push_back(names);
      }
    }
    std::sort(filtered.begin(), filtered.end());
    CHECK(listing(fm) == filtered);
  }
}

TEST_CASE("validity agrees with the independent rule checker") {
  Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    const FmShape shape = random_fm_shape(rng, 12, 3);
    const FeatureModel fm = must_parse_fm(write_feature_model(shape));
    for (int k = 0; k < 40; ++k) {
      const auto mask = static_cast<std::uint32_t>(uniform(rng, 0, (1 << shape.size()) - 1));
      const auto names = oracle_names(shape, mask);
      Configuration cfg(std::set<std::string>(names.begin(), names.end()));
      CHECK(is_valid_configuration(fm, cfg).valid == oracle_valid(shape, mask));
      cfg.selected.insert("Undeclared");
      const Verdict v = is_valid_configuration(fm, cfg);
      CHECK_FALSE(v.valid);
      const auto found = codes_of(v.violations);
      CHECK(std::count(found.begin(), found.end(), "E_UNKNOWN_FEATURE") == 1);
    }
  }
}

TEST_CASE("adding a mandatory leaf never increases the count") {
  Rng rng(23);
  for (int i = 0; i < 80; ++i) {
    FmShape shape = random_fm_shape(rng, 10, 3);
    const std::size_t before = count_configurations(must_parse_fm(write_feature_model(shape)));
    const int parent = uniform(rng, 0, shape.size() - 1);
    shape.names.push_back("Extra");
    shape.parent.push_back(parent);
    shape.groups.emplace_back();
    shape.groups[static_cast<std::size_t>(parent)].push_back({GroupKind::mandatory, {shape.size() - 1}});
    const std::size_t after = count_configurations(must_parse_fm(write_feature_model(shape)));
    CHECK(after <= before);
  }
}

TEST_CASE("adding a constraint never increases the count") {
  Rng rng(24);
  for (int i = 0; i < 80; ++i) {
    FmShape shape = random_fm_shape(rng, 10, 2);
    if (shape.size() < 2) continue;
    const std::size_t before = count_configurations(must_parse_fm(write_feature_model(shape)));
    FmShape::Rule r;
    r.kind = chance(rng, 0.5) ? ConstraintKind::require : ConstraintKind::exclude;
    r.lhs = uniform(rng, 0, shape.size() - 1);
    do {
      r.rhs = uniform(rng, 0, shape.size() - 1);
    } while (r.rhs == r.lhs);
    shape.rules.push_back(r);
    const std::size_t after = count_configurations(must_parse_fm(write_feature_model(shape)));
    CHECK(after <= before);
  }
}

TEST_CASE("pretty_print of M3 and its round trip") {
  const FeatureModel fm = must_parse_fm(kM3);
  CHECK(pretty_print(fm) ==
        "featuremodel M3 {\n"
        "  root A\n"
        "  feature A {\n"
        "    optional B\n"
        "    optional C\n"
        "  }\n"
        "  C requires B\n"
        "}\n");
  CHECK(same_structure(must_parse_fm(pretty_print(fm)), fm));
  CHECK_FALSE(same_structure(fm, must_parse_fm(kM1)));
}

TEST_CASE("round trip on random feature models") {
  Rng rng(25);
  for (int i = 0; i < 100; ++i) {
    const FeatureModel fm = must_parse_fm(write_feature_model(random_fm_shape(rng), &rng));
    const std::string once = pretty_print(fm);
    const FeatureModel again = must_parse_fm(once);
    CHECK(same_structure(again, fm));
    CHECK(pretty_print(again) == once);
  }
}

TEST_CASE("presence expressions evaluate by membership") {
  CHECK(eval_feature_expr(expr("Radio"), {"A", "Radio"}));
  CHECK_FALSE(eval_feature_expr(expr("Radio & !CD"), {"A", "Radio", "CD"}));
  CHECK_FALSE(eval_feature_expr(expr("Phone | Media"), {"A"}));
  CHECK(eval_feature_expr(expr("!(Phone | Media)"), {"A"}));
}

TEST_CASE("& binds tighter than | and printing keeps only needed parentheses") {
  const FeatureExpr e = expr("a | b & c");
  REQUIRE(e.op == FeatureExpr::Op::disjunction);
  CHECK(e.operands[1].op == FeatureExpr::Op::conjunction);
  CHECK(to_string(e) == "a | b & c");
  CHECK(to_string(expr("(a | b) & !c")) == "(a | b) & !c");
  CHECK(to_string(expr("((a))")) == "a");
  CHECK(to_string(expr("a & (b & c)")) == "a & (b & c)");
  CHECK(to_string(expr("(a & b) & c")) == "a & b & c");
  CHECK(to_string(expr("!!a")) == "!!a");
  CHECK_FALSE(parse_feature_expr("a &").ok());
  CHECK_FALSE(parse_feature_expr("a b").ok());
}

TEST_CASE("expression printing round-trips and matches the reference evaluator") {
  Rng rng(26);
  const std::vector<std::string> names = {"A", "B", "C", "D"};
  for (int i = 0; i < 300; ++i) {
    const FeatureExpr e = random_expr(rng, names, 4);
    const FeatureExpr back = expr(to_string(e));
    CHECK(same_structure(back, e));
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
      std::set<std::string> sel;
      for (int b = 0; b < 4; ++b) {
        if (mask >> b & 1u) sel.insert(names[static_cast<std::size_t>(b)]);
      }
      CHECK(eval_feature_expr(e, sel) == oracle_eval(e, sel));
    }
  }
}

TEST_CASE("feature_refs lists identifiers left to right with spans") {
  const FeatureExpr e = expr("Phone & !(Media | Phone)");
  const auto refs = feature_refs(e);
  REQUIRE(refs.size() == 3);
  CHECK(refs[0]->name == "Phone");
  CHECK(refs[1]->name == "Media");
  CHECK(refs[2]->span.start_col == 19);
}

TEST_CASE("configuration files") {
  const auto p = parse_configuration("configuration Base of M1 { select A, B }", "c.cfg");
  REQUIRE(p.ok());
  CHECK(p.value->name == "Base");
  CHECK(p.value->model == "M1");
  CHECK(p.value->sorted() == std::vector<std::string>{"A", "B"});
  CHECK(p.value->spans.at("B").start_col == 38);
  CHECK(format_selection(*p.value) == "A, B");

  const auto empty = parse_configuration("configuration E of M1 { }");
  REQUIRE(empty.ok());
  CHECK(empty.value->selected.empty());

  CHECK_FALSE(parse_configuration("configuration E of M1 { select }").ok());
  CHECK_FALSE(parse_configuration("configuration E { select A }").ok());
}

}  // TEST_SUITE
