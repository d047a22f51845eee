// Copyright 2026 The mctsynth Authors
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

#include <random>

#include <gtest/gtest.h>

#include "mctsynth/circuit_io.hpp"
#include "mctsynth/decomp.hpp"
#include "mctsynth/error.hpp"
#include "test_support.hpp"

using namespace mctsynth;

namespace {

ParseError parse_failure(std::string_view text) {
  try {
    parse_circuit(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "parse succeeded on: " << text;
  return ParseError(ErrorCode::SyntaxError, 0, "", "");
}

}  // namespace

TEST(Parse, Toffoli) {
  const Circuit c = parse_circuit(".lines 3\nccx 0 1 2\n.end");
  EXPECT_EQ(c, Circuit(3, {Gate::ccx(0, 1, 2)}));
}

TEST(Parse, RootWithExponent) {
  const Circuit c = parse_circuit(".lines 2\ncrx 0 1 k=2\n.end");
  EXPECT_EQ(c.gates(), std::vector<Gate>{Gate::crx(0, 1, 2)});
  EXPECT_EQ(parse_circuit(".lines 2\ncrx+ 1 0 k=5\n.end\n").gates(),
            std::vector<Gate>{Gate::crxd(1, 0, 5)});
}

TEST(Parse, UnknownMnemonicIsError) {
  const ParseError e = parse_failure(".lines 2\nfoo 0 1\n.end");
  EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.token(), "foo");
}

TEST(Parse, FullSyntax) {
  const Circuit c = parse_circuit(
      "# comment line\n"
      ".lines 5\n"
      ".roles c c c t a\n"
      "x 4   # trailing comment\n"
      "\n"
      "cv 0 3\n"
      "cv+ 1 3\n"
      "peres 0 1 2\n"
      "peres+ 0 1 2\n"
      "mct 0 1 2 : 3\n"
      "mct : 4\n"
      ".end\n");
  EXPECT_EQ(c.width(), 5u);
  ASSERT_TRUE(c.roles().has_value());
  EXPECT_EQ(lines_with_role(c, Role::Target), std::vector<LineIndex>{3});
  EXPECT_EQ(c.gates(),
            (std::vector<Gate>{Gate::x(4), Gate::cv(0, 3), Gate::cvd(1, 3),
                               Gate::peres(0, 1, 2), Gate::iperes(0, 1, 2),
                               Gate::mct({0, 1, 2}, 3), Gate::mct({}, 4)}));
}

TEST(Parse, Errors) {
  EXPECT_EQ(parse_failure("ccx 0 1 2\n.end").line(), 1u);
  EXPECT_EQ(parse_failure(".lines 3\nccx 0 1 2\n").code(), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_failure(".lines 3\nccx 0 1\n.end").line(), 2u);
  EXPECT_EQ(parse_failure(".lines 3\nccx 0 1 x\n.end").token(), "x");
  EXPECT_EQ(parse_failure(".lines 2\ncrx 0 1\n.end").line(), 2u);
  EXPECT_EQ(parse_failure(".lines 2\ncrx 0 1 k=0\n.end").token(), "k=0");
  EXPECT_EQ(parse_failure(".lines 2\ncrx 0 1 2\n.end").token(), "2");
  EXPECT_EQ(parse_failure(".lines 3\nmct 0 1 2\n.end").line(), 2u);
  EXPECT_EQ(parse_failure(".lines 3\nmct 0 : 1 2\n.end").line(), 2u);
  EXPECT_EQ(parse_failure(".lines 3\n.end\nx 0\n").line(), 3u);
  EXPECT_EQ(parse_failure(".lines 3\n.roles c q t\n.end").token(), "q");
  EXPECT_EQ(parse_failure(".lines -1\n.end").token(), "-1");
}

TEST(Parse, ValidationErrorsPropagate) {
  EXPECT_EQ(parse_failure(".lines 2\nccx 0 1 2\n.end").code(),
            ErrorCode::ValidationError);
  EXPECT_EQ(parse_failure(".lines 3\ncx 1 1\n.end").code(),
            ErrorCode::ValidationError);
  EXPECT_EQ(parse_failure(".lines 3\n.roles c c c\n.end").code(),
            ErrorCode::ValidationError);
}

TEST(Serialize, CanonicalForm) {
  Circuit c(4, {Gate::mct({0, 1}, 3), Gate::crxd(2, 3, 4), Gate::iperes(0, 1, 2)});
  c.set_roles({Role::Control, Role::Control, Role::Ancilla, Role::Target});
  EXPECT_EQ(serialize_circuit(c),
            ".lines 4\n"
            ".roles c c a t\n"
            "mct 0 1 : 3\n"
            "crx+ 2 3 k=4\n"
            "peres+ 0 1 2\n"
            ".end\n");
}

TEST(RoundTrip, GeneratedCircuits) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned width = 1 + trial % 9;
    Circuit c = testkit::random_circuit(rng, width, trial % 25);
    if (trial % 3 == 0) {
      std::vector<Role> roles(width, Role::Control);
      roles[rng() % width] = Role::Target;
      if (width > 1) roles[(rng() % width)] = Role::Ancilla;
      if (std::count(roles.begin(), roles.end(), Role::Target) == 1) {
        c.set_roles(roles);
      }
    }
    const std::string text = serialize_circuit(c);
    const Circuit back = parse_circuit(text);
    EXPECT_EQ(back, c);
    EXPECT_EQ(serialize_circuit(back), text);
  }
}

TEST(RoundTrip, SynthesizedCircuits) {
  for (unsigned s = 1; s <= 10; ++s) {
    const SynthesisResult r = synthesize(s, s >= 6 ? 1 : 0);
    EXPECT_EQ(parse_circuit(serialize_circuit(r.circuit)), r.circuit);
    const Circuit e = expand(r.circuit);
    EXPECT_EQ(parse_circuit(serialize_circuit(e)), e);
  }
}
