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

#include "mctsynth/circuit_io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "mctsynth/error.hpp"

namespace mctsynth {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<unsigned> to_unsigned(std::string_view s) {
  unsigned v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return v;
}

std::optional<GateKind> kind_of(std::string_view m) {
  for (GateKind k :
       {GateKind::X, GateKind::CX, GateKind::CCX, GateKind::CV, GateKind::CVD,
        GateKind::CRX, GateKind::CRXD, GateKind::Peres, GateKind::IPeres,
        GateKind::MCT}) {
    if (mnemonic(k) == m) return k;
  }
  return std::nullopt;
}

std::size_t arity(GateKind kind) {
  switch (kind) {
    case GateKind::X:
      return 1;
    case GateKind::CX:
    case GateKind::CV:
    case GateKind::CVD:
    case GateKind::CRX:
    case GateKind::CRXD:
      return 2;
    default:
      return 3;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Circuit run() {
    std::optional<unsigned> width;
    std::optional<std::vector<Role>> roles;
    std::vector<Gate> gates;
    bool ended = false;

    while (next_line()) {
      const auto tokens = split_tokens(current_);
      if (tokens.empty()) continue;
      if (ended) fail(tokens[0], "content after .end");

      const std::string_view head = tokens[0];
      if (!width) {
        if (head != ".lines") fail(head, "expected .lines header");
        if (tokens.size() != 2) fail(head, ".lines takes one argument");
        width = number(tokens[1]);
        continue;
      }
      if (head == ".roles") {
        if (roles || !gates.empty()) fail(head, ".roles must follow .lines");
        roles.emplace();
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          const std::string_view r = tokens[i];
          if (r == "c") {
            roles->push_back(Role::Control);
          } else if (r == "t") {
            roles->push_back(Role::Target);
          } else if (r == "a") {
            roles->push_back(Role::Ancilla);
          } else {
            fail(r, "unknown role");
          }
        }
        continue;
      }
      if (head == ".end") {
        if (tokens.size() != 1) fail(tokens[1], "unexpected token after .end");
        ended = true;
        continue;
      }
      gates.push_back(gate(tokens));
    }
    if (!width) fail("", "missing .lines header");
    if (!ended) fail("", "missing .end");

    Circuit c(*width, std::move(gates));
    if (roles) c.set_roles(std::move(*roles));
    try {
      validate(c);
    } catch (const Error& e) {
      throw ParseError(ErrorCode::ValidationError, line_no_, "", e.what());
    }
    return c;
  }

 private:
  bool next_line() {
    if (pos_ > text_.size()) return false;
    const std::size_t nl = text_.find('\n', pos_);
    const std::size_t end = nl == std::string_view::npos ? text_.size() : nl;
    current_ = text_.substr(pos_, end - pos_);
    if (!current_.empty() && current_.back() == '\r') current_.remove_suffix(1);
    if (const auto hash = current_.find('#'); hash != std::string_view::npos) {
      current_ = current_.substr(0, hash);
    }
    pos_ = end + 1;
    ++line_no_;
    return true;
  }

  [[noreturn]] void fail(std::string_view token, const std::string& what) {
    throw ParseError(
        ErrorCode::SyntaxError, line_no_, std::string(token),
        "line " + std::to_string(line_no_) + ": " + what +
            (token.empty() ? "" : " ('" + std::string(token) + "')"));
  }

  unsigned number(std::string_view tok) {
    const auto v = to_unsigned(tok);
    if (!v) fail(tok, "expected a non-negative integer");
    return *v;
  }

  Gate gate(const std::vector<std::string_view>& tokens) {
    const auto kind = kind_of(tokens[0]);
    if (!kind) fail(tokens[0], "unknown gate mnemonic");

    if (*kind == GateKind::MCT) {
      std::vector<LineIndex> controls;
      std::size_t i = 1;
      for (; i < tokens.size() && tokens[i] != ":"; ++i) {
        controls.push_back(number(tokens[i]));
      }
      if (i == tokens.size()) fail(tokens[0], "mct needs ':' before its target");
      if (i + 2 != tokens.size()) {
        fail(i + 1 < tokens.size() ? tokens.back() : tokens[i],
             "mct needs exactly one target after ':'");
      }
      return Gate::mct(std::move(controls), number(tokens[i + 1]));
    }

    const bool rooted = *kind == GateKind::CRX || *kind == GateKind::CRXD;
    const std::size_t expected = 1 + arity(*kind) + (rooted ? 1 : 0);
    if (tokens.size() != expected) {
      fail(tokens[0], "expected " + std::to_string(expected - 1) + " operands");
    }
    std::vector<LineIndex> l;
    for (std::size_t i = 1; i <= arity(*kind); ++i) l.push_back(number(tokens[i]));

    switch (*kind) {
      case GateKind::X:
        return Gate::x(l[0]);
      case GateKind::CX:
        return Gate::cx(l[0], l[1]);
      case GateKind::CCX:
        return Gate::ccx(l[0], l[1], l[2]);
      case GateKind::CV:
        return Gate::cv(l[0], l[1]);
      case GateKind::CVD:
        return Gate::cvd(l[0], l[1]);
      case GateKind::Peres:
        return Gate::peres(l[0], l[1], l[2]);
      case GateKind::IPeres:
        return Gate::iperes(l[0], l[1], l[2]);
      case GateKind::CRX:
      case GateKind::CRXD: {
        const std::string_view kt = tokens[3];
        if (kt.substr(0, 2) != "k=") fail(kt, "expected k=<int>");
        const unsigned k = number(kt.substr(2));
        if (k < 1) fail(kt, "root exponent must be >= 1");
        return *kind == GateKind::CRX ? Gate::crx(l[0], l[1], k)
                                      : Gate::crxd(l[0], l[1], k);
      }
      case GateKind::MCT:
        break;
    }
    fail(tokens[0], "unhandled gate");
  }

  std::string_view text_;
  std::string_view current_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

}  // namespace

std::string_view mnemonic(GateKind kind) {
  switch (kind) {
    case GateKind::X:
      return "x";
    case GateKind::CX:
      return "cx";
    case GateKind::CCX:
      return "ccx";
    case GateKind::CV:
      return "cv";
    case GateKind::CVD:
      return "cv+";
    case GateKind::CRX:
      return "crx";
    case GateKind::CRXD:
      return "crx+";
    case GateKind::Peres:
      return "peres";
    case GateKind::IPeres:
      return "peres+";
    case GateKind::MCT:
      return "mct";
  }
  return "?";
}

Circuit parse_circuit(std::string_view text) { return Parser(text).run(); }

std::string serialize_circuit(const Circuit& circuit) {
  std::ostringstream out;
  out << ".lines " << circuit.width() << '\n';
  if (const auto& roles = circuit.roles()) {
    out << ".roles";
    for (Role r : *roles) out << ' ' << static_cast<char>(r);
    out << '\n';
  }
  for (const Gate& g : circuit.gates()) {
    out << mnemonic(g.kind());
    if (g.kind() == GateKind::MCT) {
      for (LineIndex c : g.controls()) out << ' ' << c;
      out << " : " << g.target();
    } else {
      for (LineIndex l : g.lines()) out << ' ' << l;
      if (g.kind() == GateKind::CRX || g.kind() == GateKind::CRXD) {
        out << " k=" << g.root();
      }
    }
    out << '\n';
  }
  out << ".end\n";
  return out.str();
}

}  // namespace mctsynth
