// Copyright 2026 The Tigris Authors.
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

#include "tigris/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <utility>
#include <vector>

#include "tigris/errors.hpp"

namespace tigris {
namespace {

struct CriterionInfo {
  Criterion criterion;
  std::string_view token;
  std::string_view name;
};

constexpr std::array<CriterionInfo, 9> kCriterionInfo = {{
    {Criterion::Frequency, "frequent", "Frequency"},
    {Criterion::Maintainability, "maintainable", "Maintainability"},
    {Criterion::Expensiveness, "expensive", "Expensiveness"},
    {Criterion::Changeability, "changeable", "Changeability"},
    {Criterion::ErrorProneness, "error-prone", "ErrorProneness"},
    {Criterion::UsagePattern, "usage-pattern", "UsagePattern"},
    {Criterion::StateVariation, "state-variation", "StateVariation"},
    {Criterion::Concurrency, "concurrent", "Concurrency"},
    {Criterion::Latency, "latent", "Latency"},
}};

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

// ---------------------------------------------------------------------------
// Lexer

enum class TokenKind { Word, Operator, LParen, RParen, End };

struct Token {
  TokenKind kind;
  std::size_t position;
  std::string text;
  SetOp op = SetOp::Union;
};

std::optional<SetOp> operator_word(std::string_view lowered) {
  if (lowered == "u" || lowered == "union") return SetOp::Union;
  if (lowered == "intersect") return SetOp::Intersection;
  if (lowered == "minus") return SetOp::Difference;
  return std::nullopt;
}

bool is_word_char(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '-';
}

std::vector<Token> tokenize(std::string_view text) {
  // UTF-8 encodings of the set-operator glyphs.
  static constexpr std::string_view kCup = "\xE2\x88\xAA";       // U+222A
  static constexpr std::string_view kCap = "\xE2\x88\xA9";       // U+2229
  static constexpr std::string_view kSetMinus = "\xE2\x88\x96";  // U+2216

  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::string_view rest = text.substr(i);
    if (c == '(') {
      tokens.push_back({TokenKind::LParen, i, "("});
      ++i;
    } else if (c == ')') {
      tokens.push_back({TokenKind::RParen, i, ")"});
      ++i;
    } else if (c == '&') {
      tokens.push_back({TokenKind::Operator, i, "&", SetOp::Intersection});
      ++i;
    } else if (c == '\\') {
      tokens.push_back({TokenKind::Operator, i, "\\", SetOp::Difference});
      ++i;
    } else if (rest.starts_with(kCup)) {
      tokens.push_back({TokenKind::Operator, i, std::string(kCup),
                        SetOp::Union});
      i += kCup.size();
    } else if (rest.starts_with(kCap)) {
      tokens.push_back({TokenKind::Operator, i, std::string(kCap),
                        SetOp::Intersection});
      i += kCap.size();
    } else if (rest.starts_with(kSetMinus)) {
      tokens.push_back({TokenKind::Operator, i, std::string(kSetMinus),
                        SetOp::Difference});
      i += kSetMinus.size();
    } else if (is_word_char(c)) {
      std::size_t j = i;
      while (j < text.size() && is_word_char(text[j])) ++j;
      std::string word(text.substr(i, j - i));
      if (auto op = operator_word(lowercase(word))) {
        tokens.push_back({TokenKind::Operator, i, std::move(word), *op});
      } else {
        tokens.push_back({TokenKind::Word, i, std::move(word)});
      }
      i = j;
    } else {
      throw SyntaxError("unexpected character at offset " +
                            std::to_string(i),
                        i, {"modifier", "criterion", "operator", "'('", "')'"});
    }
  }
  tokens.push_back({TokenKind::End, text.size(), ""});
  return tokens;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  FilterExpr parse() {
    if (peek().kind == TokenKind::End) {
      fail("empty filter", {"modifier", "criterion", "'('"});
    }
    FilterExpr expr = parse_filter_seq();
    const Token& t = peek();
    if (t.kind == TokenKind::RParen) {
      fail("unbalanced ')'", {"operator", "end of input"});
    }
    if (t.kind != TokenKind::End) {
      fail("expected an operator before '" + t.text + "'",
           {"operator", "end of input"});
    }
    return expr;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& message,
                         std::vector<std::string> expected) const {
    throw SyntaxError(message + " at offset " +
                          std::to_string(peek().position),
                      peek().position, std::move(expected));
  }

  FilterExpr parse_filter_seq() {
    FilterExpr lhs = parse_term();
    while (peek().kind == TokenKind::Operator) {
      const SetOp op = advance().op;
      FilterExpr rhs = parse_term();
      lhs = FilterExpr::combine(op, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  FilterExpr parse_term() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::LParen: {
        advance();
        if (peek().kind == TokenKind::RParen) {
          fail("empty parentheses", {"modifier", "criterion", "'('"});
        }
        FilterExpr inner = parse_filter_seq();
        if (peek().kind != TokenKind::RParen) {
          if (peek().kind == TokenKind::End) {
            fail("unbalanced '('", {"operator", "')'"});
          }
          fail("expected an operator or ')' before '" + peek().text + "'",
               {"operator", "')'"});
        }
        advance();
        return inner;
      }
      case TokenKind::Word:
        return parse_filterdef();
      case TokenKind::Operator:
        fail("dangling operator '" + t.text + "'",
             {"modifier", "criterion", "'('"});
      case TokenKind::RParen:
        fail("unexpected ')'", {"modifier", "criterion", "'('"});
      case TokenKind::End:
        fail("unexpected end of input", {"modifier", "criterion", "'('"});
    }
    fail("unexpected token", {"modifier", "criterion", "'('"});
  }

  FilterExpr parse_filterdef() {
    Modifier modifier = Modifier::Base;
    if (auto m = modifier_from_token(peek().text); m && *m != Modifier::Base) {
      modifier = *m;
      advance();
      if (peek().kind != TokenKind::Word) {
        fail("expected a criterion after '" + tokens_[pos_ - 1].text + "'",
             {"criterion"});
      }
    }
    const Token& word = peek();
    auto criterion = criterion_from_token(word.text);
    if (!criterion) {
      fail("unknown criterion '" + word.text + "'", {"criterion"});
    }
    advance();
    return FilterExpr::leaf(modifier, *criterion);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string_view op_text(SetOp op, OperatorStyle style) {
  if (style == OperatorStyle::Unicode) {
    switch (op) {
      case SetOp::Union: return "\xE2\x88\xAA";
      case SetOp::Intersection: return "\xE2\x88\xA9";
      case SetOp::Difference: return "\xE2\x88\x96";
    }
  }
  switch (op) {
    case SetOp::Union: return "U";
    case SetOp::Intersection: return "&";
    case SetOp::Difference: return "\\";
  }
  return "?";
}

void print(const FilterExpr& e, OperatorStyle style, std::string& out) {
  if (e.is_leaf()) {
    const auto& leaf = e.as_leaf();
    if (leaf.modifier != Modifier::Base) {
      out += modifier_token(leaf.modifier);
      out += ' ';
    }
    out += criterion_token(leaf.criterion);
    return;
  }
  const auto& bin = e.as_binary();
  print(*bin.lhs, style, out);
  out += ' ';
  out += op_text(bin.op, style);
  out += ' ';
  if (bin.rhs->is_leaf()) {
    print(*bin.rhs, style, out);
  } else {
    out += '(';
    print(*bin.rhs, style, out);
    out += ')';
  }
}

void collect(const FilterExpr& e, std::set<Criterion>& out) {
  if (e.is_leaf()) {
    out.insert(e.as_leaf().criterion);
    return;
  }
  collect(*e.as_binary().lhs, out);
  collect(*e.as_binary().rhs, out);
}

}  // namespace

std::string_view criterion_token(Criterion c) noexcept {
  return kCriterionInfo[static_cast<std::size_t>(c)].token;
}

std::string_view criterion_name(Criterion c) noexcept {
  return kCriterionInfo[static_cast<std::size_t>(c)].name;
}

std::optional<Criterion> criterion_from_token(std::string_view token) {
  const std::string lowered = lowercase(token);
  for (const auto& info : kCriterionInfo) {
    if (info.token == lowered) return info.criterion;
  }
  return std::nullopt;
}

std::string_view modifier_token(Modifier m) noexcept {
  switch (m) {
    case Modifier::Least: return "least";
    case Modifier::Less: return "less";
    case Modifier::Base: return "";
    case Modifier::More: return "more";
    case Modifier::Most: return "most";
  }
  return "";
}

std::string_view modifier_name(Modifier m) noexcept {
  return m == Modifier::Base ? std::string_view("base") : modifier_token(m);
}

std::optional<Modifier> modifier_from_token(std::string_view token) {
  const std::string lowered = lowercase(token);
  for (Modifier m : kAllModifiers) {
    if (modifier_name(m) == lowered) return m;
  }
  return std::nullopt;
}

FilterExpr FilterExpr::leaf(Modifier modifier, Criterion criterion) {
  return FilterExpr(Leaf{modifier, criterion});
}

FilterExpr FilterExpr::combine(SetOp op, FilterExpr lhs, FilterExpr rhs) {
  return FilterExpr(
      Binary{op, std::make_shared<const FilterExpr>(std::move(lhs)),
             std::make_shared<const FilterExpr>(std::move(rhs))});
}

bool operator==(const FilterExpr& a, const FilterExpr& b) {
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.as_leaf() == b.as_leaf();
  const auto& x = a.as_binary();
  const auto& y = b.as_binary();
  return x.op == y.op && *x.lhs == *y.lhs && *x.rhs == *y.rhs;
}

FilterExpr parse_filter(std::string_view text) {
  return Parser(tokenize(text)).parse();
}

std::string to_string(const FilterExpr& expr, OperatorStyle style) {
  std::string out;
  print(expr, style, out);
  return out;
}

std::set<Criterion> referenced_criteria(const FilterExpr& expr) {
  std::set<Criterion> out;
  collect(expr, out);
  return out;
}

std::size_t depth(const FilterExpr& expr) noexcept {
  if (expr.is_leaf()) return 1;
  const auto& bin = expr.as_binary();
  return 1 + std::max(depth(*bin.lhs), depth(*bin.rhs));
}

}  // namespace tigris
