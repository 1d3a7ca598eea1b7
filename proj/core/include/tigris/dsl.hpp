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

#pragma once

// Relevance-filter language.
//
//   filter    ::= term { operator term }
//   term      ::= "(" filter ")" | filterdef
//   filterdef ::= [ modifier ] criterion
//   operator  ::= ∪ | U | union | ∩ | & | intersect | ∖ | \ | minus
//   modifier  ::= least | less | more | most
//   criterion ::= frequent | maintainable | expensive | changeable
//               | error-prone | usage-pattern | state-variation
//               | concurrent | latent
//
// All operators share one precedence level and associate to the left.
// Keywords are case-insensitive.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>

namespace tigris {

enum class Criterion : std::uint8_t {
  Frequency,
  Maintainability,
  Expensiveness,
  Changeability,
  ErrorProneness,
  UsagePattern,
  StateVariation,
  Concurrency,
  Latency,
};

inline constexpr std::array<Criterion, 9> kAllCriteria = {
    Criterion::Frequency,      Criterion::Maintainability,
    Criterion::Expensiveness,  Criterion::Changeability,
    Criterion::ErrorProneness, Criterion::UsagePattern,
    Criterion::StateVariation, Criterion::Concurrency,
    Criterion::Latency,
};

/// Filter keyword, e.g. "frequent" or "error-prone".
std::string_view criterion_token(Criterion c) noexcept;
/// Display name, e.g. "Frequency".
std::string_view criterion_name(Criterion c) noexcept;
std::optional<Criterion> criterion_from_token(std::string_view token);

/// Band order: Least < Less < Base < More < Most. Base is the bare criterion.
enum class Modifier : std::uint8_t { Least, Less, Base, More, Most };

inline constexpr std::array<Modifier, 5> kAllModifiers = {
    Modifier::Least, Modifier::Less, Modifier::Base, Modifier::More,
    Modifier::Most};

/// Keyword for the modifier; empty for Base.
std::string_view modifier_token(Modifier m) noexcept;
/// Display name ("least", "less", "base", "more", "most").
std::string_view modifier_name(Modifier m) noexcept;
/// Inverse of modifier_name, case-insensitive. The parser never accepts
/// "base" as a keyword.
std::optional<Modifier> modifier_from_token(std::string_view token);

enum class SetOp : std::uint8_t { Union, Intersection, Difference };

class FilterExpr {
 public:
  struct Leaf {
    Modifier modifier = Modifier::Base;
    Criterion criterion = Criterion::Frequency;
    friend bool operator==(const Leaf&, const Leaf&) = default;
  };
  struct Binary {
    SetOp op;
    std::shared_ptr<const FilterExpr> lhs;
    std::shared_ptr<const FilterExpr> rhs;
  };

  static FilterExpr leaf(Modifier modifier, Criterion criterion);
  static FilterExpr combine(SetOp op, FilterExpr lhs, FilterExpr rhs);

  bool is_leaf() const noexcept {
    return std::holds_alternative<Leaf>(node_);
  }
  const Leaf& as_leaf() const { return std::get<Leaf>(node_); }
  const Binary& as_binary() const { return std::get<Binary>(node_); }

  /// Structural equality.
  friend bool operator==(const FilterExpr& a, const FilterExpr& b);

 private:
  explicit FilterExpr(std::variant<Leaf, Binary> node)
      : node_(std::move(node)) {}

  std::variant<Leaf, Binary> node_;
};

/// Throws SyntaxError on any malformed input, including empty text.
FilterExpr parse_filter(std::string_view text);

enum class OperatorStyle { Ascii, Unicode };

/// Canonical text. Right operands that are themselves binary are
/// parenthesized, so the output re-parses to an equal tree.
std::string to_string(const FilterExpr& expr,
                      OperatorStyle style = OperatorStyle::Ascii);

std::set<Criterion> referenced_criteria(const FilterExpr& expr);

std::size_t depth(const FilterExpr& expr) noexcept;

}  // namespace tigris
