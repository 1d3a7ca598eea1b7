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

#include <gtest/gtest.h>

#include "tigris/dsl.hpp"
#include "tigris/errors.hpp"

namespace tigris {
namespace {

FilterExpr L(Modifier m, Criterion c) { return FilterExpr::leaf(m, c); }

std::size_t syntax_error_position(std::string_view text) {
  try {
    parse_filter(text);
  } catch (const SyntaxError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no SyntaxError for '" << text << "'";
  return 0;
}

TEST(Dsl, SingleLeaf) {
  EXPECT_EQ(parse_filter("least frequent"),
            L(Modifier::Least, Criterion::Frequency));
  EXPECT_EQ(parse_filter("frequent"), L(Modifier::Base, Criterion::Frequency));
  EXPECT_EQ(parse_filter("most error-prone"),
            L(Modifier::Most, Criterion::ErrorProneness));
}

TEST(Dsl, EveryCriterionToken) {
  for (Criterion c : kAllCriteria) {
    const std::string text = "more " + std::string(criterion_token(c));
    EXPECT_EQ(parse_filter(text), L(Modifier::More, c)) << text;
    EXPECT_EQ(criterion_from_token(criterion_token(c)), c);
  }
  EXPECT_FALSE(criterion_from_token("fast").has_value());
}

TEST(Dsl, KeywordsAreCaseInsensitive) {
  EXPECT_EQ(parse_filter("MORE Frequent Union least CHANGEABLE"),
            parse_filter("more frequent U least changeable"));
}

TEST(Dsl, OperatorSpellings) {
  const FilterExpr want = FilterExpr::combine(
      SetOp::Intersection, L(Modifier::More, Criterion::Frequency),
      L(Modifier::Most, Criterion::Expensiveness));
  EXPECT_EQ(parse_filter("more frequent & most expensive"), want);
  EXPECT_EQ(parse_filter("more frequent intersect most expensive"), want);
  EXPECT_EQ(parse_filter("more frequent \xE2\x88\xA9 most expensive"), want);
  EXPECT_EQ(parse_filter("more frequent\xE2\x88\xA9most expensive"), want);

  EXPECT_EQ(parse_filter("frequent \xE2\x88\xAA expensive"),
            parse_filter("frequent U expensive"));
  EXPECT_EQ(parse_filter("frequent union expensive"),
            parse_filter("frequent U expensive"));
  EXPECT_EQ(parse_filter("frequent \xE2\x88\x96 expensive"),
            parse_filter("frequent \\ expensive"));
  EXPECT_EQ(parse_filter("frequent minus expensive"),
            parse_filter("frequent \\ expensive"));
}

TEST(Dsl, OperatorsAssociateLeftWithEqualPrecedence) {
  const FilterExpr a = L(Modifier::Base, Criterion::Frequency);
  const FilterExpr b = L(Modifier::Base, Criterion::Expensiveness);
  const FilterExpr c = L(Modifier::Base, Criterion::Changeability);
  EXPECT_EQ(parse_filter("frequent U expensive & changeable"),
            FilterExpr::combine(SetOp::Intersection,
                                FilterExpr::combine(SetOp::Union, a, b), c));
  EXPECT_EQ(parse_filter("frequent & expensive U changeable"),
            FilterExpr::combine(SetOp::Union,
                                FilterExpr::combine(SetOp::Intersection, a, b),
                                c));
  EXPECT_EQ(parse_filter("frequent U (expensive & changeable)"),
            FilterExpr::combine(SetOp::Union, a,
                                FilterExpr::combine(SetOp::Intersection, b, c)));
}

TEST(Dsl, RedundantParenthesesCollapse) {
  EXPECT_EQ(parse_filter("((more frequent))"),
            L(Modifier::More, Criterion::Frequency));
}

TEST(Dsl, RunningExampleShape) {
  const FilterExpr e =
      parse_filter("(more frequent \xE2\x88\xAA most expensive) \xE2\x88\xA9 "
                   "least changeable");
  ASSERT_FALSE(e.is_leaf());
  EXPECT_EQ(e.as_binary().op, SetOp::Intersection);
  EXPECT_EQ(*e.as_binary().rhs, L(Modifier::Least, Criterion::Changeability));
  EXPECT_EQ(depth(e), 3u);
  EXPECT_EQ(referenced_criteria(e),
            (std::set<Criterion>{Criterion::Frequency, Criterion::Expensiveness,
                                 Criterion::Changeability}));
}

TEST(Dsl, ErrorsCarryPosition) {
  EXPECT_EQ(syntax_error_position("more frequent U U expensive"), 16u);
  EXPECT_EQ(syntax_error_position("more fast"), 5u);
  EXPECT_EQ(syntax_error_position("frequent)"), 8u);
  EXPECT_EQ(syntax_error_position("frequent expensive"), 9u);
  EXPECT_EQ(syntax_error_position("frequent $"), 9u);
}

TEST(Dsl, MalformedInputsAreRejected) {
  for (const char* bad :
       {"", "   ", "more", "most most frequent", "(frequent", "()",
        "frequent U", "U frequent", "more (frequent)", "frequent & & latent",
        "least frequent expensive", "frequent,"}) {
    EXPECT_THROW(parse_filter(bad), SyntaxError) << "'" << bad << "'";
  }
}

TEST(Dsl, SyntaxErrorListsExpectedTokens) {
  try {
    parse_filter("more");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 4u);
    EXPECT_FALSE(e.expected().empty());
  }
}

TEST(Dsl, ToStringRoundTrips) {
  for (const char* text :
       {"least frequent", "more frequent U most expensive",
        "most changeable & (most concurrent U more error-prone)",
        "frequent \\ (latent \\ concurrent)", "state-variation"}) {
    const FilterExpr e = parse_filter(text);
    EXPECT_EQ(parse_filter(to_string(e)), e) << text;
    EXPECT_EQ(parse_filter(to_string(e, OperatorStyle::Unicode)), e) << text;
  }
}

TEST(Dsl, ToStringAscii) {
  EXPECT_EQ(to_string(parse_filter("more frequent union (least latent minus "
                                   "maintainable)")),
            "more frequent U (least latent \\ maintainable)");
}

TEST(Dsl, ModifierTokens) {
  EXPECT_EQ(modifier_token(Modifier::Base), "");
  EXPECT_EQ(modifier_name(Modifier::Base), "base");
  EXPECT_EQ(modifier_from_token("Most"), Modifier::Most);
  EXPECT_EQ(modifier_from_token("base"), Modifier::Base);
  EXPECT_FALSE(modifier_from_token("mostly").has_value());
  EXPECT_THROW(parse_filter("base frequent"), SyntaxError);
}

}  // namespace
}  // namespace tigris
