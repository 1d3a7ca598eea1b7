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

#include "tigris/classification.hpp"

#include <algorithm>
#include <iterator>

namespace tigris {
namespace {

std::set<std::string> leaf_members(const FilterExpr::Leaf& leaf,
                                   const GroupingTable& table,
                                   LeafSemantics semantics) {
  std::set<std::string> out;
  for (const auto& [type, band] : table.at(leaf.criterion).bands) {
    if (leaf_selects(leaf.modifier, band, semantics)) out.insert(type);
  }
  return out;
}

std::set<std::string> combine(SetOp op, const std::set<std::string>& a,
                              const std::set<std::string>& b) {
  std::set<std::string> out;
  auto sink = std::inserter(out, out.end());
  switch (op) {
    case SetOp::Union:
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), sink);
      break;
    case SetOp::Intersection:
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), sink);
      break;
    case SetOp::Difference:
      std::set_difference(a.begin(), a.end(), b.begin(), b.end(), sink);
      break;
  }
  return out;
}

std::set<std::string> difference(const std::set<std::string>& a,
                                 const std::set<std::string>& b) {
  return combine(SetOp::Difference, a, b);
}

}  // namespace

bool leaf_selects(Modifier leaf, Modifier band,
                  LeafSemantics semantics) noexcept {
  if (semantics == LeafSemantics::Exact || leaf == Modifier::Base ||
      leaf == Modifier::Least || leaf == Modifier::Most) {
    return leaf == band;
  }
  if (leaf == Modifier::More) return band >= Modifier::More;
  return band <= Modifier::Less;
}

std::set<std::string> evaluate_filter(const FilterExpr& expr,
                                      const GroupingTable& table,
                                      LeafSemantics semantics) {
  if (expr.is_leaf()) return leaf_members(expr.as_leaf(), table, semantics);
  const auto& bin = expr.as_binary();
  return combine(bin.op, evaluate_filter(*bin.lhs, table, semantics),
                 evaluate_filter(*bin.rhs, table, semantics));
}

RelevanceSet RelevanceSet::next(std::set<std::string> now_selected) const {
  RelevanceSet out;
  out.cycle_index = cycle_index + 1;
  out.added = difference(now_selected, selected);
  out.removed = difference(selected, now_selected);
  out.selected = std::move(now_selected);
  return out;
}

}  // namespace tigris
