// Copyright 2026 The Broadcast Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BROADCAST_RULE_HPP
#define BROADCAST_RULE_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "broadcast/error.hpp"
#include "broadcast/problem.hpp"

namespace broadcast {

/// A sharing rule: any callable Problem -> Allocation behind a name.
/// Copies share the evaluator; evaluation never mutates it.
class Rule {
 public:
  using Evaluator = std::function<Allocation(const Problem&)>;

  Rule(std::string name, Evaluator eval, std::optional<std::size_t> fixed_size = std::nullopt)
      : name_(std::move(name)),
        eval_(std::make_shared<const Evaluator>(std::move(eval))),
        fixed_size_(fixed_size) {}

  /// Canonical name in the rule grammar (e.g. "ec:1/2").
  const std::string& name() const noexcept { return name_; }

  /// Set for rules only defined on one league size.
  std::optional<std::size_t> fixed_size() const noexcept { return fixed_size_; }

  bool accepts(std::size_t n) const noexcept { return !fixed_size_ || *fixed_size_ == n; }

  Allocation evaluate(const Problem& a) const {
    if (!accepts(a.size())) {
      throw Error(Errc::FixedSizeMismatch, name_ + " is only defined for n = " +
                                               std::to_string(*fixed_size_) + ", got n = " +
                                               std::to_string(a.size()));
    }
    return (*eval_)(a);
  }

  Allocation operator()(const Problem& a) const { return evaluate(a); }

 private:
  std::string name_;
  std::shared_ptr<const Evaluator> eval_;
  std::optional<std::size_t> fixed_size_;
};

/// Pointwise linear combination sum_k w_k R^k, used to state identities
/// between families.
inline Rule combine(std::string name, std::vector<std::pair<std::function<Rational(std::size_t)>, Rule>> terms) {
  return Rule(std::move(name), [terms = std::move(terms)](const Problem& a) {
    Allocation out{std::vector<Rational>(a.size(), Rational(0))};
    for (const auto& [weight, rule] : terms) out = out + weight(a.size()) * rule(a);
    return out;
  });
}

}  // namespace broadcast

#endif  // BROADCAST_RULE_HPP
