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

#ifndef BROADCAST_BROADCAST_HPP
#define BROADCAST_BROADCAST_HPP

#include "broadcast/axioms.hpp"
#include "broadcast/characterize.hpp"
#include "broadcast/counterexamples.hpp"
#include "broadcast/error.hpp"
#include "broadcast/families.hpp"
#include "broadcast/generator.hpp"
#include "broadcast/hypotheses.hpp"
#include "broadcast/problem.hpp"
#include "broadcast/rational.hpp"
#include "broadcast/rule.hpp"
#include "broadcast/rules.hpp"
#include "broadcast/search.hpp"

#endif  // BROADCAST_BROADCAST_HPP
