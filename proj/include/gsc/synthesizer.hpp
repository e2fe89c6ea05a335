/*
 * Copyright (c) 2026, The gscbench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
*/

#ifndef GSC_SYNTHESIZER_HPP_
#define GSC_SYNTHESIZER_HPP_

#include <vector>

#include "gsc/model.hpp"
#include "gsc/protocol.hpp"
#include "gsc/semantics.hpp"

namespace gsc {

/// ar into EPush targets.
Relation ar_bar(const AbstractExecution& a);

/// e < f iff some pull e' with e so? e' would be forced to see an event
/// g' it must not see if f ran first.
Relation compute_lt(const AbstractExecution& a);
/// Same with an explicit set standing in for EPull.
Relation compute_lt(const AbstractExecution& a, const EventSet& epull);

/// Total extension of rt ∪ vis ∪ ar-bar ∪ <, used as the body order.
TotalOrder build_Q(const AbstractExecution& a);

struct PlanStep {
  /// Call, Body or Ret.
  TokenKind kind = TokenKind::Body;
  EventIdx event = 0;

  bool operator==(const PlanStep&) const = default;
};

struct SynthPlan {
  TotalOrder q;
  /// Calls and returns only, in the order of the greedy interleaving.
  std::vector<PlanStep> call_return;
  /// Calls, bodies and returns merged.
  std::vector<PlanStep> steps;
  /// Per event: events pushed right before its body, in ar order.
  std::vector<std::vector<EventIdx>> pushes_before;
  /// Per event: server log length its client must know before the body.
  std::vector<std::size_t> pull_to;
};

/// Orders calls, bodies and returns so that bodies follow q and a return
/// precedes a call exactly when the two events are rt-ordered.
SynthPlan interleave_calls_returns(const History& h, const TotalOrder& q);

/// Protocol schedule whose replay yields the history, vis and ar of a.
/// The replay is checked; a mismatch throws InvariantViolation.
Schedule synthesize_schedule(const AbstractExecution& a, const ObjectSemantics& sem,
                             SynthPlan* plan_out = nullptr);

}  // namespace gsc

#endif  // GSC_SYNTHESIZER_HPP_
