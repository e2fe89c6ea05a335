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

#ifndef GSC_AXIOMS_HPP_
#define GSC_AXIOMS_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gsc/model.hpp"
#include "gsc/semantics.hpp"

namespace gsc {

enum class Axiom {
  RetVal,
  Ryw,
  MonotonicView,
  ObservedVis,
  PushedVis,
  ObservedAr,
  PushedAr,
  Eventual,
};

inline constexpr std::array<Axiom, 8> kAllAxioms = {
    Axiom::RetVal,    Axiom::Ryw,        Axiom::MonotonicView, Axiom::ObservedVis,
    Axiom::PushedVis, Axiom::ObservedAr, Axiom::PushedAr,      Axiom::Eventual};

std::string_view axiom_name(Axiom a);

struct AxiomVerdict {
  Axiom axiom = Axiom::RetVal;
  bool ok = true;
  bool vacuous = false;
  /// Events instantiating the violated formula, in formula order.
  std::vector<EventIdx> counterexample;
  std::string detail;
};

struct AxiomReport {
  /// Non-empty when the execution was rejected before axiom evaluation.
  std::vector<std::string> structural;
  std::vector<AxiomVerdict> verdicts;

  bool all_pass() const;
  const AxiomVerdict& at(Axiom a) const;
  std::string summary(const History& h) const;
};

/// Same-object vis-predecessors of e in ar order.
std::vector<Op> ctxt(const AbstractExecution& a, EventIdx e);

AxiomReport check_axioms(const AbstractExecution& a, const ObjectSemantics& sem);

/// What a sequence read's return value forces on vis and ar.
struct ForcedVisibility {
  bool satisfiable = true;
  /// Same-object updates that must be visible.
  std::vector<EventIdx> visible;
  /// Pairs that must be ordered by ar, e.g. append(v1) before append(v2).
  std::vector<EventPair> order;
  std::string reason;
};

ForcedVisibility forced_visibility(const History& h, EventIdx e, const ObjectSemantics& sem);

enum class VisRule : std::uint8_t { None, Seed, Ryw, MonotonicView, ObservedVis, PushedVis };

std::string_view vis_rule_name(VisRule r);

struct MinimalVis {
  Relation vis;
  bool conflict = false;
  /// First pair of vis outside ar when `conflict` is set.
  std::optional<EventPair> escape;
  /// Rule that introduced each pair, row-major n x n.
  std::vector<VisRule> rule;
  /// For derived pairs, the vis pair the derivation started from.
  std::vector<std::optional<EventPair>> parent;

  VisRule rule_of(EventIdx a, EventIdx b) const { return rule[a * vis.domain_size() + b]; }
  /// Human-readable derivation of (a, b).
  std::string explain(const History& h, EventIdx a, EventIdx b) const;
};

/// Least relation containing seed and so closed under RYW, MONOTONICVIEW,
/// OBSERVEDVIS and PUSHEDVIS for the given ar.
MinimalVis minimal_vis(const History& h, const TotalOrder& ar, const Relation& seed);

enum class SearchPath { Auto, Fast, Slow };

struct GscOptions {
  std::size_t max_events = 9;
  SearchPath path = SearchPath::Auto;
  /// Maximum narrative lines kept for a refutation.
  std::size_t narrative_limit = 6;
};

struct SearchStats {
  bool fast_path = false;
  std::size_t arbitrations = 0;
  std::size_t pruned = 0;
  std::size_t seeds = 0;
};

struct MembershipResult {
  bool member = false;
  std::optional<AbstractExecution> witness;
  SearchStats stats;
  std::vector<std::string> refutation;
};

/// Decides whether some vis, ar make `h` an execution satisfying every axiom.
MembershipResult is_gsc(const History& h, const ObjectSemantics& sem,
                        const GscOptions& opts = {});

}  // namespace gsc

#endif  // GSC_AXIOMS_HPP_
