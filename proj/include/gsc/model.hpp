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

#ifndef GSC_MODEL_HPP_
#define GSC_MODEL_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gsc/relation.hpp"

namespace gsc {

enum class OpKind { Append, Write, Read };

/// An operation descriptor. Append and Write carry a value, Read does not.
struct Op {
  OpKind kind = OpKind::Read;
  std::optional<std::int64_t> value;

  static Op append(std::int64_t v) { return {OpKind::Append, v}; }
  static Op write(std::int64_t v) { return {OpKind::Write, v}; }
  static Op read() { return {OpKind::Read, std::nullopt}; }

  bool operator==(const Op&) const = default;
  auto operator<=>(const Op&) const = default;
};

/// Return values: unit, a single integer or a sequence of integers.
using Value = std::variant<std::monostate, std::int64_t, std::vector<std::int64_t>>;

inline Value unit() { return std::monostate{}; }
inline Value seq(std::vector<std::int64_t> xs) { return xs; }

struct Fences {
  bool push = false;
  bool pull = false;

  static Fences none() { return {}; }
  static Fences both() { return {true, true}; }

  Fences operator|(Fences o) const { return {push || o.push, pull || o.pull}; }
  bool operator==(const Fences&) const = default;
  auto operator<=>(const Fences&) const = default;
};

enum class FenceKind { Push, Pull };

struct Event {
  std::string id;
  std::string client;
  std::string obj;
  Op op;
  Value rval;
  Fences fences;

  bool operator==(const Event&) const = default;
};

struct Interval {
  double start = 0;
  double end = 0;
};

/// (E, so, rt). Events are addressed by their position in `events`;
/// `sessions` lists each client's events in session order.
struct History {
  std::vector<Event> events;
  std::map<std::string, std::vector<EventIdx>> sessions;
  Relation rt;
  /// Present when rt was authored as intervals; kept only for emission.
  std::optional<std::vector<Interval>> intervals;

  std::size_t size() const { return events.size(); }
  const Event& operator[](EventIdx e) const { return events[e]; }

  Relation so() const;
  EventSet epush() const;
  EventSet epull() const;
  EventSet on_object(std::string_view obj) const;
  /// Pairs of events on the same object.
  Relation same_object() const;
  std::optional<EventIdx> find(std::string_view id) const;
  EventIdx index_of(std::string_view id) const;
  std::vector<std::string> objects() const;
};

/// Builds a history from events (already carrying ids and clients) whose
/// session order is the order of appearance in `events`.
History make_history(std::vector<Event> events, const Relation& rt);
History make_history(std::vector<Event> events, const std::vector<Interval>& intervals);

/// ((E, so, rt), vis, ar).
struct AbstractExecution {
  History history;
  Relation vis;
  TotalOrder ar;
};

/// Empty list iff `h` is a well-formed history.
std::vector<std::string> validate_history(const History& h);

/// e rt f iff end(e) < start(f).
Relation rt_from_intervals(const std::vector<Interval>& intervals);

/// Structural checks on an execution: vis inside the domain, ar total,
/// vis acyclic and vis contained in ar.
std::vector<std::string> validate_execution(const AbstractExecution& a);

/// The sub-history of events on object `x`, with indices renumbered in
/// increasing order of the original indices.
History project(const History& h, std::string_view x);
/// Original indices of the events kept by project(h, x).
std::vector<EventIdx> projection_map(const History& h, std::string_view x);

History mk_fence_transform(const History& h, FenceKind target);
History erase_fences(const History& h);
History with_fences(const History& h, const std::vector<Fences>& fences);

enum class Model { Gsc, Gsp, Tso, DualTso, Osc, Lin };

Model parse_model(std::string_view name);
std::string_view model_name(Model m);

class ObjectSemantics;

/// True iff every event's fences include what `m` mandates.
bool check_fence_preset(const History& h, Model m, const ObjectSemantics& sem);
/// Adds (or for gsp, clears) fences so that check_fence_preset holds.
History apply_fence_preset(const History& h, Model m, const ObjectSemantics& sem);

struct WellFencedResult {
  bool ok = true;
  std::optional<EventPair> witness;
};

WellFencedResult is_well_fenced(const History& h);

/// Key identifying a history up to renaming of event ids: events ordered
/// by (client, session position) with fields, plus rt over that order.
std::string canonical_key(const History& h);

/// Equality of histories matched by event id: same events, sessions and rt.
bool same_history(const History& a, const History& b, std::string* why = nullptr);

std::string to_string(const Op& op);
std::string to_string(const Value& v);
std::string to_string(Fences f);
std::string describe(const Event& e);

}  // namespace gsc

#endif  // GSC_MODEL_HPP_
