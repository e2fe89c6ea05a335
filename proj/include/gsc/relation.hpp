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

#ifndef GSC_RELATION_HPP_
#define GSC_RELATION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace gsc {

/// Dense index of an event inside one history. Relations are always
/// interpreted over the domain {0, ..., n-1} of their owning history.
using EventIdx = std::uint32_t;
using EventPair = std::pair<EventIdx, EventIdx>;

/// A subset of a finite event domain, stored as a bit vector.
class EventSet {
 public:
  EventSet() = default;
  explicit EventSet(std::size_t n);
  EventSet(std::size_t n, std::initializer_list<EventIdx> members);

  static EventSet all(std::size_t n);

  std::size_t domain_size() const { return n_; }
  bool contains(EventIdx e) const;
  void insert(EventIdx e);
  void erase(EventIdx e);
  bool empty() const;
  std::size_t count() const;
  std::vector<EventIdx> members() const;

  EventSet operator|(const EventSet& o) const;
  EventSet operator&(const EventSet& o) const;
  EventSet operator-(const EventSet& o) const;
  bool operator==(const EventSet& o) const = default;

 private:
  friend class Relation;
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A finite binary relation over {0, ..., n-1}, stored as a bit matrix.
/// Strictness, transitivity and the like are checked, never assumed.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n);
  Relation(std::size_t n, std::initializer_list<EventPair> pairs);
  Relation(std::size_t n, std::span<const EventPair> pairs);

  static Relation identity(std::size_t n);
  /// Identity restricted to `subset`, written <E0> in relational algebra.
  static Relation identity_on(const EventSet& subset);
  /// The cross product `from` x `to`.
  static Relation product(const EventSet& from, const EventSet& to);

  std::size_t domain_size() const { return n_; }
  bool contains(EventIdx a, EventIdx b) const;
  void insert(EventIdx a, EventIdx b);
  void erase(EventIdx a, EventIdx b);
  bool empty() const;
  std::size_t count() const;

  /// All pairs, sorted lexicographically.
  std::vector<EventPair> pairs() const;
  EventSet successors(EventIdx a) const;
  EventSet predecessors(EventIdx b) const;

  Relation operator|(const Relation& o) const;
  Relation operator&(const Relation& o) const;
  Relation operator-(const Relation& o) const;
  Relation& operator|=(const Relation& o);
  bool operator==(const Relation& o) const = default;

  bool subset_of(const Relation& o) const;
  Relation inverse() const;
  /// Restriction to pairs whose source is in `from` and target in `to`.
  Relation restrict(const EventSet& from, const EventSet& to) const;

 private:
  void check_same_domain(const Relation& o) const;
  const std::uint64_t* row(EventIdx a) const { return bits_.data() + a * words_; }
  std::uint64_t* row(EventIdx a) { return bits_.data() + a * words_; }

  friend Relation compose(const Relation& r, const Relation& s);
  friend Relation transitive_closure(const Relation& r);

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// A strict total order presented as the sequence of its elements.
class TotalOrder {
 public:
  TotalOrder() = default;
  explicit TotalOrder(std::vector<EventIdx> sequence);

  /// 0, 1, ..., n-1.
  static TotalOrder natural(std::size_t n);

  const std::vector<EventIdx>& sequence() const { return seq_; }
  std::size_t size() const { return seq_.size(); }
  std::size_t position(EventIdx e) const { return pos_.at(e); }
  bool before(EventIdx a, EventIdx b) const { return pos_.at(a) < pos_.at(b); }
  Relation to_relation() const;
  bool operator==(const TotalOrder& o) const { return seq_ == o.seq_; }

 private:
  std::vector<EventIdx> seq_;
  std::vector<std::size_t> pos_;
};

/// r ; s = {(a, c) | exists b. (a, b) in r and (b, c) in s}.
Relation compose(const Relation& r, const Relation& s);
Relation compose(std::initializer_list<const Relation*> chain);
Relation transitive_closure(const Relation& r);
/// r* = r+ union Id.
Relation reflexive_transitive_closure(const Relation& r);
Relation reflexive_over(const Relation& r, const EventSet& subset);
/// r? = r union Id over the whole domain.
Relation optional(const Relation& r);

bool is_irreflexive(const Relation& r);
bool is_transitive(const Relation& r);
bool is_acyclic(const Relation& r);
bool is_strict_partial_order(const Relation& r);
bool is_total_order(const Relation& r);
bool is_interval_order(const Relation& r);

/// Total order containing `r`. Among all valid orders returns the one whose
/// sequence is lexicographically least with respect to `tie_break` ranks.
/// Throws ModelError if `r` has a cycle.
TotalOrder extend_to_total(const Relation& r, const TotalOrder& tie_break);
TotalOrder extend_to_total(const Relation& r);

/// Visits linear extensions of the acyclic relation `r` in lexicographic
/// order of event indices. The visitor returns true to stop early.
/// Returns the number of extensions visited.
std::size_t for_each_linear_extension(
    const Relation& r,
    const std::function<bool(const std::vector<EventIdx>&)>& visit);

/// Intermediate nodes of one path a -R1-> x1 -R2-> ... -Rk-> b, if any.
/// The result includes both endpoints.
std::vector<EventIdx> find_chain(std::span<const Relation* const> chain,
                                 EventIdx a, EventIdx b);

}  // namespace gsc

#endif  // GSC_RELATION_HPP_
