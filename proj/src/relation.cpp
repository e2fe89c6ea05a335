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

#include "gsc/relation.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "gsc/error.hpp"

namespace gsc {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

void check_index(std::size_t n, EventIdx e) {
  if (e >= n)
    throw ModelError("event index " + std::to_string(e) + " outside domain of size " +
                     std::to_string(n));
}

}  // namespace

// ---------------------------------------------------------------- EventSet

EventSet::EventSet(std::size_t n) : n_(n), words_(words_for(n), 0) {}

EventSet::EventSet(std::size_t n, std::initializer_list<EventIdx> members) : EventSet(n) {
  for (EventIdx e : members) insert(e);
}

EventSet EventSet::all(std::size_t n) {
  EventSet s(n);
  for (EventIdx e = 0; e < n; ++e) s.insert(e);
  return s;
}

bool EventSet::contains(EventIdx e) const {
  return e < n_ && ((words_[e / kWordBits] >> (e % kWordBits)) & 1U);
}

void EventSet::insert(EventIdx e) {
  check_index(n_, e);
  words_[e / kWordBits] |= std::uint64_t{1} << (e % kWordBits);
}

void EventSet::erase(EventIdx e) {
  check_index(n_, e);
  words_[e / kWordBits] &= ~(std::uint64_t{1} << (e % kWordBits));
}

bool EventSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t EventSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<EventIdx> EventSet::members() const {
  std::vector<EventIdx> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(static_cast<EventIdx>(i * kWordBits + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

EventSet EventSet::operator|(const EventSet& o) const {
  if (n_ != o.n_) throw ModelError("event set domain mismatch");
  EventSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
  return r;
}

EventSet EventSet::operator&(const EventSet& o) const {
  if (n_ != o.n_) throw ModelError("event set domain mismatch");
  EventSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
  return r;
}

EventSet EventSet::operator-(const EventSet& o) const {
  if (n_ != o.n_) throw ModelError("event set domain mismatch");
  EventSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
  return r;
}

// ---------------------------------------------------------------- Relation

Relation::Relation(std::size_t n) : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0) {}

Relation::Relation(std::size_t n, std::initializer_list<EventPair> pairs) : Relation(n) {
  for (auto [a, b] : pairs) insert(a, b);
}

Relation::Relation(std::size_t n, std::span<const EventPair> pairs) : Relation(n) {
  for (auto [a, b] : pairs) insert(a, b);
}

Relation Relation::identity(std::size_t n) {
  Relation r(n);
  for (EventIdx e = 0; e < n; ++e) r.insert(e, e);
  return r;
}

Relation Relation::identity_on(const EventSet& subset) {
  Relation r(subset.domain_size());
  for (EventIdx e : subset.members()) r.insert(e, e);
  return r;
}

Relation Relation::product(const EventSet& from, const EventSet& to) {
  if (from.domain_size() != to.domain_size()) throw ModelError("event set domain mismatch");
  Relation r(from.domain_size());
  for (EventIdx a : from.members())
    std::copy(to.words_.begin(), to.words_.end(), r.row(a));
  return r;
}

bool Relation::contains(EventIdx a, EventIdx b) const {
  if (a >= n_ || b >= n_) return false;
  return (row(a)[b / kWordBits] >> (b % kWordBits)) & 1U;
}

void Relation::insert(EventIdx a, EventIdx b) {
  check_index(n_, a);
  check_index(n_, b);
  row(a)[b / kWordBits] |= std::uint64_t{1} << (b % kWordBits);
}

void Relation::erase(EventIdx a, EventIdx b) {
  check_index(n_, a);
  check_index(n_, b);
  row(a)[b / kWordBits] &= ~(std::uint64_t{1} << (b % kWordBits));
}

bool Relation::empty() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Relation::count() const {
  std::size_t c = 0;
  for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<EventPair> Relation::pairs() const {
  std::vector<EventPair> out;
  for (EventIdx a = 0; a < n_; ++a) {
    const std::uint64_t* r = row(a);
    for (std::size_t i = 0; i < words_; ++i) {
      std::uint64_t w = r[i];
      while (w) {
        out.emplace_back(a, static_cast<EventIdx>(i * kWordBits + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }
  return out;
}

EventSet Relation::successors(EventIdx a) const {
  check_index(n_, a);
  EventSet s(n_);
  std::copy(row(a), row(a) + words_, s.words_.begin());
  return s;
}

EventSet Relation::predecessors(EventIdx b) const {
  check_index(n_, b);
  EventSet s(n_);
  for (EventIdx a = 0; a < n_; ++a)
    if (contains(a, b)) s.insert(a);
  return s;
}

void Relation::check_same_domain(const Relation& o) const {
  if (n_ != o.n_)
    throw ModelError("relation domain mismatch (" + std::to_string(n_) + " vs " +
                     std::to_string(o.n_) + ")");
}

Relation Relation::operator|(const Relation& o) const {
  Relation r = *this;
  r |= o;
  return r;
}

Relation& Relation::operator|=(const Relation& o) {
  check_same_domain(o);
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
  return *this;
}

Relation Relation::operator&(const Relation& o) const {
  check_same_domain(o);
  Relation r = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] &= o.bits_[i];
  return r;
}

Relation Relation::operator-(const Relation& o) const {
  check_same_domain(o);
  Relation r = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] &= ~o.bits_[i];
  return r;
}

bool Relation::subset_of(const Relation& o) const {
  check_same_domain(o);
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~o.bits_[i]) return false;
  return true;
}

Relation Relation::inverse() const {
  Relation r(n_);
  for (auto [a, b] : pairs()) r.insert(b, a);
  return r;
}

Relation Relation::restrict(const EventSet& from, const EventSet& to) const {
  return *this & product(from, to);
}

// -------------------------------------------------------------- TotalOrder

TotalOrder::TotalOrder(std::vector<EventIdx> sequence) : seq_(std::move(sequence)) {
  pos_.assign(seq_.size(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < seq_.size(); ++i) {
    EventIdx e = seq_[i];
    if (e >= seq_.size() || pos_[e] != std::numeric_limits<std::size_t>::max())
      throw ModelError("total order must list every event of the domain exactly once");
    pos_[e] = i;
  }
}

TotalOrder TotalOrder::natural(std::size_t n) {
  std::vector<EventIdx> seq(n);
  for (EventIdx e = 0; e < n; ++e) seq[e] = e;
  return TotalOrder(std::move(seq));
}

Relation TotalOrder::to_relation() const {
  Relation r(seq_.size());
  for (std::size_t i = 0; i < seq_.size(); ++i)
    for (std::size_t j = i + 1; j < seq_.size(); ++j) r.insert(seq_[i], seq_[j]);
  return r;
}

// --------------------------------------------------------------- algebra

Relation compose(const Relation& r, const Relation& s) {
  r.check_same_domain(s);
  Relation out(r.n_);
  for (EventIdx a = 0; a < r.n_; ++a) {
    const std::uint64_t* ra = r.row(a);
    std::uint64_t* oa = out.row(a);
    for (std::size_t i = 0; i < r.words_; ++i) {
      std::uint64_t w = ra[i];
      while (w) {
        auto b = static_cast<EventIdx>(i * kWordBits + std::countr_zero(w));
        const std::uint64_t* sb = s.row(b);
        for (std::size_t j = 0; j < s.words_; ++j) oa[j] |= sb[j];
        w &= w - 1;
      }
    }
  }
  return out;
}

Relation compose(std::initializer_list<const Relation*> chain) {
  if (chain.size() == 0) throw ModelError("empty composition chain");
  auto it = chain.begin();
  Relation acc = **it;
  for (++it; it != chain.end(); ++it) acc = compose(acc, **it);
  return acc;
}

Relation transitive_closure(const Relation& r) {
  Relation c = r;
  for (EventIdx k = 0; k < c.n_; ++k) {
    const std::uint64_t* rk = c.row(k);
    for (EventIdx i = 0; i < c.n_; ++i) {
      if (!c.contains(i, k)) continue;
      std::uint64_t* ri = c.row(i);
      for (std::size_t j = 0; j < c.words_; ++j) ri[j] |= rk[j];
    }
  }
  return c;
}

Relation reflexive_transitive_closure(const Relation& r) {
  return transitive_closure(r) | Relation::identity(r.domain_size());
}

Relation reflexive_over(const Relation& r, const EventSet& subset) {
  if (subset.domain_size() != r.domain_size()) throw ModelError("subset outside relation domain");
  return r | Relation::identity_on(subset);
}

Relation optional(const Relation& r) { return r | Relation::identity(r.domain_size()); }

bool is_irreflexive(const Relation& r) {
  for (EventIdx e = 0; e < r.domain_size(); ++e)
    if (r.contains(e, e)) return false;
  return true;
}

bool is_transitive(const Relation& r) { return compose(r, r).subset_of(r); }

bool is_acyclic(const Relation& r) { return is_irreflexive(transitive_closure(r)); }

bool is_strict_partial_order(const Relation& r) { return is_irreflexive(r) && is_transitive(r); }

bool is_total_order(const Relation& r) {
  if (!is_strict_partial_order(r)) return false;
  for (EventIdx a = 0; a < r.domain_size(); ++a)
    for (EventIdx b = a + 1; b < r.domain_size(); ++b)
      if (!r.contains(a, b) && !r.contains(b, a)) return false;
  return true;
}

bool is_interval_order(const Relation& r) {
  if (!is_strict_partial_order(r)) return false;
  const auto ps = r.pairs();
  for (auto [e1, e2] : ps)
    for (auto [f1, f2] : ps)
      if (!r.contains(e1, f2) && !r.contains(f1, e2)) return false;
  return true;
}

TotalOrder extend_to_total(const Relation& r, const TotalOrder& tie_break) {
  const std::size_t n = r.domain_size();
  if (tie_break.size() != n) throw ModelError("tie-break order does not cover the domain");
  std::vector<std::size_t> indeg(n, 0);
  for (auto [a, b] : r.pairs()) {
    if (a == b) throw ModelError("cycle detected: relation is reflexive at " + std::to_string(a));
    ++indeg[b];
  }
  std::vector<bool> placed(n, false);
  std::vector<EventIdx> out;
  out.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    EventIdx pick = 0;
    bool found = false;
    for (EventIdx cand : tie_break.sequence()) {
      if (!placed[cand] && indeg[cand] == 0) {
        pick = cand;
        found = true;
        break;
      }
    }
    if (!found) throw ModelError("cycle detected: relation cannot be extended to a total order");
    placed[pick] = true;
    out.push_back(pick);
    for (EventIdx b : r.successors(pick).members()) --indeg[b];
  }
  return TotalOrder(std::move(out));
}

TotalOrder extend_to_total(const Relation& r) {
  return extend_to_total(r, TotalOrder::natural(r.domain_size()));
}

namespace {

struct ExtensionWalker {
  std::size_t n;
  std::vector<EventSet> preds;
  const std::function<bool(const std::vector<EventIdx>&)>& visit;
  std::vector<EventIdx> prefix;
  EventSet placed;
  std::size_t visited = 0;
  bool stop = false;

  void run() {
    if (stop) return;
    if (prefix.size() == n) {
      ++visited;
      stop = visit(prefix);
      return;
    }
    for (EventIdx e = 0; e < n && !stop; ++e) {
      if (placed.contains(e)) continue;
      if (!(preds[e] - placed).empty()) continue;
      placed.insert(e);
      prefix.push_back(e);
      run();
      prefix.pop_back();
      placed.erase(e);
    }
  }
};

}  // namespace

std::size_t for_each_linear_extension(
    const Relation& r, const std::function<bool(const std::vector<EventIdx>&)>& visit) {
  const std::size_t n = r.domain_size();
  if (!is_acyclic(r)) return 0;
  ExtensionWalker w{n, {}, visit, {}, EventSet(n)};
  w.preds.reserve(n);
  for (EventIdx e = 0; e < n; ++e) w.preds.push_back(r.predecessors(e));
  w.prefix.reserve(n);
  w.run();
  return w.visited;
}

std::vector<EventIdx> find_chain(std::span<const Relation* const> chain, EventIdx a,
                                 EventIdx b) {
  if (chain.empty()) return {};
  const std::size_t n = chain.front()->domain_size();
  // reach[i] = nodes reachable from a after the first i steps.
  std::vector<EventSet> reach;
  EventSet cur(n, {a});
  reach.push_back(cur);
  for (const Relation* rel : chain) {
    EventSet next(n);
    for (EventIdx x : cur.members()) next = next | rel->successors(x);
    reach.push_back(next);
    cur = next;
  }
  if (!cur.contains(b)) return {};
  std::vector<EventIdx> path(chain.size() + 1);
  path.back() = b;
  for (std::size_t i = chain.size(); i > 0; --i) {
    EventIdx target = path[i];
    for (EventIdx x : reach[i - 1].members()) {
      if (chain[i - 1]->contains(x, target)) {
        path[i - 1] = x;
        break;
      }
    }
  }
  return path;
}

}  // namespace gsc
