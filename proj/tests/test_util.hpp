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


#ifndef GSC_TESTS_TEST_UTIL_HPP_
#define GSC_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gsc/axioms.hpp"
#include "gsc/model.hpp"
#include "gsc/semantics.hpp"

namespace gsc::test {

using IdPairs = std::set<std::pair<std::string, std::string>>;

inline IdPairs id_pairs(const History& h, const Relation& r) {
  IdPairs out;
  for (auto [a, b] : r.pairs()) out.insert({h[a].id, h[b].id});
  return out;
}

inline Relation rel(const History& h, const IdPairs& ps) {
  Relation r(h.size());
  for (const auto& [a, b] : ps) r.insert(h.index_of(a), h.index_of(b));
  return r;
}

inline TotalOrder order(const History& h, const std::vector<std::string>& ids) {
  std::vector<EventIdx> seq;
  for (const auto& id : ids) seq.push_back(h.index_of(id));
  return TotalOrder(std::move(seq));
}

inline std::vector<std::string> ids_of(const History& h, const TotalOrder& o) {
  std::vector<std::string> out;
  for (EventIdx e : o.sequence()) out.push_back(h[e].id);
  return out;
}

inline Event ev(std::string id, std::string client, std::string obj, Op op, Value rval = unit(),
                Fences f = {}) {
  return Event{std::move(id), std::move(client), std::move(obj), op, std::move(rval), f};
}

/// Membership by trying every ar and every vis inside ar. Independent of
/// the search in is_gsc; only usable for a handful of events.
inline bool brute_force_member(const History& h, const ObjectSemantics& sem) {
  const std::size_t n = h.size();
  std::vector<EventIdx> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    TotalOrder ar(perm);
    std::vector<EventPair> slots;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) slots.push_back({perm[i], perm[j]});
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      Relation vis(n);
      for (std::size_t k = 0; k < slots.size(); ++k)
        if (mask >> k & 1) vis.insert(slots[k].first, slots[k].second);
      if (check_axioms(AbstractExecution{h, vis, ar}, sem).all_pass()) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace gsc::test

#endif  // GSC_TESTS_TEST_UTIL_HPP_
