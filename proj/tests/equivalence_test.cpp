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


#include <gtest/gtest.h>

#include "gsc/axioms.hpp"
#include "gsc/equivalence.hpp"
#include "gsc/error.hpp"
#include "gsc/fixtures.hpp"
#include "gsc/generate.hpp"
#include "gsc/protocol.hpp"
#include "gsc/semantics.hpp"
#include "test_util.hpp"

namespace gsc {
namespace {

using test::ev;
using test::id_pairs;

const ObjectSemantics& S = sequence_semantics();

TEST(ToDualTso, Fig3a) {
  const AbstractExecution a = *fixture("fig3a").witness;
  const AbstractExecution d = to_dual_tso(a, S);
  for (const Event& e : d.history.events) EXPECT_EQ(e.fences, (Fences{true, false}));
  EXPECT_EQ(d.history.rt, a.ar.to_relation());
  EXPECT_EQ(d.vis, a.vis);
  EXPECT_TRUE(check_axioms(d, S).all_pass());
}

TEST(ToDualTso, EmptyAndFenced) {
  const History empty = make_history({}, Relation(0));
  EXPECT_EQ(to_dual_tso(AbstractExecution{empty, Relation(0), TotalOrder()}, S).history.size(), 0u);
  AbstractExecution a = *fixture("fig3a").witness;
  a.history = mk_fence_transform(a.history, FenceKind::Pull);
  EXPECT_THROW(to_dual_tso(a, S), ModelError);
  EXPECT_THROW(to_tso(a, S), ModelError);
}

TEST(ToTso, Examples) {
  for (const char* name : {"fig3a", "fig3b", "fig3c"}) {
    const AbstractExecution t = to_tso(*fixture(name).witness, S);
    for (const Event& e : t.history.events) EXPECT_EQ(e.fences, (Fences{false, true}));
    EXPECT_TRUE(is_total_order(t.history.rt)) << name;
    EXPECT_TRUE(check_axioms(t, S).all_pass()) << name;
    EXPECT_TRUE(is_gsc(t.history, S).member) << name;
  }
  History h = make_history({ev("a", "A", "x", Op::append(1)), ev("b", "A", "x", Op::read(), seq({1}))},
                           {{0, 1}, {2, 3}});
  const AbstractExecution t = to_tso(AbstractExecution{h, h.so(), TotalOrder::natural(2)}, S);
  EXPECT_EQ(t.history.rt, h.so());
}

TEST(EraseFences, Examples) {
  const History h = fig3a();
  EXPECT_TRUE(same_history(erase_fences(mk_fence_transform(h, FenceKind::Push)), h));
  EXPECT_TRUE(same_history(erase_fences(h), h));
  const History pulled = set_fences(h, {{"f2", Fences{false, true}}});
  EXPECT_FALSE(is_gsc(pulled, S).member);
  EXPECT_TRUE(is_gsc(erase_fences(pulled), S).member);
}

TEST(Strictness, FixedRealTime) {
  EXPECT_TRUE(is_gsc(mk_fence_transform(fig3a(), FenceKind::Push), S).member);
  EXPECT_FALSE(is_gsc(mk_fence_transform(fig3a(), FenceKind::Pull), S).member);
  EXPECT_TRUE(is_gsc(mk_fence_transform(fig3b(), FenceKind::Pull), S).member);
  EXPECT_FALSE(is_gsc(mk_fence_transform(fig3b(), FenceKind::Push), S).member);
}

TEST(EquivalenceProperty, FenceFreeExecutions) {
  Rng rng(53);
  RandomProgramOptions po;
  po.p_push = 0;
  po.p_pull = 0;
  po.clients = 3;
  for (int i = 0; i < 300; ++i) {
    const AbstractExecution a = extract_execution(random_run(random_program(po, rng), S, rng));
    const AbstractExecution d = to_dual_tso(a, S);
    const AbstractExecution t = to_tso(a, S);
    ASSERT_TRUE(check_axioms(d, S).all_pass());
    ASSERT_TRUE(check_axioms(t, S).all_pass());
    ASSERT_TRUE(is_gsc(erase_fences(d.history), S).member);
    ASSERT_TRUE(is_gsc(erase_fences(t.history), S).member);
  }
}

}  // namespace
}  // namespace gsc
