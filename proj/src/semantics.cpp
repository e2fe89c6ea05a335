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

#include "gsc/semantics.hpp"

#include <set>
#include <utility>

#include "gsc/error.hpp"

namespace gsc {

Value eval_sequence(std::span<const Op> ctx, const Op& op) {
  switch (op.kind) {
    case OpKind::Append:
      return unit();
    case OpKind::Read: {
      std::vector<std::int64_t> xs;
      for (const Op& o : ctx)
        if (o.kind == OpKind::Append) xs.push_back(*o.value);
      return xs;
    }
    default:
      throw ModelError("sequence object does not support " + to_string(op));
  }
}

Value SequenceSemantics::eval(std::span<const Op> ctx, const Op& op) const {
  return eval_sequence(ctx, op);
}

bool SequenceSemantics::is_update(const Op& op) const {
  check_op(op);
  return op.kind == OpKind::Append;
}

void SequenceSemantics::check_op(const Op& op) const {
  if (op.kind == OpKind::Write) throw ModelError("sequence object does not support write");
}

bool SequenceSemantics::rval_determines_visibility(const History& h) const {
  std::set<std::pair<std::string, std::int64_t>> seen;
  for (const Event& e : h.events) {
    if (e.op.kind == OpKind::Write) return false;
    if (e.op.kind == OpKind::Append && !seen.emplace(e.obj, *e.op.value).second) return false;
  }
  return true;
}

Value RegisterSemantics::eval(std::span<const Op> ctx, const Op& op) const {
  switch (op.kind) {
    case OpKind::Write:
      return unit();
    case OpKind::Read: {
      Value last = unit();
      for (const Op& o : ctx)
        if (o.kind == OpKind::Write) last = *o.value;
      return last;
    }
    default:
      throw ModelError("register does not support " + to_string(op));
  }
}

bool RegisterSemantics::is_update(const Op& op) const {
  check_op(op);
  return op.kind == OpKind::Write;
}

void RegisterSemantics::check_op(const Op& op) const {
  if (op.kind == OpKind::Append) throw ModelError("register does not support append");
}

const ObjectSemantics& sequence_semantics() {
  static const SequenceSemantics s;
  return s;
}

const ObjectSemantics& register_semantics() {
  static const RegisterSemantics s;
  return s;
}

const ObjectSemantics& semantics_by_name(std::string_view name) {
  if (name == "sequence") return sequence_semantics();
  if (name == "register") return register_semantics();
  throw ModelError("unknown semantics '" + std::string(name) + "'");
}

}  // namespace gsc
