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

#ifndef GSC_SEMANTICS_HPP_
#define GSC_SEMANTICS_HPP_

#include <span>
#include <string_view>

#include "gsc/model.hpp"

namespace gsc {

/// Sequential specification of an object type.
class ObjectSemantics {
 public:
  virtual ~ObjectSemantics() = default;

  virtual std::string_view name() const = 0;
  /// eval(ctx, op). Throws ModelError on an operation the type does not know.
  virtual Value eval(std::span<const Op> ctx, const Op& op) const = 0;
  virtual bool has_classify() const { return true; }
  /// True for operations that change state.
  virtual bool is_update(const Op& op) const = 0;
  /// Whether return values of `h` pin down each event's visible updates.
  virtual bool rval_determines_visibility(const History& h) const = 0;
  virtual void check_op(const Op& op) const = 0;
};

/// The append/read sequence object.
class SequenceSemantics final : public ObjectSemantics {
 public:
  std::string_view name() const override { return "sequence"; }
  Value eval(std::span<const Op> ctx, const Op& op) const override;
  bool is_update(const Op& op) const override;
  /// Holds when every operation is an append or read and append values are
  /// pairwise distinct per object.
  bool rval_determines_visibility(const History& h) const override;
  void check_op(const Op& op) const override;
};

/// Last-writer-wins register: write(v) returns unit, read returns the
/// most recent write or unit when there is none.
class RegisterSemantics final : public ObjectSemantics {
 public:
  std::string_view name() const override { return "register"; }
  Value eval(std::span<const Op> ctx, const Op& op) const override;
  bool is_update(const Op& op) const override;
  bool rval_determines_visibility(const History&) const override { return false; }
  void check_op(const Op& op) const override;
};

const ObjectSemantics& sequence_semantics();
const ObjectSemantics& register_semantics();
const ObjectSemantics& semantics_by_name(std::string_view name);

Value eval_sequence(std::span<const Op> ctx, const Op& op);

}  // namespace gsc

#endif  // GSC_SEMANTICS_HPP_
