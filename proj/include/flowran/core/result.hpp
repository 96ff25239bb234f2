// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <utility>
#include <variant>

namespace flowran {

/// Value-or-error return for protocol-level rejections.
template <typename T, typename E>
class Result {
 public:
  Result(T value) : v_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  static Result failure(E e) { return Result(std::in_place_index<1>, std::move(e)); }

  [[nodiscard]] bool ok() const noexcept { return v_.index() == 0; }
  explicit operator bool() const noexcept { return ok(); }

  [[nodiscard]] const T& value() const {
    if (!ok()) throw std::logic_error("Result holds an error");
    return std::get<0>(v_);
  }
  [[nodiscard]] const E& error() const {
    if (ok()) throw std::logic_error("Result holds a value");
    return std::get<1>(v_);
  }

 private:
  template <std::size_t I, typename U>
  Result(std::in_place_index_t<I> tag, U&& u) : v_(tag, std::forward<U>(u)) {}
  std::variant<T, E> v_;
};

}  // namespace flowran
