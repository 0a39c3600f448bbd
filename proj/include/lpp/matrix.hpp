#pragma once

#include <cstddef>
#include <vector>

#include "lpp/algebra.hpp"

namespace lpp {

// Dense square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t order);
  // Throws std::invalid_argument for ragged or non-square input.
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t order);

  std::size_t order() const noexcept { return order_; }

  // Bounds-checked; throws IndexOutOfRange.
  const Integer& at(std::size_t i, std::size_t j) const;
  Integer& at(std::size_t i, std::size_t j);

  // Principal submatrix keeping the listed indices (in the given order).
  IntMatrix principal(const std::vector<std::size_t>& keep) const;
  // Principal submatrix with the listed indices removed.
  IntMatrix without(const std::vector<std::size_t>& drop) const;

  Integer trace() const;
  // k*I - M
  IntMatrix shifted_negation(const Integer& k) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const;
  std::size_t order_ = 0;
  std::vector<Integer> entries_;
};

}  // namespace lpp
