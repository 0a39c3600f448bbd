#include "lpp/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lpp/error.hpp"

namespace lpp {

IntMatrix::IntMatrix(std::size_t order) : order_(order), entries_(order * order) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != order_) throw std::invalid_argument("IntMatrix rows must form a square");
    std::size_t j = 0;
    for (long v : row) entries_[i * order_ + j++] = v;
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t order) {
  IntMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m.entries_[i * order + i] = 1;
  return m;
}

std::size_t IntMatrix::index(std::size_t i, std::size_t j) const {
  if (i >= order_ || j >= order_) {
    throw IndexOutOfRange("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                          ") outside order " + std::to_string(order_));
  }
  return i * order_ + j;
}

const Integer& IntMatrix::at(std::size_t i, std::size_t j) const { return entries_[index(i, j)]; }
Integer& IntMatrix::at(std::size_t i, std::size_t j) { return entries_[index(i, j)]; }

IntMatrix IntMatrix::principal(const std::vector<std::size_t>& keep) const {
  IntMatrix out(keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = 0; b < keep.size(); ++b) out.entries_[a * keep.size() + b] = at(keep[a], keep[b]);
  }
  return out;
}

IntMatrix IntMatrix::without(const std::vector<std::size_t>& drop) const {
  for (std::size_t d : drop) {
    if (d >= order_) throw IndexOutOfRange("cannot delete index " + std::to_string(d));
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < order_; ++i) {
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) keep.push_back(i);
  }
  return principal(keep);
}

Integer IntMatrix::trace() const {
  Integer t = 0;
  for (std::size_t i = 0; i < order_; ++i) t += entries_[i * order_ + i];
  return t;
}

IntMatrix IntMatrix::shifted_negation(const Integer& k) const {
  IntMatrix out(order_);
  for (std::size_t i = 0; i < order_ * order_; ++i) out.entries_[i] = -entries_[i];
  for (std::size_t i = 0; i < order_; ++i) out.entries_[i * order_ + i] += k;
  return out;
}

}  // namespace lpp
