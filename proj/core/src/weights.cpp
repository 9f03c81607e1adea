#include "whanoi/weights.hpp"

#include <memory>
#include <stdexcept>
#include <string>

namespace whanoi {

WeightTable::WeightTable(Fn fn, std::optional<std::size_t> max_disc)
    : fn_(std::move(fn)), max_disc_(max_disc) {
  if (!fn_) {
    throw std::invalid_argument("weight table needs a cost function");
  }
}

WeightTable WeightTable::constant(const WeightRow& row) {
  return WeightTable([row](std::size_t, Peg idle) { return row[idle.index()]; });
}

WeightTable WeightTable::from_rows(std::vector<WeightRow> rows) {
  auto shared = std::make_shared<const std::vector<WeightRow>>(std::move(rows));
  const auto size = shared->size();
  return WeightTable([shared](std::size_t disc, Peg idle) { return (*shared)[disc][idle.index()]; }, size);
}

Cost WeightTable::at(std::size_t disc, Peg idle) const {
  if (max_disc_ && disc >= *max_disc_) {
    throw std::out_of_range("weight table has no row for disc index " + std::to_string(disc));
  }
  return fn_(disc, idle);
}

WeightRow WeightTable::row(std::size_t disc) const {
  return {at(disc, Peg{0}), at(disc, Peg{1}), at(disc, Peg{2})};
}

std::vector<WeightRow> WeightTable::rows(std::size_t count) const {
  std::vector<WeightRow> out;
  out.reserve(count);
  for (std::size_t disc = 0; disc < count; ++disc) out.push_back(row(disc));
  return out;
}

WeightTable WeightTable::swapped_outer() const {
  return WeightTable([inner = *this](std::size_t disc, Peg idle) {
    return inner.at(disc, Peg{idle.index() == 1 ? 1 : 2 - idle.index()});
  }, max_disc_);
}

}  // namespace whanoi
