#include "theorems/closed_form.hpp"

#include <bit>
#include <stdexcept>

namespace theorems {

namespace {
std::uint64_t floor_log2(std::uint64_t v) { return std::bit_width(v) - 1; }
}  // namespace

groupkit::AbelianType appell_invariant_factors(std::uint64_t table_index) {
  if (table_index < 1) throw std::invalid_argument("table index must be >= 1");
  groupkit::AbelianType type;  // orders shrink as m grows, so already non-increasing
  for (std::uint64_t m = 1; m <= table_index; m += 2)
    type.factors.push_back(appell_generator_order(table_index, m));
  return type;
}

std::uint64_t appell_generator_order(std::uint64_t table_index, std::uint64_t m) {
  if (m % 2 == 0) throw std::invalid_argument("generators are odd-indexed");
  if (m < 1 || m > table_index) throw std::invalid_argument("generator index out of range");
  return std::uint64_t{1} << (1 + floor_log2(table_index / m));
}

groupkit::AbelianType lcs_quotient_prediction(std::size_t i) {
  if (i < 1) throw std::invalid_argument("quotient index must be >= 1");
  if (i == 1) return groupkit::AbelianType{{4, 2, 2, 2}};
  if (i % 2 == 0) return groupkit::AbelianType{{2, 2, 2, 2}};
  return groupkit::AbelianType{{2, 2, 2, 2, 2, 2}};
}

}  // namespace theorems
