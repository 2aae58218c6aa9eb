#ifndef THEOREMS_CLOSED_FORM_HPP
#define THEOREMS_CLOSED_FORM_HPP

#include <cstdint>

#include "groupkit/abelian.hpp"

namespace theorems {

/// Invariant factors of the level-N truncated Appell group over F2:
/// one factor 2^(1 + floor(log2(N/m))) per odd m <= N.
groupkit::AbelianType appell_invariant_factors(std::uint64_t table_index);

/// Order of the generator (1 + t^m, t) at level N: 2^(1 + floor(log2(N/m)));
/// only odd m generate.
std::uint64_t appell_generator_order(std::uint64_t table_index, std::uint64_t m);

/// Lower central quotient of the full group: {4,2,2,2} for i = 1,
/// (Z2)^4 for even i, (Z2)^6 for odd i > 1.
groupkit::AbelianType lcs_quotient_prediction(std::size_t i);

}  // namespace theorems

#endif
