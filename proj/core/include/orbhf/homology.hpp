#pragma once

#include <cstddef>

#include "orbhf/gf2.hpp"
#include "orbhf/structures.hpp"
#include "orbhf/tensor.hpp"

namespace orbhf {

bool verify_d_squared(const ChainComplex& c);

/// dim ker - dim im of the boundary, i.e. size - 2 * rank.
/// Throws NotAComplex when the boundary does not square to zero.
std::size_t homology_rank(const ChainComplex& c);

/// Cancels idempotent-labeled edges x -> y (x != y) one at a time, lowest edge
/// first, adding zig-zag edges w -> z labeled a * c^-1 * b for every w -a-> y
/// and x -b-> z, where c is the full x -> y coefficient. The result is homotopy
/// equivalent to the input and has no idempotent-labeled edges.
/// Throws InvalidStructure if the input fails check_type_d.
TypeDStructure edge_reduce(const TypeDStructure& d);

}  // namespace orbhf
