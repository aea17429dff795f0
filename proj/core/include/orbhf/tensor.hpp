#pragma once

// Box tensor products over the torus algebra.

#include <string>
#include <utility>
#include <vector>

#include "orbhf/gf2.hpp"
#include "orbhf/structures.hpp"

namespace orbhf {

/// GF(2) chain complex. Column j of `boundary` is the boundary of generator j.
struct ChainComplex {
    std::vector<std::string> names;
    // (left factor index, right factor index) each generator came from.
    std::vector<std::pair<GenIndex, GenIndex>> provenance;
    Gf2Matrix boundary;

    std::size_t size() const { return names.size(); }
};

/// A (x) D. Generators y(x)x with matching idempotents, A-major order.
/// Paths in D are cut at length max(max_arity(A), 2) - 1, past which every
/// term is annihilated, so cyclic (unbounded) D factors are fine.
ChainComplex box_a_d(const TypeAStructure& a, const TypeDStructure& d);

/// A (x) DA, a type A structure. Generators y(x)x with y.idem equal to the
/// left idempotent of x; the product carries the right idempotent of x.
TypeAStructure box_a_da(const TypeAStructure& a, const TypeDAStructure& da);

/// DA (x) D, a type D structure. Generators x(x)d with the right idempotent
/// of x equal to d.idem; the product carries the left idempotent of x.
TypeDStructure box_da_d(const TypeDAStructure& da, const TypeDStructure& d);

/// Name of a tensor generator.
std::string pair_name(const std::string& left, const std::string& right);

}  // namespace orbhf
