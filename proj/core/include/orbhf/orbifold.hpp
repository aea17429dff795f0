#pragma once

// Orbifold constructions on type A structures: indexed copies whose copy
// index advances once per rho3, rho23 or rho123 input, the cyclic type D
// structure of an orbifold solid torus, and the iterated rank pipeline.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "orbhf/structures.hpp"
#include "orbhf/tensor.hpp"

namespace orbhf {

/// Cyclic singularity orders n_1..n_N, each >= 1, N >= 1.
class OrbifoldOrders {
public:
    explicit OrbifoldOrders(std::vector<int> orders);

    std::span<const int> values() const { return orders_; }
    std::size_t count() const { return orders_.size(); }
    int product() const;

private:
    std::vector<int> orders_;
};

/// Copy index (y : copy) of an indexed generator, copy in 1..n.
struct IndexedGenerator {
    GenIndex base = 0;
    int copy = 1;
};

/// n if n divides j, otherwise j mod n. Result lies in 1..n.
int bracket(long long j, int n);

/// Generator index of (y : copy) inside an n-fold extension.
inline GenIndex indexed(GenIndex base, int copy, int n) {
    return base * static_cast<std::size_t>(n) + static_cast<std::size_t>(copy - 1);
}
IndexedGenerator unindex(GenIndex g, int n);

std::string indexed_name(const std::string& base, int copy);

/// n generators x_1..x_n in idempotent i2 with edges x_j -> x_{j+1}
/// (cyclically) labeled rho23. n = 1 is the solid torus self-loop.
TypeDStructure d_n(int n);

/// n copies of `a`; entry (y, w) -> z becomes ((y:j), w) -> (z : [j + shifts(w)]).
/// Throws InvalidStructure unless `a` satisfies the A-infinity relations.
TypeAStructure orb_extend(const TypeAStructure& a, int n);

/// Copy-and-shift without the validity check on the input.
TypeAStructure shift_copies(const TypeAStructure& a, int n);

struct Lemma42Witness {
    // T((y:j) (x) x) = y (x) x_j, as a map from generators of
    // orb_extend(a, n) (x) d_n(1) to generators of a (x) d_n(n).
    std::vector<std::size_t> map;
    bool intertwines = false;
};

/// Builds both complexes and checks that T is a bijection commuting with the
/// boundaries entrywise.
Lemma42Witness lemma42_witness(const TypeAStructure& a, int n);

/// box_a_da followed by copy-and-shift, the shift read off the outer inputs.
TypeAStructure orb_extend_box_da(const TypeAStructure& a, const TypeDAStructure& da, int n);

/// Component-wise copy-and-shift of a morphism of type A structures.
MorphismA shift_morphism(const MorphismA& t, int n);

/// Applies orb_extend with n_1..n_{N-1} in order, boxes with d_n(n_N) and
/// returns the GF(2) homology rank.
std::size_t hfo(const TypeAStructure& a, const OrbifoldOrders& orders);

}  // namespace orbhf
