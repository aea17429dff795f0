#pragma once

// Built-in structures and seeded random generators of valid structures.

#include <cstdint>

#include "orbhf/structures.hpp"

namespace orbhf {

/// The solid torus: one generator in i2 with a rho23 self-loop.
TypeDStructure solid_torus_cfd();

/// p generators y1..yp in i2 and no stored operations. Only the part of the
/// lens space structure that can meet a rho23 path is modeled, so every box
/// product with d_n(n) has zero differential.
TypeAStructure lens_space_cfa(int p);

/// The identity bimodule: one generator per idempotent and
/// delta^2_1(x_s, a) = a (x) x_t for every Reeb a from s to t.
TypeDAStructure identity_da();

/// The right module i A: one generator per basis element b with source
/// `idem`, decorated target(b), and m_2(b, a) = b a.
TypeAStructure projective_module(Basis idem);

/// Applies the change of basis g -> g + h (same idempotent, g != h). The
/// result is isomorphic to the input.
TypeAStructure change_basis(const TypeAStructure& a, GenIndex g, GenIndex h);
TypeDStructure change_basis(const TypeDStructure& d, GenIndex g, GenIndex h);

struct RandomShape {
    int blocks = 4;          // direct summands drawn from small valid templates
    int basis_changes = 8;   // random isomorphisms applied afterwards
};

/// Valid type A structure with max arity <= 3, deterministic per seed.
/// Throws GenerationFailed if no valid structure is found within the retry
/// budget.
TypeAStructure random_type_a(std::uint64_t seed, RandomShape shape = {});

/// Valid type D structure containing at least one rho23 cycle and at least
/// one idempotent-labeled acyclic pair, scrambled by basis changes.
TypeDStructure random_type_d(std::uint64_t seed, RandomShape shape = {});

}  // namespace orbhf
