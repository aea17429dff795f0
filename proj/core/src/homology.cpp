#include "orbhf/homology.hpp"

#include <map>
#include <optional>
#include <utility>

#include "orbhf/error.hpp"

namespace orbhf {

bool verify_d_squared(const ChainComplex& c) {
    if (c.boundary.rows() != c.size() || c.boundary.cols() != c.size()) return false;
    return (c.boundary * c.boundary).is_zero();
}

std::size_t homology_rank(const ChainComplex& c) {
    if (!verify_d_squared(c))
        throw Error(ErrorKind::NotAComplex, "boundary does not square to zero");
    return c.size() - 2 * rank_gf2(c.boundary);
}

namespace {

using Coefficients = std::map<std::pair<GenIndex, GenIndex>, AlgebraElement>;

Coefficients coefficients(const TypeDStructure& d) {
    Coefficients out;
    for (const Edge& e : d.edges()) out[{e.from, e.to}] += e.label;
    return out;
}

std::optional<Edge> first_cancellable(const TypeDStructure& d) {
    for (const Edge& e : d.edges())
        if (is_idempotent(e.label) && e.from != e.to) return e;
    return std::nullopt;
}

// c = i + n with n in the radical of i A i, and n * n = 0, so c is its own
// inverse.
AlgebraElement unit_inverse(AlgebraElement c) { return c; }

TypeDStructure cancel(const TypeDStructure& d, GenIndex x, GenIndex y) {
    const Coefficients coef = coefficients(d);
    const AlgebraElement inv = unit_inverse(coef.at({x, y}));

    Coefficients next;
    for (const auto& [key, value] : coef) {
        auto [from, to] = key;
        if (from == x || from == y || to == x || to == y) continue;
        next[key] += value;
    }
    for (const auto& [in_key, a] : coef) {
        GenIndex w = in_key.first;
        if (in_key.second != y || w == x || w == y) continue;
        for (const auto& [out_key, b] : coef) {
            GenIndex z = out_key.second;
            if (out_key.first != x || z == x || z == y) continue;
            next[{w, z}] += a * inv * b;
        }
    }

    TypeDStructure out;
    std::vector<GenIndex> remap(d.size(), 0);
    for (GenIndex g = 0; g < d.size(); ++g) {
        if (g == x || g == y) continue;
        remap[g] = out.add_generator(d.generator(g).name, d.generator(g).idem);
    }
    for (const auto& [key, value] : next)
        for (Basis b : value.support()) out.toggle_edge(remap[key.first], remap[key.second], b);
    return out;
}

}  // namespace

TypeDStructure edge_reduce(const TypeDStructure& d) {
    if (!check_type_d(d))
        throw Error(ErrorKind::InvalidStructure, "edge_reduce: input fails the type D relation");
    TypeDStructure cur = d;
    while (auto e = first_cancellable(cur)) cur = cancel(cur, e->from, e->to);
    return cur;
}

}  // namespace orbhf
