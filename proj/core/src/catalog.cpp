#include "orbhf/catalog.hpp"

#include <random>
#include <string>
#include <vector>

#include "orbhf/error.hpp"
#include "orbhf/orbifold.hpp"

namespace orbhf {

TypeDStructure solid_torus_cfd() { return d_n(1); }

TypeAStructure lens_space_cfa(int p) {
    if (p < 1) throw Error(ErrorKind::InvalidOrder, "lens space needs p >= 1");
    TypeAStructure a;
    for (int i = 1; i <= p; ++i) a.add_generator("y" + std::to_string(i), Basis::I2);
    return a;
}

TypeDAStructure identity_da() {
    TypeDAStructure da;
    da.add_generator("e1", Basis::I1, Basis::I1);
    da.add_generator("e2", Basis::I2, Basis::I2);
    auto gen_of = [](Basis idem) -> GenIndex { return idem == Basis::I1 ? 0 : 1; };
    for (Basis a : kReebBasis)
        da.toggle_delta(gen_of(source_idem(a)), {a}, a, gen_of(target_idem(a)));
    return da;
}

TypeAStructure projective_module(Basis idem) {
    TypeAStructure a;
    std::vector<Basis> elems;
    for (Basis b : kAllBasis) {
        if (source_idem(b) != idem) continue;
        a.add_generator(std::string(token(b)), target_idem(b));
        elems.push_back(b);
    }
    for (GenIndex i = 0; i < elems.size(); ++i) {
        for (Basis r : kReebBasis) {
            auto p = mul(elems[i], r);
            if (!p) continue;
            a.toggle_op(i, {r}, *a.find(token(*p)));
        }
    }
    return a;
}

namespace {

void require_same_idem(Basis g, Basis h, GenIndex gi, GenIndex hi) {
    if (gi == hi || g != h)
        throw Error(ErrorKind::IncompatibleIdempotents,
                    "change of basis needs two distinct generators with one idempotent");
}

// Applies phi(g) = g + h to a GF(2) set of generators.
void push_phi(GenSet& s, GenIndex z, GenIndex g, GenIndex h) {
    toggle(s, z);
    if (z == g) toggle(s, h);
}

}  // namespace

// phi is an involution, so the transported operations are phi . m . phi.
TypeAStructure change_basis(const TypeAStructure& a, GenIndex g, GenIndex h) {
    require_same_idem(a.generator(g).idem, a.generator(h).idem, g, h);
    TypeAStructure out;
    for (const Generator& gen : a.generators()) out.add_generator(gen.name, gen.idem);
    for (const auto& [key, outs] : a.ops()) {
        GenSet image;
        for (GenIndex z : outs) push_phi(image, z, g, h);
        std::vector<GenIndex> sources{key.gen};
        if (key.gen == h) sources.push_back(g);
        for (GenIndex v : sources)
            for (GenIndex z : image) out.toggle_op(v, key.word, z);
    }
    return out;
}

TypeDStructure change_basis(const TypeDStructure& d, GenIndex g, GenIndex h) {
    require_same_idem(d.generator(g).idem, d.generator(h).idem, g, h);
    TypeDStructure out;
    for (const Generator& gen : d.generators()) out.add_generator(gen.name, gen.idem);
    for (const Edge& e : d.edges()) {
        std::vector<GenIndex> sources{e.from};
        if (e.from == h) sources.push_back(g);
        std::vector<GenIndex> targets{e.to};
        if (e.to == g) targets.push_back(h);
        for (GenIndex v : sources)
            for (GenIndex t : targets) out.toggle_edge(v, t, e.label);
    }
    return out;
}

namespace {

using Rng = std::mt19937_64;

Basis random_idem(Rng& rng) { return (rng() & 1) ? Basis::I2 : Basis::I1; }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

// Appends a copy of `block` to `a`, renaming generators g<N>.
void append_block(TypeAStructure& a, const TypeAStructure& block) {
    const GenIndex offset = a.size();
    for (const Generator& g : block.generators())
        a.add_generator("g" + std::to_string(a.size() + 1), g.idem);
    for (const auto& [key, outs] : block.ops())
        for (GenIndex z : outs) a.toggle_op(key.gen + offset, key.word, z + offset);
}

void append_block(TypeDStructure& d, const TypeDStructure& block) {
    const GenIndex offset = d.size();
    for (const Generator& g : block.generators())
        d.add_generator("v" + std::to_string(d.size() + 1), g.idem);
    for (const Edge& e : block.edges()) d.toggle_edge(e.from + offset, e.to + offset, e.label);
}

TypeAStructure random_a_block(Rng& rng) {
    TypeAStructure b;
    switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
        case 0:  // lone generator
            b.add_generator("a", random_idem(rng));
            break;
        case 1: {  // m_1 acyclic pair
            Basis i = random_idem(rng);
            b.add_generator("a", i);
            b.add_generator("b", i);
            b.toggle_op(0, {}, 1);
            break;
        }
        case 2: {  // single m_2 entry
            Basis r = pick(rng, std::vector<Basis>(kReebBasis.begin(), kReebBasis.end()));
            b.add_generator("a", source_idem(r));
            b.add_generator("b", target_idem(r));
            b.toggle_op(0, {r}, 1);
            break;
        }
        case 3:
            b = projective_module(Basis::I1);
            break;
        case 4:
            b = projective_module(Basis::I2);
            break;
        default: {  // single m_3 entry on two indecomposable inputs with zero product
            const std::vector<std::pair<Basis, Basis>> words = {{Basis::R2, Basis::R1},
                                                                {Basis::R3, Basis::R2}};
            auto [r, s] = pick(rng, words);
            b.add_generator("a", source_idem(r));
            b.add_generator("b", target_idem(s));
            b.toggle_op(0, {r, s}, 1);
            break;
        }
    }
    return b;
}

TypeDStructure random_d_block(Rng& rng) {
    TypeDStructure b;
    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
        case 0:
            b.add_generator("a", random_idem(rng));
            break;
        case 1: {  // single Reeb edge
            Basis r = pick(rng, std::vector<Basis>(kReebBasis.begin(), kReebBasis.end()));
            b.add_generator("a", source_idem(r));
            b.add_generator("b", target_idem(r));
            b.toggle_edge(0, 1, r);
            break;
        }
        case 2: {  // acyclic pair
            Basis i = random_idem(rng);
            b.add_generator("a", i);
            b.add_generator("b", i);
            b.toggle_edge(0, 1, i);
            break;
        }
        default:
            b = d_n(std::uniform_int_distribution<int>(1, 3)(rng));
            break;
    }
    return b;
}

template <class S>
S scramble(S s, Rng& rng, int changes) {
    for (int k = 0; k < changes; ++k) {
        if (s.size() < 2) return s;
        std::uniform_int_distribution<GenIndex> any(0, s.size() - 1);
        GenIndex g = any(rng);
        std::vector<GenIndex> partners;
        for (GenIndex h = 0; h < s.size(); ++h)
            if (h != g && s.generator(h).idem == s.generator(g).idem) partners.push_back(h);
        if (partners.empty()) continue;
        s = change_basis(s, g, pick(rng, partners));
    }
    return s;
}

constexpr int kMaxAttempts = 16;

}  // namespace

TypeAStructure random_type_a(std::uint64_t seed, RandomShape shape) {
    Rng rng(seed);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        TypeAStructure a;
        for (int k = 0; k < shape.blocks; ++k) append_block(a, random_a_block(rng));
        a = scramble(std::move(a), rng, shape.basis_changes);
        if (a.max_arity() <= 3 && check_type_a(a)) return a;
    }
    throw Error(ErrorKind::GenerationFailed,
                "random_type_a: no valid structure for seed " + std::to_string(seed));
}

TypeDStructure random_type_d(std::uint64_t seed, RandomShape shape) {
    Rng rng(seed);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        TypeDStructure d;
        append_block(d, d_n(std::uniform_int_distribution<int>(1, 4)(rng)));
        TypeDStructure pair;
        Basis i = random_idem(rng);
        pair.add_generator("a", i);
        pair.add_generator("b", i);
        pair.toggle_edge(0, 1, i);
        append_block(d, pair);
        for (int k = 0; k < shape.blocks; ++k) append_block(d, random_d_block(rng));
        d = scramble(std::move(d), rng, shape.basis_changes);
        if (check_type_d(d)) return d;
    }
    throw Error(ErrorKind::GenerationFailed,
                "random_type_d: no valid structure for seed " + std::to_string(seed));
}

}  // namespace orbhf
