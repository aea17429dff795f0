#include "orbhf/orbifold.hpp"

#include <functional>
#include <map>
#include <numeric>

#include "orbhf/error.hpp"
#include "orbhf/homology.hpp"

namespace orbhf {

namespace {

void require_order(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidOrder, "order must be >= 1, got " + std::to_string(n));
}

void require_valid(const TypeAStructure& a, const char* what) {
    if (!check_type_a(a))
        throw Error(ErrorKind::InvalidStructure,
                    std::string(what) + ": input fails the A-infinity relations");
}

// Copy-and-shift of an operation table into n copies.
OpTable shift_table(const OpTable& table, int n) {
    OpTable out;
    for (const auto& [key, outs] : table) {
        const int shift = shift_count(key.word);
        for (int j = 1; j <= n; ++j) {
            const int target_copy = bracket(static_cast<long long>(j) + shift, n);
            for (GenIndex z : outs)
                toggle_entry(out, OpKey{indexed(key.gen, j, n), key.word},
                             indexed(z, target_copy, n));
        }
    }
    return out;
}

std::vector<Generator> copy_generators(const std::vector<Generator>& gens, int n) {
    std::vector<Generator> out;
    out.reserve(gens.size() * static_cast<std::size_t>(n));
    for (const Generator& g : gens)
        for (int j = 1; j <= n; ++j) out.push_back({indexed_name(g.name, j), g.idem});
    return out;
}

}  // namespace

OrbifoldOrders::OrbifoldOrders(std::vector<int> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw Error(ErrorKind::InvalidOrder, "at least one order is required");
    for (int n : orders_) require_order(n);
}

int OrbifoldOrders::product() const {
    return std::accumulate(orders_.begin(), orders_.end(), 1, std::multiplies<>());
}

int bracket(long long j, int n) {
    require_order(n);
    long long r = j % n;
    if (r <= 0) r += n;
    return static_cast<int>(r);
}

IndexedGenerator unindex(GenIndex g, int n) {
    return {g / static_cast<std::size_t>(n), static_cast<int>(g % static_cast<std::size_t>(n)) + 1};
}

std::string indexed_name(const std::string& base, int copy) {
    return base + ":" + std::to_string(copy);
}

TypeDStructure d_n(int n) {
    require_order(n);
    TypeDStructure d;
    for (int j = 1; j <= n; ++j) d.add_generator("x" + std::to_string(j), Basis::I2);
    for (int j = 0; j < n; ++j)
        d.toggle_edge(static_cast<GenIndex>(j), static_cast<GenIndex>((j + 1) % n), Basis::R23);
    return d;
}

TypeAStructure shift_copies(const TypeAStructure& a, int n) {
    require_order(n);
    TypeAStructure out;
    for (const Generator& g : copy_generators(a.generators(), n)) out.add_generator(g.name, g.idem);
    for (const auto& [key, outs] : shift_table(a.ops(), n))
        for (GenIndex z : outs) out.toggle_op(key.gen, key.word, z);
    return out;
}

TypeAStructure orb_extend(const TypeAStructure& a, int n) {
    require_order(n);
    require_valid(a, "orb_extend");
    return shift_copies(a, n);
}

Lemma42Witness lemma42_witness(const TypeAStructure& a, int n) {
    require_order(n);
    require_valid(a, "lemma42_witness");

    const ChainComplex lhs = box_a_d(orb_extend(a, n), d_n(1));
    const ChainComplex rhs = box_a_d(a, d_n(n));

    std::map<std::pair<GenIndex, GenIndex>, std::size_t> rhs_index;
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs_index[rhs.provenance[i]] = i;

    Lemma42Witness w;
    w.map.resize(lhs.size());
    std::vector<bool> hit(rhs.size(), false);
    bool bijective = lhs.size() == rhs.size();
    for (std::size_t i = 0; bijective && i < lhs.size(); ++i) {
        const auto [y, copy] = unindex(lhs.provenance[i].first, n);
        auto it = rhs_index.find({y, static_cast<GenIndex>(copy - 1)});
        if (it == rhs_index.end() || hit[it->second]) {
            bijective = false;
            break;
        }
        w.map[i] = it->second;
        hit[it->second] = true;
    }
    if (!bijective) return w;

    Gf2Matrix pushed(rhs.size(), rhs.size());
    for (auto [r, c] : lhs.boundary.entries()) pushed.toggle(w.map[r], w.map[c]);
    w.intertwines = pushed == rhs.boundary;
    return w;
}

TypeAStructure orb_extend_box_da(const TypeAStructure& a, const TypeDAStructure& da, int n) {
    require_order(n);
    require_valid(a, "orb_extend_box_da");
    return shift_copies(box_a_da(a, da), n);
}

MorphismA shift_morphism(const MorphismA& t, int n) {
    require_order(n);
    require_compatible(t);
    return {copy_generators(t.source, n), copy_generators(t.target, n),
            shift_table(t.components, n)};
}

std::size_t hfo(const TypeAStructure& a, const OrbifoldOrders& orders) {
    require_valid(a, "hfo");
    auto values = orders.values();
    TypeAStructure cur = a;
    for (std::size_t i = 0; i + 1 < values.size(); ++i) cur = shift_copies(cur, values[i]);
    return homology_rank(box_a_d(cur, d_n(values.back())));
}

}  // namespace orbhf
