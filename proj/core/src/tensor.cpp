#include "orbhf/tensor.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "orbhf/error.hpp"

namespace orbhf {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Dense (left, right) -> product index table; kNone where idempotents differ.
class PairIndex {
public:
    PairIndex(std::size_t left, std::size_t right)
        : right_(right), idx_(left * right, kNone) {}

    std::size_t& at(GenIndex l, GenIndex r) { return idx_[l * right_ + r]; }
    std::size_t get(GenIndex l, GenIndex r) const { return idx_[l * right_ + r]; }

private:
    std::size_t right_;
    std::vector<std::size_t> idx_;
};

// True when some stored operation of `gen` has a word starting with `prefix`.
bool has_prefix(const TypeAStructure& a, GenIndex gen, const Word& prefix) {
    auto it = a.ops().lower_bound(OpKey{gen, prefix});
    if (it == a.ops().end() || it->first.gen != gen) return false;
    const Word& w = it->first.word;
    return w.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
}

// m_{k+1}(y, inputs) under strict unitality. `inputs` may hold idempotents.
std::optional<GenSet> apply_m(const TypeAStructure& a, GenIndex y, const Word& inputs) {
    bool has_idem = std::any_of(inputs.begin(), inputs.end(), is_idempotent);
    if (has_idem) {
        if (inputs.size() == 1 && inputs.front() == a.generator(y).idem) return GenSet{y};
        return std::nullopt;
    }
    if (const GenSet* out = a.lookup(y, inputs)) return *out;
    return std::nullopt;
}

std::size_t path_cutoff(const TypeAStructure& a) {
    return std::max<std::size_t>(a.max_arity(), 2) - 1;
}

}  // namespace

std::string pair_name(const std::string& left, const std::string& right) {
    return left + "⊗" + right;
}

ChainComplex box_a_d(const TypeAStructure& a, const TypeDStructure& d) {
    require_compatible(a);
    require_compatible(d);

    ChainComplex c;
    PairIndex idx(a.size(), d.size());
    for (GenIndex y = 0; y < a.size(); ++y) {
        for (GenIndex x = 0; x < d.size(); ++x) {
            if (a.generator(y).idem != d.generator(x).idem) continue;
            idx.at(y, x) = c.names.size();
            c.names.push_back(pair_name(a.generator(y).name, d.generator(x).name));
            c.provenance.emplace_back(y, x);
        }
    }
    c.boundary = Gf2Matrix(c.size(), c.size());

    const auto out = d.out_edges();
    const std::size_t cutoff = path_cutoff(a);

    for (std::size_t col = 0; col < c.size(); ++col) {
        const auto [y, x] = c.provenance[col];

        if (const GenSet* m1 = a.lookup(y, {}))
            for (GenIndex z : *m1) c.boundary.toggle(idx.get(z, x), col);

        Word word;
        std::function<void(GenIndex)> walk = [&](GenIndex at) {
            if (word.size() == cutoff) return;
            for (const Edge& e : out[at]) {
                word.push_back(e.label);
                if (auto res = apply_m(a, y, word))
                    for (GenIndex z : *res) c.boundary.toggle(idx.get(z, e.to), col);
                bool deeper = is_reeb(e.label) && has_prefix(a, y, word);
                if (deeper) walk(e.to);
                word.pop_back();
            }
        };
        walk(x);
    }
    return c;
}

TypeAStructure box_a_da(const TypeAStructure& a, const TypeDAStructure& da) {
    require_compatible(a);
    require_compatible(da);

    TypeAStructure out;
    PairIndex idx(a.size(), da.size());
    std::vector<std::pair<GenIndex, GenIndex>> prov;
    for (GenIndex y = 0; y < a.size(); ++y) {
        for (GenIndex x = 0; x < da.size(); ++x) {
            const auto& xg = da.generator(x);
            if (a.generator(y).idem != xg.left) continue;
            idx.at(y, x) = out.add_generator(pair_name(a.generator(y).name, xg.name), xg.right);
            prov.emplace_back(y, x);
        }
    }

    std::vector<std::vector<const std::pair<const OpKey, DAOutputSet>*>> by_gen(da.size());
    for (const auto& entry : da.deltas()) by_gen[entry.first.gen].push_back(&entry);

    // A sequence of j delta steps feeds j algebra outputs to m_{j+1}.
    const std::size_t max_steps = path_cutoff(a);

    for (std::size_t p = 0; p < prov.size(); ++p) {
        const auto [y, x] = prov[p];

        if (const GenSet* m1 = a.lookup(y, {}))
            for (GenIndex z : *m1) out.toggle_op(p, {}, idx.get(z, x));

        Word consumed;
        Word fed;
        std::function<void(GenIndex)> walk = [&](GenIndex at) {
            if (fed.size() == max_steps) return;
            for (const auto* entry : by_gen[at]) {
                const Word& sub = entry->first.word;
                for (const DAOutput& o : entry->second) {
                    consumed.insert(consumed.end(), sub.begin(), sub.end());
                    fed.push_back(o.label);
                    if (auto res = apply_m(a, y, fed))
                        for (GenIndex z : *res) out.toggle_op(p, consumed, idx.get(z, o.to));
                    if (is_reeb(o.label) && has_prefix(a, y, fed)) walk(o.to);
                    fed.pop_back();
                    consumed.resize(consumed.size() - sub.size());
                }
            }
        };
        walk(x);
    }
    return out;
}

TypeDStructure box_da_d(const TypeDAStructure& da, const TypeDStructure& d) {
    require_compatible(da);
    require_compatible(d);

    TypeDStructure out;
    PairIndex idx(da.size(), d.size());
    for (GenIndex x = 0; x < da.size(); ++x) {
        for (GenIndex v = 0; v < d.size(); ++v) {
            const auto& xg = da.generator(x);
            if (xg.right != d.generator(v).idem) continue;
            idx.at(x, v) = out.add_generator(pair_name(xg.name, d.generator(v).name), xg.left);
        }
    }

    const auto edges_out = d.out_edges();

    // Endpoints of paths from v whose labels spell `word`, with multiplicity.
    auto spell = [&](GenIndex v, const Word& word) {
        std::vector<GenIndex> ends;
        std::function<void(GenIndex, std::size_t)> walk = [&](GenIndex at, std::size_t i) {
            if (i == word.size()) {
                ends.push_back(at);
                return;
            }
            for (const Edge& e : edges_out[at])
                if (e.label == word[i]) walk(e.to, i + 1);
        };
        walk(v, 0);
        return ends;
    };

    for (GenIndex x = 0; x < da.size(); ++x) {
        for (GenIndex v = 0; v < d.size(); ++v) {
            const std::size_t from = idx.get(x, v);
            if (from == kNone) continue;

            // Unital action of an idempotent-labeled edge of D.
            for (const Edge& e : edges_out[v])
                if (is_idempotent(e.label))
                    out.toggle_edge(from, idx.get(x, e.to), da.generator(x).left);

            auto first = da.deltas().lower_bound(OpKey{x, {}});
            for (auto it = first; it != da.deltas().end() && it->first.gen == x; ++it) {
                for (GenIndex end : spell(v, it->first.word))
                    for (const DAOutput& o : it->second)
                        out.toggle_edge(from, idx.get(o.to, end), o.label);
            }
        }
    }
    return out;
}

}  // namespace orbhf
