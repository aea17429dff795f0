#include "orbhf/structures.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "orbhf/error.hpp"

namespace orbhf {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::IncompatibleIdempotents: return "IncompatibleIdempotents";
        case ErrorKind::UnknownGenerator: return "UnknownGenerator";
        case ErrorKind::InvalidStructure: return "InvalidStructure";
        case ErrorKind::InvalidOrder: return "InvalidOrder";
        case ErrorKind::NotAComplex: return "NotAComplex";
        case ErrorKind::NoBoundednessWitness: return "NoBoundednessWitness";
        case ErrorKind::GenerationFailed: return "GenerationFailed";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::DuplicateGenerator: return "DuplicateGenerator";
        case ErrorKind::UnknownToken: return "UnknownToken";
    }
    return "Unknown";
}

namespace detail {

template <class Gen>
GenIndex GeneratorList<Gen>::add(Gen g) {
    if (by_name_.contains(g.name))
        throw Error(ErrorKind::DuplicateGenerator, "duplicate generator '" + g.name + "'");
    GenIndex i = gens_.size();
    by_name_.emplace(g.name, i);
    gens_.push_back(std::move(g));
    return i;
}

template <class Gen>
std::optional<GenIndex> GeneratorList<Gen>::find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

template <class Gen>
const Gen& GeneratorList<Gen>::at(GenIndex i) const {
    if (i >= gens_.size())
        throw Error(ErrorKind::UnknownGenerator, "generator index " + std::to_string(i) +
                                                     " out of range");
    return gens_[i];
}

template class GeneratorList<Generator>;
template class GeneratorList<DAGenerator>;

}  // namespace detail

namespace {

void require_idempotent(Basis b, const std::string& what) {
    if (!is_idempotent(b))
        throw Error(ErrorKind::IncompatibleIdempotents,
                    what + ": decoration '" + std::string(token(b)) + "' is not an idempotent");
}

void require_index(GenIndex i, std::size_t n) {
    if (i >= n)
        throw Error(ErrorKind::UnknownGenerator,
                    "generator index " + std::to_string(i) + " out of range");
}

void require_reeb_word(const Word& w) {
    for (Basis b : w)
        if (!is_reeb(b))
            throw Error(ErrorKind::InvalidStructure,
                        "idempotent '" + std::string(token(b)) +
                            "' in an operation word (strict unitality)");
}

std::string word_text(const Word& w) {
    std::string s;
    for (Basis b : w) {
        if (!s.empty()) s += ' ';
        s += token(b);
    }
    return s;
}

// Idempotent reached after feeding `w` to a generator decorated `start`, or
// nullopt when the chain breaks.
std::optional<Basis> chain_end(Basis start, const Word& w) {
    Basis cur = start;
    for (Basis b : w) {
        if (source_idem(b) != cur) return std::nullopt;
        cur = target_idem(b);
    }
    return cur;
}

void require_op_chain(const std::vector<Generator>& src, const std::vector<Generator>& dst,
                      const OpTable& table, const char* what) {
    for (const auto& [key, outs] : table) {
        const Generator& g = src.at(key.gen);
        auto end = chain_end(g.idem, key.word);
        for (GenIndex z : outs) {
            if (!end || dst.at(z).idem != *end)
                throw Error(ErrorKind::IncompatibleIdempotents,
                            std::string(what) + " entry (" + g.name + "; " +
                                word_text(key.word) + ") -> " + dst.at(z).name +
                                " breaks the idempotent chain");
        }
    }
}

}  // namespace

void toggle_entry(OpTable& table, OpKey key, GenIndex out) {
    auto it = table.find(key);
    if (it == table.end()) {
        table.emplace(std::move(key), GenSet{out});
        return;
    }
    toggle(it->second, out);
    if (it->second.empty()) table.erase(it);
}

// -- TypeDStructure ----------------------------------------------------------

GenIndex TypeDStructure::add_generator(std::string name, Basis idem) {
    require_idempotent(idem, "generator '" + name + "'");
    return gens_.add({std::move(name), idem});
}

void TypeDStructure::toggle_edge(GenIndex from, GenIndex to, Basis label) {
    require_index(from, size());
    require_index(to, size());
    Edge e{from, to, label};
    if (auto [it, inserted] = edges_.insert(e); !inserted) edges_.erase(it);
}

std::vector<std::vector<Edge>> TypeDStructure::out_edges() const {
    std::vector<std::vector<Edge>> out(size());
    for (const Edge& e : edges_) out[e.from].push_back(e);
    return out;
}

// -- TypeAStructure ----------------------------------------------------------

GenIndex TypeAStructure::add_generator(std::string name, Basis idem) {
    require_idempotent(idem, "generator '" + name + "'");
    return gens_.add({std::move(name), idem});
}

void TypeAStructure::toggle_op(GenIndex gen, Word word, GenIndex out) {
    require_index(gen, size());
    require_index(out, size());
    require_reeb_word(word);
    toggle_entry(ops_, OpKey{gen, std::move(word)}, out);
}

const GenSet* TypeAStructure::lookup(GenIndex gen, const Word& word) const {
    auto it = ops_.find(OpKey{gen, word});
    return it == ops_.end() ? nullptr : &it->second;
}

std::size_t TypeAStructure::max_arity() const {
    std::size_t k = 0;
    for (const auto& [key, _] : ops_) k = std::max(k, key.word.size() + 1);
    return k;
}

// -- TypeDAStructure ---------------------------------------------------------

GenIndex TypeDAStructure::add_generator(std::string name, Basis left, Basis right) {
    require_idempotent(left, "generator '" + name + "'");
    require_idempotent(right, "generator '" + name + "'");
    return gens_.add({std::move(name), left, right});
}

void TypeDAStructure::toggle_delta(GenIndex gen, Word word, Basis label, GenIndex to) {
    require_index(gen, size());
    require_index(to, size());
    require_reeb_word(word);
    OpKey key{gen, std::move(word)};
    DAOutput o{label, to};
    auto it = deltas_.find(key);
    if (it == deltas_.end()) {
        deltas_.emplace(std::move(key), DAOutputSet{o});
        return;
    }
    if (auto [pos, inserted] = it->second.insert(o); !inserted) it->second.erase(pos);
    if (it->second.empty()) deltas_.erase(it);
}

// -- MorphismA ---------------------------------------------------------------

MorphismA MorphismA::identity(const TypeAStructure& a) {
    MorphismA t{a.generators(), a.generators(), {}};
    for (GenIndex i = 0; i < a.size(); ++i) t.components[OpKey{i, {}}] = GenSet{i};
    return t;
}

// -- checks ------------------------------------------------------------------

void require_compatible(const TypeDStructure& d) {
    for (const Edge& e : d.edges()) {
        const Generator& x = d.generator(e.from);
        const Generator& y = d.generator(e.to);
        if (source_idem(e.label) != x.idem || target_idem(e.label) != y.idem)
            throw Error(ErrorKind::IncompatibleIdempotents,
                        "edge " + x.name + " -> " + y.name + " labeled " +
                            std::string(token(e.label)) + " breaks the idempotent sandwich");
    }
}

void require_compatible(const TypeAStructure& a) {
    require_op_chain(a.generators(), a.generators(), a.ops(), "operation");
}

void require_compatible(const MorphismA& t) {
    require_op_chain(t.source, t.target, t.components, "morphism");
}

void require_compatible(const TypeDAStructure& da) {
    for (const auto& [key, outs] : da.deltas()) {
        const DAGenerator& x = da.generator(key.gen);
        auto right_end = chain_end(x.right, key.word);
        for (const DAOutput& o : outs) {
            const DAGenerator& z = da.generator(o.to);
            bool ok = right_end && *right_end == z.right && source_idem(o.label) == x.left &&
                      target_idem(o.label) == z.left;
            if (!ok)
                throw Error(ErrorKind::IncompatibleIdempotents,
                            "delta entry (" + x.name + "; " + word_text(key.word) + ") -> " +
                                std::string(token(o.label)) + " " + z.name +
                                " breaks the idempotent chain");
        }
    }
}

bool check_type_d(const TypeDStructure& d) {
    require_compatible(d);
    auto out = d.out_edges();
    // (x, product, z) with odd path count.
    std::set<std::tuple<GenIndex, Basis, GenIndex>> odd;
    for (const Edge& first : d.edges()) {
        for (const Edge& second : out[first.to]) {
            auto p = mul(first.label, second.label);
            if (!p) continue;
            auto key = std::make_tuple(first.from, *p, second.to);
            if (auto [it, inserted] = odd.insert(key); !inserted) odd.erase(it);
        }
    }
    return odd.empty();
}

PathSet delta_k(const TypeDStructure& d, GenIndex x, int k) {
    if (x >= d.size())
        throw Error(ErrorKind::UnknownGenerator,
                    "generator index " + std::to_string(x) + " out of range");
    auto out = d.out_edges();
    PathSet result;
    Word word;
    std::function<void(GenIndex, int)> walk = [&](GenIndex at, int remaining) {
        if (remaining <= 0) {
            PathTerm term{word, at};
            if (auto [it, inserted] = result.insert(term); !inserted) result.erase(it);
            return;
        }
        for (const Edge& e : out[at]) {
            word.push_back(e.label);
            walk(e.to, remaining - 1);
            word.pop_back();
        }
    };
    walk(x, k);
    return result;
}

bool is_bounded_d(const TypeDStructure& d) {
    // Kahn's algorithm: acyclic iff every vertex gets peeled.
    std::vector<std::size_t> indeg(d.size(), 0);
    for (const Edge& e : d.edges()) ++indeg[e.to];
    auto out = d.out_edges();
    std::vector<GenIndex> ready;
    for (GenIndex i = 0; i < d.size(); ++i)
        if (indeg[i] == 0) ready.push_back(i);
    std::size_t peeled = 0;
    while (!ready.empty()) {
        GenIndex v = ready.back();
        ready.pop_back();
        ++peeled;
        for (const Edge& e : out[v])
            if (--indeg[e.to] == 0) ready.push_back(e.to);
    }
    return peeled == d.size();
}

bool check_type_a(const TypeAStructure& a) {
    require_compatible(a);

    // Group entries by generator so composites can be chained quickly.
    std::vector<std::vector<const OpTable::value_type*>> by_gen(a.size());
    for (const auto& entry : a.ops()) by_gen[entry.first.gen].push_back(&entry);

    // (x, word) -> accumulated output over GF(2)
    OpTable relation;

    for (const auto& [key, outs] : a.ops()) {
        // Composites m(m(x, w1), w2): chain this entry with every entry of
        // each output generator.
        for (GenIndex y : outs) {
            for (const auto* second : by_gen[y]) {
                Word w = key.word;
                w.insert(w.end(), second->first.word.begin(), second->first.word.end());
                for (GenIndex z : second->second) toggle_entry(relation, OpKey{key.gen, w}, z);
            }
        }
        // Contractions m(x, .., a b, ..): split one letter c = a * b.
        for (std::size_t pos = 0; pos < key.word.size(); ++pos) {
            for (Basis left : kReebBasis) {
                for (Basis right : kReebBasis) {
                    auto p = mul(left, right);
                    if (!p || *p != key.word[pos]) continue;
                    Word w;
                    w.reserve(key.word.size() + 1);
                    w.insert(w.end(), key.word.begin(), key.word.begin() + pos);
                    w.push_back(left);
                    w.push_back(right);
                    w.insert(w.end(), key.word.begin() + pos + 1, key.word.end());
                    for (GenIndex z : outs) toggle_entry(relation, OpKey{key.gen, w}, z);
                }
            }
        }
    }
    return relation.empty();
}

bool is_nice_a(const TypeAStructure& a) { return a.max_arity() <= 2; }

}  // namespace orbhf
