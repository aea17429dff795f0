#pragma once

// Type D, type A and type DA structures over the torus algebra, stored as
// sparse GF(2) tables over an indexed generator list.
//
// Type A structures are strictly unital: stored words contain Reeb elements
// only. m_2(y, i) is the idempotent action and any higher operation with an
// idempotent input vanishes.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orbhf/algebra.hpp"

namespace orbhf {

using GenIndex = std::size_t;

// A GF(2) combination of generators.
using GenSet = std::set<GenIndex>;

inline void toggle(GenSet& s, GenIndex g) {
    if (auto [it, inserted] = s.insert(g); !inserted) s.erase(it);
}

struct Generator {
    std::string name;
    Basis idem = Basis::I1;

    friend bool operator==(const Generator&, const Generator&) = default;
};

struct OpKey {
    GenIndex gen = 0;
    Word word;

    friend auto operator<=>(const OpKey&, const OpKey&) = default;
};

using OpTable = std::map<OpKey, GenSet>;

void toggle_entry(OpTable& table, OpKey key, GenIndex out);

namespace detail {

// Ordered generator list with name lookup, shared by all structure kinds.
template <class Gen>
class GeneratorList {
public:
    GenIndex add(Gen g);
    const std::vector<Gen>& all() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    std::optional<GenIndex> find(std::string_view name) const;
    const Gen& at(GenIndex i) const;

    friend bool operator==(const GeneratorList& a, const GeneratorList& b) {
        return a.gens_ == b.gens_;
    }

private:
    std::vector<Gen> gens_;
    std::unordered_map<std::string, GenIndex> by_name_;
};

}  // namespace detail

struct Edge {
    GenIndex from = 0;
    GenIndex to = 0;
    Basis label = Basis::I1;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Left type D structure: a decorated directed graph whose edges carry basis
/// labels. Parallel edges with equal labels cancel.
class TypeDStructure {
public:
    GenIndex add_generator(std::string name, Basis idem);
    void toggle_edge(GenIndex from, GenIndex to, Basis label);

    const std::vector<Generator>& generators() const { return gens_.all(); }
    const Generator& generator(GenIndex i) const { return gens_.at(i); }
    std::optional<GenIndex> find(std::string_view name) const { return gens_.find(name); }
    std::size_t size() const { return gens_.size(); }
    const std::set<Edge>& edges() const { return edges_; }

    /// Outgoing edges per generator, in edge order.
    std::vector<std::vector<Edge>> out_edges() const;

    friend bool operator==(const TypeDStructure&, const TypeDStructure&) = default;

private:
    detail::GeneratorList<Generator> gens_;
    std::set<Edge> edges_;
};

/// Right type A structure with a finite table of higher operations m_k keyed
/// by (generator, Reeb word of length k-1).
class TypeAStructure {
public:
    GenIndex add_generator(std::string name, Basis idem);
    /// Adds `out` to m(gen, word) over GF(2). Words must be Reeb-only.
    void toggle_op(GenIndex gen, Word word, GenIndex out);

    const std::vector<Generator>& generators() const { return gens_.all(); }
    const Generator& generator(GenIndex i) const { return gens_.at(i); }
    std::optional<GenIndex> find(std::string_view name) const { return gens_.find(name); }
    std::size_t size() const { return gens_.size(); }
    const OpTable& ops() const { return ops_; }

    /// m_{|word|+1}(gen, word) as stored, or nullptr when zero.
    const GenSet* lookup(GenIndex gen, const Word& word) const;

    /// Largest k with a stored m_k entry; 0 for an empty table.
    std::size_t max_arity() const;

    friend bool operator==(const TypeAStructure&, const TypeAStructure&) = default;

private:
    detail::GeneratorList<Generator> gens_;
    OpTable ops_;
};

struct DAGenerator {
    std::string name;
    Basis left = Basis::I1;
    Basis right = Basis::I1;

    friend bool operator==(const DAGenerator&, const DAGenerator&) = default;
};

struct DAOutput {
    Basis label = Basis::I1;
    GenIndex to = 0;

    friend auto operator<=>(const DAOutput&, const DAOutput&) = default;
};

using DAOutputSet = std::set<DAOutput>;

/// Type DA bimodule given by its delta^j_1 maps: (x, a_1..a_{j-1}) -> sum of b (x) z.
class TypeDAStructure {
public:
    GenIndex add_generator(std::string name, Basis left, Basis right);
    void toggle_delta(GenIndex gen, Word word, Basis label, GenIndex to);

    const std::vector<DAGenerator>& generators() const { return gens_.all(); }
    const DAGenerator& generator(GenIndex i) const { return gens_.at(i); }
    std::optional<GenIndex> find(std::string_view name) const { return gens_.find(name); }
    std::size_t size() const { return gens_.size(); }
    const std::map<OpKey, DAOutputSet>& deltas() const { return deltas_; }

    friend bool operator==(const TypeDAStructure&, const TypeDAStructure&) = default;

private:
    detail::GeneratorList<DAGenerator> gens_;
    std::map<OpKey, DAOutputSet> deltas_;
};

/// Morphism of type A structures given by components t(x, a_1..a_{i-1}).
struct MorphismA {
    std::vector<Generator> source;
    std::vector<Generator> target;
    OpTable components;

    static MorphismA identity(const TypeAStructure& a);

    friend bool operator==(const MorphismA&, const MorphismA&) = default;
};

// -- checks -----------------------------------------------------------------

/// Throws IncompatibleIdempotents unless every edge sits between the
/// idempotents of its label.
void require_compatible(const TypeDStructure& d);
void require_compatible(const TypeAStructure& a);
void require_compatible(const TypeDAStructure& da);
void require_compatible(const MorphismA& t);

/// delta_1 squared vanishes: for every (x, c, z) the number of two-step paths
/// x -> y -> z whose label product is c is even.
bool check_type_d(const TypeDStructure& d);

using PathTerm = std::pair<Word, GenIndex>;
using PathSet = std::set<PathTerm>;

/// delta_k(x) as a GF(2) sum of (label word, endpoint) over paths of length k.
PathSet delta_k(const TypeDStructure& d, GenIndex x, int k);

/// True iff delta_k vanishes for large k, i.e. the edge graph is acyclic.
bool is_bounded_d(const TypeDStructure& d);

/// The A-infinity relations hold for every input word.
///
/// The relation for (x, a_1..a_{k-1}) is a GF(2) sum of composites
/// m(m(x, a_1..a_{j-1}), a_j..a_{k-1}) and contractions
/// m(x, .., a_j a_{j+1}, ..). Every nonzero term is reached from stored
/// entries: composites by chaining two entries, contractions by splitting one
/// letter of a stored word into a factorization. Accumulating those terms
/// therefore covers all words, including the 2*max_arity length bound.
bool check_type_a(const TypeAStructure& a);

/// Nice diagrams: no operations beyond m_2.
bool is_nice_a(const TypeAStructure& a);

}  // namespace orbhf
