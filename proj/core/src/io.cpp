#include "orbhf/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "orbhf/catalog.hpp"
#include "orbhf/error.hpp"

namespace orbhf {

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    AnyStructure run() {
        std::optional<AnyStructure> result;
        std::size_t pos = 0;
        while (pos <= text_.size()) {
            std::size_t nl = text_.find('\n', pos);
            if (nl == std::string_view::npos) nl = text_.size();
            std::string_view line = text_.substr(pos, nl - pos);
            pos = nl + 1;
            ++line_no_;
            if (auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            auto toks = split_ws(line);
            if (toks.empty()) continue;
            if (!result) {
                result = header(toks);
                continue;
            }
            std::visit([&](auto& s) { record(s, toks); }, *result);
        }
        if (!result) fail(ErrorKind::ParseError, "missing header (typeD, typeA or typeDA)");
        return std::move(*result);
    }

private:
    [[noreturn]] void fail(ErrorKind kind, const std::string& msg) const {
        throw Error(kind, "line " + std::to_string(line_no_) + ": " + msg);
    }

    AnyStructure header(const std::vector<std::string_view>& toks) const {
        if (toks.size() == 1) {
            if (toks[0] == "typeD") return TypeDStructure{};
            if (toks[0] == "typeA") return TypeAStructure{};
            if (toks[0] == "typeDA") return TypeDAStructure{};
        }
        fail(ErrorKind::ParseError, "expected header typeD, typeA or typeDA");
    }

    Basis label(std::string_view tok) const {
        auto b = parse_basis(tok);
        if (!b) fail(ErrorKind::UnknownToken, "unknown token '" + std::string(tok) + "'");
        return *b;
    }

    Basis idem(std::string_view tok) const {
        Basis b = label(tok);
        if (!is_idempotent(b))
            fail(ErrorKind::ParseError, "expected i1 or i2, got '" + std::string(tok) + "'");
        return b;
    }

    template <class S>
    GenIndex gen(const S& s, std::string_view name) const {
        auto g = s.find(name);
        if (!g) fail(ErrorKind::ParseError, "undeclared generator '" + std::string(name) + "'");
        return *g;
    }

    // Runs a structure mutation, re-tagging library errors with the line.
    template <class F>
    void guarded(F&& f) const {
        try {
            f();
        } catch (const Error& e) {
            fail(e.kind(), e.what());
        }
    }

    // Splits "<gen> ; <labels> -> <rest...>".
    struct Arrow {
        std::string_view gen;
        Word word;
        std::vector<std::string_view> rhs;
    };

    Arrow arrow(const std::vector<std::string_view>& toks) const {
        if (toks.size() < 4 || toks[2] != ";") fail(ErrorKind::ParseError, "expected '<gen> ; ...'");
        Arrow a{toks[1], {}, {}};
        std::size_t i = 3;
        for (; i < toks.size() && toks[i] != "->"; ++i) a.word.push_back(label(toks[i]));
        if (i == toks.size()) fail(ErrorKind::ParseError, "missing '->'");
        a.rhs.assign(toks.begin() + static_cast<std::ptrdiff_t>(i) + 1, toks.end());
        return a;
    }

    void record(TypeDStructure& d, const std::vector<std::string_view>& toks) const {
        if (toks[0] == "gen") {
            if (toks.size() != 3) fail(ErrorKind::ParseError, "expected 'gen <name> <i1|i2>'");
            Basis i = idem(toks[2]);
            guarded([&] { d.add_generator(std::string(toks[1]), i); });
        } else if (toks[0] == "edge") {
            if (toks.size() != 4) fail(ErrorKind::ParseError, "expected 'edge <from> <to> <label>'");
            Basis l = label(toks[3]);
            d.toggle_edge(gen(d, toks[1]), gen(d, toks[2]), l);
        } else {
            fail(ErrorKind::ParseError, "unexpected record '" + std::string(toks[0]) + "'");
        }
    }

    void record(TypeAStructure& a, const std::vector<std::string_view>& toks) const {
        if (toks[0] == "gen") {
            if (toks.size() != 3) fail(ErrorKind::ParseError, "expected 'gen <name> <i1|i2>'");
            Basis i = idem(toks[2]);
            guarded([&] { a.add_generator(std::string(toks[1]), i); });
        } else if (toks[0] == "op") {
            Arrow ar = arrow(toks);
            if (ar.rhs.size() != 1) fail(ErrorKind::ParseError, "expected one output generator");
            GenIndex from = gen(a, ar.gen);
            GenIndex to = gen(a, ar.rhs[0]);
            guarded([&] { a.toggle_op(from, ar.word, to); });
        } else {
            fail(ErrorKind::ParseError, "unexpected record '" + std::string(toks[0]) + "'");
        }
    }

    void record(TypeDAStructure& da, const std::vector<std::string_view>& toks) const {
        if (toks[0] == "gen") {
            if (toks.size() != 3 && toks.size() != 4)
                fail(ErrorKind::ParseError, "expected 'gen <name> <i1|i2> [<i1|i2>]'");
            Basis left = idem(toks[2]);
            Basis right = toks.size() == 4 ? idem(toks[3]) : left;
            guarded([&] { da.add_generator(std::string(toks[1]), left, right); });
        } else if (toks[0] == "da") {
            Arrow ar = arrow(toks);
            if (ar.rhs.size() != 2) fail(ErrorKind::ParseError, "expected '-> <label> <gen>'");
            GenIndex from = gen(da, ar.gen);
            Basis out = label(ar.rhs[0]);
            GenIndex to = gen(da, ar.rhs[1]);
            guarded([&] { da.toggle_delta(from, ar.word, out, to); });
        } else {
            fail(ErrorKind::ParseError, "unexpected record '" + std::string(toks[0]) + "'");
        }
    }

    std::string_view text_;
    std::size_t line_no_ = 0;
};

void put_word(std::ostringstream& os, const Word& w) {
    for (Basis b : w) os << ' ' << token(b);
}

}  // namespace

AnyStructure parse(std::string_view text) { return Parser(text).run(); }

std::string serialize(const TypeDStructure& d) {
    std::ostringstream os;
    os << "typeD\n";
    for (const Generator& g : d.generators()) os << "gen " << g.name << ' ' << token(g.idem) << '\n';
    for (const Edge& e : d.edges())
        os << "edge " << d.generator(e.from).name << ' ' << d.generator(e.to).name << ' '
           << token(e.label) << '\n';
    return os.str();
}

std::string serialize(const TypeAStructure& a) {
    std::ostringstream os;
    os << "typeA\n";
    for (const Generator& g : a.generators()) os << "gen " << g.name << ' ' << token(g.idem) << '\n';
    for (const auto& [key, outs] : a.ops()) {
        for (GenIndex z : outs) {
            os << "op " << a.generator(key.gen).name << " ;";
            put_word(os, key.word);
            os << " -> " << a.generator(z).name << '\n';
        }
    }
    return os.str();
}

std::string serialize(const TypeDAStructure& da) {
    std::ostringstream os;
    os << "typeDA\n";
    for (const DAGenerator& g : da.generators()) {
        os << "gen " << g.name << ' ' << token(g.left);
        if (g.right != g.left) os << ' ' << token(g.right);
        os << '\n';
    }
    for (const auto& [key, outs] : da.deltas()) {
        for (const DAOutput& o : outs) {
            os << "da " << da.generator(key.gen).name << " ;";
            put_word(os, key.word);
            os << " -> " << token(o.label) << ' ' << da.generator(o.to).name << '\n';
        }
    }
    return os.str();
}

std::string serialize(const AnyStructure& s) {
    return std::visit([](const auto& x) { return serialize(x); }, s);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
    out << text;
}

namespace {

template <class Int>
std::optional<Int> parse_int(std::string_view s) {
    Int v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

}  // namespace

bool is_catalog_name(std::string_view name) {
    return name == "solid-torus" || name == "identity-da" || name.starts_with("lens:") ||
           name.starts_with("random:");
}

AnyStructure catalog_structure(std::string_view name) {
    if (name == "solid-torus") return solid_torus_cfd();
    if (name == "identity-da") return identity_da();
    if (name.starts_with("lens:")) {
        auto p = parse_int<int>(name.substr(5));
        if (!p) throw Error(ErrorKind::ParseError, "bad catalog name '" + std::string(name) + "'");
        return lens_space_cfa(*p);
    }
    if (name.starts_with("random:")) {
        auto seed = parse_int<std::uint64_t>(name.substr(7));
        if (!seed) throw Error(ErrorKind::ParseError, "bad catalog name '" + std::string(name) + "'");
        return random_type_a(*seed);
    }
    throw Error(ErrorKind::UnknownToken, "unknown catalog name '" + std::string(name) + "'");
}

AnyStructure load_structure(const std::string& name_or_path) {
    if (is_catalog_name(name_or_path) && !std::filesystem::exists(name_or_path))
        return catalog_structure(name_or_path);
    try {
        return parse(read_file(name_or_path));
    } catch (const Error& e) {
        throw Error(e.kind(), name_or_path + ": " + e.what());
    }
}

}  // namespace orbhf
