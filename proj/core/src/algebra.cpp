#include "orbhf/algebra.hpp"

#include <numeric>

namespace orbhf {

namespace {

struct ArrowData {
    Basis source;
    Basis target;
};

// Indexed by Basis. Idempotents are their own source and target.
constexpr std::array<ArrowData, 8> kArrows = {{
    {Basis::I1, Basis::I1},  // i1
    {Basis::I2, Basis::I2},  // i2
    {Basis::I1, Basis::I2},  // rho1
    {Basis::I2, Basis::I1},  // rho2
    {Basis::I1, Basis::I2},  // rho3
    {Basis::I1, Basis::I1},  // rho12
    {Basis::I2, Basis::I2},  // rho23
    {Basis::I1, Basis::I2},  // rho123
}};

constexpr std::array<std::string_view, 8> kTokens = {
    "i1", "i2", "r1", "r2", "r3", "r12", "r23", "r123"};

constexpr std::size_t idx(Basis b) { return static_cast<std::size_t>(b); }

}  // namespace

Basis source_idem(Basis b) { return kArrows[idx(b)].source; }
Basis target_idem(Basis b) { return kArrows[idx(b)].target; }

int shift_weight(Basis b) {
    return (b == Basis::R3 || b == Basis::R23 || b == Basis::R123) ? 1 : 0;
}

int shift_count(std::span<const Basis> word) {
    return std::accumulate(word.begin(), word.end(), 0,
                           [](int acc, Basis b) { return acc + shift_weight(b); });
}

std::optional<Basis> mul(Basis a, Basis b) {
    if (is_idempotent(a)) {
        if (source_idem(b) == a) return b;
        return std::nullopt;
    }
    if (is_idempotent(b)) {
        if (target_idem(a) == b) return a;
        return std::nullopt;
    }
    using enum Basis;
    if (a == R1 && b == R2) return R12;
    if (a == R2 && b == R3) return R23;
    if (a == R1 && b == R23) return R123;
    if (a == R12 && b == R3) return R123;
    return std::nullopt;
}

std::string_view token(Basis b) { return kTokens[idx(b)]; }

std::optional<Basis> parse_basis(std::string_view tok) {
    for (Basis b : kAllBasis)
        if (kTokens[idx(b)] == tok) return b;
    return std::nullopt;
}

std::vector<Basis> AlgebraElement::support() const {
    std::vector<Basis> out;
    for (Basis b : kAllBasis)
        if (contains(b)) out.push_back(b);
    return out;
}

AlgebraElement mul(AlgebraElement a, AlgebraElement b) {
    AlgebraElement out;
    for (Basis x : a.support())
        for (Basis y : b.support())
            if (auto p = mul(x, y)) out += *p;
    return out;
}

AlgebraElement operator*(AlgebraElement a, AlgebraElement b) { return mul(a, b); }

}  // namespace orbhf
