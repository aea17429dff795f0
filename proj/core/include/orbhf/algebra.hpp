#pragma once

// The torus algebra: the unital GF(2) path algebra on two vertices i1, i2
// with arrows rho1, rho2, rho3 and relations rho2 rho1 = rho3 rho2 = 0.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace orbhf {

enum class Basis : std::uint8_t { I1, I2, R1, R2, R3, R12, R23, R123 };

inline constexpr std::array<Basis, 8> kAllBasis = {
    Basis::I1, Basis::I2, Basis::R1, Basis::R2,
    Basis::R3, Basis::R12, Basis::R23, Basis::R123};

inline constexpr std::array<Basis, 6> kReebBasis = {
    Basis::R1, Basis::R2, Basis::R3, Basis::R12, Basis::R23, Basis::R123};

constexpr bool is_idempotent(Basis b) { return b == Basis::I1 || b == Basis::I2; }
constexpr bool is_reeb(Basis b) { return !is_idempotent(b); }

/// Idempotent i with i * b == b.
Basis source_idem(Basis b);
/// Idempotent i with b * i == b.
Basis target_idem(Basis b);

/// 1 for rho3, rho23, rho123 (the elements that advance an orbifold copy index).
int shift_weight(Basis b);

/// Product of two basis elements; nullopt when the product is zero.
std::optional<Basis> mul(Basis a, Basis b);

/// File token: i1 i2 r1 r2 r3 r12 r23 r123.
std::string_view token(Basis b);
std::optional<Basis> parse_basis(std::string_view tok);

// A tensor word of algebra inputs.
using Word = std::vector<Basis>;

int shift_count(std::span<const Basis> word);

/// GF(2) linear combination of basis elements, stored as an 8-bit support mask.
class AlgebraElement {
public:
    constexpr AlgebraElement() = default;
    constexpr AlgebraElement(Basis b) : mask_(bit(b)) {}  // NOLINT: implicit by intent

    static constexpr AlgebraElement zero() { return {}; }
    static constexpr AlgebraElement one() {
        return AlgebraElement(Basis::I1) + AlgebraElement(Basis::I2);
    }
    static constexpr AlgebraElement from_mask(std::uint8_t m) {
        AlgebraElement e;
        e.mask_ = m;
        return e;
    }

    constexpr bool contains(Basis b) const { return (mask_ & bit(b)) != 0; }
    constexpr bool is_zero() const { return mask_ == 0; }
    constexpr std::uint8_t mask() const { return mask_; }

    std::vector<Basis> support() const;

    constexpr AlgebraElement& operator+=(AlgebraElement o) {
        mask_ ^= o.mask_;
        return *this;
    }
    friend constexpr AlgebraElement operator+(AlgebraElement a, AlgebraElement b) {
        return a += b;
    }
    friend constexpr bool operator==(AlgebraElement, AlgebraElement) = default;

private:
    static constexpr std::uint8_t bit(Basis b) {
        return static_cast<std::uint8_t>(1u << static_cast<unsigned>(b));
    }

    std::uint8_t mask_ = 0;
};

AlgebraElement mul(AlgebraElement a, AlgebraElement b);
AlgebraElement operator*(AlgebraElement a, AlgebraElement b);

}  // namespace orbhf
