#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>

namespace pathideal {

/// Squarefree monomial over variables x0..x{n-1}, one bit per variable.
/// The constant monomial 1 has empty support.
struct SqfMonomial {
    std::uint64_t support = 0;

    constexpr SqfMonomial() = default;
    constexpr explicit SqfMonomial(std::uint64_t mask) : support(mask) {}

    constexpr int degree() const { return std::popcount(support); }
    constexpr bool is_one() const { return support == 0; }
    constexpr bool divides(SqfMonomial m) const { return (support & m.support) == support; }
    constexpr SqfMonomial lcm(SqfMonomial m) const { return SqfMonomial(support | m.support); }

    /// this / gcd(this, d) -- the quotient that generates colon ideals.
    constexpr SqfMonomial quotient_by(SqfMonomial d) const { return SqfMonomial(support & ~d.support); }

    friend constexpr auto operator<=>(SqfMonomial a, SqfMonomial b) = default;
};

/// Renders as "x0*x2*x5"; the constant monomial renders as "1".
std::string render(SqfMonomial m);

} // namespace pathideal
