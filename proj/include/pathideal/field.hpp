#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace pathideal {

/// Coefficient field for homology ranks: a prime field GF(p) or the rationals.
struct FieldSpec {
    enum class Kind { prime, rational };

    Kind kind = Kind::prime;
    std::uint32_t p = 2;

    static FieldSpec gf(std::uint32_t prime); // throws unless prime
    static FieldSpec rationals() { return {Kind::rational, 0}; }

    bool is_rational() const { return kind == Kind::rational; }
    std::string name() const; // "GF(2)", "GF(3)", "QQ"

    /// Accepts "gf2", "GF(2)", "gf(7)", "qq", "q", "rational", "rationals".
    static FieldSpec parse(std::string_view s);

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

} // namespace pathideal
