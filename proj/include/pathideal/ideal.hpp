#pragma once

#include <string>
#include <vector>

#include "pathideal/graph.hpp"
#include "pathideal/monomial.hpp"

namespace pathideal {

/// Squarefree monomial ideal, stored as the antichain of minimal generators
/// over an ambient variable set x0..x{ambient-1}. The zero ideal has no
/// generators; the unit ideal is generated by the constant monomial 1 and is
/// only ever produced by colon.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    static MonomialIdeal zero(int ambient);
    static MonomialIdeal unit(int ambient);
    /// Minimalizes: keeps exactly the divisibility-minimal monomials.
    static MonomialIdeal make(int ambient, std::vector<SqfMonomial> monomials);

    int ambient() const { return ambient_; }
    const std::vector<SqfMonomial>& gens() const { return gens_; }
    int generator_count() const { return static_cast<int>(gens_.size()); }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
    bool is_proper() const { return !is_unit(); }

    /// Ideal membership: m is divisible by some minimal generator.
    bool contains(SqfMonomial m) const;

    /// "(x0*x1, x1*x2)"; zero renders "(0)", unit "(1)".
    std::string render() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    int ambient_ = 0;
    std::vector<SqfMonomial> gens_; // sorted, antichain
};

MonomialIdeal minimalize(int ambient, const std::vector<SqfMonomial>& monomials);

MonomialIdeal edge_ideal(const Graph& g);

/// Generated by the t-vertex path monomials, t >= 3.
MonomialIdeal path_ideal(const Graph& g, int t);

/// (i : m) = ({ g / gcd(g, m) }), minimalized. Defining property
/// u*m in i <=> u in (i : m) for squarefree u.
MonomialIdeal colon(const MonomialIdeal& i, SqfMonomial m);

MonomialIdeal sum(const MonomialIdeal& i, const MonomialIdeal& j);

/// Sorted distinct degrees of the minimal generators (empty for zero ideal).
std::vector<int> generated_in_degrees(const MonomialIdeal& i);

/// Every minimal generator has degree 1. Zero ideal counts vacuously true;
/// callers that care must branch on is_zero() themselves.
bool is_variable_generated(const MonomialIdeal& i);

} // namespace pathideal
