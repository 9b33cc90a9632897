#include "pathideal/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathideal {

MonomialIdeal MonomialIdeal::zero(int ambient) {
    MonomialIdeal i;
    i.ambient_ = ambient;
    return i;
}

MonomialIdeal MonomialIdeal::unit(int ambient) {
    MonomialIdeal i;
    i.ambient_ = ambient;
    i.gens_ = {SqfMonomial{}};
    return i;
}

MonomialIdeal MonomialIdeal::make(int ambient, std::vector<SqfMonomial> monomials) {
    if (ambient < 0 || ambient > 64) throw std::invalid_argument("bad ambient variable count");
    std::uint64_t allowed = ambient == 64 ? ~0ull : (1ull << ambient) - 1;
    for (auto m : monomials)
        if (m.support & ~allowed)
            throw std::invalid_argument("monomial uses a variable outside the ambient ring");
    std::sort(monomials.begin(), monomials.end(),
              [](SqfMonomial a, SqfMonomial b) {
                  return a.degree() != b.degree() ? a.degree() < b.degree() : a.support < b.support;
              });
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    MonomialIdeal out;
    out.ambient_ = ambient;
    for (auto m : monomials) {
        bool divisible = false;
        for (auto kept : out.gens_)
            if (kept.divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) out.gens_.push_back(m);
    }
    std::sort(out.gens_.begin(), out.gens_.end());
    return out;
}

bool MonomialIdeal::contains(SqfMonomial m) const {
    for (auto g : gens_)
        if (g.divides(m)) return true;
    return false;
}

std::string MonomialIdeal::render() const {
    if (is_zero()) return "(0)";
    std::string out = "(";
    for (std::size_t k = 0; k < gens_.size(); ++k) {
        if (k) out += ", ";
        out += pathideal::render(gens_[k]);
    }
    return out + ")";
}

MonomialIdeal minimalize(int ambient, const std::vector<SqfMonomial>& monomials) {
    return MonomialIdeal::make(ambient, monomials);
}

MonomialIdeal edge_ideal(const Graph& g) {
    std::vector<SqfMonomial> gens;
    for (auto [u, v] : g.edges()) gens.push_back(SqfMonomial((1ull << u) | (1ull << v)));
    return MonomialIdeal::make(g.order(), std::move(gens));
}

MonomialIdeal path_ideal(const Graph& g, int t) {
    if (t < 3) throw std::invalid_argument("path ideals are defined for t >= 3");
    return MonomialIdeal::make(g.order(), enumerate_path_monomials(g, t));
}

MonomialIdeal colon(const MonomialIdeal& i, SqfMonomial m) {
    std::vector<SqfMonomial> quotients;
    quotients.reserve(i.gens().size());
    for (auto g : i.gens()) quotients.push_back(g.quotient_by(m));
    return MonomialIdeal::make(i.ambient(), std::move(quotients));
}

MonomialIdeal sum(const MonomialIdeal& i, const MonomialIdeal& j) {
    if (i.ambient() != j.ambient())
        throw std::invalid_argument("ideal sum needs matching ambient rings");
    std::vector<SqfMonomial> gens = i.gens();
    gens.insert(gens.end(), j.gens().begin(), j.gens().end());
    return MonomialIdeal::make(i.ambient(), std::move(gens));
}

std::vector<int> generated_in_degrees(const MonomialIdeal& i) {
    std::vector<int> degs;
    for (auto g : i.gens()) degs.push_back(g.degree());
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    return degs;
}

bool is_variable_generated(const MonomialIdeal& i) {
    for (auto g : i.gens())
        if (g.degree() != 1) return false;
    return true;
}

} // namespace pathideal
