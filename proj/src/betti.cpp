#include "pathideal/betti.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <stdexcept>

#include "pathideal/homology.hpp"

namespace pathideal {

void BettiTable::add(int i, int j, long long r) {
    if (r <= 0) return;
    entries_[{i, j}] += r;
}

long long BettiTable::rank(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

int BettiTable::regularity() const {
    if (entries_.empty()) throw std::logic_error("regularity of an empty Betti table");
    int best = INT_MIN;
    for (const auto& [ij, r] : entries_) best = std::max(best, ij.second - ij.first);
    return best;
}

int BettiTable::max_homological_index() const {
    int best = 0;
    for (const auto& [ij, r] : entries_) best = std::max(best, ij.first);
    return best;
}

std::vector<std::array<long long, 3>> BettiTable::triples() const {
    std::vector<std::array<long long, 3>> out;
    out.reserve(entries_.size());
    for (const auto& [ij, r] : entries_) out.push_back({ij.first, ij.second, r});
    return out;
}

BettiTable BettiTable::from_triples(FieldSpec f, const std::vector<std::array<long long, 3>>& t) {
    BettiTable out(f);
    for (const auto& e : t) out.add(static_cast<int>(e[0]), static_cast<int>(e[1]), e[2]);
    return out;
}

namespace {

void require_engine_input(const MonomialIdeal& i, const BettiOptions& opts) {
    if (i.is_zero()) throw std::invalid_argument("Betti numbers of the zero ideal are undefined here");
    if (i.is_unit()) throw std::invalid_argument("Betti numbers need a proper ideal");
    int cap = std::min(opts.ambient_cap, kEngineHardCap);
    if (i.ambient() > cap)
        throw std::invalid_argument("ambient " + std::to_string(i.ambient()) +
                                    " exceeds the exact engine cap " + std::to_string(cap));
}

} // namespace

BettiTable betti_hochster(const MonomialIdeal& i, const FieldSpec& f, const BettiOptions& opts) {
    require_engine_input(i, opts);
    SimplicialComplex delta = stanley_reisner(i);
    BettiTable table(f);
    std::uint32_t full = i.ambient() >= 32 ? ~0u : (1u << i.ambient()) - 1;
    for (std::uint32_t w = 0;; ++w) {
        SimplicialComplex res = delta.restricted_to(w);
        if (!opts.prune_cones || !res.cone_apexes()) {
            int j = std::popcount(w);
            for (const auto& [deg, dim] : reduced_homology_dims(res, f)) {
                int idx = j - deg - 2;
                if (idx >= 0) table.add(idx, j, dim);
            }
        }
        if (w == full) break;
    }
    return table;
}

BettiTable betti_upper_koszul(const MonomialIdeal& i, const FieldSpec& f, const BettiOptions& opts) {
    require_engine_input(i, opts);
    BettiTable table(f);
    std::uint32_t full = i.ambient() >= 32 ? ~0u : (1u << i.ambient()) - 1;
    for (std::uint32_t sigma = 1;; ++sigma) {
        // facets of K^sigma are sigma minus a generator contained in sigma;
        // no such generator means the complex is void and contributes nothing
        std::vector<std::uint32_t> facets;
        for (auto g : i.gens()) {
            std::uint32_t gm = static_cast<std::uint32_t>(g.support);
            if ((gm & sigma) == gm) facets.push_back(sigma & ~gm);
        }
        if (!facets.empty()) {
            SimplicialComplex k = SimplicialComplex::from_facets(i.ambient(), std::move(facets));
            if (!opts.prune_cones || !k.cone_apexes()) {
                int j = std::popcount(sigma);
                for (const auto& [deg, dim] : reduced_homology_dims(k, f)) {
                    if (deg + 1 >= 0) table.add(deg + 1, j, dim);
                }
            }
        }
        if (sigma == full) break;
    }
    return table;
}

std::vector<long long> hilbert_numerator(const MonomialIdeal& i) {
    if (i.is_unit()) throw std::invalid_argument("Hilbert numerator needs a proper ideal");
    int k = i.generator_count();
    if (k > 20) throw std::invalid_argument("inclusion-exclusion supports at most 20 generators");
    std::vector<long long> coeff(static_cast<std::size_t>(i.ambient()) + 1, 0);
    for (std::uint32_t sub = 0; sub < (1u << k); ++sub) {
        std::uint64_t lcm = 0;
        std::uint32_t bits = sub;
        while (bits) {
            int g = std::countr_zero(bits);
            bits &= bits - 1;
            lcm |= i.gens()[static_cast<std::size_t>(g)].support;
        }
        int deg = std::popcount(lcm);
        coeff[static_cast<std::size_t>(deg)] += (std::popcount(sub) % 2 == 0) ? 1 : -1;
    }
    return coeff;
}

std::vector<long long> hilbert_numerator_from_faces(const MonomialIdeal& i) {
    if (i.is_unit()) throw std::invalid_argument("Hilbert numerator needs a proper ideal");
    int n = i.ambient();
    SimplicialComplex delta = stanley_reisner(i);
    std::vector<long long> face_count(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& level : delta.faces_by_size())
        if (!level.empty())
            face_count[static_cast<std::size_t>(std::popcount(level.front()))] +=
                static_cast<long long>(level.size());
    // N(t) = sum_s f_s t^s (1-t)^(n-s)
    std::vector<long long> coeff(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<long long>> binom(static_cast<std::size_t>(n) + 1,
                                              std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
    for (int a = 0; a <= n; ++a) {
        binom[static_cast<std::size_t>(a)][0] = 1;
        for (int b = 1; b <= a; ++b)
            binom[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                binom[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] +
                binom[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)];
    }
    for (int s = 0; s <= n; ++s) {
        if (!face_count[static_cast<std::size_t>(s)]) continue;
        for (int b = 0; b + s <= n; ++b) {
            long long term = face_count[static_cast<std::size_t>(s)] *
                             binom[static_cast<std::size_t>(n - s)][static_cast<std::size_t>(b)];
            coeff[static_cast<std::size_t>(s + b)] += (b % 2 == 0) ? term : -term;
        }
    }
    return coeff;
}

bool consistent_with_hilbert(const BettiTable& ideal_table, const std::vector<long long>& numerator) {
    // quotient convention: beta_{i,j}(quotient) = beta_{i-1,j}(ideal), beta_{0,0} = 1
    std::map<int, long long> alt;
    for (const auto& [ij, r] : ideal_table.entries()) {
        int quotient_i = ij.first + 1;
        alt[ij.second] += (quotient_i % 2 == 0) ? r : -r;
    }
    alt[0] += 1;
    for (int j = 0; j < static_cast<int>(numerator.size()); ++j) {
        long long expect = numerator[static_cast<std::size_t>(j)];
        auto it = alt.find(j);
        long long got = it == alt.end() ? 0 : it->second;
        if (expect != got) return false;
    }
    for (const auto& [j, v] : alt)
        if ((j < 0 || j >= static_cast<int>(numerator.size())) && v != 0) return false;
    return true;
}

BettiTable to_quotient_convention(const BettiTable& ideal_table) {
    BettiTable out(ideal_table.field());
    out.add(0, 0, 1);
    for (const auto& [ij, r] : ideal_table.entries()) out.add(ij.first + 1, ij.second, r);
    return out;
}

int regularity(const BettiTable& t) { return t.regularity(); }

int regularity(const MonomialIdeal& i, const FieldSpec& f, const BettiOptions& opts) {
    if (i.is_zero()) throw std::invalid_argument("regularity of the zero ideal is undefined here");
    return betti_hochster(i, f, opts).regularity();
}

LinearitySteps linearity_steps(const BettiTable& t, int gen_degree) {
    int top = t.max_homological_index();
    for (int i = 1; i <= top; ++i)
        for (const auto& [ij, r] : t.entries())
            if (ij.first == i && ij.second != i + gen_degree)
                return LinearitySteps::finite(i - 1);
    return LinearitySteps::inf();
}

LinearitySteps linearity_steps(const MonomialIdeal& i, const FieldSpec& f, const BettiOptions& opts) {
    if (i.is_zero()) throw std::invalid_argument("linearity steps of the zero ideal are undefined");
    auto degs = generated_in_degrees(i);
    if (degs.size() != 1)
        throw std::invalid_argument("linearity steps need an ideal generated in a single degree");
    return linearity_steps(betti_hochster(i, f, opts), degs[0]);
}

} // namespace pathideal
