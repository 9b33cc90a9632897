#include "pathideal/field.hpp"

#include <stdexcept>

namespace pathideal {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::gf(std::uint32_t prime) {
    if (!is_prime(prime)) throw std::invalid_argument("GF(p) needs a prime p");
    return {Kind::prime, prime};
}

std::string FieldSpec::name() const {
    if (kind == Kind::rational) return "QQ";
    return "GF(" + std::to_string(p) + ")";
}

FieldSpec FieldSpec::parse(std::string_view s) {
    std::string low;
    for (char c : s)
        low += static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
    if (low == "q" || low == "qq" || low == "rational" || low == "rationals")
        return rationals();
    std::string_view rest = low;
    if (rest.substr(0, 2) == "gf") rest.remove_prefix(2);
    if (!rest.empty() && rest.front() == '(') rest.remove_prefix(1);
    if (!rest.empty() && rest.back() == ')') rest.remove_suffix(1);
    if (!rest.empty()) {
        std::uint64_t p = 0;
        for (char c : rest) {
            if (c < '0' || c > '9') throw std::invalid_argument("unrecognized field: " + std::string(s));
            p = p * 10 + static_cast<std::uint64_t>(c - '0');
            if (p > 0x7fffffff) throw std::invalid_argument("prime too large: " + std::string(s));
        }
        return gf(static_cast<std::uint32_t>(p));
    }
    throw std::invalid_argument("unrecognized field: " + std::string(s));
}

} // namespace pathideal
