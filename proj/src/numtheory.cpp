#include "pg/numtheory.hpp"

#include "pg/errors.hpp"

#include <numeric>

namespace pg {

std::vector<std::pair<num, int>> factorize(num m) {
    if (m < 1) fail(errc::out_of_range, "factorize: argument must be positive");
    std::vector<std::pair<num, int>> out;
    for (num p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p) continue;
        int e = 0;
        while (m % p == 0) { m /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

num euler_phi(num m) {
    if (m < 1) fail(errc::out_of_range, "euler_phi: argument must be positive");
    num phi = 1;
    for (auto [p, e] : factorize(m)) {
        num pe = 1;
        for (int i = 1; i < e; ++i) pe *= p;
        phi *= pe * (p - 1);
    }
    return phi;
}

bool is_prime(num m) {
    if (m < 2) return false;
    for (num p = 2; p * p <= m; ++p)
        if (m % p == 0) return false;
    return true;
}

std::optional<std::pair<num, int>> prime_power(num m) {
    if (m < 2) return std::nullopt;
    auto f = factorize(m);
    if (f.size() != 1) return std::nullopt;
    return std::make_pair(f[0].first, f[0].second);
}

PhiDivides phi_divides(num m, num n) {
    if (m < 1 || n < 1 || n % m != 0)
        fail(errc::precondition_violated, "phi_divides: m must divide n");
    bool equal = (m == n) || (m % 2 == 1 && n == 2 * m);
    return {true, equal};
}

num gcd_ll(num a, num b) { return std::gcd(a, b); }
num lcm_ll(num a, num b) { return std::lcm(a, b); }

} // namespace pg
