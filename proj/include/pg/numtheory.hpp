#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace pg {

using num = long long;

// Sorted prime factorization; empty for m = 1. Trial division.
std::vector<std::pair<num, int>> factorize(num m);

num euler_phi(num m);

bool is_prime(num m);

// (p, r) with m = p^r, r >= 1, if m is a prime power.
std::optional<std::pair<num, int>> prime_power(num m);

struct PhiDivides {
    bool divides;
    bool equal;
};

// Requires m | n. divides is always true; equal iff m == n, or m odd and n == 2m.
PhiDivides phi_divides(num m, num n);

num gcd_ll(num a, num b);
num lcm_ll(num a, num b);

} // namespace pg
