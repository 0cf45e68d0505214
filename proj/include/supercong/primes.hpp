#pragma once

#include <cstdint>
#include <vector>

namespace sc {

// Deterministic Miller-Rabin; the witness set is exact below 3.3e14.
bool is_prime(long n);

std::vector<long> primes_in(long lo, long hi);

} // namespace sc
