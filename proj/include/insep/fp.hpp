#ifndef INSEP_FP_HPP
#define INSEP_FP_HPP

#include <cstdint>

#include "insep/errors.hpp"

// Arithmetic in the prime field F_p with p a runtime value.  Elements are the
// least non-negative residues, stored as uint32_t; every operation takes p.

namespace insep::fp {

inline bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint32_t reduce(std::uint64_t v, std::uint32_t p) {
    return static_cast<std::uint32_t>(v % p);
}

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return add(a, neg(b, p), p);
}

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

inline std::uint32_t pow(std::uint32_t a, std::uint64_t n, std::uint32_t p) {
    std::uint32_t r = 1 % p;
    std::uint32_t base = a % p;
    while (n) {
        if (n & 1) r = mul(r, base, p);
        base = mul(base, base, p);
        n >>= 1;
    }
    return r;
}

inline std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw DivisionByZero("inverse of 0 in F_p");
    return pow(a, p - 2, p);  // Fermat; p is prime by construction
}

}  // namespace insep::fp

#endif
