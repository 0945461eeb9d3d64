#pragma once

// Hadamard matrices from Sylvester doubling, Paley's first construction over
// primes q = 3 (mod 4), and Kronecker products of those.

#include <cstdint>
#include <string>

#include "olhgen/core.hpp"

namespace olhgen {

namespace detail {

constexpr bool is_prime(std::size_t q) noexcept {
    if (q < 2) return false;
    for (std::size_t d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

constexpr bool paley_order(std::size_t order) noexcept {
    return order >= 4 && is_prime(order - 1) && (order - 1) % 4 == 3;
}

inline IntMatrix paley_hadamard(std::size_t order) {
    const std::size_t q = order - 1;
    std::vector<int> chi(q, -1);
    chi[0] = 0;
    for (std::size_t x = 1; x < q; ++x) chi[(x * x) % q] = 1;
    IntMatrix h(order, order);
    h(0, 0) = 1;
    for (std::size_t j = 1; j < order; ++j) {
        h(0, j) = 1;
        h(j, 0) = -1;
    }
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) h(i + 1, j + 1) = i == j ? 1 : chi[(j + q - i) % q];
    return h;
}

}  // namespace detail

/// Whether hadamard(order) can be generated.
inline bool hadamard_supported(std::size_t order) {
    if (order == 1 || order == 2) return true;
    if (order % 4 != 0) return false;
    if (hadamard_supported(order / 2)) return true;
    if (detail::paley_order(order)) return true;
    for (std::size_t a = 4; a * a <= order; a += 4)
        if (order % a == 0 && hadamard_supported(a) && hadamard_supported(order / a)) return true;
    return false;
}

/// Square +-1 matrix H with H'H = order * I.
inline SignMatrix hadamard(std::size_t order) {
    if (order == 0) fail(Errc::invalid_argument, "Hadamard order must be positive");
    if (order == 1) return SignMatrix(IntMatrix{{1}});
    const IntMatrix h2{{1, 1}, {1, -1}};
    if (order == 2) return SignMatrix(h2);
    if (order % 4 == 0) {
        if (hadamard_supported(order / 2)) return SignMatrix(kron(h2, hadamard(order / 2).entries()));
        if (detail::paley_order(order)) return SignMatrix(detail::paley_hadamard(order));
        for (std::size_t a = 4; a * a <= order; a += 4)
            if (order % a == 0 && hadamard_supported(a) && hadamard_supported(order / a))
                return SignMatrix(kron(hadamard(a).entries(), hadamard(order / a).entries()));
    }
    fail(Errc::unsupported_order,
         "no Hadamard matrix of order " + std::to_string(order) +
             " from Sylvester doubling, Paley (q prime, q = 3 mod 4) or their Kronecker products");
}

}  // namespace olhgen
