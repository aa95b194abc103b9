#pragma once

#include "halfpower.hpp"
#include "roots.hpp"

#include <mutex>
#include <vector>

namespace fieldasym {

/// The two reference kernels whose derivatives drive every direction
/// polynomial:
///   Odd:   t / (1+t^2)^(3/2)     (odd function)
///   Even:  1 / (1+t^2)^(3/2)     (even function)
enum class KernelKind { Odd, Even };

inline const char* to_string(KernelKind k) { return k == KernelKind::Odd ? "odd" : "even"; }

inline constexpr unsigned kKernelOrderCap = 64;

inline HalfPowerForm base_kernel(KernelKind kind) {
    if (kind == KernelKind::Odd) return {UniPoly{Rational(0), Rational(1)}, 3, 0};
    return {UniPoly{Rational(1)}, 3, 0};
}

/// Numerator of the l-th derivative of the kernel over (1+t^2)^((2l+3)/2).
/// Successive numerators satisfy  N_l = (1+t^2) N_{l-1}' - (2l+1) t N_{l-1},
/// which the chain below applies once per level and memoizes.
inline const UniPoly& kernel_numerator(KernelKind kind, unsigned order,
                                       unsigned cap = kKernelOrderCap) {
    if (order > cap) throw std::invalid_argument("kernel derivative order exceeds cap");
    static std::mutex mutex;
    static std::vector<UniPoly> chain_odd{UniPoly{Rational(0), Rational(1)}};
    static std::vector<UniPoly> chain_even{UniPoly{Rational(1)}};
    std::scoped_lock lock(mutex);
    std::vector<UniPoly>& chain = kind == KernelKind::Odd ? chain_odd : chain_even;
    const UniPoly one_plus_t2{Rational(1), Rational(0), Rational(1)};
    const UniPoly t{Rational(0), Rational(1)};
    while (chain.size() <= order) {
        unsigned l = static_cast<unsigned>(chain.size());
        const UniPoly& prev = chain.back();
        chain.push_back(one_plus_t2 * prev.derivative() - Rational(2 * l + 1) * (t * prev));
    }
    return chain[order];
}

/// The l-th derivative of the kernel as a half-power form.
inline HalfPowerForm kernel_form(KernelKind kind, unsigned order) {
    return {kernel_numerator(kind, order), static_cast<int>(2 * order + 3), 0};
}

/// Re-derives the chain numerators by a plain quotient rule on the pair
/// (numerator, denominator exponent), reading the multiplier off the tracked
/// exponent instead of the derivative index; any off-by-one drift between the
/// two bookkeepings would show up as a mismatch.
inline bool kernel_chain_matches_quotient_rule(KernelKind kind, unsigned max_order) {
    const UniPoly one_plus_t2{Rational(1), Rational(0), Rational(1)};
    const UniPoly t{Rational(0), Rational(1)};
    UniPoly numerator = kind == KernelKind::Odd ? UniPoly{Rational(0), Rational(1)}
                                                : UniPoly{Rational(1)};
    unsigned denominator_exponent = 3;  // in units of (1+t^2)^(1/2)
    for (unsigned l = 0; l <= max_order; ++l) {
        if (!(numerator == kernel_numerator(kind, l))) return false;
        numerator = one_plus_t2 * numerator.derivative() -
                    Rational(denominator_exponent) * (t * numerator);
        denominator_exponent += 2;
    }
    return true;
}

/// Cross-family recurrence tying the two chains together:
///   odd_l(t) = l * even_{l-1}(t) * (1+t^2) + t * even_l(t).
inline bool kernel_identity_holds(unsigned order) {
    if (order == 0) return kernel_numerator(KernelKind::Odd, 0) ==
                           UniPoly{Rational(0), Rational(1)};
    const UniPoly one_plus_t2{Rational(1), Rational(0), Rational(1)};
    const UniPoly t{Rational(0), Rational(1)};
    UniPoly rhs = Rational(order) * (kernel_numerator(KernelKind::Even, order - 1) * one_plus_t2) +
                  t * kernel_numerator(KernelKind::Even, order);
    return kernel_numerator(KernelKind::Odd, order) == rhs;
}

struct KernelInterlacingReport {
    bool all_real = false;
    bool strictly_interlacing = false;
};

/// The odd-chain and even-chain numerators of equal order have all-real
/// root families that strictly interlace.
inline KernelInterlacingReport kernel_interlacing_check(unsigned order) {
    InterlacingVerdict verdict = interlacing_check(kernel_numerator(KernelKind::Odd, order),
                                                   kernel_numerator(KernelKind::Even, order));
    return {verdict.all_real_first && verdict.all_real_second, verdict.strictly_interlacing};
}

}  // namespace fieldasym
