#pragma once

#include <random>

#include "test_support.hpp"
#include "toric/monoid_algebra.hpp"

namespace toric::testing {

/** A random element with up to `max_terms` terms, keys being small sums of generators. */
inline AlgebraElement random_element(std::mt19937& rng, const CoeffRing& ring, MonoidRef m,
                                     std::size_t max_terms = 5)
{
    const auto& gens = m->generators();
    std::uniform_int_distribution<std::size_t> terms(0, max_terms);
    std::uniform_int_distribution<std::size_t> depth(0, 3);
    std::uniform_int_distribution<std::size_t> pick(0, gens.empty() ? 0 : gens.size() - 1);
    std::uniform_int_distribution<long> coeff(-6, 6);
    std::uniform_int_distribution<long> denom(1, 4);
    Terms t;
    for (std::size_t i = 0, k = terms(rng); i < k; ++i)
    {
        IntVector x(m->ambient_rank(), Integer(0));
        if (!gens.empty())
            for (std::size_t d = 0, s = depth(rng); d < s; ++d)
                x = add(x, gens[pick(rng)]);
        Rational c(coeff(rng));
        if (ring.kind() == RingKind::rationals)
            c /= denom(rng);
        t[x] += c;
    }
    return AlgebraElement::from_terms(ring, m, t);
}

}  // namespace toric::testing
