#pragma once

// Independent reference procedures used only by tests. Nothing here calls
// into the double description or Hilbert basis code paths.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "toric/exact_linalg.hpp"

namespace toric::oracle {

/** A row a with the constraint a . x >= b. */
struct Inequality
{
    std::vector<Rational> a;
    Rational b;
};

/** Feasibility of a system of inequalities by Fourier–Motzkin elimination. */
inline bool fourier_motzkin_feasible(std::vector<Inequality> sys, std::size_t nvars)
{
    for (std::size_t j = 0; j < nvars; ++j)
    {
        std::vector<Inequality> pos, neg, next;
        for (auto& c : sys)
        {
            if (c.a[j] > 0)
                pos.push_back(std::move(c));
            else if (c.a[j] < 0)
                neg.push_back(std::move(c));
            else
                next.push_back(std::move(c));
        }
        for (const auto& p : pos)
            for (const auto& q : neg)
            {
                Rational fp = -q.a[j];
                Rational fq = p.a[j];
                Inequality r{std::vector<Rational>(nvars), fp * p.b + fq * q.b};
                for (std::size_t k = 0; k < nvars; ++k)
                    r.a[k] = fp * p.a[k] + fq * q.a[k];
                // normalize to keep duplicates detectable
                Rational scale = 0;
                for (const auto& x : r.a)
                    if (x != 0)
                    {
                        scale = abs(x);
                        break;
                    }
                if (scale != 0)
                {
                    for (auto& x : r.a)
                        x /= scale;
                    r.b /= scale;
                }
                next.push_back(std::move(r));
            }
        // drop exact duplicates
        std::sort(next.begin(), next.end(), [](const Inequality& x, const Inequality& y) {
            if (x.a != y.a)
                return x.a < y.a;
            return x.b < y.b;
        });
        next.erase(std::unique(next.begin(), next.end(),
                               [](const Inequality& x, const Inequality& y) {
                                   return x.a == y.a && x.b == y.b;
                               }),
                   next.end());
        sys = std::move(next);
    }
    return std::all_of(sys.begin(), sys.end(), [](const Inequality& c) { return c.b <= 0; });
}

/**
 * Is p a nonnegative rational combination of `gens` (plus arbitrary
 * multiples of `lines`)? Decided by Fourier–Motzkin on the coefficients.
 */
inline bool in_cone_by_lp(const std::vector<IntVector>& gens, const std::vector<IntVector>& lines,
                          const std::vector<Rational>& p)
{
    const std::size_t n = p.size();
    std::vector<IntVector> all = gens;
    for (const auto& l : lines)
    {
        all.push_back(l);
        all.push_back(negated(l));
    }
    const std::size_t k = all.size();
    std::vector<Inequality> sys;
    for (std::size_t i = 0; i < n; ++i)
    {
        Inequality up{std::vector<Rational>(k), p[i]};
        Inequality down{std::vector<Rational>(k), -p[i]};
        for (std::size_t j = 0; j < k; ++j)
        {
            up.a[j] = all[j][i];
            down.a[j] = -all[j][i];
        }
        sys.push_back(std::move(up));
        sys.push_back(std::move(down));
    }
    for (std::size_t j = 0; j < k; ++j)
    {
        Inequality nonneg{std::vector<Rational>(k), 0};
        nonneg.a[j] = 1;
        sys.push_back(std::move(nonneg));
    }
    return fourier_motzkin_feasible(std::move(sys), k);
}

/** Calls f on every integer point of [-bound, bound]^n (or [0,bound]^n). */
inline void for_each_box_point(std::size_t n, long lo, long hi,
                               const std::function<void(const IntVector&)>& f)
{
    IntVector p(n, Integer(lo));
    if (n == 0)
    {
        f(p);
        return;
    }
    for (;;)
    {
        f(p);
        std::size_t i = 0;
        while (i < n && p[i] == hi)
        {
            p[i] = lo;
            ++i;
        }
        if (i == n)
            return;
        p[i] += 1;
    }
}

/**
 * Minimal nonzero elements of a set of points of a pointed monoid: those
 * that are not a sum of two nonzero members of the set.
 */
inline std::set<IntVector> minimal_elements(const std::set<IntVector>& points)
{
    std::set<IntVector> out;
    for (const auto& x : points)
    {
        if (is_zero(x))
            continue;
        bool reducible = false;
        for (const auto& y : points)
        {
            if (is_zero(y) || y == x)
                continue;
            IntVector z = sub(x, y);
            if (!is_zero(z) && points.count(z))
            {
                reducible = true;
                break;
            }
        }
        if (!reducible)
            out.insert(x);
    }
    return out;
}

}  // namespace toric::oracle
