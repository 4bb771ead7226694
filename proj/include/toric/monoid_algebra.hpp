#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>

#include "toric/exact_linalg.hpp"
#include "toric/monoids.hpp"

/**
 * Arithmetic in the monoid algebra R[M] for R one of Z, Q or Z/m.
 *
 * An element is a finite sum of coefficients times basis elements e_x with x
 * in M. Coefficients are stored as rationals in normal form for the ring:
 * integers for Z, residues in [0, m) for Z/m.
 */
namespace toric {

enum class RingKind { integers, rationals, integers_mod };

class CoeffRing
{
    public:
        static CoeffRing integers() { return CoeffRing(RingKind::integers, 0); }
        static CoeffRing rationals() { return CoeffRing(RingKind::rationals, 0); }
        /** Z/m for m >= 2. */
        static CoeffRing integers_mod(const Integer& m);

        RingKind kind() const { return kind_; }
        const Integer& modulus() const { return modulus_; }

        /** The normal form of x in this ring; throws if x is not an element. */
        Rational normalize(const Rational& x) const;

        bool operator==(const CoeffRing& other) const = default;
        std::string to_string() const;

    private:
        CoeffRing(RingKind kind, Integer m) : kind_(kind), modulus_(std::move(m)) {}

        RingKind kind_;
        Integer modulus_;
};

class AlgebraMismatchError : public std::invalid_argument
{
    public:
        explicit AlgebraMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

class UnsupportedMorphismError : public std::invalid_argument
{
    public:
        explicit UnsupportedMorphismError(const std::string& what) : std::invalid_argument(what) {}
};

using MonoidRef = std::shared_ptr<const AffineMonoid>;
using Terms = std::map<IntVector, Rational>;

class AlgebraElement
{
    public:
        static AlgebraElement zero(const CoeffRing& ring, MonoidRef monoid);
        /** Normalizes coefficients, drops zeros, and checks every key lies in the monoid. */
        static AlgebraElement from_terms(const CoeffRing& ring, MonoidRef monoid, const Terms& terms);

        const CoeffRing& ring() const { return ring_; }
        const MonoidRef& monoid() const { return monoid_; }
        const Terms& terms() const { return terms_; }
        bool is_zero() const { return terms_.empty(); }
        /** Coefficient of e_x. */
        Rational coefficient(const IntVector& x) const;

        /** Same ring and equal term maps; monoids are assumed compatible. */
        bool operator==(const AlgebraElement& other) const
        {
            return ring_ == other.ring_ && terms_ == other.terms_;
        }

        std::string to_string() const;

    private:
        AlgebraElement(CoeffRing ring, MonoidRef monoid) : ring_(std::move(ring)), monoid_(std::move(monoid)) {}

        CoeffRing ring_;
        MonoidRef monoid_;
        Terms terms_;
};

/** e_m; throws NotAMemberError when m is not in the monoid. */
AlgebraElement exp_map(const CoeffRing& ring, MonoidRef monoid, const IntVector& m);

/** The image of r under R -> R[M], that is r·e_0. */
AlgebraElement structural_image(const CoeffRing& ring, MonoidRef monoid, const Rational& r);

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement negate(const AlgebraElement& a);
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

/** Sum of the coefficients: the ring morphism R[M] -> R induced by M -> 0. */
Rational augmentation(const AlgebraElement& a);

/** The same terms read in R[M - T]. */
AlgebraElement localization_image(const AlgebraElement& a, const DifferenceExtension& ext);

/** b = localization_image(numerator) · e_{-t}^k */
struct Fraction
{
    AlgebraElement numerator;
    IntVector t;
    unsigned long k = 0;
};

/**
 * Writes an element of R[M - t] as a fraction over R[M]. Throws
 * std::invalid_argument when no power of e_t up to `max_power` clears it.
 */
Fraction as_fraction(const AlgebraElement& b, MonoidRef base, const IntVector& t,
                     unsigned long max_power = 64);

/**
 * Applies the canonical ring map to every coefficient. Supported: identity,
 * Z -> Q, Z -> Z/m and Z/m -> Z/d for d dividing m.
 */
AlgebraElement base_change(const AlgebraElement& a, const CoeffRing& target);

}  // namespace toric
