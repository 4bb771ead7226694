#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric/cones.hpp"
#include "toric/exact_linalg.hpp"
#include "toric/verdict.hpp"

/**
 * Finitely generated submonoids of Z^n.
 *
 * Every monoid here is cancellable and torsionfree because it sits inside
 * Z^n. The interesting cases are the lattice-point monoids of rational cones
 * (the dual monoids of fan cones), which are saturated in their group of
 * differences.
 */
namespace toric {

class NotSaturatedError : public std::runtime_error
{
    public:
        explicit NotSaturatedError(const std::string& what) : std::runtime_error(what) {}
};

class NotAMemberError : public std::runtime_error
{
    public:
        explicit NotAMemberError(const std::string& what) : std::runtime_error(what) {}
};

class NotAFaceError : public std::runtime_error
{
    public:
        explicit NotAFaceError(const std::string& what) : std::runtime_error(what) {}
};

/**
 * Hilbert basis of a saturated monoid C ∩ L. The pointed part is the unique
 * minimal generating set modulo units; the unit group is the lattice spanned
 * by `lineality`, contributing ±lineality to a generating set.
 */
struct HilbertBasis
{
    std::vector<IntVector> pointed;    ///< sorted
    std::vector<IntVector> lineality;  ///< Hermite basis of the unit group

    /** pointed ∪ lineality ∪ -lineality, sorted. */
    std::vector<IntVector> generators() const;
};

class AffineMonoid
{
    public:
        /** The lattice points of a rational cone. */
        static AffineMonoid of_cone(const Polycone& c);
        /** The submonoid generated by `gens`; saturation is decided on construction. */
        static AffineMonoid generated_by(std::size_t ambient_rank, std::vector<IntVector> gens);

        std::size_t ambient_rank() const { return ambient_rank_; }
        /** Designated generating set; the Hilbert basis when saturated. Sorted, no zeros. */
        const std::vector<IntVector>& generators() const { return generators_; }
        /** Hermite basis of the group of differences. */
        const IntMatrix& diff_lattice() const { return diff_lattice_; }
        std::size_t rank() const { return diff_lattice_.rows(); }
        /** cone(generators) */
        const Polycone& cone() const { return cone_; }
        /** Equal to cone() ∩ diff_lattice(). */
        bool saturated() const { return hilbert_basis_.has_value(); }
        const std::optional<HilbertBasis>& cached_hilbert_basis() const { return hilbert_basis_; }

        bool contains(const IntVector& v) const;

    private:
        std::size_t ambient_rank_ = 0;
        std::vector<IntVector> generators_;
        IntMatrix diff_lattice_;
        Polycone cone_;
        std::optional<HilbertBasis> hilbert_basis_;
};

/** σ∨ ∩ Z^n with its Hilbert basis. */
AffineMonoid dual_monoid(const Polycone& sigma);

/** Hilbert basis of a saturated monoid; throws NotSaturatedError otherwise. */
HilbertBasis hilbert_basis(const AffineMonoid& m);

/** Hilbert basis of c ∩ lattice, where span(lattice) == span(c). */
HilbertBasis hilbert_basis_in_lattice(const Polycone& c, const IntMatrix& lattice);

bool membership(const AffineMonoid& m, const IntVector& v);

/**
 * Decides whether v is an N-combination of `gens` by a bounded search; the
 * units among the generators are handled as a lattice.
 */
bool in_generated_monoid(std::size_t ambient_rank, const std::vector<IntVector>& gens,
                         const IntVector& v);

/** Set equality by mutual generator membership. */
bool same_monoid(const AffineMonoid& a, const AffineMonoid& b);

struct DifferenceExtension
{
    AffineMonoid base;
    std::vector<IntVector> inverted;
    AffineMonoid result;
};

/** M - T: adjoin the negatives of the elements of T. */
DifferenceExtension monoid_of_differences(const AffineMonoid& m, const std::vector<IntVector>& t);

bool is_integrally_closed(const AffineMonoid& m);

AffineMonoid monoid_sum(const AffineMonoid& a, const AffineMonoid& b);

struct LocalizingElement
{
    IntVector u;
    /** For each generator h of the small monoid, the k with h + k·u in the big one. */
    std::vector<std::pair<IntVector, Integer>> certificate;
};

/**
 * u ∈ σ∨_M with τ = σ ∩ ker(u) and τ∨_M = σ∨_M - u, together with a verified
 * certificate. Throws NotAFaceError if tau is not a face of sigma.
 */
LocalizingElement find_localizing_element(const AffineMonoid& big,
                                          const AffineMonoid& small_face_monoid,
                                          const Polycone& sigma, const Polycone& tau);

struct ImmersionCheck
{
    Tri verdict = Tri::unknown;
    std::optional<IntVector> t;  ///< certificate when verdict is yes
    std::string reason;
};

/**
 * Decides whether target == source - t for a single t in source. Saturated
 * sources are decided exactly via their faces; otherwise t is searched among
 * N-combinations of source generators of total degree <= search_bound.
 * Throws std::invalid_argument unless source ⊆ target.
 */
ImmersionCheck check_openly_immersive_pair(const AffineMonoid& target, const AffineMonoid& source,
                                           std::size_t search_bound = 6);

}  // namespace toric
