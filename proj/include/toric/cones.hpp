#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric/exact_linalg.hpp"

namespace toric {

class NotPointedError : public std::runtime_error
{
    public:
        explicit NotPointedError(const std::string& what) : std::runtime_error(what) {}
};

/**
 * A rational polyhedral cone in Q^n carried in both descriptions:
 *
 *     cone = cone(rays) + span(lineality)
 *          = { x : <u,x> >= 0 for u in normals, <e,x> = 0 for e in equations }
 *
 * Canonical form: lineality and equations are saturated lattice bases in
 * Hermite form; rays are primitive, orthogonal to the lineality space and
 * sorted; normals are primitive, orthogonal to the equations (so they lie in
 * the span of the cone) and sorted. Two cones are equal iff their canonical
 * forms are.
 *
 * The zero cone has no rays, no normals and the full space as equations.
 */
class Polycone
{
    public:
        Polycone() = default;

        /** Cone generated by the given vectors plus the span of `lineality`. */
        static Polycone from_generators(std::size_t ambient_rank,
                                        const std::vector<IntVector>& rays,
                                        const std::vector<IntVector>& lineality = {});
        /** Cone cut out by <a,x> >= 0 for `inequalities` and <e,x> = 0 for `equations`. */
        static Polycone from_inequalities(std::size_t ambient_rank,
                                          const std::vector<IntVector>& inequalities,
                                          const std::vector<IntVector>& equations = {});
        static Polycone zero(std::size_t ambient_rank);

        std::size_t ambient_rank() const { return ambient_rank_; }
        const std::vector<IntVector>& rays() const { return rays_; }
        const std::vector<IntVector>& lineality() const { return lineality_; }
        const std::vector<IntVector>& normals() const { return normals_; }
        const std::vector<IntVector>& equations() const { return equations_; }

        std::size_t dim() const { return ambient_rank_ - equations_.size(); }
        std::size_t lineality_rank() const { return lineality_.size(); }
        bool pointed() const { return lineality_.empty(); }
        bool is_zero() const { return rays_.empty() && lineality_.empty(); }

        /** Integer point membership. */
        bool contains(const IntVector& v) const;

        /** Orders by (dim, rays, lineality); consistent with equality. */
        std::strong_ordering operator<=>(const Polycone& other) const;
        bool operator==(const Polycone& other) const;

        std::string to_string() const;

    private:
        std::size_t ambient_rank_ = 0;
        std::vector<IntVector> rays_;
        std::vector<IntVector> lineality_;
        std::vector<IntVector> normals_;
        std::vector<IntVector> equations_;
};

/** The dual has the same representation; it may contain lines. */
using DualCone = Polycone;

Polycone cone_from_rays(std::size_t ambient_rank, const std::vector<IntVector>& generators);

/** Dual cone via double description applied to the halfspace description. */
DualCone dual_cone(const Polycone& c);

struct Face
{
    Polycone cone;
    /** A covector in the dual with cone == sigma ∩ ker(witness). */
    IntVector witness;
};

/** Face lattice of a pointed cone, ordered by (dim, rays). */
class FaceLattice
{
    public:
        explicit FaceLattice(std::vector<Face> faces);

        const std::vector<Face>& faces() const { return faces_; }
        std::size_t size() const { return faces_.size(); }
        /** faces[i] ⪯ faces[j] */
        bool precedes(std::size_t i, std::size_t j) const;
        /** Index of a face equal to c, or size() if none. */
        std::size_t find(const Polycone& c) const;

    private:
        std::vector<Face> faces_;
};

/** All faces of a pointed cone including {0} and the cone itself. */
FaceLattice faces(const Polycone& c);

bool contains_point(const Polycone& c, const RatVector& p);

Polycone intersect_cones(const Polycone& a, const Polycone& b);

/** True iff tau is a face of the pointed cone sigma. */
bool is_face_of(const Polycone& tau, const Polycone& sigma);

/**
 * The covector summing the normals of sigma that vanish on all rays of tau;
 * when tau is a face this cuts it out of sigma.
 */
IntVector face_witness(const Polycone& sigma, const Polycone& tau);

/** The same cone with coordinates rewritten by x -> x * transform. */
Polycone transform_cone(const Polycone& c, const IntMatrix& transform);

namespace detail {

/** Generator description of { x : <a,x> >= 0 for every a }. */
struct GeneratorSystem
{
    std::vector<IntVector> lineality;
    std::vector<IntVector> rays;
};

GeneratorSystem double_description(std::size_t ambient_rank,
                                   const std::vector<IntVector>& inequalities);

}  // namespace detail

}  // namespace toric
