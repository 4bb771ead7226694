#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric/cones.hpp"
#include "toric/exact_linalg.hpp"

/**
 * Fans of pointed rational cones in Z^n.
 *
 * A fan is a finite set of cones, closed under taking faces, in which any two
 * cones meet in a common face. Ordered by the face relation it is a lower
 * semilattice with inf(σ, τ) = σ ∩ τ.
 */
namespace toric {

enum class FanViolation { non_pointed, missing_face, bad_intersection };

std::string_view to_string(FanViolation v);

class FanValidationError : public std::runtime_error
{
    public:
        FanValidationError(FanViolation kind, Polycone first, std::optional<Polycone> second);

        FanViolation kind() const { return kind_; }
        const Polycone& first() const { return first_; }
        const std::optional<Polycone>& second() const { return second_; }

    private:
        FanViolation kind_;
        Polycone first_;
        std::optional<Polycone> second_;
};

class Fan
{
    public:
        Fan() = default;

        std::size_t ambient_rank() const { return ambient_rank_; }
        /** Canonical cones sorted by (dim, rays). */
        const std::vector<Polycone>& cones() const { return cones_; }
        std::size_t size() const { return cones_.size(); }
        /** Σ = ∅, not to be confused with the trivial fan {0}. */
        bool empty() const { return cones_.empty(); }

        /** cones[i] ⪯ cones[j] */
        bool precedes(std::size_t i, std::size_t j) const { return face_relation_[i][j]; }
        /** Index of cones[i] ∩ cones[j]. */
        std::size_t inf(std::size_t i, std::size_t j) const { return inf_table_[i][j]; }
        /** Index of a cone equal to c, or size() if none. */
        std::size_t find(const Polycone& c) const;

        /** Primitive generators of the one-dimensional cones, sorted. */
        std::vector<IntVector> rays() const;
        /** Indices of cones that are not proper faces of other cones. */
        std::vector<std::size_t> maximal_cones() const;

        bool operator==(const Fan& other) const
        {
            return ambient_rank_ == other.ambient_rank_ && cones_ == other.cones_;
        }

    private:
        friend Fan validate_fan(std::size_t ambient_rank, std::vector<Polycone> cones);

        std::size_t ambient_rank_ = 0;
        std::vector<Polycone> cones_;
        std::vector<std::vector<bool>> face_relation_;
        std::vector<std::vector<std::size_t>> inf_table_;
};

/**
 * Checks the fan axioms and builds the semilattice. Violations are reported
 * in the order non-pointed, missing face, bad intersection.
 */
Fan validate_fan(std::size_t ambient_rank, std::vector<Polycone> cones);

/** Union of the face lattices, deduplicated and sorted. Throws NotPointedError. */
std::vector<Polycone> complete_under_faces(const std::vector<Polycone>& cones);

/** validate_fan(complete_under_faces(cone_from_rays of each ray list)). */
Fan fan_from_maximal_cones(std::size_t ambient_rank,
                           const std::vector<std::vector<IntVector>>& ray_lists);

/** The rays span V. */
bool is_full(const Fan& f);

/** The support is V, decided by the wall-crossing criterion. */
bool is_complete(const Fan& f);

/** Generated by part of a Z-basis of Z^n. */
bool is_regular_cone(const Polycone& c);

struct RegularityReport
{
    bool regular = true;
    std::vector<bool> per_cone;  ///< parallel to Fan::cones()
};

RegularityReport is_regular(const Fan& f);

struct FullificationResult
{
    Fan reduced_fan;
    /** n' x n: a Z-basis of N' = N ∩ span(fan). */
    IntMatrix sublattice_basis;
    /** (n - n') x n: the chosen complement, so that both stacked are unimodular. */
    IntMatrix complement;
    std::size_t torus_rank = 0;
    /** reduced_fan.cones()[i] corresponds to original cone cone_map[i]. */
    std::vector<std::size_t> cone_map;
};

FullificationResult fullify(const Fan& f);

}  // namespace toric
