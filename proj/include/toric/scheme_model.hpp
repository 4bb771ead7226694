#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toric/fans.hpp"
#include "toric/monoids.hpp"
#include "toric/verdict.hpp"

/**
 * Schemes glued from projective systems of monoids, modeled combinatorially.
 *
 * A system is indexed by a finite lower semilattice I; for i <= j there is an
 * inclusion M_j ⊆ M_i (the transition p_ij). For a fan the index is the fan
 * ordered by faces and M_σ = σ∨ ∩ Z^n. The base scheme S is symbolic: a table
 * of three-valued flags and a dimension interval.
 */
namespace toric {

// ---------------------------------------------------------------------------
// Monoid systems

enum class SystemSource { fan, explicit_system };

class MonoidSystem
{
    public:
        /** The dual monoids of a fan over its face order. */
        static MonoidSystem from_fan(const Fan& f);
        /**
         * order[i][j] means i <= j and requires monoids[j] ⊆ monoids[i]. The
         * order must be a partial order with all pairwise infima.
         */
        static MonoidSystem explicit_system(std::size_t ambient_rank,
                                            std::vector<AffineMonoid> monoids,
                                            std::vector<std::vector<bool>> order,
                                            std::vector<std::string> labels = {});

        SystemSource source() const { return source_; }
        std::size_t ambient_rank() const { return ambient_rank_; }
        std::size_t size() const { return monoids_.size(); }
        bool empty() const { return monoids_.empty(); }
        const std::vector<AffineMonoid>& monoids() const { return monoids_; }
        const std::vector<std::string>& labels() const { return labels_; }
        /** The fan for fan systems. */
        const std::optional<Fan>& fan() const { return fan_; }

        bool leq(std::size_t i, std::size_t j) const { return order_[i][j]; }
        std::size_t inf(std::size_t i, std::size_t j) const { return inf_[i][j]; }
        /** Pairs (i, j) with i < j: the nontrivial transitions. */
        std::vector<std::pair<std::size_t, std::size_t>> transitions() const;
        /** Largest rank of a group of differences; nothing for the empty system. */
        std::optional<std::size_t> max_rank() const;

    private:
        SystemSource source_ = SystemSource::explicit_system;
        std::size_t ambient_rank_ = 0;
        std::vector<AffineMonoid> monoids_;
        std::vector<std::string> labels_;
        std::vector<std::vector<bool>> order_;
        std::vector<std::vector<std::size_t>> inf_;
        std::optional<Fan> fan_;
};

MonoidSystem system_from_fan(const Fan& f);

struct EdgeCertificate
{
    std::size_t lower = 0;  ///< i
    std::size_t upper = 0;  ///< j, with M_i = M_j - t
    Tri verdict = Tri::unknown;
    std::optional<IntVector> t;
    std::string reason;
};

struct ImmersivityResult
{
    Tri verdict = Tri::yes;
    std::vector<EdgeCertificate> edges;
};

/**
 * Decides per transition whether M_i = M_j - t for a single t in M_j. Fan
 * systems are certified by face witnesses; explicit systems use the bounded
 * search of check_openly_immersive_pair.
 */
ImmersivityResult is_openly_immersive(const MonoidSystem& s, std::size_t search_bound = 6);

struct Chart
{
    std::size_t index = 0;
    std::string label;
    AffineMonoid monoid;
    /** h with e_h - 1 generating the kernel of the augmentation: the canonical section. */
    std::vector<IntVector> section_ideal;
};

struct Transition
{
    std::size_t lower = 0;
    std::size_t upper = 0;
    IntVector u;  ///< M_lower = M_upper - u
    /** For each generator h of M_lower, the k with h + k·u in M_upper. */
    std::vector<std::pair<IntVector, Integer>> certificate;
};

struct GluingAtlas
{
    std::vector<Chart> charts;
    std::vector<Transition> transitions;
    /** Indices of charts not contained in a larger one. */
    std::vector<std::size_t> maximal_charts;
};

class NotOpenlyImmersiveError : public std::runtime_error
{
    public:
        explicit NotOpenlyImmersiveError(const std::string& what) : std::runtime_error(what) {}
};

/** Charts and certified transitions; throws unless every edge is certified. */
GluingAtlas build_atlas(const MonoidSystem& s, std::size_t search_bound = 6);

struct SeparationCheck
{
    bool holds = true;
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
    /** An element of M_inf(i,j) outside M_i + M_j. */
    std::optional<IntVector> witness;
};

/** M_inf(i,j) is generated by M_i ∪ M_j for every pair. */
SeparationCheck check_separation_condition(const MonoidSystem& s);

// ---------------------------------------------------------------------------
// Base descriptor

enum class BaseFlag {
    empty,
    affine,
    quasicompact,
    quasiseparated,
    separated,
    locally_noetherian,
    noetherian,
    pointwise_noetherian,
    topologically_noetherian,
    topologically_locally_noetherian,
    jacobsonian,
    reduced,
    irreducible,
    connected,
    integral,
    normal,
    cohen_macaulay,
    regular,
    universally_catenary,
    equidimensional,
    artinian,
};

inline constexpr std::size_t base_flag_count = 21;

std::string_view to_string(BaseFlag f);
std::optional<BaseFlag> base_flag_from_string(std::string_view name);
std::array<BaseFlag, base_flag_count> all_base_flags();

/** A dimension interval over N ∪ {∞}, or the empty scheme, or unknown. */
struct DimInterval
{
    enum class Kind { unknown, empty, range };
    Kind kind = Kind::unknown;
    Integer lo = 0;
    std::optional<Integer> hi;  ///< nothing means ∞

    static DimInterval unknown() { return {}; }
    static DimInterval empty_scheme() { return {Kind::empty, 0, Integer(0)}; }
    static DimInterval range(Integer lo, std::optional<Integer> hi)
    {
        return {Kind::range, std::move(lo), std::move(hi)};
    }

    bool operator==(const DimInterval& other) const = default;
    /** "[lo,hi]", "[lo,inf]", "empty" or "unknown". */
    std::string to_string() const;
};

class ContradictoryBaseError : public std::invalid_argument
{
    public:
        explicit ContradictoryBaseError(const std::string& what) : std::invalid_argument(what) {}
};

/**
 * Symbolic base scheme. Construction closes the given flags under the
 * standard implications (integral ⇔ reduced ∧ irreducible, noetherian ⇔
 * locally noetherian ∧ quasicompact, ...) including their contrapositives,
 * and throws ContradictoryBaseError on a conflict.
 */
class BaseDescriptor
{
    public:
        BaseDescriptor() : BaseDescriptor({}, DimInterval::unknown()) {}
        BaseDescriptor(const std::vector<std::pair<BaseFlag, Tri>>& flags, DimInterval dim);

        /** Spec of a field: nonempty, dimension 0, every niceness flag yes. */
        static BaseDescriptor field_point();
        static BaseDescriptor empty_scheme();

        Tri flag(BaseFlag f) const { return flags_[static_cast<std::size_t>(f)]; }
        const DimInterval& dim() const { return dim_; }
        /** The flags exactly as given, before closure. */
        const std::vector<std::pair<BaseFlag, Tri>>& given() const { return given_; }
        const DimInterval& given_dim() const { return given_dim_; }

    private:
        std::array<Tri, base_flag_count> flags_{};
        DimInterval dim_;
        std::vector<std::pair<BaseFlag, Tri>> given_;
        DimInterval given_dim_;
};

/**
 * Bounds for dim X from dim S and r = max rank:
 * [dim S + r, (r+1) dim S + r], collapsing to dim S + r for locally noetherian S.
 */
DimInterval dimension_bounds(const MonoidSystem& s, const BaseDescriptor& base);

// ---------------------------------------------------------------------------
// Property report

/** A hypothesis a rule needs; `key` is "base.<flag>" or one of the "fan.*" predicates. */
struct Hypothesis
{
    std::string key;
    Tri value;
};

struct PropertyRecord
{
    std::string property;
    Tri verdict = Tri::unknown;
    /** The dimension interval for "space.dim", otherwise the verdict name. */
    std::string verdict_text;
    std::string citation;
    std::string justification;
    /** Hypotheses of the rule that produced the verdict. */
    std::vector<Hypothesis> hypotheses;
};

struct PropertyReport
{
    std::vector<PropertyRecord> records;

    /** The record for a property; throws std::out_of_range if absent. */
    const PropertyRecord& at(std::string_view property) const;
};

/**
 * Truth values of the fan predicates used by the rules: fan.empty,
 * fan.rank_zero, fan.complete, fan.regular.
 */
Tri fan_predicate(const Fan& f, std::string_view key);

/** Value of a hypothesis key for this fan and base. */
Tri hypothesis_value(const Fan& f, const BaseDescriptor& base, std::string_view key);

PropertyReport property_report(const Fan& f, const BaseDescriptor& base);

enum class ComponentKind { irreducible, connected };

struct ComponentTransport
{
    Tri verdict = Tri::unknown;  ///< yes when the bijection applies
    std::optional<std::size_t> count;
    std::string citation;
    std::string reason;
};

/** Number of irreducible (or connected) components of X given that of S. */
ComponentTransport component_transport(const Fan& f, const BaseDescriptor& base,
                                       std::size_t component_count,
                                       ComponentKind kind = ComponentKind::irreducible);

struct ReductionNote
{
    bool commutes = true;  ///< X(S)_red ≅ X(S_red)
    std::string citation;
    std::string note;
};

ReductionNote reduction_report(const Fan& f);

}  // namespace toric
