#include "toric/scheme_model.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace toric {

// ---------------------------------------------------------------------------
// Monoid systems

MonoidSystem MonoidSystem::from_fan(const Fan& f)
{
    MonoidSystem s;
    s.source_ = SystemSource::fan;
    s.ambient_rank_ = f.ambient_rank();
    const std::size_t k = f.size();
    s.order_.assign(k, std::vector<bool>(k, false));
    s.inf_.assign(k, std::vector<std::size_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
    {
        s.monoids_.push_back(dual_monoid(f.cones()[i]));
        s.labels_.push_back(f.cones()[i].to_string());
        for (std::size_t j = 0; j < k; ++j)
        {
            s.order_[i][j] = f.precedes(i, j);
            s.inf_[i][j] = f.inf(i, j);
        }
    }
    s.fan_ = f;
    return s;
}

MonoidSystem MonoidSystem::explicit_system(std::size_t ambient_rank,
                                           std::vector<AffineMonoid> monoids,
                                           std::vector<std::vector<bool>> order,
                                           std::vector<std::string> labels)
{
    const std::size_t k = monoids.size();
    if (order.size() != k)
        throw std::invalid_argument("explicit_system: order has the wrong size");
    for (const auto& row : order)
        if (row.size() != k)
            throw std::invalid_argument("explicit_system: order has the wrong size");
    for (const AffineMonoid& m : monoids)
        if (m.ambient_rank() != ambient_rank)
            throw std::invalid_argument("explicit_system: ambient rank mismatch");
    if (labels.empty())
        for (std::size_t i = 0; i < k; ++i)
            labels.push_back(std::to_string(i));
    if (labels.size() != k)
        throw std::invalid_argument("explicit_system: wrong number of labels");

    for (std::size_t i = 0; i < k; ++i)
    {
        if (!order[i][i])
            throw std::invalid_argument("explicit_system: order is not reflexive");
        for (std::size_t j = 0; j < k; ++j)
        {
            if (i != j && order[i][j] && order[j][i])
                throw std::invalid_argument("explicit_system: order is not antisymmetric");
            for (std::size_t l = 0; l < k; ++l)
                if (order[i][j] && order[j][l] && !order[i][l])
                    throw std::invalid_argument("explicit_system: order is not transitive");
        }
    }

    MonoidSystem s;
    s.source_ = SystemSource::explicit_system;
    s.ambient_rank_ = ambient_rank;
    s.inf_.assign(k, std::vector<std::size_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
        {
            std::optional<std::size_t> best;
            for (std::size_t l = 0; l < k; ++l)
                if (order[l][i] && order[l][j] && (!best || order[*best][l]))
                    best = l;
            bool greatest = best.has_value();
            for (std::size_t l = 0; l < k && greatest; ++l)
                if (order[l][i] && order[l][j] && !order[l][*best])
                    greatest = false;
            if (!greatest)
                throw std::invalid_argument("explicit_system: " + labels[i] + " and " + labels[j] +
                                            " have no infimum");
            s.inf_[i][j] = *best;
        }

    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (order[i][j])
                for (const IntVector& g : monoids[j].generators())
                    if (!monoids[i].contains(g))
                        throw std::invalid_argument("explicit_system: monoid " + labels[j] +
                                                    " is not contained in monoid " + labels[i]);
    s.monoids_ = std::move(monoids);
    s.order_ = std::move(order);
    s.labels_ = std::move(labels);
    return s;
}

std::vector<std::pair<std::size_t, std::size_t>> MonoidSystem::transitions() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            if (i != j && order_[i][j])
                out.emplace_back(i, j);
    return out;
}

std::optional<std::size_t> MonoidSystem::max_rank() const
{
    if (monoids_.empty())
        return std::nullopt;
    std::size_t r = 0;
    for (const AffineMonoid& m : monoids_)
        r = std::max(r, m.rank());
    return r;
}

MonoidSystem system_from_fan(const Fan& f)
{
    return MonoidSystem::from_fan(f);
}

ImmersivityResult is_openly_immersive(const MonoidSystem& s, std::size_t search_bound)
{
    ImmersivityResult out;
    for (auto [i, j] : s.transitions())
    {
        EdgeCertificate e;
        e.lower = i;
        e.upper = j;
        if (s.source() == SystemSource::fan)
        {
            const Polycone& sigma = s.fan()->cones()[j];
            const Polycone& tau = s.fan()->cones()[i];
            LocalizingElement le =
                find_localizing_element(s.monoids()[j], s.monoids()[i], sigma, tau);
            e.verdict = Tri::yes;
            e.t = le.u;
            e.reason = "face witness";
        }
        else
        {
            ImmersionCheck c =
                check_openly_immersive_pair(s.monoids()[i], s.monoids()[j], search_bound);
            e.verdict = c.verdict;
            e.t = c.t;
            e.reason = c.reason;
        }
        out.verdict = out.verdict && e.verdict;
        out.edges.push_back(std::move(e));
    }
    return out;
}

GluingAtlas build_atlas(const MonoidSystem& s, std::size_t search_bound)
{
    ImmersivityResult imm = is_openly_immersive(s, search_bound);
    if (imm.verdict != Tri::yes)
    {
        std::string why = "build_atlas: the system is not certified openly immersive";
        for (const EdgeCertificate& e : imm.edges)
            if (e.verdict != Tri::yes)
            {
                why += " (" + s.labels()[e.lower] + " <= " + s.labels()[e.upper] + ": " +
                       e.reason + ")";
                break;
            }
        throw NotOpenlyImmersiveError(why);
    }

    GluingAtlas atlas;
    for (std::size_t i = 0; i < s.size(); ++i)
        atlas.charts.push_back({i, s.labels()[i], s.monoids()[i], s.monoids()[i].generators()});
    for (const EdgeCertificate& e : imm.edges)
    {
        Transition t{e.lower, e.upper, *e.t, {}};
        const AffineMonoid& upper = s.monoids()[e.upper];
        for (const IntVector& h : s.monoids()[e.lower].generators())
        {
            Integer k = 0;
            while (!upper.contains(add(h, scaled(t.u, k))))
            {
                k += 1;
                if (k > 10000)
                    throw std::logic_error("build_atlas: certificate search did not terminate");
            }
            t.certificate.emplace_back(h, k);
        }
        atlas.transitions.push_back(std::move(t));
    }
    for (std::size_t i = 0; i < s.size(); ++i)
    {
        bool maximal = true;
        for (std::size_t j = 0; j < s.size() && maximal; ++j)
            if (j != i && s.leq(i, j))
                maximal = false;
        if (maximal)
            atlas.maximal_charts.push_back(i);
    }
    return atlas;
}

SeparationCheck check_separation_condition(const MonoidSystem& s)
{
    SeparationCheck out;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
        {
            const AffineMonoid& meet = s.monoids()[s.inf(i, j)];
            AffineMonoid sum = monoid_sum(s.monoids()[i], s.monoids()[j]);
            for (const IntVector& g : meet.generators())
                if (!sum.contains(g))
                {
                    out.holds = false;
                    out.failing_pair = std::make_pair(i, j);
                    out.witness = g;
                    return out;
                }
        }
    return out;
}

// ---------------------------------------------------------------------------
// Base descriptor

namespace {

constexpr std::array<std::string_view, base_flag_count> flag_names = {
    "empty",
    "affine",
    "quasicompact",
    "quasiseparated",
    "separated",
    "locally_noetherian",
    "noetherian",
    "pointwise_noetherian",
    "topologically_noetherian",
    "topologically_locally_noetherian",
    "jacobsonian",
    "reduced",
    "irreducible",
    "connected",
    "integral",
    "normal",
    "cohen_macaulay",
    "regular",
    "universally_catenary",
    "equidimensional",
    "artinian",
};

using Literal = std::pair<BaseFlag, bool>;

struct Clause
{
    std::vector<Literal> premises;
    Literal conclusion;
};

const std::vector<Clause>& base_clauses()
{
    using F = BaseFlag;
    static const std::vector<Clause> clauses = [] {
        std::vector<Clause> c = {
            {{{F::integral, true}}, {F::reduced, true}},
            {{{F::integral, true}}, {F::irreducible, true}},
            {{{F::reduced, true}, {F::irreducible, true}}, {F::integral, true}},
            {{{F::noetherian, true}}, {F::locally_noetherian, true}},
            {{{F::noetherian, true}}, {F::quasicompact, true}},
            {{{F::locally_noetherian, true}, {F::quasicompact, true}}, {F::noetherian, true}},
            {{{F::noetherian, true}}, {F::topologically_noetherian, true}},
            {{{F::locally_noetherian, true}}, {F::topologically_locally_noetherian, true}},
            {{{F::locally_noetherian, true}}, {F::pointwise_noetherian, true}},
            {{{F::topologically_noetherian, true}}, {F::topologically_locally_noetherian, true}},
            {{{F::topologically_noetherian, true}}, {F::quasicompact, true}},
            {{{F::affine, true}}, {F::quasicompact, true}},
            {{{F::affine, true}}, {F::separated, true}},
            {{{F::separated, true}}, {F::quasiseparated, true}},
            {{{F::irreducible, true}}, {F::connected, true}},
            {{{F::irreducible, true}}, {F::empty, false}},
            {{{F::normal, true}}, {F::reduced, true}},
            {{{F::regular, true}}, {F::normal, true}},
            {{{F::regular, true}}, {F::cohen_macaulay, true}},
            {{{F::regular, true}}, {F::locally_noetherian, true}},
            {{{F::cohen_macaulay, true}}, {F::locally_noetherian, true}},
            {{{F::cohen_macaulay, true}}, {F::universally_catenary, true}},
            {{{F::artinian, true}}, {F::noetherian, true}},
        };
        // properties the empty scheme has vacuously
        for (F f : {F::affine, F::quasicompact, F::quasiseparated, F::separated,
                    F::locally_noetherian, F::noetherian, F::pointwise_noetherian,
                    F::topologically_noetherian, F::topologically_locally_noetherian,
                    F::jacobsonian, F::reduced, F::connected, F::normal, F::cohen_macaulay,
                    F::regular, F::universally_catenary, F::equidimensional, F::artinian})
            c.push_back({{{F::empty, true}}, {f, true}});
        return c;
    }();
    return clauses;
}

Tri literal_value(const std::array<Tri, base_flag_count>& flags, const Literal& l)
{
    Tri v = flags[static_cast<std::size_t>(l.first)];
    return l.second ? v : !v;
}

std::string dim_text(const Integer& x)
{
    return x.get_str();
}

}  // namespace

std::string_view to_string(BaseFlag f)
{
    return flag_names[static_cast<std::size_t>(f)];
}

std::optional<BaseFlag> base_flag_from_string(std::string_view name)
{
    for (std::size_t i = 0; i < base_flag_count; ++i)
        if (flag_names[i] == name)
            return static_cast<BaseFlag>(i);
    return std::nullopt;
}

std::array<BaseFlag, base_flag_count> all_base_flags()
{
    std::array<BaseFlag, base_flag_count> out{};
    for (std::size_t i = 0; i < base_flag_count; ++i)
        out[i] = static_cast<BaseFlag>(i);
    return out;
}

std::string DimInterval::to_string() const
{
    switch (kind)
    {
        case Kind::unknown: return "unknown";
        case Kind::empty: return "empty";
        case Kind::range: return "[" + dim_text(lo) + "," + (hi ? dim_text(*hi) : "inf") + "]";
    }
    return "unknown";
}

BaseDescriptor::BaseDescriptor(const std::vector<std::pair<BaseFlag, Tri>>& flags, DimInterval dim)
    : given_(flags), given_dim_(dim)
{
    flags_.fill(Tri::unknown);
    auto set = [&](BaseFlag f, Tri v) -> bool {
        Tri& slot = flags_[static_cast<std::size_t>(f)];
        if (v == Tri::unknown || slot == v)
            return false;
        if (slot != Tri::unknown)
            throw ContradictoryBaseError("base descriptor: conflicting values for " +
                                         std::string(toric::to_string(f)));
        slot = v;
        return true;
    };
    for (const auto& [f, v] : flags)
    {
        Tri& slot = flags_[static_cast<std::size_t>(f)];
        if (slot != Tri::unknown && v != Tri::unknown && slot != v)
            throw ContradictoryBaseError("base descriptor: " + std::string(toric::to_string(f)) +
                                         " given twice with different values");
        set(f, v);
    }
    if (dim.kind == DimInterval::Kind::range && dim.hi && *dim.hi < dim.lo)
        throw ContradictoryBaseError("base descriptor: empty dimension interval");
    if (dim.lo < 0)
        throw ContradictoryBaseError("base descriptor: negative dimension");
    dim_ = dim;

    auto empty_flag = [&] { return flag(BaseFlag::empty); };
    bool changed = true;
    while (changed)
    {
        changed = false;
        for (const Clause& c : base_clauses())
        {
            std::size_t unknown_count = 0;
            std::size_t false_count = 0;
            const Literal* open = nullptr;
            for (const Literal& l : c.premises)
            {
                Tri v = literal_value(flags_, l);
                if (v == Tri::unknown)
                {
                    ++unknown_count;
                    open = &l;
                }
                else if (v == Tri::no)
                    ++false_count;
            }
            Tri concl = literal_value(flags_, c.conclusion);
            if (false_count == 0 && unknown_count == 0)
            {
                if (concl == Tri::no)
                    throw ContradictoryBaseError(
                        "base descriptor: flags force " +
                        std::string(toric::to_string(c.conclusion.first)) + " both ways");
                changed |= set(c.conclusion.first, tri(c.conclusion.second));
            }
            else if (concl == Tri::no && false_count == 0 && unknown_count == 1)
                changed |= set(open->first, tri(!open->second));
        }

        // dimension
        using K = DimInterval::Kind;
        if (dim_.kind == K::range)
            changed |= set(BaseFlag::empty, Tri::no);
        if (dim_.kind == K::empty)
            changed |= set(BaseFlag::empty, Tri::yes);
        if (empty_flag() == Tri::yes && dim_.kind != K::empty)
        {
            if (dim_.kind == K::range)
                throw ContradictoryBaseError("base descriptor: empty scheme with a dimension range");
            dim_ = DimInterval::empty_scheme();
            changed = true;
        }
        if (flag(BaseFlag::artinian) == Tri::yes && empty_flag() == Tri::no)
        {
            if (dim_.kind == K::range && dim_.lo > 0)
                throw ContradictoryBaseError("base descriptor: artinian scheme of positive dimension");
            if (!(dim_.kind == K::range && dim_.hi && *dim_.hi == 0))
            {
                dim_ = DimInterval::range(0, Integer(0));
                changed = true;
            }
        }
        bool dim_zero = dim_.kind == K::range && dim_.hi && *dim_.hi == 0;
        if (dim_zero && flag(BaseFlag::noetherian) == Tri::yes)
            changed |= set(BaseFlag::artinian, Tri::yes);
        if (dim_zero && flag(BaseFlag::artinian) == Tri::no)
            changed |= set(BaseFlag::noetherian, Tri::no);
        if (dim_.kind == K::range && flag(BaseFlag::artinian) == Tri::no &&
            flag(BaseFlag::noetherian) == Tri::yes && dim_.lo == 0)
        {
            dim_.lo = 1;
            if (dim_.hi && *dim_.hi < 1)
                throw ContradictoryBaseError("base descriptor: noetherian, not artinian, dimension 0");
            changed = true;
        }
    }
}

BaseDescriptor BaseDescriptor::field_point()
{
    std::vector<std::pair<BaseFlag, Tri>> flags{{BaseFlag::empty, Tri::no}};
    for (BaseFlag f : all_base_flags())
        if (f != BaseFlag::empty)
            flags.emplace_back(f, Tri::yes);
    return BaseDescriptor(flags, DimInterval::range(0, Integer(0)));
}

BaseDescriptor BaseDescriptor::empty_scheme()
{
    return BaseDescriptor({{BaseFlag::empty, Tri::yes}}, DimInterval::unknown());
}

namespace {

DimInterval bounds_for_rank(std::optional<std::size_t> r_opt, const BaseDescriptor& base)
{
    using K = DimInterval::Kind;
    if (!r_opt || base.flag(BaseFlag::empty) == Tri::yes || base.dim().kind == K::empty)
        return DimInterval::empty_scheme();
    Integer r = static_cast<unsigned long>(*r_opt);
    const DimInterval& d = base.dim();
    if (d.kind == K::unknown)
    {
        if (base.flag(BaseFlag::empty) == Tri::no)
            return DimInterval::range(r, std::nullopt);
        return DimInterval::unknown();
    }
    std::optional<Integer> hi;
    if (d.hi)
        hi = base.flag(BaseFlag::locally_noetherian) == Tri::yes ? Integer(*d.hi + r) : Integer((r + 1) * *d.hi + r);
    return DimInterval::range(d.lo + r, hi);
}

}  // namespace

DimInterval dimension_bounds(const MonoidSystem& s, const BaseDescriptor& base)
{
    return bounds_for_rank(s.max_rank(), base);
}

// ---------------------------------------------------------------------------
// Property report

const PropertyRecord& PropertyReport::at(std::string_view property) const
{
    for (const PropertyRecord& r : records)
        if (r.property == property)
            return r;
    throw std::out_of_range("no record for " + std::string(property));
}

Tri fan_predicate(const Fan& f, std::string_view key)
{
    if (key == "fan.empty")
        return tri(f.empty());
    if (key == "fan.rank_zero")
        return tri(f.ambient_rank() == 0);
    if (key == "fan.complete")
        return tri(is_complete(f));
    if (key == "fan.regular")
        return tri(is_regular(f).regular);
    throw std::invalid_argument("unknown fan predicate " + std::string(key));
}

Tri hypothesis_value(const Fan& f, const BaseDescriptor& base, std::string_view key)
{
    if (key.starts_with("base."))
    {
        auto flag = base_flag_from_string(key.substr(5));
        if (!flag)
            throw std::invalid_argument("unknown base flag " + std::string(key));
        return base.flag(*flag);
    }
    return fan_predicate(f, key);
}

namespace {

struct Rule
{
    std::string citation;
    std::vector<Hypothesis> hypotheses;
    std::function<Tri()> eval;
    std::string justification;
};

class ReportBuilder
{
    public:
        ReportBuilder(const Fan& f, const BaseDescriptor& base) : fan_(f), base_(base)
        {
            for (const char* key : {"fan.empty", "fan.rank_zero", "fan.complete", "fan.regular"})
                fan_values_[key] = fan_predicate(f, key);
        }

        Tri value(const std::string& key) const
        {
            auto it = fan_values_.find(key);
            return it != fan_values_.end() ? it->second : hypothesis_value(fan_, base_, key);
        }
        Tri base(BaseFlag f) const { return base_.flag(f); }
        Tri sigma_empty() const { return value("fan.empty"); }
        Tri s_empty() const { return base(BaseFlag::empty); }

        void decide(const std::string& property, const std::vector<Rule>& rules)
        {
            for (const Rule& r : rules)
            {
                bool applies = std::all_of(r.hypotheses.begin(), r.hypotheses.end(),
                                           [&](const Hypothesis& h) { return value(h.key) == h.value; });
                if (!applies)
                    continue;
                Tri v = r.eval();
                if (v == Tri::unknown)
                    continue;
                report_.records.push_back({property, v, std::string(to_string(v)), r.citation,
                                           r.justification, r.hypotheses});
                return;
            }
            report_.records.push_back({property, Tri::unknown, "unknown", "none",
                                       "not decided by the available statements for this base",
                                       {}});
        }

        void always_yes(const std::string& property, const std::string& citation,
                        const std::string& justification)
        {
            decide(property, {{citation, {}, [] { return Tri::yes; }, justification}});
        }

        void record_dim(const DimInterval& d, const std::string& citation,
                        const std::string& justification, std::vector<Hypothesis> hyps)
        {
            Tri v = d.kind == DimInterval::Kind::unknown ? Tri::unknown : Tri::yes;
            report_.records.push_back({"space.dim", v, d.to_string(),
                                       v == Tri::unknown ? "none" : citation,
                                       v == Tri::unknown ? "dimension of the base is unknown"
                                                         : justification,
                                       v == Tri::unknown ? std::vector<Hypothesis>{} : hyps});
        }

        PropertyReport take() { return std::move(report_); }

    private:
        const Fan& fan_;
        const BaseDescriptor& base_;
        std::map<std::string, Tri> fan_values_;
        PropertyReport report_;
};

}  // namespace

PropertyReport property_report(const Fan& f, const BaseDescriptor& base)
{
    using F = BaseFlag;
    ReportBuilder b(f, base);
    const Tri sig_empty = b.sigma_empty();
    const Tri s_empty = b.s_empty();
    const Tri rank_zero = b.value("fan.rank_zero");
    const Tri complete = b.value("fan.complete");
    const Tri regular = b.value("fan.regular");

    // the structure morphism t: X -> S
    b.always_yes("morphism.separated", "thm1.a", "toric structure morphisms are separated");
    b.always_yes("morphism.quasicompact", "prop.n10.b", "a fan has finitely many cones");
    b.always_yes("morphism.flat", "prop.n10.c", "algebras of monoids are free modules");
    b.decide("morphism.faithfully_flat",
             {{"thm1.a", {}, [&] { return !sig_empty || s_empty; },
               "faithfully flat iff the fan is nonempty or the base is empty"}});
    b.always_yes("morphism.finite_presentation", "thm1.a", "dual monoids are of finite type");
    b.always_yes("morphism.connected", "thm1.a", "toric structure morphisms are connected");
    b.always_yes("morphism.normal", "thm1.a", "dual monoids are integrally closed");
    b.always_yes("morphism.cohen_macaulay", "thm1.a",
                 "toric structure morphisms are Cohen-Macaulay");
    b.always_yes("morphism.S_k", "prop.n80", "a Cohen-Macaulay morphism has (S_k) for every k");
    b.decide("morphism.irreducible",
             {{"thm1.a", {{"fan.empty", Tri::no}}, [] { return Tri::yes; },
               "irreducible since the fan is nonempty"}});
    b.decide("morphism.finite", {{"thm1.a", {}, [&] { return rank_zero || sig_empty || s_empty; },
                                  "finite iff n = 0, the fan is empty, or the base is empty"}});
    b.decide("morphism.proper",
             {{"properness-criterion", {}, [&] { return complete || sig_empty || s_empty; },
               "proper iff the fan is complete or empty, or the base is empty"}});
    b.decide("morphism.regular", {{"thm2", {}, [&] { return regular || s_empty; },
                                   "regular iff the fan is regular or the base is empty"}});
    b.decide("morphism.R_n", {{"thm2", {}, [&] { return regular || s_empty; },
                               "(R_n) iff the fan is regular or the base is empty"}});
    b.decide("morphism.R_k",
             {{"thm2", {{"fan.regular", Tri::yes}}, [] { return Tri::yes; },
               "a regular fan gives a regular morphism, hence (R_k) for every k"},
              {"thm2", {{"base.empty", Tri::yes}}, [] { return Tri::yes; },
               "every morphism to the empty scheme is regular"}});

    // the total space X
    for (F flag : {F::quasiseparated, F::separated, F::quasicompact, F::locally_noetherian,
                   F::noetherian, F::pointwise_noetherian, F::topologically_noetherian,
                   F::topologically_locally_noetherian, F::jacobsonian, F::connected, F::reduced,
                   F::normal, F::cohen_macaulay})
    {
        std::string name(to_string(flag));
        b.decide("space." + name, {{"thm1.b", {}, [&, flag] { return b.base(flag) || sig_empty; },
                                    "X is " + name + " iff S is, or the fan is empty"}});
    }
    for (F flag : {F::irreducible, F::integral})
    {
        std::string name(to_string(flag));
        b.decide("space." + name,
                 {{"thm1.b", {}, [&, flag] { return b.base(flag) && !sig_empty; },
                   "X is " + name + " iff S is and the fan is nonempty"}});
    }
    b.decide("space.artinian",
             {{"thm1.b", {},
               [&] { return (b.base(F::artinian) && rank_zero) || s_empty || sig_empty; },
               "artinian iff S is artinian and n = 0, or S or the fan is empty"}});
    b.decide("space.regular",
             {{"thm2.cor.b", {},
               [&] { return (b.base(F::regular) && regular) || s_empty || sig_empty; },
               "regular iff S and the fan are regular, or S or the fan is empty"}});
    b.decide("space.equidimensional",
             {{"thm1.d", {{"base.locally_noetherian", Tri::yes}},
               [&] { return b.base(F::equidimensional) || sig_empty; },
               "over a locally noetherian base, equidimensional iff S is or the fan is empty"}});
    b.decide("space.universally_catenary",
             {{"prop.catenary", {}, [&] { return b.base(F::universally_catenary) || sig_empty; },
               "dual monoids are of finite type, so universal catenarity transfers both ways"}});
    b.decide("space.catenary",
             {{"thm1.d", {{"fan.rank_zero", Tri::no}, {"base.pointwise_noetherian", Tri::yes}},
               [&] { return b.base(F::universally_catenary) || sig_empty; },
               "n > 0 over a pointwise noetherian base: catenary iff S is universally catenary"},
              {"prop.catenary", {},
               [&] {
                   Tri uc = b.base(F::universally_catenary) || sig_empty;
                   return uc == Tri::yes ? Tri::yes : Tri::unknown;
               },
               "universally catenary implies catenary"}});

    std::optional<std::size_t> r;
    if (!f.empty())
        r = f.ambient_rank();
    DimInterval d = bounds_for_rank(r, base);
    if (base.flag(F::locally_noetherian) == Tri::yes && d.kind == DimInterval::Kind::range)
        b.record_dim(d, "thm1.c", "dim X = dim S + n over a locally noetherian base",
                     {{"base.locally_noetherian", Tri::yes}});
    else
        b.record_dim(d, "thm1.c", "dim S + n <= dim X <= (n+1) dim S + n", {});
    return b.take();
}

ComponentTransport component_transport(const Fan& f, const BaseDescriptor& base,
                                       std::size_t component_count, ComponentKind kind)
{
    ComponentTransport out;
    const char* what = kind == ComponentKind::irreducible ? "irreducible" : "connected";
    if (f.empty())
    {
        out.reason = "the bijection of components needs a nonempty fan";
        return out;
    }
    if (base.flag(BaseFlag::empty) == Tri::yes && component_count != 0)
        throw std::invalid_argument("component_transport: the empty scheme has no components");
    out.verdict = Tri::yes;
    out.count = component_count;
    out.citation = "thm1.e";
    out.reason = std::string("Z -> X(Z) is a bijection on ") + what + " components";
    return out;
}

ReductionNote reduction_report(const Fan& f)
{
    ReductionNote out;
    out.citation = "thm1.e";
    if (f.empty())
        out.note = "the fan is empty, so X is empty and reduced";
    else
        out.note = "X(S)_red = X(S_red); X is reduced iff S is";
    return out;
}

}  // namespace toric
