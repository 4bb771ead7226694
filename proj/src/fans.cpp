#include "toric/fans.hpp"

#include <algorithm>

namespace toric {

std::string_view to_string(FanViolation v)
{
    switch (v)
    {
        case FanViolation::non_pointed: return "NonPointed";
        case FanViolation::missing_face: return "MissingFace";
        case FanViolation::bad_intersection: return "BadIntersection";
    }
    return "";
}

namespace {

std::string violation_message(FanViolation kind, const Polycone& a, const std::optional<Polycone>& b)
{
    std::string msg = std::string(to_string(kind)) + ": " + a.to_string();
    if (b)
        msg += ", " + b->to_string();
    return msg;
}

}  // namespace

FanValidationError::FanValidationError(FanViolation kind, Polycone first,
                                       std::optional<Polycone> second)
    : std::runtime_error(violation_message(kind, first, second)),
      kind_(kind),
      first_(std::move(first)),
      second_(std::move(second))
{
}

std::size_t Fan::find(const Polycone& c) const
{
    auto it = std::lower_bound(cones_.begin(), cones_.end(), c);
    if (it != cones_.end() && *it == c)
        return static_cast<std::size_t>(it - cones_.begin());
    return cones_.size();
}

std::vector<IntVector> Fan::rays() const
{
    std::vector<IntVector> out;
    for (const Polycone& c : cones_)
        if (c.dim() == 1)
            out.push_back(c.rays().front());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> Fan::maximal_cones() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cones_.size(); ++i)
    {
        bool maximal = true;
        for (std::size_t j = 0; j < cones_.size() && maximal; ++j)
            if (j != i && face_relation_[i][j])
                maximal = false;
        if (maximal)
            out.push_back(i);
    }
    return out;
}

Fan validate_fan(std::size_t n, std::vector<Polycone> cones)
{
    for (const Polycone& c : cones)
        if (c.ambient_rank() != n)
            throw std::invalid_argument("validate_fan: ambient rank mismatch");
    std::sort(cones.begin(), cones.end());
    cones.erase(std::unique(cones.begin(), cones.end()), cones.end());

    for (const Polycone& c : cones)
        if (!c.pointed())
            throw FanValidationError(FanViolation::non_pointed, c, std::nullopt);

    Fan f;
    f.ambient_rank_ = n;
    f.cones_ = std::move(cones);
    const std::size_t k = f.cones_.size();

    for (const Polycone& c : f.cones_)
    {
        FaceLattice fl = faces(c);
        for (const Face& face : fl.faces())
            if (f.find(face.cone) == k)
                throw FanValidationError(FanViolation::missing_face, c, face.cone);
    }

    f.face_relation_.assign(k, std::vector<bool>(k, false));
    f.inf_table_.assign(k, std::vector<std::size_t>(k, 0));
    // larger cones first, so a violation names the maximal offenders
    for (std::size_t i = k; i-- > 0;)
        for (std::size_t j = i + 1; j-- > 0;)
        {
            const Polycone& a = f.cones_[i];
            const Polycone& b = f.cones_[j];
            Polycone meet = intersect_cones(a, b);
            if (!is_face_of(meet, a) || !is_face_of(meet, b))
                throw FanValidationError(FanViolation::bad_intersection, a, b);
            std::size_t m = f.find(meet);
            f.inf_table_[i][j] = f.inf_table_[j][i] = m;
            f.face_relation_[i][j] = m == i;
            f.face_relation_[j][i] = m == j;
        }
    return f;
}

std::vector<Polycone> complete_under_faces(const std::vector<Polycone>& cones)
{
    std::vector<Polycone> out;
    for (const Polycone& c : cones)
    {
        FaceLattice fl = faces(c);
        for (const Face& face : fl.faces())
            out.push_back(face.cone);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Fan fan_from_maximal_cones(std::size_t n, const std::vector<std::vector<IntVector>>& ray_lists)
{
    std::vector<Polycone> cones;
    for (const auto& rays : ray_lists)
        cones.push_back(cone_from_rays(n, rays));
    return validate_fan(n, complete_under_faces(cones));
}

bool is_full(const Fan& f)
{
    std::vector<IntVector> rays = f.rays();
    if (rays.empty())
        return f.ambient_rank() == 0;
    return rank(IntMatrix::from_rows(rays, f.ambient_rank())) == f.ambient_rank();
}

bool is_complete(const Fan& f)
{
    const std::size_t n = f.ambient_rank();
    if (f.empty())
        return false;
    if (n == 0)
        return true;
    if (!is_full(f))
        return false;
    std::vector<std::size_t> top, walls;
    for (std::size_t i = 0; i < f.size(); ++i)
    {
        if (f.cones()[i].dim() == n)
            top.push_back(i);
        else if (f.cones()[i].dim() + 1 == n)
            walls.push_back(i);
    }
    if (top.empty())
        return false;
    for (std::size_t w : walls)
    {
        std::size_t count = 0;
        for (std::size_t t : top)
            if (f.precedes(w, t))
                ++count;
        if (count != 2)
            return false;
    }
    return true;
}

bool is_regular_cone(const Polycone& c)
{
    if (!c.pointed() || c.rays().size() != c.dim())
        return false;
    if (c.rays().empty())
        return true;
    SmithResult s = smith_normal_form(IntMatrix::from_rows(c.rays(), c.ambient_rank()));
    return std::all_of(s.invariant_factors.begin(), s.invariant_factors.end(),
                       [](const Integer& x) { return x == 1; });
}

RegularityReport is_regular(const Fan& f)
{
    RegularityReport r;
    for (const Polycone& c : f.cones())
    {
        bool ok = is_regular_cone(c);
        r.per_cone.push_back(ok);
        r.regular = r.regular && ok;
    }
    return r;
}

FullificationResult fullify(const Fan& f)
{
    const std::size_t n = f.ambient_rank();
    std::vector<IntVector> rays = f.rays();
    FullificationResult out;
    out.sublattice_basis =
        rays.empty() ? IntMatrix(0, n) : saturate_sublattice(IntMatrix::from_rows(rays, n), n);
    const std::size_t reduced_rank = out.sublattice_basis.rows();
    out.torus_rank = n - reduced_rank;

    IntMatrix full =
        reduced_rank == 0 ? IntMatrix::identity(n) : complete_to_unimodular(out.sublattice_basis);
    out.complement = IntMatrix(n - reduced_rank, n);
    for (std::size_t i = reduced_rank; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.complement.at(i - reduced_rank, j) = full.at(i, j);

    std::vector<Polycone> reduced;
    for (const Polycone& c : f.cones())
    {
        std::vector<IntVector> coords;
        for (const IntVector& r : c.rays())
        {
            auto x = lattice_coordinates(out.sublattice_basis, r);
            if (!x)
                throw std::logic_error("fullify: ray outside the saturated span");
            coords.push_back(std::move(*x));
        }
        reduced.push_back(cone_from_rays(reduced_rank, coords));
    }
    out.reduced_fan = validate_fan(reduced_rank, reduced);
    out.cone_map.assign(reduced.size(), 0);
    for (std::size_t i = 0; i < reduced.size(); ++i)
        out.cone_map[out.reduced_fan.find(reduced[i])] = i;
    return out;
}

}  // namespace toric
