#include "toric/cones.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace toric {

namespace detail {

namespace {

std::size_t tight_rank(const std::vector<IntVector>& processed, const IntVector& x)
{
    std::vector<IntVector> tight;
    for (const IntVector& a : processed)
        if (dot(a, x) == 0)
            tight.push_back(a);
    if (tight.empty())
        return 0;
    return rank(IntMatrix::from_rows(tight, x.size()));
}

}  // namespace

GeneratorSystem double_description(std::size_t n, const std::vector<IntVector>& inequalities)
{
    GeneratorSystem gs;
    gs.lineality = IntMatrix::identity(n).row_vectors();
    std::vector<IntVector> processed;

    for (const IntVector& a : inequalities)
    {
        if (a.size() != n)
            throw std::invalid_argument("double_description: inequality length mismatch");
        if (toric::is_zero(a))
            continue;

        auto pivot = std::find_if(gs.lineality.begin(), gs.lineality.end(),
                                  [&](const IntVector& l) { return dot(a, l) != 0; });
        processed.push_back(a);

        if (pivot != gs.lineality.end())
        {
            // the hyperplane cuts the lineality space: one direction becomes a ray
            IntVector l0 = *pivot;
            Integer s = dot(a, l0);
            if (s < 0)
            {
                l0 = negated(std::move(l0));
                s = -s;
            }
            std::vector<IntVector> lineality;
            for (auto it = gs.lineality.begin(); it != gs.lineality.end(); ++it)
            {
                if (it == pivot)
                    continue;
                IntVector l = sub(scaled(*it, s), scaled(l0, dot(a, *it)));
                lineality.push_back(primitive(std::move(l)));
            }
            std::vector<IntVector> rays;
            for (const IntVector& r : gs.rays)
                rays.push_back(primitive(sub(scaled(r, s), scaled(l0, dot(a, r)))));
            rays.push_back(primitive(l0));
            gs.lineality = std::move(lineality);
            gs.rays = std::move(rays);
            continue;
        }

        std::vector<IntVector> pos, neg, keep;
        std::vector<Integer> pos_val, neg_val;
        for (const IntVector& r : gs.rays)
        {
            Integer v = dot(a, r);
            if (v > 0)
            {
                pos.push_back(r);
                pos_val.push_back(v);
            }
            else if (v < 0)
            {
                neg.push_back(r);
                neg_val.push_back(v);
            }
            else
                keep.push_back(r);
        }
        if (neg.empty())
            continue;  // redundant

        const std::size_t target = n - gs.lineality.size() - 1;
        std::vector<IntVector> rays = pos;
        rays.insert(rays.end(), keep.begin(), keep.end());
        for (std::size_t i = 0; i < pos.size(); ++i)
            for (std::size_t j = 0; j < neg.size(); ++j)
            {
                // cheap combinatorial prefilter before the rank test
                std::size_t common = 0;
                for (std::size_t k = 0; k + 1 < processed.size(); ++k)
                    if (dot(processed[k], pos[i]) == 0 && dot(processed[k], neg[j]) == 0)
                        ++common;
                if (common + 1 < target)
                    continue;
                IntVector c = add(scaled(neg[j], pos_val[i]), scaled(pos[i], -neg_val[j]));
                c = primitive(std::move(c));
                if (tight_rank(processed, c) == target)
                    rays.push_back(std::move(c));
            }
        std::sort(rays.begin(), rays.end());
        rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
        gs.rays = std::move(rays);
    }
    return gs;
}

}  // namespace detail

namespace {

/** Primitive representative of x modulo span(basis), orthogonal to it. */
IntVector project_out(const IntVector& x, const std::vector<IntVector>& basis)
{
    if (basis.empty())
        return primitive(x);
    const std::size_t k = basis.size();
    IntMatrix gram(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            gram.at(i, j) = dot(basis[i], basis[j]);
    RatVector rhs(k);
    for (std::size_t i = 0; i < k; ++i)
        rhs[i] = dot(basis[i], x);
    // gram is symmetric, so solving c * gram = rhs gives the projection weights
    auto c = solve_rational(gram, rhs);
    std::vector<Rational> y(x.begin(), x.end());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            y[j] -= (*c)[i] * basis[i][j];
    return primitive(y);
}

std::vector<IntVector> saturated_basis(std::size_t n, const std::vector<IntVector>& gens)
{
    if (gens.empty())
        return {};
    return saturate_sublattice(IntMatrix::from_rows(gens, n), n).row_vectors();
}

std::vector<IntVector> canonical_rays(const std::vector<IntVector>& rays,
                                      const std::vector<IntVector>& lineality)
{
    std::vector<IntVector> out;
    for (const IntVector& r : rays)
    {
        IntVector p = project_out(r, lineality);
        if (!toric::is_zero(p))
            out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<IntVector> with_negatives(std::vector<IntVector> v, const std::vector<IntVector>& eq)
{
    for (const IntVector& e : eq)
    {
        v.push_back(e);
        v.push_back(negated(e));
    }
    return v;
}

}  // namespace

Polycone Polycone::from_generators(std::size_t n, const std::vector<IntVector>& rays,
                                   const std::vector<IntVector>& lineality)
{
    for (const auto& r : rays)
        if (r.size() != n)
            throw std::invalid_argument("Polycone: generator length mismatch");
    for (const auto& r : lineality)
        if (r.size() != n)
            throw std::invalid_argument("Polycone: lineality length mismatch");

    // halfspace description: the dual's generators
    detail::GeneratorSystem h = detail::double_description(n, with_negatives(rays, lineality));
    Polycone c;
    c.ambient_rank_ = n;
    c.equations_ = saturated_basis(n, h.lineality);
    c.normals_ = canonical_rays(h.rays, c.equations_);

    // and back again, which discards redundant generators
    detail::GeneratorSystem v =
        detail::double_description(n, with_negatives(c.normals_, c.equations_));
    c.lineality_ = saturated_basis(n, v.lineality);
    c.rays_ = canonical_rays(v.rays, c.lineality_);
    return c;
}

Polycone Polycone::from_inequalities(std::size_t n, const std::vector<IntVector>& inequalities,
                                     const std::vector<IntVector>& equations)
{
    detail::GeneratorSystem v = detail::double_description(n, with_negatives(inequalities, equations));
    return from_generators(n, v.rays, v.lineality);
}

Polycone Polycone::zero(std::size_t n)
{
    Polycone c;
    c.ambient_rank_ = n;
    c.equations_ = IntMatrix::identity(n).row_vectors();
    return c;
}

bool Polycone::contains(const IntVector& v) const
{
    for (const auto& u : normals_)
        if (dot(u, v) < 0)
            return false;
    for (const auto& e : equations_)
        if (dot(e, v) != 0)
            return false;
    return true;
}

std::strong_ordering Polycone::operator<=>(const Polycone& other) const
{
    if (auto c = ambient_rank_ <=> other.ambient_rank_; c != 0)
        return c;
    if (auto c = dim() <=> other.dim(); c != 0)
        return c;
    if (rays_ != other.rays_)
        return rays_ < other.rays_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (lineality_ != other.lineality_)
        return lineality_ < other.lineality_ ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool Polycone::operator==(const Polycone& other) const
{
    return ambient_rank_ == other.ambient_rank_ && rays_ == other.rays_ &&
           lineality_ == other.lineality_;
}

std::string Polycone::to_string() const
{
    std::ostringstream os;
    os << "cone(";
    for (std::size_t i = 0; i < rays_.size(); ++i)
        os << (i ? "," : "") << toric::to_string(rays_[i]);
    if (!lineality_.empty())
    {
        os << "; lin ";
        for (std::size_t i = 0; i < lineality_.size(); ++i)
            os << (i ? "," : "") << toric::to_string(lineality_[i]);
    }
    if (rays_.empty() && lineality_.empty())
        os << "0 in Z^" << ambient_rank_;
    os << ')';
    return os.str();
}

Polycone cone_from_rays(std::size_t ambient_rank, const std::vector<IntVector>& generators)
{
    return Polycone::from_generators(ambient_rank, generators);
}

DualCone dual_cone(const Polycone& c)
{
    return Polycone::from_generators(c.ambient_rank(), c.normals(), c.equations());
}

FaceLattice::FaceLattice(std::vector<Face> faces) : faces_(std::move(faces))
{
    std::sort(faces_.begin(), faces_.end(),
              [](const Face& a, const Face& b) { return a.cone < b.cone; });
}

bool FaceLattice::precedes(std::size_t i, std::size_t j) const
{
    // faces of one cone: inclusion of ray sets is the face order
    const auto& small = faces_[i].cone.rays();
    const auto& big = faces_[j].cone.rays();
    return std::all_of(small.begin(), small.end(), [&](const IntVector& r) {
        return std::binary_search(big.begin(), big.end(), r);
    });
}

std::size_t FaceLattice::find(const Polycone& c) const
{
    for (std::size_t i = 0; i < faces_.size(); ++i)
        if (faces_[i].cone == c)
            return i;
    return faces_.size();
}

IntVector face_witness(const Polycone& sigma, const Polycone& tau)
{
    IntVector u(sigma.ambient_rank(), Integer(0));
    for (const IntVector& normal : sigma.normals())
    {
        bool vanishes = std::all_of(tau.rays().begin(), tau.rays().end(),
                                    [&](const IntVector& r) { return dot(normal, r) == 0; });
        if (vanishes)
            u = add(u, normal);
    }
    return u;
}

FaceLattice faces(const Polycone& c)
{
    if (!c.pointed())
        throw NotPointedError("faces: cone " + c.to_string() + " contains a line");
    const auto& rays = c.rays();
    const std::size_t nr = rays.size();

    // ray-incidence sets of the facets; faces are their intersections
    std::vector<std::vector<bool>> facets;
    for (const IntVector& u : c.normals())
    {
        std::vector<bool> on(nr);
        for (std::size_t i = 0; i < nr; ++i)
            on[i] = dot(u, rays[i]) == 0;
        facets.push_back(std::move(on));
    }
    std::set<std::vector<bool>> seen{std::vector<bool>(nr, true)};
    std::vector<std::vector<bool>> queue{std::vector<bool>(nr, true)};
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (const auto& f : facets)
        {
            std::vector<bool> s(nr);
            for (std::size_t i = 0; i < nr; ++i)
                s[i] = queue[q][i] && f[i];
            if (seen.insert(s).second)
                queue.push_back(std::move(s));
        }

    std::vector<Face> out;
    for (const auto& s : queue)
    {
        std::vector<IntVector> sub;
        for (std::size_t i = 0; i < nr; ++i)
            if (s[i])
                sub.push_back(rays[i]);
        Polycone tau = sub.empty() ? Polycone::zero(c.ambient_rank())
                                   : Polycone::from_generators(c.ambient_rank(), sub);
        IntVector w = face_witness(c, tau);
        out.push_back({std::move(tau), std::move(w)});
    }
    return FaceLattice(std::move(out));
}

bool contains_point(const Polycone& c, const RatVector& p)
{
    if (p.size() != c.ambient_rank())
        throw std::invalid_argument("contains_point: dimension mismatch");
    for (const auto& u : c.normals())
        if (dot(p, u) < 0)
            return false;
    for (const auto& e : c.equations())
        if (dot(p, e) != 0)
            return false;
    return true;
}

Polycone intersect_cones(const Polycone& a, const Polycone& b)
{
    if (a.ambient_rank() != b.ambient_rank())
        throw std::invalid_argument("intersect_cones: ambient rank mismatch");
    std::vector<IntVector> ineq = a.normals();
    ineq.insert(ineq.end(), b.normals().begin(), b.normals().end());
    std::vector<IntVector> eq = a.equations();
    eq.insert(eq.end(), b.equations().begin(), b.equations().end());
    return Polycone::from_inequalities(a.ambient_rank(), ineq, eq);
}

bool is_face_of(const Polycone& tau, const Polycone& sigma)
{
    if (tau.ambient_rank() != sigma.ambient_rank() || !sigma.pointed() || !tau.pointed())
        return false;
    for (const IntVector& r : tau.rays())
        if (!std::binary_search(sigma.rays().begin(), sigma.rays().end(), r))
            return false;
    IntVector u = face_witness(sigma, tau);
    std::vector<IntVector> cut;
    for (const IntVector& r : sigma.rays())
        if (dot(u, r) == 0)
            cut.push_back(r);
    return cut == tau.rays();
}

Polycone transform_cone(const Polycone& c, const IntMatrix& t)
{
    const std::size_t n = c.ambient_rank();
    auto apply = [&](const std::vector<IntVector>& vs) {
        std::vector<IntVector> out;
        for (const IntVector& v : vs)
        {
            IntVector w(t.cols(), Integer(0));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < t.cols(); ++j)
                    w[j] += v[i] * t.at(i, j);
            out.push_back(std::move(w));
        }
        return out;
    };
    return Polycone::from_generators(t.cols(), apply(c.rays()), apply(c.lineality()));
}

}  // namespace toric
