#include "toric/monoids.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>

namespace toric {

namespace {

/** Membership and reduction against a lattice given by a Hermite basis. */
class EchelonLattice
{
    public:
        EchelonLattice(const IntMatrix& generators, std::size_t n) : n_(n)
        {
            IntMatrix h = generators.rows() == 0
                              ? IntMatrix(0, n)
                              : hermite_normal_form(generators).h.drop_zero_rows();
            for (std::size_t i = 0; i < h.rows(); ++i)
            {
                IntVector r = h.row(i);
                std::size_t c = 0;
                while (r[c] == 0)
                    ++c;
                rows_.push_back(std::move(r));
                pivots_.push_back(c);
            }
        }

        bool contains(IntVector v) const
        {
            for (std::size_t i = 0; i < rows_.size(); ++i)
            {
                const Integer& p = rows_[i][pivots_[i]];
                if (v[pivots_[i]] % p != 0)
                    return false;
                Integer q = v[pivots_[i]] / p;
                for (std::size_t j = pivots_[i]; j < n_; ++j)
                    v[j] -= q * rows_[i][j];
            }
            return toric::is_zero(v);
        }

        /** Representative of v + L with pivot entries in [0, pivot). */
        IntVector reduce(IntVector v) const
        {
            for (std::size_t i = 0; i < rows_.size(); ++i)
            {
                const Integer& p = rows_[i][pivots_[i]];
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), v[pivots_[i]].get_mpz_t(), p.get_mpz_t());
                for (std::size_t j = pivots_[i]; j < n_; ++j)
                    v[j] -= q * rows_[i][j];
            }
            return v;
        }

    private:
        std::size_t n_;
        std::vector<IntVector> rows_;
        std::vector<std::size_t> pivots_;
};

IntMatrix hermite_basis(const std::vector<IntVector>& gens, std::size_t n)
{
    if (gens.empty())
        return IntMatrix(0, n);
    return hermite_normal_form(IntMatrix::from_rows(gens, n)).h.drop_zero_rows();
}

Rational frac(const Rational& q)
{
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return q - Rational(fl);
}

/** Pulling triangulation of a full-dimensional pointed cone spanned by `rays`. */
void triangulate(const std::vector<IntVector>& rays, const std::vector<std::size_t>& idx,
                 std::size_t dim, std::size_t k, std::vector<std::vector<std::size_t>>& out)
{
    if (idx.size() == dim)
    {
        out.push_back(idx);
        return;
    }
    std::vector<IntVector> sub;
    for (std::size_t i : idx)
        sub.push_back(rays[i]);
    Polycone c = Polycone::from_generators(k, sub);
    const std::size_t apex = idx.front();
    for (const IntVector& u : c.normals())
    {
        if (dot(u, rays[apex]) == 0)
            continue;
        std::vector<std::size_t> facet;
        for (std::size_t i : idx)
            if (dot(u, rays[i]) == 0)
                facet.push_back(i);
        std::vector<std::vector<std::size_t>> part;
        triangulate(rays, facet, dim - 1, k, part);
        for (auto& s : part)
        {
            s.push_back(apex);
            out.push_back(std::move(s));
        }
    }
}

/** Points of the half-open parallelepiped spanned by the rows of m. */
void parallelepiped_points(const IntMatrix& m, std::set<IntVector>& out)
{
    const std::size_t k = m.rows();
    SmithResult s = smith_normal_form(m);
    auto vinv = rational_inverse(s.v);
    auto minv = rational_inverse(m);

    std::vector<Integer> c(k, Integer(0));
    for (;;)
    {
        IntVector x(k, Integer(0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                x[j] += c[i] * vinv[i][j].get_num();
        std::vector<Rational> lambda(k);
        for (std::size_t j = 0; j < k; ++j)
        {
            Rational acc = 0;
            for (std::size_t i = 0; i < k; ++i)
                acc += x[i] * minv[i][j];
            lambda[j] = frac(acc);
        }
        std::vector<Rational> p(k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < k; ++i)
                p[i] += lambda[j] * m.at(j, i);
        IntVector point;
        for (const Rational& q : p)
            point.push_back(q.get_num());  // integral by construction
        if (!toric::is_zero(point))
            out.insert(std::move(point));

        std::size_t i = 0;
        while (i < k && c[i] + 1 >= s.invariant_factors[i])
        {
            c[i] = 0;
            ++i;
        }
        if (i == k)
            break;
        c[i] += 1;
    }
}

/** Hilbert basis of a full-dimensional pointed cone in Z^k. */
std::vector<IntVector> pointed_hilbert_basis(const std::vector<IntVector>& rays, std::size_t k)
{
    if (k == 0)
        return {};
    Polycone p = Polycone::from_generators(k, rays);
    const auto& extreme = p.rays();
    std::vector<std::size_t> all(extreme.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    std::vector<std::vector<std::size_t>> simplices;
    triangulate(extreme, all, k, k, simplices);

    std::set<IntVector> candidates(extreme.begin(), extreme.end());
    for (const auto& s : simplices)
    {
        std::vector<IntVector> rows;
        for (std::size_t i : s)
            rows.push_back(extreme[i]);
        parallelepiped_points(IntMatrix::from_rows(rows, k), candidates);
    }

    std::vector<IntVector> basis;
    for (const IntVector& x : candidates)
    {
        bool reducible = false;
        for (const IntVector& y : candidates)
            if (y != x && p.contains(sub(x, y)))
            {
                reducible = true;
                break;
            }
        if (!reducible)
            basis.push_back(x);
    }
    return basis;
}

std::vector<IntVector> normalized_generators(std::vector<IntVector> gens)
{
    std::erase_if(gens, [](const IntVector& g) { return toric::is_zero(g); });
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
}

/** Bounded search for an N-combination; see in_generated_monoid. */
class CombinationSearch
{
    public:
        CombinationSearch(std::size_t n, const std::vector<IntVector>& gens) : n_(n)
        {
            Polycone c = Polycone::from_generators(n, gens);
            for (const IntVector& g : gens)
            {
                bool unit = std::all_of(c.normals().begin(), c.normals().end(),
                                        [&](const IntVector& u) { return dot(u, g) == 0; });
                (unit ? units_ : free_).push_back(g);
            }
            weight_ = IntVector(n, Integer(0));
            for (const IntVector& u : c.normals())
                weight_ = add(weight_, u);
            for (const IntVector& g : free_)
                free_weight_.push_back(dot(weight_, g));
            unit_lattice_ = std::make_unique<EchelonLattice>(
                hermite_basis(units_, n), n);
            // cone of the generators still available at each depth
            for (std::size_t i = 0; i <= free_.size(); ++i)
            {
                std::vector<IntVector> rest(free_.begin() + i, free_.end());
                rest.insert(rest.end(), units_.begin(), units_.end());
                for (const IntVector& g : units_)
                    rest.push_back(negated(g));
                suffix_cones_.push_back(Polycone::from_generators(n, rest));
            }
        }

        bool run(const IntVector& v)
        {
            failed_.clear();
            return search(0, v, dot(weight_, v));
        }

    private:
        bool search(std::size_t i, const IntVector& r, const Integer& budget)
        {
            if (budget < 0 || !suffix_cones_[i].contains(r))
                return false;
            if (i == free_.size())
                return budget == 0 && unit_lattice_->contains(r);
            auto key = std::make_pair(i, r);
            if (failed_.count(key))
                return false;
            Integer most = budget / free_weight_[i];
            IntVector cur = r;
            Integer rem = budget;
            for (Integer c = 0; c <= most; ++c)
            {
                if (search(i + 1, cur, rem))
                    return true;
                cur = sub(cur, free_[i]);
                rem -= free_weight_[i];
            }
            failed_.insert(std::move(key));
            return false;
        }

        std::size_t n_;
        std::vector<IntVector> units_;
        std::vector<IntVector> free_;
        IntVector weight_;
        std::vector<Integer> free_weight_;
        std::unique_ptr<EchelonLattice> unit_lattice_;
        std::vector<Polycone> suffix_cones_;
        std::set<std::pair<std::size_t, IntVector>> failed_;
};

}  // namespace

std::vector<IntVector> HilbertBasis::generators() const
{
    std::vector<IntVector> out = pointed;
    for (const IntVector& l : lineality)
    {
        out.push_back(l);
        out.push_back(negated(l));
    }
    std::sort(out.begin(), out.end());
    return out;
}

HilbertBasis hilbert_basis_in_lattice(const Polycone& c, const IntMatrix& lattice)
{
    const std::size_t n = c.ambient_rank();
    const std::size_t d = lattice.rows();
    HilbertBasis hb;
    if (d == 0)
        return hb;

    auto coords = [&](const IntVector& x) {
        auto y = solve_rational(lattice, RatVector(x));
        if (!y)
            throw std::invalid_argument("hilbert_basis_in_lattice: cone leaves the lattice span");
        return primitive(*y);
    };
    std::vector<IntVector> rays_b, lin_b;
    for (const IntVector& r : c.rays())
        rays_b.push_back(coords(r));
    for (const IntVector& l : c.lineality())
        lin_b.push_back(coords(l));
    Polycone cb = Polycone::from_generators(d, rays_b, lin_b);
    if (cb.dim() != d)
        throw std::invalid_argument("hilbert_basis_in_lattice: lattice span exceeds the cone span");

    // split off the unit lattice: basis U whose first rows span the lineality
    const std::size_t l = cb.lineality_rank();
    IntMatrix u = l == 0 ? IntMatrix::identity(d)
                         : complete_to_unimodular(IntMatrix::from_rows(cb.lineality(), d));
    auto uinv = rational_inverse(u);
    std::vector<IntVector> quotient_rays;
    for (const IntVector& r : cb.rays())
    {
        IntVector q;
        for (std::size_t j = l; j < d; ++j)
        {
            Rational acc = 0;
            for (std::size_t i = 0; i < d; ++i)
                acc += r[i] * uinv[i][j];
            q.push_back(acc.get_num());
        }
        quotient_rays.push_back(primitive(std::move(q)));
    }

    auto to_ambient = [&](const IntVector& yb) {
        IntVector x(n, Integer(0));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < n; ++j)
                x[j] += yb[i] * lattice.at(i, j);
        return x;
    };

    std::vector<IntVector> lin_ambient;
    for (const IntVector& lb : cb.lineality())
        lin_ambient.push_back(to_ambient(lb));
    IntMatrix lin_hnf = hermite_basis(lin_ambient, n);
    hb.lineality = lin_hnf.row_vectors();
    EchelonLattice units(lin_hnf, n);

    for (const IntVector& h : pointed_hilbert_basis(quotient_rays, d - l))
    {
        IntVector yb(d, Integer(0));
        for (std::size_t j = 0; j < d - l; ++j)
            for (std::size_t i = 0; i < d; ++i)
                yb[i] += h[j] * u.at(l + j, i);
        hb.pointed.push_back(units.reduce(to_ambient(yb)));
    }
    std::sort(hb.pointed.begin(), hb.pointed.end());
    return hb;
}

AffineMonoid AffineMonoid::of_cone(const Polycone& c)
{
    const std::size_t n = c.ambient_rank();
    std::vector<IntVector> span = c.rays();
    span.insert(span.end(), c.lineality().begin(), c.lineality().end());
    AffineMonoid m;
    m.ambient_rank_ = n;
    m.diff_lattice_ =
        span.empty() ? IntMatrix(0, n) : saturate_sublattice(IntMatrix::from_rows(span, n), n);
    m.cone_ = c;
    m.hilbert_basis_ = hilbert_basis_in_lattice(c, m.diff_lattice_);
    m.generators_ = m.hilbert_basis_->generators();
    return m;
}

AffineMonoid AffineMonoid::generated_by(std::size_t n, std::vector<IntVector> gens)
{
    for (const IntVector& g : gens)
        if (g.size() != n)
            throw std::invalid_argument("AffineMonoid: generator length mismatch");
    AffineMonoid m;
    m.ambient_rank_ = n;
    m.generators_ = normalized_generators(std::move(gens));
    m.diff_lattice_ = hermite_basis(m.generators_, n);
    m.cone_ = Polycone::from_generators(n, m.generators_);
    HilbertBasis hb = hilbert_basis_in_lattice(m.cone_, m.diff_lattice_);
    CombinationSearch search(n, m.generators_);
    bool saturated = true;
    for (const IntVector& h : hb.generators())
        if (!search.run(h))
        {
            saturated = false;
            break;
        }
    if (saturated)
        m.hilbert_basis_ = std::move(hb);
    return m;
}

bool AffineMonoid::contains(const IntVector& v) const
{
    if (v.size() != ambient_rank_)
        throw std::invalid_argument("AffineMonoid::contains: length mismatch");
    if (hilbert_basis_)
        return cone_.contains(v) && EchelonLattice(diff_lattice_, ambient_rank_).contains(v);
    return in_generated_monoid(ambient_rank_, generators_, v);
}

AffineMonoid dual_monoid(const Polycone& sigma)
{
    return AffineMonoid::of_cone(dual_cone(sigma));
}

HilbertBasis hilbert_basis(const AffineMonoid& m)
{
    if (!m.saturated())
        throw NotSaturatedError("hilbert_basis: monoid is not saturated in its group of differences");
    return *m.cached_hilbert_basis();
}

bool membership(const AffineMonoid& m, const IntVector& v)
{
    return m.contains(v);
}

bool in_generated_monoid(std::size_t n, const std::vector<IntVector>& gens, const IntVector& v)
{
    if (toric::is_zero(v))
        return true;
    std::vector<IntVector> g = normalized_generators(gens);
    if (g.empty())
        return false;
    if (!EchelonLattice(hermite_basis(g, n), n).contains(v))
        return false;
    return CombinationSearch(n, g).run(v);
}

bool same_monoid(const AffineMonoid& a, const AffineMonoid& b)
{
    if (a.ambient_rank() != b.ambient_rank())
        return false;
    if (a.diff_lattice() != b.diff_lattice() || a.cone() != b.cone())
        return false;
    auto within = [](const AffineMonoid& x, const AffineMonoid& y) {
        return std::all_of(x.generators().begin(), x.generators().end(),
                           [&](const IntVector& g) { return y.contains(g); });
    };
    return within(a, b) && within(b, a);
}

DifferenceExtension monoid_of_differences(const AffineMonoid& m, const std::vector<IntVector>& t)
{
    std::vector<IntVector> gens = m.generators();
    for (const IntVector& x : t)
    {
        if (!m.contains(x))
            throw NotAMemberError("monoid_of_differences: " + to_string(x) +
                                  " is not in the monoid");
        gens.push_back(negated(x));
    }
    AffineMonoid result = AffineMonoid::generated_by(m.ambient_rank(), std::move(gens));
    return {m, t, std::move(result)};
}

bool is_integrally_closed(const AffineMonoid& m)
{
    return m.saturated();
}

AffineMonoid monoid_sum(const AffineMonoid& a, const AffineMonoid& b)
{
    if (a.ambient_rank() != b.ambient_rank())
        throw std::invalid_argument("monoid_sum: ambient rank mismatch");
    std::vector<IntVector> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return AffineMonoid::generated_by(a.ambient_rank(), std::move(gens));
}

LocalizingElement find_localizing_element(const AffineMonoid& big,
                                          const AffineMonoid& small_face_monoid,
                                          const Polycone& sigma, const Polycone& tau)
{
    if (!is_face_of(tau, sigma))
        throw NotAFaceError("find_localizing_element: " + tau.to_string() + " is not a face of " +
                            sigma.to_string());
    LocalizingElement out;
    out.u = face_witness(sigma, tau);
    if (!big.contains(out.u) || !small_face_monoid.contains(negated(out.u)))
        throw std::logic_error("find_localizing_element: witness is not a unit of the face monoid");

    for (const IntVector& h : small_face_monoid.generators())
    {
        Integer k = 0;
        for (const IntVector& r : sigma.rays())
        {
            Integer ur = dot(out.u, r);
            Integer hr = dot(h, r);
            if (ur == 0)
            {
                if (hr < 0)
                    throw std::logic_error("find_localizing_element: face monoid is too large");
                continue;
            }
            if (hr < 0)
            {
                Integer need;
                Integer neg = -hr;
                mpz_cdiv_q(need.get_mpz_t(), neg.get_mpz_t(), ur.get_mpz_t());
                k = std::max(k, need);
            }
        }
        IntVector shifted = add(h, scaled(out.u, k));
        if (!big.contains(shifted))
            throw std::logic_error("find_localizing_element: certificate check failed");
        out.certificate.emplace_back(h, k);
    }
    for (const IntVector& g : big.generators())
        if (!small_face_monoid.contains(g))
            throw std::logic_error("find_localizing_element: sigma monoid not inside tau monoid");
    return out;
}

namespace {

/** Generator subsets lying on the faces of cone(gens), by facet intersection. */
std::vector<std::vector<IntVector>> generators_by_face(const AffineMonoid& m)
{
    const auto& gens = m.generators();
    std::vector<std::vector<bool>> facets;
    for (const IntVector& u : m.cone().normals())
    {
        std::vector<bool> on(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i)
            on[i] = dot(u, gens[i]) == 0;
        facets.push_back(std::move(on));
    }
    std::set<std::vector<bool>> seen{std::vector<bool>(gens.size(), true)};
    std::vector<std::vector<bool>> queue{std::vector<bool>(gens.size(), true)};
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (const auto& f : facets)
        {
            std::vector<bool> s(gens.size());
            for (std::size_t i = 0; i < gens.size(); ++i)
                s[i] = queue[q][i] && f[i];
            if (seen.insert(s).second)
                queue.push_back(std::move(s));
        }
    std::vector<std::vector<IntVector>> out;
    for (const auto& s : queue)
    {
        std::vector<IntVector> part;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (s[i])
                part.push_back(gens[i]);
        out.push_back(std::move(part));
    }
    // smallest faces first, so t = 0 is tried before anything else
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

bool localizes_to(const AffineMonoid& target, const AffineMonoid& source, const IntVector& t)
{
    if (!target.contains(negated(t)))
        return false;
    std::vector<IntVector> gens = source.generators();
    gens.push_back(negated(t));
    const std::size_t n = source.ambient_rank();
    return std::all_of(target.generators().begin(), target.generators().end(),
                       [&](const IntVector& g) { return in_generated_monoid(n, gens, g); });
}

}  // namespace

ImmersionCheck check_openly_immersive_pair(const AffineMonoid& target, const AffineMonoid& source,
                                           std::size_t search_bound)
{
    const std::size_t n = source.ambient_rank();
    if (target.ambient_rank() != n)
        throw std::invalid_argument("check_openly_immersive_pair: ambient rank mismatch");
    for (const IntVector& g : source.generators())
        if (!target.contains(g))
            throw std::invalid_argument("check_openly_immersive_pair: source generator " +
                                        to_string(g) + " is not in the target");

    ImmersionCheck out;
    if (same_monoid(target, source))
    {
        out.verdict = Tri::yes;
        out.t = IntVector(n, Integer(0));
        out.reason = "source and target coincide";
        return out;
    }
    if (target.diff_lattice() != source.diff_lattice())
    {
        out.verdict = Tri::no;
        out.reason = "difference groups differ: inverting elements of the source never changes "
                     "its group of differences";
        return out;
    }
    if (target.cone().pointed())
    {
        out.verdict = Tri::no;
        out.reason = "the target has no nontrivial units, so only t = 0 is possible";
        return out;
    }
    if (source.saturated())
    {
        if (!target.saturated())
        {
            out.verdict = Tri::no;
            out.reason = "saturation obstruction: the source is integrally closed but the target "
                         "is not";
            return out;
        }
        // for a saturated source, source - t depends only on the face containing t
        for (const auto& part : generators_by_face(source))
        {
            IntVector t(n, Integer(0));
            for (const IntVector& g : part)
                t = add(t, g);
            if (localizes_to(target, source, t))
            {
                out.verdict = Tri::yes;
                out.t = std::move(t);
                out.reason = "target is the localization of the source at a face";
                return out;
            }
        }
        out.verdict = Tri::no;
        out.reason = "no face localization of the integrally closed source equals the target";
        return out;
    }

    // N-combinations of source generators by increasing total degree
    const auto& gens = source.generators();
    std::vector<std::size_t> coeff(gens.size(), 0);
    for (std::size_t degree = 1; degree <= search_bound; ++degree)
    {
        std::vector<std::vector<std::size_t>> stack;
        std::function<bool(std::size_t, std::size_t)> walk = [&](std::size_t i,
                                                                 std::size_t left) -> bool {
            if (i + 1 == gens.size() || left == 0)
            {
                if (i < gens.size())
                    coeff[i] = left;
                for (std::size_t j = i + 1; j < gens.size(); ++j)
                    coeff[j] = 0;
                IntVector t(n, Integer(0));
                for (std::size_t j = 0; j < gens.size(); ++j)
                    if (coeff[j])
                        t = add(t, scaled(gens[j], Integer(static_cast<unsigned long>(coeff[j]))));
                if (localizes_to(target, source, t))
                {
                    out.t = std::move(t);
                    return true;
                }
                return false;
            }
            for (std::size_t c = left + 1; c-- > 0;)
            {
                coeff[i] = c;
                if (walk(i + 1, left - c))
                    return true;
            }
            return false;
        };
        if (!gens.empty() && walk(0, degree))
        {
            out.verdict = Tri::yes;
            out.reason = "found t of total degree " + std::to_string(degree);
            return out;
        }
    }
    out.verdict = Tri::unknown;
    out.reason = "no single-element localization found up to degree " +
                 std::to_string(search_bound);
    return out;
}

}  // namespace toric
