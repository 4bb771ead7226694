// Acceptance checks: prints one PASS/FAIL line per criterion.

#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "algebra_support.hpp"
#include "golden_fans.hpp"
#include "oracles.hpp"
#include "test_support.hpp"
#include "toric/cli.hpp"
#include "toric/scheme_model.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

/** Collects failure descriptions for one criterion. */
struct Check
{
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what)
    {
        if (!ok)
            failures.push_back(what);
    }
};

std::set<IntVector> as_set(const std::vector<IntVector>& v)
{
    return {v.begin(), v.end()};
}

std::vector<Fan> golden_fan_list()
{
    std::vector<Fan> out;
    for (const NamedFan& g : golden_fans())
        out.push_back(g.fan());
    return out;
}

// 1. dual of the dual is the cone itself
void biduality(Check& c)
{
    std::mt19937 rng(101);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (int trial = 0; trial < 200; ++trial)
    {
        std::size_t n = dim(rng);
        std::uniform_int_distribution<std::size_t> count(1, n + 2);
        std::vector<IntVector> rays;
        for (std::size_t i = 0, k = count(rng); i < k; ++i)
            rays.push_back(random_vector(rng, n, -5, 5));
        Polycone cone = cone_from_rays(n, rays);
        c.expect(dual_cone(dual_cone(cone)) == cone, "biduality fails for " + cone.to_string());
    }
}

// 2. Hilbert basis against lattice points of the box [0,8]^n
void hilbert_oracle(Check& c)
{
    std::mt19937 rng(102);
    int checked = 0;
    while (checked < 50)
    {
        std::size_t n = 1 + checked % 3;
        std::uniform_int_distribution<std::size_t> count(1, n + 1);
        std::vector<IntVector> rays;
        for (std::size_t i = 0, k = count(rng); i < k; ++i)
            rays.push_back(random_vector(rng, n, 0, 4));
        Polycone cone = cone_from_rays(n, rays);
        if (cone.is_zero())
            continue;
        // Every Hilbert basis element lies in a parallelepiped spanned by at most n
        // rays, so the box contains it once the n largest entries per coordinate sum to 8.
        bool fits = true;
        for (std::size_t i = 0; i < n; ++i)
        {
            std::vector<Integer> col;
            for (const IntVector& r : cone.rays())
                col.push_back(r[i]);
            std::sort(col.rbegin(), col.rend());
            Integer s = 0;
            for (std::size_t j = 0; j < std::min(n, col.size()); ++j)
                s += col[j];
            fits = fits && s <= 8;
        }
        if (!fits)
            continue;
        std::set<IntVector> points;
        oracle::for_each_box_point(n, 0, 8, [&](const IntVector& p) {
            if (cone.contains(p))
                points.insert(p);
        });
        HilbertBasis hb = hilbert_basis(AffineMonoid::of_cone(cone));
        c.expect(hb.lineality.empty() && as_set(hb.pointed) == oracle::minimal_elements(points),
                 "Hilbert basis differs from the box oracle for " + cone.to_string());
        ++checked;
    }
}

// 3. golden fans: validation, completeness, regularity, deleted faces
void golden_suite(Check& c)
{
    for (const NamedFan& g : golden_fans())
    {
        Fan f = validate_fan(g.rank, complete_under_faces([&] {
                                 std::vector<Polycone> maximal;
                                 for (const auto& rays : g.maximal)
                                     maximal.push_back(cone_from_rays(g.rank, rays));
                                 return maximal;
                             }()));
        c.expect(is_complete(f) == g.complete, g.name + ": completeness");
        c.expect(is_regular(f).regular == g.regular, g.name + ": regularity");
        std::vector<std::size_t> maximal = f.maximal_cones();
        for (std::size_t i = 0; i < f.size(); ++i)
        {
            if (std::find(maximal.begin(), maximal.end(), i) != maximal.end())
                continue;
            std::vector<Polycone> rest = f.cones();
            rest.erase(rest.begin() + static_cast<long>(i));
            bool rejected = false;
            try
            {
                validate_fan(g.rank, rest);
            }
            catch (const FanValidationError& e)
            {
                rejected = e.kind() == FanViolation::missing_face;
            }
            c.expect(rejected, g.name + ": accepted without face " + f.cones()[i].to_string());
        }
    }
}

// 4. (σ ∩ τ)∨_M = σ∨_M + τ∨_M
void separation_identity(Check& c)
{
    std::mt19937 rng(104);
    std::vector<Fan> fans = golden_fan_list();
    for (int i = 0; i < 20; ++i)
        fans.push_back(i % 2 == 0 ? random_fan_rank2(rng) : random_fan_rank3(rng));
    for (const Fan& f : fans)
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j)
            {
                const Polycone& s = f.cones()[i];
                const Polycone& t = f.cones()[j];
                AffineMonoid sum = monoid_sum(dual_monoid(s), dual_monoid(t));
                AffineMonoid meet = dual_monoid(intersect_cones(s, t));
                bool both = true;
                for (const IntVector& h : hilbert_basis(meet).generators())
                    both = both && sum.contains(h);
                for (const IntVector& h : sum.generators())
                    both = both && meet.contains(h);
                c.expect(both, "identity fails for " + s.to_string() + " and " + t.to_string());
            }
}

// 5. localizing elements and the atlas of the projective line
void localization(Check& c)
{
    for (const Fan& f : golden_fan_list())
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = 0; j < f.size(); ++j)
            {
                if (!f.precedes(i, j))
                    continue;
                const Polycone& tau = f.cones()[i];
                const Polycone& sigma = f.cones()[j];
                AffineMonoid big = dual_monoid(sigma);
                AffineMonoid small = dual_monoid(tau);
                LocalizingElement le = find_localizing_element(big, small, sigma, tau);
                bool ok = big.contains(le.u);
                std::vector<IntVector> on_kernel;
                for (const IntVector& r : sigma.rays())
                    if (dot(r, le.u) == 0)
                        on_kernel.push_back(r);
                ok = ok && cone_from_rays(f.ambient_rank(), on_kernel) == tau;
                ok = ok && same_monoid(monoid_of_differences(big, {le.u}).result, small);
                for (const auto& [h, k] : le.certificate)
                    ok = ok && small.contains(h) && big.contains(add(h, scaled(le.u, k)));
                c.expect(ok, "bad localizing element for " + tau.to_string() + " in " +
                                 sigma.to_string());
            }

    MonoidSystem p1 = system_from_fan(projective_line().fan());
    GluingAtlas atlas = build_atlas(p1);
    AffineMonoid nat = AffineMonoid::generated_by(1, rows_of({{1}}));
    AffineMonoid neg = AffineMonoid::generated_by(1, rows_of({{-1}}));
    AffineMonoid whole = AffineMonoid::generated_by(1, rows_of({{1}, {-1}}));
    c.expect(atlas.maximal_charts.size() == 2, "P1 should have two maximal charts");
    if (atlas.maximal_charts.size() == 2)
    {
        const AffineMonoid& a = atlas.charts[atlas.maximal_charts[0]].monoid;
        const AffineMonoid& b = atlas.charts[atlas.maximal_charts[1]].monoid;
        c.expect((same_monoid(a, nat) && same_monoid(b, neg)) ||
                     (same_monoid(a, neg) && same_monoid(b, nat)),
                 "P1 maximal charts are not N and -N");
        std::size_t overlap = p1.inf(atlas.maximal_charts[0], atlas.maximal_charts[1]);
        c.expect(same_monoid(atlas.charts[overlap].monoid, whole), "P1 overlap is not Z");
    }
}

// 6. open immersivity
void immersivity(Check& c)
{
    for (const NamedFan& g : golden_fans())
        c.expect(is_openly_immersive(system_from_fan(g.fan())).verdict == Tri::yes,
                 g.name + " system not openly immersive");
    std::vector<std::vector<bool>> order{{true, true}, {false, true}};
    MonoidSystem doubling = MonoidSystem::explicit_system(
        1, {AffineMonoid::generated_by(1, rows_of({{1}})), AffineMonoid::generated_by(1, rows_of({{2}}))},
        order);
    ImmersivityResult r = is_openly_immersive(doubling);
    c.expect(r.verdict == Tri::no, "2N inside N not rejected");
    c.expect(!r.edges.empty() && r.edges[0].reason.find("difference group") != std::string::npos,
             "obstruction not named: " + (r.edges.empty() ? std::string() : r.edges[0].reason));
}

// 7. report engine and golden files
void report_goldens(Check& c)
{
    const std::string dir = TORIC_GOLDEN_DIR;
    auto run = [&](const std::string& fan, const std::string& base) {
        std::ostringstream out, err;
        int code = cli::run({"toric", "report", "--fan", dir + "/" + fan, "--base", dir + "/" + base},
                            out, err);
        c.expect(code == 0, "report failed: " + err.str());
        return out.str();
    };
    auto slurp = [&](const std::string& name) {
        std::ifstream in(dir + "/" + name);
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    };
    auto verdict = [](const std::string& text, const std::string& property) {
        for (const auto& r : nlohmann::json::parse(text))
            if (r["property"] == property)
                return r["verdict"].get<std::string>();
        return std::string("missing");
    };
    std::string p2 = run("p2.fan.json", "field.base.json");
    c.expect(verdict(p2, "morphism.proper") == "yes", "P2 proper");
    c.expect(verdict(p2, "morphism.regular") == "yes", "P2 regular");
    c.expect(verdict(p2, "space.dim") == "[2,2]", "P2 dim");
    c.expect(p2 == slurp("report_p2_field.out.json"), "P2 report differs from golden");
    std::string a2 = run("a2.fan.json", "field.base.json");
    c.expect(verdict(a2, "morphism.regular") == "no", "A2 regular");
    c.expect(verdict(a2, "morphism.normal") == "yes", "A2 normal");
    c.expect(verdict(a2, "morphism.cohen_macaulay") == "yes", "A2 Cohen-Macaulay");
    c.expect(a2 == slurp("report_a2_field.out.json"), "A2 report differs from golden");
    std::string none = run("empty.fan.json", "nonempty.base.json");
    c.expect(verdict(none, "morphism.faithfully_flat") == "no", "empty fan faithfully flat");
    c.expect(none == slurp("report_empty_nonempty.out.json"), "empty fan report differs from golden");
}

// 8. monoid algebra laws
void algebra_laws(Check& c)
{
    std::mt19937 rng(108);
    std::vector<MonoidRef> monoids{
        std::make_shared<const AffineMonoid>(dual_monoid(cone_from_rays(2, rows_of({{1, 0}, {1, 2}})))),
        std::make_shared<const AffineMonoid>(AffineMonoid::generated_by(1, rows_of({{2}, {3}}))),
        std::make_shared<const AffineMonoid>(dual_monoid(Polycone::zero(2))),
    };
    std::vector<CoeffRing> rings{CoeffRing::integers(), CoeffRing::rationals(),
                                 CoeffRing::integers_mod(2), CoeffRing::integers_mod(6)};
    for (const CoeffRing& ring : rings)
        for (int trial = 0; trial < 100; ++trial)
        {
            MonoidRef m = monoids[trial % monoids.size()];
            AlgebraElement a = random_element(rng, ring, m);
            AlgebraElement b = random_element(rng, ring, m);
            AlgebraElement d = random_element(rng, ring, m);
            AlgebraElement one = structural_image(ring, m, 1);
            AlgebraElement zero = AlgebraElement::zero(ring, m);
            const std::string tag = ring.to_string() + " trial " + std::to_string(trial);
            c.expect(add(a, b) == add(b, a), tag + ": addition commutes");
            c.expect(multiply(a, b) == multiply(b, a), tag + ": multiplication commutes");
            c.expect(add(add(a, b), d) == add(a, add(b, d)), tag + ": addition associates");
            c.expect(multiply(multiply(a, b), d) == multiply(a, multiply(b, d)),
                     tag + ": multiplication associates");
            c.expect(multiply(a, add(b, d)) == add(multiply(a, b), multiply(a, d)),
                     tag + ": distributivity");
            c.expect(multiply(one, a) == a, tag + ": unit");
            c.expect(add(a, negate(a)) == zero, tag + ": inverse");
            c.expect(augmentation(multiply(a, b)) ==
                         ring.normalize(augmentation(a) * augmentation(b)),
                     tag + ": augmentation multiplicative");
            if (ring.kind() == RingKind::integers)
                for (const CoeffRing& target : {CoeffRing::integers_mod(2), CoeffRing::rationals()})
                {
                    c.expect(base_change(multiply(a, b), target) ==
                                 multiply(base_change(a, target), base_change(b, target)),
                             tag + ": base change respects products");
                    c.expect(base_change(add(a, b), target) ==
                                 add(base_change(a, target), base_change(b, target)),
                             tag + ": base change respects sums");
                }
        }
}

// 9. dimension formula
void dimension_formula(Check& c)
{
    for (long n = 0; n <= 3; ++n)
    {
        MonoidSystem s = system_from_fan(validate_fan(static_cast<std::size_t>(n),
                                                      {Polycone::zero(static_cast<std::size_t>(n))}));
        for (long d = 0; d <= 2; ++d)
            for (bool ln : {true, false})
            {
                BaseDescriptor base({{BaseFlag::locally_noetherian, ln ? Tri::yes : Tri::unknown}},
                                    DimInterval::range(d, Integer(d)));
                long hi = ln ? d + n : (n + 1) * d + n;
                c.expect(dimension_bounds(s, base) == DimInterval::range(d + n, Integer(hi)),
                         "bounds for n=" + std::to_string(n) + " dim=" + std::to_string(d));
            }
    }
    // hand-computed spot values
    MonoidSystem plane = system_from_fan(projective_plane().fan());
    MonoidSystem line = system_from_fan(projective_line().fan());
    BaseDescriptor curve({}, DimInterval::range(1, Integer(1)));
    BaseDescriptor curve_ln({{BaseFlag::locally_noetherian, Tri::yes}}, DimInterval::range(1, Integer(1)));
    BaseDescriptor surface({}, DimInterval::range(2, Integer(2)));
    c.expect(dimension_bounds(plane, curve_ln).to_string() == "[3,3]", "P2 over a noetherian curve");
    c.expect(dimension_bounds(line, curve).to_string() == "[2,3]", "P1 over a curve");
    c.expect(dimension_bounds(plane, surface).to_string() == "[4,8]", "P2 over a surface");
    c.expect(dimension_bounds(plane, BaseDescriptor::field_point()).to_string() == "[2,2]",
             "P2 over a field");
}

// 10. fullification
void fullification(Check& c)
{
    FullificationResult ray = fullify(fan_from_maximal_cones(2, {rows_of({{2, 4}})}));
    c.expect(ray.reduced_fan.ambient_rank() == 1 && ray.torus_rank == 1,
             "ray (2,4) does not reduce to rank 1 with a rank 1 torus");
    for (const NamedFan& g : golden_fans())
    {
        Fan f = g.fan();
        FullificationResult r = fullify(f);
        RegularityReport before = is_regular(f);
        RegularityReport after = is_regular(r.reduced_fan);
        c.expect(before.regular == after.regular, g.name + ": regularity changed");
        for (std::size_t i = 0; i < r.reduced_fan.size(); ++i)
        {
            c.expect(after.per_cone[i] == before.per_cone[r.cone_map[i]],
                     g.name + ": cone regularity changed");
            for (std::size_t j = 0; j < r.reduced_fan.size(); ++j)
                c.expect(r.reduced_fan.precedes(i, j) == f.precedes(r.cone_map[i], r.cone_map[j]),
                         g.name + ": face order changed");
        }
    }
}

}  // namespace

int main()
{
    struct Criterion
    {
        const char* name;
        std::function<void(Check&)> run;
    };
    const std::vector<Criterion> criteria = {
        {"dual-cone biduality on 200 random cones", biduality},
        {"Hilbert bases agree with the brute-force oracle", hilbert_oracle},
        {"golden fan suite", golden_suite},
        {"separation identity on golden and random fans", separation_identity},
        {"localization certificates and the P1 atlas", localization},
        {"open-immersivity decisions", immersivity},
        {"report engine golden files", report_goldens},
        {"monoid-algebra laws", algebra_laws},
        {"dimension formula", dimension_formula},
        {"fullification", fullification},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        Check c;
        try
        {
            criteria[i].run(c);
        }
        catch (const std::exception& e)
        {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        bool pass = c.failures.empty();
        failed += !pass;
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].name;
        if (!pass)
            std::cout << " (" << c.failures.size() << " failures; first: " << c.failures.front() << ")";
        std::cout << "\n";
    }
    return failed == 0 ? 0 : 1;
}
