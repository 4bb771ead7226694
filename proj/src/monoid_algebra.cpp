#include "toric/monoid_algebra.hpp"

namespace toric {

CoeffRing CoeffRing::integers_mod(const Integer& m)
{
    if (m < 2)
        throw std::invalid_argument("CoeffRing: modulus must be at least 2");
    return CoeffRing(RingKind::integers_mod, m);
}

Rational CoeffRing::normalize(const Rational& x) const
{
    switch (kind_)
    {
        case RingKind::rationals: return x;
        case RingKind::integers:
            if (x.get_den() != 1)
                throw std::invalid_argument("CoeffRing: " + x.get_str() + " is not an integer");
            return x;
        case RingKind::integers_mod:
        {
            if (x.get_den() != 1)
                throw std::invalid_argument("CoeffRing: " + x.get_str() + " is not an integer");
            Integer r;
            mpz_fdiv_r(r.get_mpz_t(), x.get_num_mpz_t(), modulus_.get_mpz_t());
            return Rational(r);
        }
    }
    return x;
}

std::string CoeffRing::to_string() const
{
    switch (kind_)
    {
        case RingKind::integers: return "Z";
        case RingKind::rationals: return "Q";
        case RingKind::integers_mod: return "Z/" + modulus_.get_str();
    }
    return "";
}

namespace {

void require_compatible(const AlgebraElement& a, const AlgebraElement& b)
{
    if (!(a.ring() == b.ring()))
        throw AlgebraMismatchError("coefficient rings differ: " + a.ring().to_string() + " vs " +
                                   b.ring().to_string());
    if (a.monoid() != b.monoid() && !same_monoid(*a.monoid(), *b.monoid()))
        throw AlgebraMismatchError("elements live over different monoids");
}

void accumulate(Terms& terms, const CoeffRing& ring, const IntVector& x, const Rational& c)
{
    Rational v = ring.normalize(terms[x] + c);
    if (v == 0)
        terms.erase(x);
    else
        terms[x] = v;
}

}  // namespace

AlgebraElement AlgebraElement::zero(const CoeffRing& ring, MonoidRef monoid)
{
    if (!monoid)
        throw std::invalid_argument("AlgebraElement: null monoid");
    return AlgebraElement(ring, std::move(monoid));
}

AlgebraElement AlgebraElement::from_terms(const CoeffRing& ring, MonoidRef monoid,
                                          const Terms& terms)
{
    AlgebraElement out = zero(ring, std::move(monoid));
    for (const auto& [x, c] : terms)
    {
        if (!out.monoid_->contains(x))
            throw NotAMemberError("AlgebraElement: " + toric::to_string(x) +
                                  " is not in the monoid");
        accumulate(out.terms_, ring, x, c);
    }
    return out;
}

Rational AlgebraElement::coefficient(const IntVector& x) const
{
    auto it = terms_.find(x);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::string AlgebraElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [x, c] : terms_)
    {
        if (!out.empty())
            out += " + ";
        out += c.get_str() + "*e" + toric::to_string(x);
    }
    return out;
}

AlgebraElement exp_map(const CoeffRing& ring, MonoidRef monoid, const IntVector& m)
{
    return AlgebraElement::from_terms(ring, std::move(monoid), {{m, Rational(1)}});
}

AlgebraElement structural_image(const CoeffRing& ring, MonoidRef monoid, const Rational& r)
{
    IntVector origin(monoid->ambient_rank(), Integer(0));
    return AlgebraElement::from_terms(ring, std::move(monoid), {{origin, r}});
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b)
{
    require_compatible(a, b);
    Terms t = a.terms();
    for (const auto& [x, c] : b.terms())
        accumulate(t, a.ring(), x, c);
    return AlgebraElement::from_terms(a.ring(), a.monoid(), t);
}

AlgebraElement negate(const AlgebraElement& a)
{
    Terms t;
    for (const auto& [x, c] : a.terms())
        t[x] = -c;
    return AlgebraElement::from_terms(a.ring(), a.monoid(), t);
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b)
{
    require_compatible(a, b);
    Terms t;
    for (const auto& [x, c] : a.terms())
        for (const auto& [y, d] : b.terms())
            accumulate(t, a.ring(), toric::add(x, y), c * d);
    // sums of monoid elements stay in the monoid
    return AlgebraElement::from_terms(a.ring(), a.monoid(), t);
}

Rational augmentation(const AlgebraElement& a)
{
    Rational s = 0;
    for (const auto& [x, c] : a.terms())
        s += c;
    return a.ring().normalize(s);
}

AlgebraElement localization_image(const AlgebraElement& a, const DifferenceExtension& ext)
{
    if (!same_monoid(*a.monoid(), ext.base))
        throw AlgebraMismatchError("localization_image: element is not over the base monoid");
    auto target = std::make_shared<const AffineMonoid>(ext.result);
    return AlgebraElement::from_terms(a.ring(), target, a.terms());
}

Fraction as_fraction(const AlgebraElement& b, MonoidRef base, const IntVector& t,
                     unsigned long max_power)
{
    unsigned long k = 0;
    for (const auto& [x, c] : b.terms())
    {
        unsigned long need = 0;
        while (!base->contains(toric::add(x, scaled(t, Integer(need)))))
        {
            if (++need > max_power)
                throw std::invalid_argument("as_fraction: " + toric::to_string(x) +
                                            " is not cleared by a power of e_t");
        }
        k = std::max(k, need);
    }
    IntVector shift = scaled(t, Integer(k));
    Terms num;
    for (const auto& [x, c] : b.terms())
        num[toric::add(x, shift)] = c;
    return {AlgebraElement::from_terms(b.ring(), std::move(base), num), t, k};
}

AlgebraElement base_change(const AlgebraElement& a, const CoeffRing& target)
{
    const CoeffRing& source = a.ring();
    bool supported = source == target ||
                     (source.kind() == RingKind::integers && target.kind() != RingKind::integers) ||
                     (source.kind() == RingKind::integers_mod &&
                      target.kind() == RingKind::integers_mod &&
                      source.modulus() % target.modulus() == 0);
    if (!supported)
        throw UnsupportedMorphismError("base_change: no supported map " + source.to_string() +
                                       " -> " + target.to_string());
    return AlgebraElement::from_terms(target, a.monoid(), a.terms());
}

}  // namespace toric
