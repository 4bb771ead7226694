#pragma once

#include <string_view>

namespace toric {

/** Three-valued truth: decided yes, decided no, or not decided. */
enum class Tri { yes, no, unknown };

constexpr std::string_view to_string(Tri t)
{
    switch (t)
    {
        case Tri::yes: return "yes";
        case Tri::no: return "no";
        case Tri::unknown: return "unknown";
    }
    return "unknown";
}

constexpr Tri tri(bool b) { return b ? Tri::yes : Tri::no; }

constexpr Tri operator!(Tri t)
{
    return t == Tri::yes ? Tri::no : t == Tri::no ? Tri::yes : Tri::unknown;
}

/** Kleene conjunction. */
constexpr Tri operator&&(Tri a, Tri b)
{
    if (a == Tri::no || b == Tri::no)
        return Tri::no;
    if (a == Tri::yes && b == Tri::yes)
        return Tri::yes;
    return Tri::unknown;
}

/** Kleene disjunction. */
constexpr Tri operator||(Tri a, Tri b)
{
    if (a == Tri::yes || b == Tri::yes)
        return Tri::yes;
    if (a == Tri::no && b == Tri::no)
        return Tri::no;
    return Tri::unknown;
}

}  // namespace toric
