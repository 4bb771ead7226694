#include "toric/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "toric/monoids.hpp"

namespace toric::cli {

namespace {

Integer parse_integer(const nlohmann::json& v)
{
    if (v.is_number_integer())
        return Integer(std::to_string(v.get<long long>()));
    if (!v.is_string())
        throw ParseError("expected an integer as a decimal string, got " + v.dump());
    const std::string s = v.get<std::string>();
    Integer out;
    bool digits = !s.empty() && s.find_first_not_of("-0123456789") == std::string::npos;
    if (!digits || out.set_str(s, 10) != 0)
        throw ParseError("not a decimal integer: \"" + s + "\"");
    return out;
}

nlohmann::json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read " + path);
    try
    {
        return nlohmann::json::parse(in);
    }
    catch (const nlohmann::json::exception& e)
    {
        throw ParseError(path + ": " + e.what());
    }
}

Tri parse_tri(const std::string& key, const nlohmann::json& v)
{
    if (v.is_boolean())
        return tri(v.get<bool>());
    if (v.is_string())
    {
        const std::string s = v.get<std::string>();
        if (s == "yes")
            return Tri::yes;
        if (s == "no")
            return Tri::no;
        if (s == "unknown")
            return Tri::unknown;
    }
    throw ParseError("base key " + key + " must be yes, no or unknown");
}

const Polycone& listed_cone(const FanInput& in, std::size_t index)
{
    if (index >= in.listed.size())
        throw RejectedError("cone index " + std::to_string(index) + " out of range (" +
                            std::to_string(in.listed.size()) + " cones listed)");
    return in.listed[index];
}

}  // namespace

IntVector parse_vector(const nlohmann::json& v, std::size_t n)
{
    if (!v.is_array())
        throw ParseError("expected an array of integers, got " + v.dump());
    if (v.size() != n)
        throw ParseError("vector " + v.dump() + " does not have length " + std::to_string(n));
    IntVector out;
    for (const auto& x : v)
        out.push_back(parse_integer(x));
    return out;
}

FanInput parse_fan_document(const nlohmann::json& doc, bool force_no_close)
{
    if (!doc.is_object())
        throw ParseError("fan document must be an object");
    if (!doc.contains("lattice_rank") || !doc["lattice_rank"].is_number_unsigned())
        throw ParseError("fan document needs a nonnegative integer lattice_rank");
    const std::size_t n = doc["lattice_rank"].get<std::size_t>();
    if (!doc.contains("cones") || !doc["cones"].is_array())
        throw ParseError("fan document needs a cones array");
    bool auto_close = true;
    if (doc.contains("options"))
    {
        const auto& opts = doc["options"];
        if (!opts.is_object())
            throw ParseError("options must be an object");
        if (opts.contains("auto_close_faces"))
        {
            if (!opts["auto_close_faces"].is_boolean())
                throw ParseError("auto_close_faces must be a boolean");
            auto_close = opts["auto_close_faces"].get<bool>();
        }
    }
    if (force_no_close)
        auto_close = false;

    FanInput out;
    for (const auto& c : doc["cones"])
    {
        if (!c.is_object() || !c.contains("rays") || !c["rays"].is_array())
            throw ParseError("each cone needs a rays array");
        std::vector<IntVector> rays;
        for (const auto& r : c["rays"])
            rays.push_back(parse_vector(r, n));
        out.listed.push_back(cone_from_rays(n, rays));
    }
    for (const Polycone& c : out.listed)
        if (!c.pointed())
            throw FanValidationError(FanViolation::non_pointed, c, std::nullopt);
    out.fan = validate_fan(n, auto_close ? complete_under_faces(out.listed) : out.listed);
    return out;
}

BaseDescriptor parse_base_document(const nlohmann::json& doc)
{
    if (!doc.is_object())
        throw ParseError("base document must be an object");
    std::vector<std::pair<BaseFlag, Tri>> flags;
    DimInterval dim;
    for (const auto& [key, value] : doc.items())
    {
        if (key == "dim")
        {
            if (value.is_string() && value.get<std::string>() == "empty")
                dim = DimInterval::empty_scheme();
            else if (value.is_string() && value.get<std::string>() == "unknown")
                dim = DimInterval::unknown();
            else if (value.is_array() && value.size() == 2)
            {
                std::optional<Integer> hi;
                if (!(value[1].is_string() && value[1].get<std::string>() == "inf"))
                    hi = parse_integer(value[1]);
                dim = DimInterval::range(parse_integer(value[0]), hi);
            }
            else
                throw ParseError("dim must be [lo, hi], \"empty\" or \"unknown\"");
            continue;
        }
        auto flag = base_flag_from_string(key);
        if (!flag)
            throw ParseError("unknown base key " + key);
        flags.emplace_back(*flag, parse_tri(key, value));
    }
    return BaseDescriptor(flags, dim);
}

Json vector_json(const IntVector& v)
{
    Json out = Json::array();
    for (const Integer& x : v)
        out.push_back(x.get_str());
    return out;
}

Json vectors_json(const std::vector<IntVector>& vs)
{
    Json out = Json::array();
    for (const IntVector& v : vs)
        out.push_back(vector_json(v));
    return out;
}

Json cone_json(const Polycone& c)
{
    return Json{{"rays", vectors_json(c.rays())}, {"lineality", vectors_json(c.lineality())}};
}

Json fan_json(const Fan& f)
{
    Json cones = Json::array();
    for (const Polycone& c : f.cones())
        cones.push_back(Json{{"rays", vectors_json(c.rays())}});
    return Json{{"lattice_rank", f.ambient_rank()},
                {"cones", cones},
                {"options", Json{{"auto_close_faces", false}}}};
}

Json report_json(const PropertyReport& r)
{
    Json out = Json::array();
    for (const PropertyRecord& rec : r.records)
        out.push_back(Json{{"property", rec.property},
                           {"verdict", rec.verdict_text},
                           {"citation", rec.citation},
                           {"justification", rec.justification}});
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fans, dual monoids and properties of toric schemes over a base", "toric"};
    app.require_subcommand(1);

    std::string fan_path;
    std::string base_path;
    std::size_t cone_index = 0;
    std::size_t search_bound = 6;
    bool no_close = false;

    auto with_fan = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--fan", fan_path, "fan document")->required();
        sub->add_flag("--no-auto-close", no_close, "do not close the listed cones under faces");
        return sub;
    };
    auto with_cone = [&](CLI::App* sub) {
        sub->add_option("--cone", cone_index, "index into the cones listed in the document")
            ->required();
        return sub;
    };

    CLI::App* validate = with_fan("validate", "check the fan axioms and echo the canonical fan");
    CLI::App* hilbert = with_cone(with_fan("hilbert", "Hilbert basis of a dual monoid"));
    CLI::App* report = with_fan("report", "cited property report of the toric scheme");
    report->add_option("--base", base_path, "base document")->required();
    CLI::App* dual = with_cone(with_fan("dual", "dual cone of a listed cone"));
    CLI::App* face_cmd = with_cone(with_fan("faces", "faces of a listed cone with witnesses"));
    CLI::App* regularity = with_fan("regularity", "regularity of every cone");
    CLI::App* complete = with_fan("complete", "completeness of the fan");
    CLI::App* atlas = with_fan("atlas", "gluing charts and transitions");
    atlas->add_option("--search-bound", search_bound, "degree bound for immersion searches");
    CLI::App* full = with_fan("fullify", "split off the torus factor");

    std::vector<const char*> argv;
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError& e)
    {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_parse;
    }

    try
    {
        FanInput in = parse_fan_document(read_json_file(fan_path), no_close);
        const Fan& f = in.fan;
        Json result;
        if (*validate)
            result = fan_json(f);
        else if (*hilbert)
        {
            const Polycone& c = listed_cone(in, cone_index);
            HilbertBasis hb = hilbert_basis(dual_monoid(c));
            result = Json{{"cone", cone_json(c)},
                          {"hilbert_basis", vectors_json(hb.pointed)},
                          {"lineality", vectors_json(hb.lineality)},
                          {"generators", vectors_json(hb.generators())}};
        }
        else if (*report)
            result = report_json(property_report(f, parse_base_document(read_json_file(base_path))));
        else if (*dual)
            result = cone_json(dual_cone(listed_cone(in, cone_index)));
        else if (*face_cmd)
        {
            result = Json::array();
            FaceLattice lattice = faces(listed_cone(in, cone_index));
            for (const Face& face : lattice.faces())
                result.push_back(Json{{"rays", vectors_json(face.cone.rays())},
                                      {"witness", vector_json(face.witness)}});
        }
        else if (*regularity)
        {
            RegularityReport r = is_regular(f);
            Json cones = Json::array();
            for (std::size_t i = 0; i < f.size(); ++i)
                cones.push_back(Json{{"rays", vectors_json(f.cones()[i].rays())},
                                     {"regular", static_cast<bool>(r.per_cone[i])}});
            result = Json{{"regular", r.regular}, {"cones", cones}};
        }
        else if (*complete)
            result = Json{{"complete", is_complete(f)}};
        else if (*atlas)
        {
            MonoidSystem s = system_from_fan(f);
            GluingAtlas a = build_atlas(s, search_bound);
            Json charts = Json::array();
            for (const Chart& c : a.charts)
                charts.push_back(Json{{"index", c.index},
                                      {"cone", c.label},
                                      {"generators", vectors_json(c.monoid.generators())}});
            Json transitions = Json::array();
            for (const Transition& t : a.transitions)
            {
                Json cert = Json::array();
                for (const auto& [h, k] : t.certificate)
                    cert.push_back(Json{{"h", vector_json(h)}, {"k", k.get_str()}});
                transitions.push_back(Json{{"lower", t.lower},
                                           {"upper", t.upper},
                                           {"u", vector_json(t.u)},
                                           {"certificate", cert}});
            }
            result = Json{{"charts", charts},
                          {"transitions", transitions},
                          {"maximal_charts", a.maximal_charts},
                          {"separated", check_separation_condition(s).holds}};
        }
        else if (*full)
        {
            FullificationResult r = fullify(f);
            std::vector<IntVector> basis, complement;
            for (std::size_t i = 0; i < r.sublattice_basis.rows(); ++i)
                basis.push_back(r.sublattice_basis.row(i));
            for (std::size_t i = 0; i < r.complement.rows(); ++i)
                complement.push_back(r.complement.row(i));
            result = Json{{"torus_rank", r.torus_rank},
                          {"sublattice_basis", vectors_json(basis)},
                          {"complement", vectors_json(complement)},
                          {"reduced_fan", fan_json(r.reduced_fan)}};
        }
        out << result.dump(2) << "\n";
        return exit_ok;
    }
    catch (const ParseError& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    }
    catch (const FanValidationError& e)
    {
        err << "rejected: " << to_string(e.kind()) << ": " << e.first().to_string();
        if (e.second())
            err << " and " << e.second()->to_string();
        err << "\n";
        return exit_rejected;
    }
    catch (const std::exception& e)
    {
        err << "rejected: " << e.what() << "\n";
        return exit_rejected;
    }
}

}  // namespace toric::cli
