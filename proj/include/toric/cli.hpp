#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "toric/fans.hpp"
#include "toric/scheme_model.hpp"

/**
 * Command-line front end. Documents are JSON; integer vectors are arrays of
 * decimal strings. Exit codes: 0 success, 1 parse or IO error, 2 mathematical
 * rejection.
 */
namespace toric::cli {

using Json = nlohmann::ordered_json;

enum ExitCode { exit_ok = 0, exit_parse = 1, exit_rejected = 2 };

/** Malformed document: exit code 1. */
class ParseError : public std::runtime_error
{
    public:
        explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/** Well-formed input the mathematics rejects: exit code 2. */
class RejectedError : public std::runtime_error
{
    public:
        explicit RejectedError(const std::string& what) : std::runtime_error(what) {}
};

struct FanInput
{
    Fan fan;
    /** The cones in document order, before face closure. */
    std::vector<Polycone> listed;
};

/**
 * {"lattice_rank": n, "cones": [{"rays": [...]}], "options": {"auto_close_faces": b}}.
 * `force_no_close` overrides the document option. Throws ParseError on shape
 * or rank errors, FanValidationError or NotPointedError on invalid fans.
 */
FanInput parse_fan_document(const nlohmann::json& doc, bool force_no_close = false);

/** Flat {"<flag>": "yes|no|unknown", "dim": ["lo","hi"|"inf"] | "empty" | "unknown"}. */
BaseDescriptor parse_base_document(const nlohmann::json& doc);

IntVector parse_vector(const nlohmann::json& v, std::size_t n);
Json vector_json(const IntVector& v);
Json vectors_json(const std::vector<IntVector>& vs);
Json cone_json(const Polycone& c);
/** Every cone of the fan, auto_close_faces false: re-parses to the same fan. */
Json fan_json(const Fan& f);
Json report_json(const PropertyReport& r);

/** Runs the tool on argv-style arguments (args[0] is the program name). */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
