#pragma once

#include "arakelov/errors.hpp"
#include "arakelov/green.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arakelov::cli {

using Json = nlohmann::ordered_json;

// Scenario field that does not match the schema.
class SchemaError : public ParseError {
public:
    using ParseError::ParseError;
};

struct NamedDivisor {
    std::string name;
    MetrisedRDivisor divisor;
};

struct Scenario {
    std::shared_ptr<const CurveModel> curve;
    std::vector<NamedDivisor> divisors;
    std::optional<std::vector<std::int64_t>> n_list;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::vector<Rational> t_grid;
};

Scenario parse_scenario(const Json& doc);
// Reads and parses the file; `bytes` receives its raw content (hashed into
// the result bundle).
Scenario load_scenario(const std::string& path, std::string* bytes = nullptr);

Rational rational_from_json(const Json& v, const std::string& where);
Json rational_to_json(const Rational& q);
Json extended_to_json(const Extended& x);

// {"vertices": [[t, value], ...], "final_slope": q}
Plf plf_from_json(const Json& v, const std::string& where);
Json plf_to_json(const Plf& f);
Json divisor_to_json(const NamedDivisor& d);

std::string sha256_hex(const std::string& bytes);

}  // namespace arakelov::cli
