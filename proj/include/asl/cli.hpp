#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "asl/packets.hpp"
#include "asl/ramify.hpp"

namespace asl {

enum class OutputFormat { automatic, json, dot, text };

struct RunConfig {
    int f = 1;
    std::optional<std::uint32_t> modulus;
    std::int64_t precision = LaurentSeries::kDefaultPrecision;
    std::int64_t nmax = 1;
    OutputFormat output = OutputFormat::automatic;
    bool witness = false;
    bool dot = false;
    /// Accepted for symmetry with the test drivers; every subcommand is
    /// deterministic and ignores it.
    std::uint64_t seed = 20240601;
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitPrecision = 3;
inline constexpr int kExitDegenerate = 4;
inline constexpr int kExitBudget = 5;

/// Census record; key order is fixed.
nlohmann::ordered_json census_json(const SpectrumCensus &census);
/// Classification record for the plane spanned by u and v.
nlohmann::ordered_json classify_json(const PlaneDescriptor &w, const FieldCtx &k);
nlohmann::ordered_json triangle_json(const BernsteinPointDesc &s);

/// Runs the command line; args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace asl
