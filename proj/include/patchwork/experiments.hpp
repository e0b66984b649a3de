#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "patchwork/calculus.hpp"
#include "patchwork/lattice.hpp"
#include "patchwork/real.hpp"

namespace patchwork {

struct TrialRecord {
    std::uint64_t trial = 0;
    std::size_t b0 = 0;
};

struct ExperimentResult {
    std::string complex_id;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::size_t interior = 0;
    std::uint64_t sum_b0 = 0;     ///< exact sums, so aggregation does not depend on trial order
    std::uint64_t sum_sq_b0 = 0;
    double mean_b0 = 0;
    double std_b0 = 0;            ///< sample standard deviation (n - 1 denominator)
    double ratio = 0;             ///< mean_b0 / (1 + interior)
    bool exhaustive = false;
    std::vector<TrialRecord> records;

    double standard_error() const;
};

/// Draws trial t from the stream (seed, t) of the counter-based generator.
ExperimentResult monte_carlo_b0(const PrimitiveComplex& k, std::size_t trials, std::uint64_t seed, const std::string& id = "",
                                bool keep_records = false);

inline constexpr std::size_t kMaxExhaustiveVertices = 20;

struct ExhaustiveResult {
    std::map<std::size_t, std::uint64_t> histogram;  ///< b0 -> number of sign distributions
    std::size_t bound = 0;                           ///< 1 + interior lattice points
    std::vector<std::uint64_t> maximal;              ///< vertex bit masks with b0 = bound
    ExperimentResult summary;
};

/// Every sign distribution; throws TooManyVertices above kMaxExhaustiveVertices.
ExhaustiveResult exhaustive_b0(const PrimitiveComplex& k, const std::string& id = "");

/// Deterministic SVG of the four reflected copies of a planar triangulation and the curve.
std::string render_svg(const PrimitiveComplex& k, const SignDistribution& eps);
void render_svg(const PrimitiveComplex& k, const SignDistribution& eps, const std::string& path);

/// Full analysis of one sign distribution as a JSON document.
nlohmann::json report(const PrimitiveComplex& k, const SignDistribution& eps);

nlohmann::json to_json(const ExperimentResult& r);
nlohmann::json to_json(const HaasReport& r);

}  // namespace patchwork
