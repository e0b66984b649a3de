#pragma once

#include <string>

#include "json.hpp"
#include "patchwork/calculus.hpp"
#include "patchwork/lattice.hpp"
#include "patchwork/real.hpp"

namespace patchwork {

/// {"dim", "points", "facets": [{"normal", "offset"}], "maximal_simplices"}.
nlohmann::json triangulation_to_json(const PrimitiveComplex& k);
/// Parses and validates; malformed documents raise InvalidInput.
PrimitiveComplex triangulation_from_json(const nlohmann::json& j);

/**
 * {"values": [bits]} aligned with the point indices, or a formula:
 * {"formula": "harnack"}, {"formula": "random", "seed": s},
 * {"formula": "constant", "value": b}, or
 * {"formula": "quadratic", "coeffs": {"constant": c, "linear": [..], "pairs": [[i, j], ..]}}.
 */
SignDistribution signs_from_json(const nlohmann::json& j, const PrimitiveComplex& k);
nlohmann::json signs_to_json(const SignDistribution& eps);

/// {"cells": [{"dim", "cube": [[lower], [upper]], "arg": [bits]}], "faces": [[cell, face], ..]} with global cell numbering.
nlohmann::json cells_to_json(const PrimitiveComplex& k, const RealComplex& x);

nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace patchwork
