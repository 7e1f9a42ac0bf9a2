#pragma once

#include <string>
#include <vector>

#include "mpma/approximation.hpp"
#include "mpma/metrics.hpp"

namespace mpma {

// Module documents use "inf"/"-inf" for infinite coordinates.
std::string module_to_json(const ApproxModule& M);
// Throws DataError on malformed documents.
ApproxModule module_from_json(const std::string& text);

// Ground truth of a fixture as a module document.
ApproxModule truth_module(const Fixture& fx);

// Module-only fixtures: a square and two staircase squares at interleaving distance delta/2.
ApproxModule fig12_module(bool two_squares, double delta);

std::string raster_to_csv(const Raster& r);
std::string raster_to_json(const Raster& r);

}  // namespace mpma
