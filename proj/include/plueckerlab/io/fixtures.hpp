#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plueckerlab/io/records.hpp"

namespace plab::io {

std::vector<std::string> builtin_names();
/// The record (kind "web" or "flux") of a built-in fixture.
std::optional<json> builtin_fixture(const std::string& name);

WebRecord builtin_web(const std::string& name);
FluxRecord builtin_flux(const std::string& name);

/// Skew matrix from its strict upper triangle, row by row.
SkewMatrix from_upper(std::size_t size, const std::vector<int>& upper);
/// Web whose combination a A + b B + c C + d D is given by the strict upper
/// triangle of linear forms in a, b, c, d.
SkewWeb from_pattern(std::size_t size, const std::vector<std::string>& upper);

}  // namespace plab::io
