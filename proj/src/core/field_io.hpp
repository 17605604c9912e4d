#pragma once

#include <string>

#include "grid.hpp"

namespace ipm {

// Binary field file: magic "IPMF", version u32 LE, points_per_axis u32,
// half_width f64, then points_per_axis^2 f64 values row-major.
inline constexpr std::uint32_t kFieldFormatVersion = 1;

void write_field(const ScalarField& f, const std::string& path);
ScalarField read_field(const std::string& path);

}  // namespace ipm
