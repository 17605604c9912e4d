#pragma once

#include <string>

#include "evolution.hpp"

namespace ipm {

inline constexpr const char* kTraceHeader = "t,k,M,H2,H3,C1,S_inf,S_sup";

// Shortest-roundtrip decimal formatting; write-then-read restores every row
// to full float64 precision.
void write_trace(const NormTrace& trace, const std::string& path);
NormTrace read_trace(const std::string& path);

std::string format_double(double v);

}  // namespace ipm
