#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "ftspanner/metric.hpp"

namespace ftspanner {

/// Points file: a "# dim=<d> n=<n>" header, then n rows of d tab-separated
/// decimal coordinates. Values are written in shortest round-trip form, so
/// save followed by load reproduces every coordinate bit for bit.
void write_points(std::ostream& out, const PointSet& points);
void save_points(const std::filesystem::path& path, const PointSet& points);

/// Throws InputError carrying the offending line number.
PointSet read_points(std::istream& in);
PointSet load_points(const std::filesystem::path& path);

/// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace ftspanner
