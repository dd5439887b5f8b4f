#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "sliceq/quaternion.hpp"
#include "sliceq/slice_series.hpp"

namespace sliceq {

/// "x0 x1 x2 x3", shortest round-trip decimal per component.
std::string format_quaternion(const Quaternion& q);

/// Parses four whitespace-separated decimals. `line` is only used for the
/// ParseError message.
Quaternion parse_quaternion(std::string_view text, std::size_t line = 1);

// Series text format:
//
//   slice-series v1 N=<deg>
//   <n> <x0> <x1> <x2> <x3>      (one line per degree 0..N, any order)
//
// Blank lines are ignored. Duplicate, missing or out-of-range degrees are
// rejected with a ParseError naming the line.
void write_series(std::ostream& os, const SliceSeries& f);
SliceSeries read_series(std::istream& is);

SliceSeries load_series(const std::filesystem::path& path);
void save_series(const std::filesystem::path& path, const SliceSeries& f);

}  // namespace sliceq
