// output.hpp — CSV/JSON serialization with stable schemas and atomic writes

#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "fiberising/entanglement.hpp"
#include "fiberising/experiments.hpp"

namespace fiberising {

// 12 significant digits; fixes the byte layout of every numeric column.
std::string format_g12(double v);

// Writes via a temp file and rename so no output is ever half-written.
// Throws IoError on any filesystem failure.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

// Schema strings; emitted as the first comment line of every CSV.
inline constexpr const char* kSweepSchema = "fiberising.sweep.v1";
inline constexpr const char* kSeriesSchema = "fiberising.series.v1";
inline constexpr const char* kSummarySchema = "fiberising.summary.v1";

// Header: delta,gamma0,j12,j23,j31,pole_distance,status. Coupling columns are
// zero for non-ok cells; status is one of ok|pole|invalid.
std::string sweep_csv(const SweepGrid& grid);

// Header: t,c12,c23,c13,c1_23,c123,norm_error. Extra comment lines (without
// the leading '#') are emitted after the schema line.
std::string series_csv(const EntanglementSeries& series,
                       std::span<const std::string> extra_comments = {});

}  // namespace fiberising
