#pragma once

// JSON serialisation of curves, algebra paths and distance reports.
// Matrices are stored row-major as flat arrays; doubles round-trip exactly.

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "homshape/metrics.hpp"

namespace homshape {

using Json = nlohmann::json;

struct LoadOptions {
  /// Constraint tolerance for loaded samples. Samples accepted beyond the
  /// default tolerance are projected onto the manifold.
  double tolerance = kManifoldTolerance;
  /// Project samples onto the manifold before checking.
  bool repair = false;
};

Json matrix_to_json(const Matrix& m);
/// Throws Errc::schema unless `j` is an array of rows * cols numbers.
Matrix matrix_from_json(const Json& j, Index rows, Index cols);

Json spec_to_json(const ManifoldSpec& spec);
ManifoldSpec spec_from_json(const Json& j);

Json curve_to_json(const DiscreteCurve& c, const std::optional<std::string>& name = std::nullopt);
DiscreteCurve curve_from_json(const Json& j, const LoadOptions& options = {});

Json path_to_json(const AlgebraPath& q);
AlgebraPath path_from_json(const Json& j, const LoadOptions& options = {});

Json report_to_json(const ShapeDistanceReport& r);

/// Reads and parses a JSON file (Errc::schema on I/O or parse errors).
Json read_json(const std::filesystem::path& path);
/// Writes to a temporary sibling and renames it over `path`.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);
void write_json_atomic(const std::filesystem::path& path, const Json& j);

DiscreteCurve load_curve(const std::filesystem::path& path, const LoadOptions& options = {});
void save_curve(const std::filesystem::path& path, const DiscreteCurve& c,
                const std::optional<std::string>& name = std::nullopt);
AlgebraPath load_path(const std::filesystem::path& path, const LoadOptions& options = {});
void save_path(const std::filesystem::path& path, const AlgebraPath& q);

}  // namespace homshape
