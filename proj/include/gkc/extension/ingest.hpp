#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "gkc/extension/descriptor.hpp"

namespace gkc {

inline constexpr const char* kDescriptorSchema = "gkc-extension/1";

/// {"kind": "abelian" | "dihedral" | "quaternion8" | "units_mod" | "table", "data": ...}
GroupPtr group_from_json(const nlohmann::json& j);
nlohmann::json group_to_json(const FiniteGroup& G);

/// Parses and validates an extension-descriptor document; every prime record
/// is marked ingested. Throws SchemaViolation or InvariantViolation.
ExtensionDescriptor ingest_extension(const nlohmann::json& doc);
ExtensionDescriptor ingest_extension_file(const std::filesystem::path& path);

/// Canonical document for a descriptor (inverse of ingest up to provenance).
nlohmann::json to_json(const ExtensionDescriptor& ext);

/// Reads a JSON file, reporting IO and parse failures with the path.
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace gkc
