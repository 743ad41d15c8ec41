#pragma once

#include "uebk/construct.hpp"
#include "uebk/mixed_state.hpp"
#include "uebk/verify.hpp"

#include <filesystem>
#include <string>

namespace uebk {

/// Serialization is deterministic: identical inputs produce byte-identical
/// text (insertion-ordered keys, two-space indent, trailing newline,
/// round-trip-exact decimal floats). Complex numbers appear as [re, im].

std::string family_to_json(const UebkFamily& family);
/// Parses and re-validates the discrete parameters plus structural shape
/// (label arity, amplitude length). Amplitude values are taken as-is, so
/// tampered families load fine and fail verification instead.
UebkFamily family_from_json(const std::string& text);
void save_family(const UebkFamily& family, const std::filesystem::path& path);
UebkFamily load_family(const std::filesystem::path& path);

std::string report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const std::string& text);
void save_report(const VerificationReport& report, const std::filesystem::path& path);
VerificationReport load_report(const std::filesystem::path& path);

std::string density_to_json(const DensityMatrix& rho);
void save_density(const DensityMatrix& rho, const std::filesystem::path& path);

}  // namespace uebk
