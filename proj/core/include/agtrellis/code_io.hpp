// agtrellis: trellis state complexity of codes from curves
// Copyright 2026 The agtrellis authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "agtrellis/gonality.hpp"
#include "agtrellis/linear_code.hpp"

namespace agtrellis {

/// Code file format, human-diffable and field-explicit:
///   line 1: field p m c0 c1 ... cm   (modulus coefficients, low to high)
///   line 2: code k n
///   then k lines of n space-separated element indices (generator rows).
/// write(read(file)) is the identity on files produced by write.
void write_code(std::ostream& os, const LinearCode& code);
std::string code_to_string(const LinearCode& code);
LinearCode read_code(std::istream& is);
LinearCode code_from_string(const std::string& text);

LinearCode load_code(const std::filesystem::path& path);
void save_code(const std::filesystem::path& path, const LinearCode& code);

/// Gonality sequence record as JSON: {"genus": g, "origin": tag,
/// "gammas": [...]} plus "plane_r" for plane sequences.
std::string gonality_to_json(const GonalitySequence& gs);
GonalitySequence gonality_from_json(const std::string& text);
GonalitySequence load_gonality(const std::filesystem::path& path);

} // namespace agtrellis
