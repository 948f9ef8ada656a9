// Copyright (c) 2026 semilab developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace semilab {

/// Shortest decimal string that parses back to exactly x; used for every
/// numeric CSV cell so files are byte-stable across runs and platforms.
std::string format_double(double x);

/// FNV-1a 64-bit hash; manifest checksum of emitted files.
std::uint64_t fnv1a64(std::string_view data);

/// Lower-case hex, zero-padded to 16 digits.
std::string to_hex64(std::uint64_t value);

/// Writes content atomically enough for our purposes (single write call);
/// throws std::runtime_error naming the path on failure.
void write_text_file(const std::string& path, std::string_view content);

/// Reads a whole file; throws std::runtime_error naming the path on failure.
std::string read_text_file(const std::string& path);

}  // namespace semilab
