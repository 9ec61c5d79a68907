#pragma once

#include "fgnsr/linalg.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace fgnsr::io {

// Matrix files come in two encodings:
//
//  CSV     one line per row (m lines), n comma-separated decimals per line,
//          optional first line "# m n". '.' decimal point, LF endings.
//  binary  "FGNM", m and n as little-endian uint64, then m*n little-endian
//          IEEE-754 doubles in column-major order.
//
// Readers detect the encoding from the magic bytes. All failures throw
// ParseError.

inline constexpr char kMagic[4] = {'F', 'G', 'N', 'M'};

DenseMatrix read_matrix(const std::filesystem::path& path);

void write_matrix_csv(const std::filesystem::path& path, const DenseMatrix& m);
void write_matrix_binary(const std::filesystem::path& path, const DenseMatrix& m);

/// CSV when the extension is ".csv", binary otherwise.
void write_matrix(const std::filesystem::path& path, const DenseMatrix& m);

/// A 1 x n or n x 1 matrix file, flattened.
std::vector<double> read_vector(const std::filesystem::path& path);

/// One integer cluster id per line.
std::vector<std::int64_t> read_labels(const std::filesystem::path& path);

/// Shortest decimal text that parses back to exactly `v`; locale-free.
std::string format_double(double v);

DenseMatrix parse_csv(const std::string& text, const std::string& origin = "<memory>");

}  // namespace fgnsr::io
