#include "fgnsr/io.hpp"

#include "fgnsr/error.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

namespace fgnsr::io {

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_double(std::string_view s, const std::string& where) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(where + ": not a number: '" + std::string(s) + "'");
  }
  if (!std::isfinite(v)) throw ParseError(where + ": non-finite value");
  return v;
}

std::uint64_t parse_count(std::string_view s, const std::string& where) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(where + ": bad size field '" + std::string(s) + "'");
  }
  return v;
}

std::uint64_t load_u64(const char* p) {
  std::uint64_t v = 0;
  for (int b = 7; b >= 0; --b) v = (v << 8) | static_cast<unsigned char>(p[b]);
  return v;
}

void store_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> buf{};
  for (std::size_t b = 0; b < 8; ++b) buf[b] = static_cast<char>((v >> (8 * b)) & 0xff);
  out.write(buf.data(), 8);
}

DenseMatrix parse_binary(const std::string& bytes, const std::string& origin) {
  if (bytes.size() < 20) throw ParseError(origin + ": truncated header");
  const std::uint64_t m = load_u64(bytes.data() + 4);
  const std::uint64_t n = load_u64(bytes.data() + 12);
  if (m == 0 || n == 0) throw ParseError(origin + ": empty matrix");
  if (m > (1ULL << 40) / n || bytes.size() - 20 != m * n * 8) {
    throw ParseError(origin + ": declared size " + std::to_string(m) + "x" +
                     std::to_string(n) + " does not match payload");
  }
  Eigen::MatrixXd v(static_cast<Index>(m), static_cast<Index>(n));
  const char* p = bytes.data() + 20;
  for (Index k = 0; k < v.size(); ++k, p += 8) {
    const std::uint64_t raw = load_u64(p);
    double d;
    std::memcpy(&d, &raw, 8);
    if (!std::isfinite(d)) throw ParseError(origin + ": non-finite value");
    v.data()[k] = d;
  }
  return DenseMatrix(std::move(v));
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

DenseMatrix parse_csv(const std::string& text, const std::string& origin) {
  std::vector<std::vector<double>> rows;
  std::int64_t declared_m = -1;
  std::int64_t declared_n = -1;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string_view line = trim(std::string_view(text).substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    const std::string where = origin + ":" + std::to_string(line_no);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (!rows.empty() || declared_m >= 0) throw ParseError(where + ": unexpected comment line");
      std::string_view body = trim(line.substr(1));
      const auto sp = body.find_first_of(" \t");
      if (sp == std::string_view::npos) throw ParseError(where + ": header must be '# m n'");
      declared_m = static_cast<std::int64_t>(parse_count(trim(body.substr(0, sp)), where));
      declared_n = static_cast<std::int64_t>(parse_count(trim(body.substr(sp + 1)), where));
      continue;
    }
    std::vector<double> row;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      row.push_back(parse_double(line.substr(start, comma - start), where));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError(where + ": expected " + std::to_string(rows.front().size()) +
                       " values, found " + std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(origin + ": no data");
  const auto m = static_cast<Index>(rows.size());
  const auto n = static_cast<Index>(rows.front().size());
  if (declared_m >= 0 && (declared_m != m || declared_n != n)) {
    throw ParseError(origin + ": header declares " + std::to_string(declared_m) + "x" +
                     std::to_string(declared_n) + " but data is " + std::to_string(m) +
                     "x" + std::to_string(n));
  }
  Eigen::MatrixXd v(m, n);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) {
      v(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return DenseMatrix(std::move(v));
}

DenseMatrix read_matrix(const std::filesystem::path& path) {
  const std::string bytes = slurp(path);
  if (bytes.size() >= 4 && std::memcmp(bytes.data(), kMagic, 4) == 0) {
    return parse_binary(bytes, path.string());
  }
  return parse_csv(bytes, path.string());
}

void write_matrix_csv(const std::filesystem::path& path, const DenseMatrix& m) {
  auto out = open_out(path);
  out << "# " << m.rows() << ' ' << m.cols() << '\n';
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_matrix_binary(const std::filesystem::path& path, const DenseMatrix& m) {
  auto out = open_out(path);
  out.write(kMagic, 4);
  store_u64(out, static_cast<std::uint64_t>(m.rows()));
  store_u64(out, static_cast<std::uint64_t>(m.cols()));
  const double* data = m.values().data();
  for (Index k = 0; k < m.values().size(); ++k) {
    std::uint64_t raw;
    std::memcpy(&raw, data + k, 8);
    store_u64(out, raw);
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_matrix(const std::filesystem::path& path, const DenseMatrix& m) {
  if (path.extension() == ".csv") {
    write_matrix_csv(path, m);
  } else {
    write_matrix_binary(path, m);
  }
}

std::vector<double> read_vector(const std::filesystem::path& path) {
  const DenseMatrix m = read_matrix(path);
  if (m.rows() != 1 && m.cols() != 1) {
    throw ParseError(path.string() + ": expected a single row or column");
  }
  return {m.values().data(), m.values().data() + m.values().size()};
}

std::vector<std::int64_t> read_labels(const std::filesystem::path& path) {
  const std::string text = slurp(path);
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string_view line = trim(std::string_view(text).substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
    if (ec != std::errc() || ptr != line.data() + line.size()) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) + ": bad label '" +
                       std::string(line) + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ParseError(path.string() + ": no labels");
  return out;
}

}  // namespace fgnsr::io
