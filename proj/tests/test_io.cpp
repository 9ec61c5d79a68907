#include "fgnsr/error.hpp"
#include "fgnsr/io.hpp"
#include "fgnsr/synthgen.hpp"
#include "support/tempdir.hpp"

#include <doctest.h>

#include <limits>

using namespace fgnsr;
using fgnsr::testing::TempDir;

TEST_CASE("format_double round-trips") {
  CHECK(io::format_double(0.5) == "0.5");
  CHECK(io::format_double(-2.0) == "-2");
  CHECK(io::format_double(1e-300) == "1e-300");
  for (const double v : {0.1, 1.0 / 3.0, 123456.789, -7.25e-12,
                         std::numeric_limits<double>::denorm_min()}) {
    CHECK(io::parse_csv(io::format_double(v))(0, 0) == v);
  }
}

TEST_CASE("parse_csv") {
  const DenseMatrix m = io::parse_csv("# 2 3\n1,2,3\n4, 5.5 ,-6e-1\n");
  CHECK(m == DenseMatrix::from_rows({{1, 2, 3}, {4, 5.5, -0.6}}));
  CHECK(io::parse_csv("1,2\r\n3,4\r\n") == DenseMatrix::from_rows({{1, 2}, {3, 4}}));
  CHECK(io::parse_csv("\n+1\n\n") == DenseMatrix::from_rows({{1}}));

  CHECK_THROWS_AS(io::parse_csv(""), ParseError);
  CHECK_THROWS_AS(io::parse_csv("1,2\n3\n"), ParseError);
  CHECK_THROWS_AS(io::parse_csv("1,abc\n"), ParseError);
  CHECK_THROWS_AS(io::parse_csv("1,\n"), ParseError);
  CHECK_THROWS_AS(io::parse_csv("1,inf\n"), ParseError);
  CHECK_THROWS_AS(io::parse_csv("1,nan\n"), ParseError);
  CHECK_THROWS_AS(io::parse_csv("# 3 2\n1,2\n3,4\n"), ParseError);
  CHECK_THROWS_AS(io::parse_csv("# 2\n1,2\n"), ParseError);
  CHECK_THROWS_WITH(io::parse_csv("1,2\n3,x\n", "f.csv"), "f.csv:2: not a number: 'x'");
}

TEST_CASE("binary and CSV files") {
  TempDir dir;
  const auto inst = gen_middlepoint(50, 10, 0.3, 17);

  SUBCASE("binary round-trip is bit exact") {
    io::write_matrix(dir / "m.bin", inst.m);
    const DenseMatrix back = io::read_matrix(dir / "m.bin");
    CHECK(back == inst.m);
    const std::string bytes = fgnsr::testing::slurp(dir / "m.bin");
    CHECK(bytes.substr(0, 4) == "FGNM");
    CHECK(bytes.size() == 20 + 50 * 55 * 8);
    CHECK(static_cast<unsigned char>(bytes[4]) == 50);
    CHECK(static_cast<unsigned char>(bytes[12]) == 55);
  }
  SUBCASE("CSV agrees with binary") {
    io::write_matrix(dir / "m.csv", inst.m);
    const std::string text = fgnsr::testing::slurp(dir / "m.csv");
    CHECK(text.rfind("# 50 55\n", 0) == 0);
    CHECK(text.find('\r') == std::string::npos);
    const DenseMatrix back = io::read_matrix(dir / "m.csv");
    CHECK((back.values() - inst.m.values()).cwiseAbs().maxCoeff() <= 1e-15);
  }
  SUBCASE("corrupt binary payloads") {
    io::write_matrix_binary(dir / "m.bin", inst.m);
    std::string bytes = fgnsr::testing::slurp(dir / "m.bin");
    dir.write("short.bin", bytes.substr(0, bytes.size() - 8));
    CHECK_THROWS_AS(io::read_matrix(dir / "short.bin"), ParseError);
    dir.write("header.bin", bytes.substr(0, 10));
    CHECK_THROWS_AS(io::read_matrix(dir / "header.bin"), ParseError);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::memcpy(bytes.data() + 20, &nan, 8);
    dir.write("nan.bin", bytes);
    CHECK_THROWS_AS(io::read_matrix(dir / "nan.bin"), ParseError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(io::read_matrix(dir / "absent.csv"), ParseError);
  }
}

TEST_CASE("vectors and labels") {
  TempDir dir;
  CHECK(io::read_vector(dir.write("row.csv", "1,2,3\n")) == std::vector<double>{1, 2, 3});
  CHECK(io::read_vector(dir.write("col.csv", "1\n2\n")) == std::vector<double>{1, 2});
  CHECK_THROWS_AS(io::read_vector(dir.write("mat.csv", "1,2\n3,4\n")), ParseError);

  CHECK(io::read_labels(dir.write("l.txt", "3\n-1\n\n7\n")) == std::vector<std::int64_t>{3, -1, 7});
  CHECK_THROWS_AS(io::read_labels(dir.write("bad.txt", "1\n2.5\n")), ParseError);
  CHECK_THROWS_AS(io::read_labels(dir.write("empty.txt", "")), ParseError);
}
