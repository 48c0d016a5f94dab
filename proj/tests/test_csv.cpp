#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "zgm/csv.hpp"
#include "zgm/errors.hpp"

using namespace zgm;
namespace fs = std::filesystem;

namespace {

// Writes content to a unique temp file; removed when the object dies.
struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("zgm_csv_test_" + std::to_string(++counter) + ".csv");
    std::ofstream out(path, std::ios::binary);
    out << content;
  }
  ~TempFile() {
    std::error_code ec;
    fs::remove(path, ec);
  }
};

}  // namespace

TEST_CASE("plain newline-separated values") {
  TempFile f("5\n0\n1.5\n");
  Dataset d = read_dataset(f.path);
  CHECK(d.values() == std::vector<double>{5.0, 0.0, 1.5});
}

TEST_CASE("blank lines and surrounding whitespace are skipped") {
  TempFile f("  5 \n\n\n0\n\t1.5\t\n\n");
  Dataset d = read_dataset(f.path);
  CHECK(d.values() == std::vector<double>{5.0, 0.0, 1.5});
}

TEST_CASE("windows line endings") {
  TempFile f("2\r\n3\r\n");
  Dataset d = read_dataset(f.path);
  CHECK(d.values() == std::vector<double>{2.0, 3.0});
}

TEST_CASE("single-column file with a header row") {
  TempFile f("weight\n1\n2.5\n");
  Dataset d = read_dataset(f.path);
  CHECK(d.values() == std::vector<double>{1.0, 2.5});
}

TEST_CASE("scientific notation and leading plus") {
  TempFile f("1e-3\n+2.5\n3E2\n");
  Dataset d = read_dataset(f.path);
  CHECK(d.values() == std::vector<double>{1e-3, 2.5, 300.0});
}

TEST_CASE("column selection by name") {
  TempFile f("a,b\n1,2\n0,3\n");
  Dataset d = read_dataset(f.path, "a");
  CHECK(d.values() == std::vector<double>{1.0, 0.0});
  Dataset e = read_dataset(f.path, "b");
  CHECK(e.values() == std::vector<double>{2.0, 3.0});
}

TEST_CASE("column selection by index") {
  TempFile f("a,b\n1,2\n0,3\n");
  Dataset d = read_dataset(f.path, "1");
  CHECK(d.values() == std::vector<double>{2.0, 3.0});
}

TEST_CASE("spaces around CSV cells are ignored") {
  TempFile f("name, value\nfoo, 1.5\nbar, 2\n");
  Dataset d = read_dataset(f.path, "value");
  CHECK(d.values() == std::vector<double>{1.5, 2.0});
}

TEST_CASE("parse failures carry line numbers") {
  SUBCASE("bad token") {
    TempFile f("1\nx\n");
    try {
      read_dataset(f.path);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }
  SUBCASE("negative value") {
    TempFile f("1\n-2\n");
    try {
      read_dataset(f.path);
      FAIL("expected NegativeValue");
    } catch (const NegativeValue& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }
  SUBCASE("non-finite value") {
    TempFile f("1\ninf\n");
    CHECK_THROWS_AS(read_dataset(f.path), NonFiniteValue);
    TempFile g("nan\n");
    CHECK_THROWS_AS(read_dataset(g.path), NonFiniteValue);
  }
  SUBCASE("short row in column mode") {
    TempFile f("a,b\n1,2\n3\n");
    try {
      read_dataset(f.path, "b");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("unknown column") {
    TempFile f("a,b\n1,2\n");
    CHECK_THROWS_AS(read_dataset(f.path, "c"), ParseError);
  }
  SUBCASE("multi-column file without a column selector") {
    TempFile f("1,2\n3,4\n");
    try {
      read_dataset(f.path);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      // the message should point at the fix
      CHECK(std::string(e.what()).find("column") != std::string::npos);
    }
  }
}

TEST_CASE("missing and empty files") {
  CHECK_THROWS_AS(read_dataset("/nonexistent/zgm_nope.csv"), FileNotFound);
  TempFile f("");
  CHECK_THROWS_AS(read_dataset(f.path), EmptyInput);
  TempFile g("\n\n");
  CHECK_THROWS_AS(read_dataset(g.path), EmptyInput);
  TempFile h("a\n");  // header only
  CHECK_THROWS_AS(read_dataset(h.path), EmptyInput);
}
