#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "zetalab/io.hpp"
#include "zetalab/parallel.hpp"

using namespace zetalab;
namespace fs = std::filesystem;

namespace {

std::string scratch_cache() {
  static const std::string dir = [] {
    const auto p = fs::temp_directory_path() / "zetalab-test-cache";
    fs::remove_all(p);
    setenv("ZETALAB_CACHE_DIR", p.string().c_str(), 1);
    return p.string();
  }();
  return dir;
}

}  // namespace

TEST_CASE("twelve significant digits, locale-free", "[io]") {
  REQUIRE(format_sig12(1.0 / 3.0) == "0.333333333333");
  REQUIRE(format_sig12(1e-10) == "1e-10");
  REQUIRE(format_sig12(123456789.0) == "123456789");
  REQUIRE(format_sig12(-2.5) == "-2.5");
  REQUIRE(format_sig12(0.0) == "0");
}

TEST_CASE("csv layout is plain and newline terminated", "[io]") {
  std::ostringstream os;
  write_csv(os, {"a", "b"}, {{"1", "2"}, {"3", "4"}});
  REQUIRE(os.str() == "a,b\n1,2\n3,4\n");
}

TEST_CASE("prime cache round trip equals a fresh sieve", "[io]") {
  scratch_cache();
  std::vector<int64> values;
  const std::string path = cache_roundtrip("primes", 100, &values);
  REQUIRE(fs::exists(path));
  REQUIRE(values == PrimeTable(100).primes());

  // second call must hit the file, not rebuild
  const auto before = fs::last_write_time(path);
  std::vector<int64> again;
  cache_roundtrip("primes", 100, &again);
  REQUIRE(again == values);
  REQUIRE(fs::last_write_time(path) == before);
}

TEST_CASE("family cache stores the 8d family", "[io]") {
  scratch_cache();
  std::vector<int64> values;
  cache_roundtrip("fd8", 160, &values);
  REQUIRE(values == std::vector<int64>{11, 13, 15, 17, 19});
}

TEST_CASE("a tampered cache is detected and rebuilt", "[io]") {
  scratch_cache();
  std::vector<int64> values;
  const std::string path = cache_roundtrip("primes", 50, &values);

  // corrupt one value; header checksum no longer matches
  {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    const auto pos = text.rfind("47");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 2, "49");
    std::ofstream out(path, std::ios::trunc);
    out << text;
  }
  std::vector<int64> reread;
  std::string reason;
  REQUIRE_FALSE(detail::cache_read(path, "primes", 50, reread, reason));
  REQUIRE(reason == "checksum mismatch");

  std::vector<int64> rebuilt;
  cache_roundtrip("primes", 50, &rebuilt);
  REQUIRE(rebuilt == PrimeTable(50).primes());
  REQUIRE(detail::cache_read(path, "primes", 50, reread, reason));
}

TEST_CASE("header mismatches are named", "[io]") {
  scratch_cache();
  const std::string path = cache_roundtrip("primes", 30);
  std::vector<int64> out;
  std::string reason;
  REQUIRE_FALSE(detail::cache_read(path, "fd8", 30, out, reason));
  REQUIRE(reason == "header mismatch");
  REQUIRE_FALSE(detail::cache_read(path + ".absent", "primes", 30, out,
                                   reason));
  REQUIRE(reason == "missing");
}

TEST_CASE("chunked parallel map is order-stable", "[io]") {
  auto work = [](int64 chunk, int64 b, int64 e) {
    std::vector<double> out;
    for (int64 i = b; i < e; ++i)
      out.push_back(static_cast<double>(chunk) + 0.001 * double(i * i));
    return out;
  };
  const auto one = parallel_map_chunks<std::vector<double>>(1000, 64, 1, work);
  const auto eight =
      parallel_map_chunks<std::vector<double>>(1000, 64, 8, work);
  REQUIRE(one.size() == eight.size());
  for (std::size_t i = 0; i < one.size(); ++i) REQUIRE(one[i] == eight[i]);

  const auto empty = parallel_map_chunks<std::vector<double>>(0, 64, 4, work);
  REQUIRE(empty.empty());
}
