#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(POWER_SPECTRA_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::vector<std::vector<int>> parse_matrix(const std::string& text) {
  std::istringstream in(text);
  std::size_t n = 0;
  in >> n;
  std::vector<std::vector<int>> m(n, std::vector<int>(n));
  for (auto& row : m) {
    for (auto& x : row) in >> x;
  }
  return m;
}

}  // namespace

TEST_CASE("graph") {
  const auto r = run("graph --family cyclic --n 6");
  REQUIRE(r.status == 0);
  const auto m = parse_matrix(r.out);
  REQUIRE(m.size() == 6);
  std::vector<int> deg;
  for (const auto& row : m) {
    int s = 0;
    for (int x : row) s += x;
    deg.push_back(s);
  }
  CHECK(deg == std::vector<int>{5, 5, 5, 4, 3, 4});

  const auto d = run("graph --family dihedral --n 3 --distance");
  REQUIRE(d.status == 0);
  int top = 0;
  for (const auto& row : parse_matrix(d.out)) {
    for (int x : row) top = std::max(top, x);
  }
  CHECK(top == 2);

  CHECK(run("graph --family cyclic --n 1").status == 2);
  CHECK(run("graph --family quaternion --n 3").status == 2);
  CHECK(run("graph --family semiprime --p 4 --q 5").status == 2);
  CHECK(run("graph --bogus").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("graph --family dicyclic --n 2000").status == 2);
  CHECK(run("graph --family cyclic --n 6 --out /nonexistent-dir/m.txt").status == 4);
}

TEST_CASE("bounds") {
  auto one = [](const std::string& args) {
    const auto r = run("bounds " + args);
    REQUIRE(r.status == 0);
    return nlohmann::json::parse(r.out);
  };
  const auto d12 = one("--family dihedral --n 6");
  CHECK(std::abs(d12["lower"].get<double>() - 4.55297) < 1e-5);
  CHECK(d12["upper"].get<double>() == 6.0);

  const auto q12 = one("--family dicyclic --n 3");
  CHECK(std::abs(q12["lower"].get<double>() - 5.27008) < 1e-5);
  CHECK(q12["upper"].get<double>() == 7.0);

  const auto c8 = one("--family cyclic --n 8 --kind distance");
  CHECK(c8["lower"].get<double>() == doctest::Approx(7.0));
  CHECK(c8["upper"].get<double>() == doctest::Approx(7.0));
  CHECK(c8["lower_tight"] == true);
  CHECK(c8["upper_tight"] == true);

  const auto range = run("bounds --family dicyclic --n 2..5 --distance");
  REQUIRE(range.status == 0);
  std::istringstream lines(range.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK(nlohmann::json::parse(line)["n"] == count + 2);
    ++count;
  }
  CHECK(count == 4);

  CHECK(run("bounds --family cyclic --n 2").status == 2);
  CHECK(run("bounds --family dihedral --n 6 --kind laplacian").status == 2);
}

TEST_CASE("sweep") {
  const auto csv = run("sweep --family dihedral --n 3..20");
  REQUIRE(csv.status == 0);
  std::istringstream in(csv.out);
  std::string line;
  int rows = -1;
  while (std::getline(in, line)) {
    if (rows >= 0) CHECK(line.find(",true,") != std::string::npos);  // sandwich_ok column
    ++rows;
  }
  CHECK(rows == 18);

  const auto js = run("sweep --family semiprime --n 1..100 --format json");
  REQUIRE(js.status == 0);
  for (const auto& row : nlohmann::json::parse(js.out)) CHECK(row["cubic_error"].get<double>() <= 1e-7);

  CHECK(run("sweep --family dihedral --n 9..4").status == 2);
  CHECK(run("sweep --family dihedral --n 3..4 --format xml").status == 2);
  CHECK(run("sweep --family dihedral --n 3..4 --out /nonexistent-dir/s.csv").status == 4);
}

TEST_CASE("spectra") {
  const auto direct = run("spectra --family cyclic --n 6");
  REQUIRE(direct.status == 0);
  CHECK(std::abs(nlohmann::json::parse(direct.out)["radius"].get<double>() - 4.42788) < 1e-5);

  const auto piped = run("graph --family cyclic --n 6 | " + std::string(POWER_SPECTRA_CLI) + " spectra -");
  REQUIRE(piped.status == 0);
  CHECK(piped.out == direct.out);

  const auto dist = run("spectra --family semiprime --p 2 --q 3 --distance");
  REQUIRE(dist.status == 0);
  CHECK(nlohmann::json::parse(dist.out)["eigenvalues"].size() == 6);

  CHECK(run("spectra /nonexistent-dir/m.txt").status == 4);
}

TEST_CASE("reproduce and determinism") {
  const auto r = run("reproduce");
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("4.42788") != std::string::npos);

  for (const char* args : {"sweep --family cyclic --n 3..40 --distance", "bounds --family semiprime --n 1..60",
                           "graph --family dicyclic --n 5 --distance"}) {
    CAPTURE(args);
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
}
