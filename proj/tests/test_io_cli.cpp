#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "udg/cli.hpp"
#include "udg/io.hpp"
#include "udg/oracle.hpp"
#include "udg/svg.hpp"

using namespace udg;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() /
          ("udg_test_" + std::to_string(::getpid()) + "_" +
           std::to_string(counter()++));
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }
  std::string path(const std::string& name) const {
    return (dir / name).string();
  }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

int run_cli(std::vector<std::string> args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
  std::ostringstream out, err;
  int code = cli_main(std::move(args), out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

}  // namespace

TEST_CASE("point files: comments, blanks, errors, round trip") {
  std::istringstream in(
      "# header comment\n"
      "0 0\n"
      "\n"
      "1.5 -2.25  # trailing comment\n"
      "3e-2 0.125\n");
  PointSet ps = read_points(in);
  REQUIRE(ps.size() == 3);
  CHECK(ps[1] == Point{1.5, -2.25});
  CHECK(ps[2] == Point{0.03, 0.125});

  std::istringstream bad("1.0\n");
  CHECK_THROWS_AS(read_points(bad), InputError);
  std::istringstream trail("1 2 3\n");
  CHECK_THROWS_AS(read_points(trail), InputError);
  std::istringstream nan_in("nan 0\n");
  CHECK_THROWS_AS(read_points(nan_in), InputError);
  CHECK_THROWS_AS(read_points_file("/nonexistent/file.txt"), IoError);

  // write/read round trip is exact
  PointSet original{{0.1, -0.2}, {1.0 / 3.0, 2e-17}, {12345.678, -0.5}};
  std::ostringstream out;
  write_points(out, original);
  std::istringstream back(out.str());
  CHECK(read_points(back) == original);
}

TEST_CASE("clique id files") {
  std::istringstream in("0 2\n3 # the far one\n");
  CHECK(read_indices(in) == std::vector<std::size_t>{0, 2, 3});
  std::istringstream neg("-1\n");
  CHECK_THROWS_AS(read_indices(neg), InputError);
  std::istringstream junk("1 two\n");
  CHECK_THROWS_AS(read_indices(junk), InputError);
}

TEST_CASE("circle_intersections matches the lens corner formula") {
  auto [c1, c2] = circle_intersections({0, 0}, {1, 0}, 1.0);
  const double root3_2 = std::sqrt(3.0) / 2.0;
  CHECK(c1.x == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(c2.x == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(c1.y) == doctest::Approx(root3_2).epsilon(1e-12));
  CHECK(std::abs(c2.y) == doctest::Approx(root3_2).epsilon(1e-12));
  CHECK(c1.y * c2.y < 0.0);

  CHECK_THROWS_AS(circle_intersections({0, 0}, {5, 0}, 1.0), InputError);
}

TEST_CASE("render_svg emits scatter, highlight, and lens arcs") {
  PointSet ps{{0, 0}, {1, 0}, {0.5, 0.2}};
  std::ostringstream plain;
  render_svg(plain, ps);
  CHECK(plain.str().find("<circle") != std::string::npos);
  CHECK(plain.str().find("<path") == std::string::npos);

  std::ostringstream fancy;
  std::vector<std::size_t> clique{0, 1, 2};
  render_svg(fancy, ps, clique, std::pair<std::size_t, std::size_t>{0, 1});
  CHECK(fancy.str().find("#c0392b") != std::string::npos);  // highlight
  CHECK(fancy.str().find("<path") != std::string::npos);    // lens arcs
  CHECK(fancy.str().find("A ") != std::string::npos);

  CHECK_THROWS_AS(render_svg_file("/nonexistent/dir/x.svg", ps), IoError);
}

TEST_CASE("cli: gen then solve agrees with the oracle") {
  TempDir tmp;
  const std::string pts = tmp.path("pts.txt");
  std::string out;

  CHECK(run_cli({"gen", "--family", "convex", "--n", "40", "--param", "0.5",
                 "--seed", "7", "--out", pts},
                &out) == 0);
  CHECK(json::parse(out)["n"] == 40);

  PointSet ps = read_points_file(pts);
  const std::size_t oracle = brute_force_max_clique(ps).size();

  for (const char* algo : {"general", "lens", "convex"}) {
    std::string solve_out;
    REQUIRE(run_cli({"solve", "--algo", algo, "--seed", "5", pts},
                    &solve_out) == 0);
    json report = json::parse(solve_out);
    CHECK(report["clique_size"] == oracle);
    std::vector<std::size_t> ids =
        report["indices"].get<std::vector<std::size_t>>();
    CHECK(is_clique(ps, ids));
  }

  std::string given_out;
  REQUIRE(run_cli({"solve", "--algo", "convex-given", "--anchor", "0", pts},
                  &given_out) == 0);
  json given = json::parse(given_out);
  CHECK(given["update_counts"].contains("insertions"));
  CHECK(given["clique_size"].get<std::size_t>() >= 1);
}

TEST_CASE("cli: decide reports found and witness") {
  TempDir tmp;
  const std::string pts = tmp.path("tri.txt");
  write_points_file(pts, {{0, 0}, {0.5, 0}, {0.25, 0.4}});

  std::string out;
  CHECK(run_cli({"decide", "--k", "3", pts}, &out) == 0);
  json found = json::parse(out);
  CHECK(found["found"] == true);
  CHECK(found["witness"]["clique_size"] == 3);

  CHECK(run_cli({"decide", "--k", "4", pts}, &out) == 0);
  json missing = json::parse(out);
  CHECK(missing["found"] == false);
  CHECK(missing["witness"].is_null());
}

TEST_CASE("cli: verify accepts cliques and rejects non-cliques") {
  TempDir tmp;
  const std::string pts = tmp.path("pts.txt");
  write_points_file(pts, {{0, 0}, {0.5, 0}, {5, 5}});
  const std::string good = tmp.path("good.txt");
  {
    std::ofstream f(good);
    f << "0 1\n";
  }
  const std::string bad = tmp.path("bad.txt");
  {
    std::ofstream f(bad);
    f << "0 2\n";
  }
  std::string out;
  CHECK(run_cli({"verify", "--clique", good, pts}, &out) == 0);
  CHECK(json::parse(out)["is_clique"] == true);
  CHECK(run_cli({"verify", "--clique", bad, pts}, &out) == 1);
  CHECK(json::parse(out)["is_clique"] == false);
}

TEST_CASE("cli: plot writes an SVG file") {
  TempDir tmp;
  const std::string pts = tmp.path("pts.txt");
  write_points_file(pts, {{0, 0}, {1, 0}, {0.5, 0.2}});
  const std::string svg = tmp.path("fig.svg");
  std::string out;
  CHECK(run_cli({"plot", pts, "--out", svg, "--lens", "0", "1"}, &out) == 0);
  std::ifstream f(svg);
  std::stringstream body;
  body << f.rdbuf();
  CHECK(body.str().find("<svg") != std::string::npos);
  CHECK(body.str().find("<path") != std::string::npos);
}

TEST_CASE("cli: bench produces stable CSV apart from timings") {
  TempDir tmp;
  const std::string spec = tmp.path("spec.json");
  {
    std::ofstream f(spec);
    f << R"({"timeout_s": 60, "cells": [
      {"family": "clustered_bounded_k", "n": 40, "param": 3.0, "k_max": 4,
       "algo": "general", "seeds": [1, 2, 3, 4, 5]},
      {"family": "convex_circle", "n": 12, "param": 0.6,
       "algo": "convex-given", "anchor": 0, "seeds": [1, 2, 3, 4, 5]}
    ]})";
  }

  auto split_row = [](const std::string& line) {
    std::vector<std::string> cols;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) {
        cols.push_back(line.substr(start));
        break;
      }
      cols.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    return cols;
  };
  auto strip_elapsed = [&](const std::string& csv) {
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) {
      std::vector<std::string> cols = split_row(line);
      REQUIRE(cols.size() == 9);
      cols[6] = "X";  // elapsed_ms
      std::string joined;
      for (std::size_t i = 0; i < cols.size(); ++i) {
        joined += (i ? "," : "") + cols[i];
      }
      out += joined + "\n";
    }
    return out;
  };

  std::string out1, out2, out3;
  REQUIRE(run_cli({"bench", "--spec", spec}, &out1) == 0);
  REQUIRE(run_cli({"bench", "--spec", spec}, &out2) == 0);
  CHECK(strip_elapsed(out1) == strip_elapsed(out2));

  // parallel cells write rows in spec order regardless of completion order
  ::setenv("UDG_CLIQUE_THREADS", "4", 1);
  REQUIRE(run_cli({"bench", "--spec", spec}, &out3) == 0);
  ::unsetenv("UDG_CLIQUE_THREADS");
  CHECK(strip_elapsed(out1) == strip_elapsed(out3));

  // a zero timeout marks every row
  std::string timed;
  REQUIRE(run_cli({"bench", "--spec", spec, "--timeout", "0"}, &timed) == 0);
  std::istringstream tin(timed);
  std::string tline;
  std::getline(tin, tline);  // header
  while (std::getline(tin, tline)) {
    CHECK(split_row(tline)[6] == "timeout");
  }

  std::istringstream in(out1);
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "family,n,param,algo,seed,clique_size,elapsed_ms,probes,updates");
  std::size_t rows = 0, medians = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++rows;
    if (line.find(",median,") != std::string::npos) ++medians;
    if (line.rfind("clustered_bounded_k,40", 0) == 0) {
      CHECK(line.find(",4,") != std::string::npos);  // clique_size column
    }
  }
  CHECK(rows == 12);  // 5 seeds + median, twice
  CHECK(medians == 2);
}

TEST_CASE("reports re-verify their clique before emission") {
  PointSet ps{{0, 0}, {0.5, 0}, {9, 9}};
  CliqueResult good = make_clique_result(ps, {0, 1}, "test");
  CHECK_NOTHROW(cli_detail::clique_report(ps, good));

  CliqueResult tampered = good;
  tampered.indices = {0, 2};  // not a clique; must never be emitted silently
  CHECK_THROWS_AS(cli_detail::clique_report(ps, tampered), ContractError);
}

TEST_CASE("cli: threshold override flows through solve") {
  TempDir tmp;
  const std::string pts = tmp.path("pts.txt");
  REQUIRE(run_cli({"gen", "--family", "convex", "--n", "15", "--param", "0.7",
                   "--seed", "3", "--out", pts}) == 0);
  std::string out;
  REQUIRE(run_cli({"solve", "--algo", "convex", "--seed", "2",
                   "--threshold-override", "1", pts},
                  &out) == 0);
  json forced = json::parse(out);
  CHECK(forced["branch"] == "sampling");
  CHECK(forced["threshold_k"] == 1);

  REQUIRE(run_cli({"solve", "--algo", "convex", "--seed", "2",
                   "--threshold-override", "99", pts},
                  &out) == 0);
  CHECK(json::parse(out)["branch"] == "general");
}

TEST_CASE("cli: exit codes for bad usage and bad input") {
  std::string out, err;
  CHECK(run_cli({"frobnicate"}, &out, &err) == 1);
  CHECK(run_cli({"solve", "--algo", "general", "/no/such/file"}, &out, &err) ==
        1);
  CHECK(run_cli({"solve", "--algo", "bogus", "/no/such/file"}, &out, &err) ==
        1);
  CHECK(run_cli({"--help"}, &out, &err) == 0);
  CHECK(out.find("solve") != std::string::npos);

  TempDir tmp;
  const std::string dup = tmp.path("dup.txt");
  write_points_file(dup, {{0, 0}, {0, 0}});
  CHECK(run_cli({"solve", "--algo", "general", dup}, &out, &err) == 1);
  CHECK(err.find("duplicate") != std::string::npos);

  const std::string nonconvex = tmp.path("nc.txt");
  write_points_file(nonconvex, {{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}});
  CHECK(run_cli({"solve", "--algo", "convex", nonconvex}, &out, &err) == 1);

  const std::string pts = tmp.path("p.txt");
  write_points_file(pts, {{0, 0}, {0.5, 0}});
  CHECK(run_cli({"decide", "--k", "0", pts}, &out, &err) == 1);

  const std::string wild = tmp.path("wild.txt");
  {
    std::ofstream f(wild);
    f << "0 99\n";  // id out of range for the plot below
  }
  CHECK(run_cli({"plot", pts, "--out", tmp.path("x.svg"), "--clique", wild},
                &out, &err) == 1);
}
