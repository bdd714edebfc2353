#include <doctest.h>

#include <algorithm>

#include "udg/oracle.hpp"
#include "udg/random.hpp"

using namespace udg;

namespace {

// Ground truth for the ground truth: full subset enumeration, n <= 16.
std::size_t enumerate_max_clique(const PointSet& ps) {
  const std::size_t n = ps.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) ids.push_back(i);
    }
    if (ids.size() <= best) continue;
    if (is_clique(ps, ids)) best = ids.size();
  }
  return best;
}

}  // namespace

TEST_CASE("brute force basics") {
  PointSet tri{{0, 0}, {1, 0}, {0.5, 0.8660254}};
  CHECK(brute_force_max_clique(tri).size() == 3);

  PointSet square{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  CHECK(brute_force_max_clique(square).size() == 2);

  CHECK(brute_force_max_clique(PointSet{}).size() == 0);

  PointSet big(65, Point{0, 0});
  CHECK_THROWS_AS(brute_force_max_clique(big), InputError);
}

TEST_CASE("brute force ties break to the lexicographically smallest set") {
  PointSet ps{{0, 0}, {0.5, 0}, {10, 0}, {10.5, 0}};
  CliqueResult r = brute_force_max_clique(ps);
  CHECK(r.indices == std::vector<std::size_t>{0, 1});
}

TEST_CASE("brute force agrees with subset enumeration") {
  Rng rng(1234);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 1 + uniform_index(rng, 12);
    const double side = uniform_in(rng, 0.5, 3.0);
    PointSet ps;
    for (std::size_t i = 0; i < n; ++i) {
      ps.push_back({uniform_in(rng, 0, side), uniform_in(rng, 0, side)});
    }
    CHECK(brute_force_max_clique(ps).size() == enumerate_max_clique(ps));
  }
}

TEST_CASE("oracle size is invariant under permutation") {
  Rng rng(77);
  PointSet ps;
  for (int i = 0; i < 20; ++i) {
    ps.push_back({uniform_in(rng, 0, 2), uniform_in(rng, 0, 2)});
  }
  const std::size_t k = brute_force_max_clique(ps).size();
  for (int shuffle = 0; shuffle < 5; ++shuffle) {
    PointSet perm = ps;
    for (std::size_t i = perm.size(); i > 1; --i) {
      std::swap(perm[i - 1], perm[uniform_index(rng, i)]);
    }
    CHECK(brute_force_max_clique(perm).size() == k);
  }
}

TEST_CASE("max_clique_containing basics") {
  PointSet iso{{0, 0}, {5, 5}};
  CliqueResult r = max_clique_containing(iso, 0);
  CHECK(r.indices == std::vector<std::size_t>{0});

  PointSet hex;
  for (int i = 0; i < 6; ++i) {
    const double a = i * std::numbers::pi / 3.0;
    hex.push_back({0.5 * std::cos(a), 0.5 * std::sin(a)});
  }
  for (std::size_t p = 0; p < hex.size(); ++p) {
    CHECK(max_clique_containing(hex, p).size() == 6);
  }

  PointSet square{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  CHECK(max_clique_containing(square, 0).size() == 2);

  CHECK_THROWS_AS(max_clique_containing(square, 9), InputError);
}

TEST_CASE("containing-oracle dominance") {
  Rng rng(55);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t n = 2 + uniform_index(rng, 14);
    PointSet ps;
    for (std::size_t i = 0; i < n; ++i) {
      ps.push_back({uniform_in(rng, 0, 2), uniform_in(rng, 0, 2)});
    }
    const std::size_t k = brute_force_max_clique(ps).size();
    std::size_t best_over_points = 0;
    for (std::size_t p = 0; p < n; ++p) {
      CliqueResult r = max_clique_containing(ps, p);
      CHECK(r.size() <= k);
      CHECK(std::find(r.indices.begin(), r.indices.end(), p) !=
            r.indices.end());
      best_over_points = std::max(best_over_points, r.size());
    }
    CHECK(best_over_points == k);
  }
}
