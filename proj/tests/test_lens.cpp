#include <doctest.h>

#include "udg/lens.hpp"
#include "udg/oracle.hpp"
#include "udg/random.hpp"

using namespace udg;

TEST_CASE("lens_points membership") {
  PointSet ps{{0, 0}, {1, 0}, {0.5, 0.2}, {0.5, 0.9}};
  Lens lens = lens_points(ps, 0, 1);
  CHECK(lens.members == std::vector<std::size_t>{0, 1, 2});

  PointSet far{{0, 0}, {1.5, 0}};
  CHECK_THROWS_AS(lens_points(far, 0, 1), InputError);
  CHECK_THROWS_AS(lens_points(ps, 0, 0), InputError);
}

TEST_CASE("lens_to_cobipartite splits by the edge line") {
  PointSet ps{{0, 0}, {1, 0}, {0.5, 0.2}, {0.5, -0.2}};
  Lens lens = lens_points(ps, 0, 1);
  CobipartiteInstance inst = lens_to_cobipartite(ps, lens);
  CHECK(inst.side_a == std::vector<std::size_t>{0, 1, 2});  // on-line goes up
  CHECK(inst.side_b == std::vector<std::size_t>{3});
}

TEST_CASE("both lens halves are cliques for random members") {
  Rng rng(61);
  for (int iter = 0; iter < 40; ++iter) {
    PointSet ps{{0, 0}, {1, 0}};
    // rejection-sample points inside L(p, q)
    while (ps.size() < 22) {
      Point cand{uniform_in(rng, -0.1, 1.1), uniform_in(rng, -1.0, 1.0)};
      if (dist_sq(cand, ps[0]) <= 1.0 && dist_sq(cand, ps[1]) <= 1.0) {
        ps.push_back(cand);
      }
    }
    Lens lens = lens_points(ps, 0, 1);
    CHECK(lens.members.size() == ps.size());
    CobipartiteInstance inst = lens_to_cobipartite(ps, lens);
    CHECK(is_clique(ps, inst.side_a));
    CHECK(is_clique(ps, inst.side_b));
  }
}

TEST_CASE("lens baseline examples") {
  PointSet tri{{0, 0}, {1, 0}, {0.5, 0.8660254}};
  CHECK(max_clique_lens_baseline(tri).size() == 3);

  PointSet sparse{{0, 0}, {5, 0}, {0, 5}, {9, 9}};
  CliqueResult r = max_clique_lens_baseline(sparse);
  CHECK(r.size() == 1);
  CHECK(r.indices == std::vector<std::size_t>{0});  // smallest id

  PointSet square_plus{{0, 0}, {0.5, 0}, {0, 0.5}, {0.5, 0.5}, {3.5, 0}};
  CHECK(max_clique_lens_baseline(square_plus).size() == 4);
  CHECK(brute_force_max_clique(square_plus).size() == 4);

  CHECK(max_clique_lens_baseline(PointSet{}).size() == 0);
}

TEST_CASE("lens baseline is exact against brute force") {
  Rng rng(8);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 2 + uniform_index(rng, 24);
    const double side = uniform_in(rng, 0.8, 4.0);
    PointSet ps;
    for (std::size_t i = 0; i < n; ++i) {
      ps.push_back({uniform_in(rng, 0, side), uniform_in(rng, 0, side)});
    }
    CliqueResult fast = max_clique_lens_baseline(ps);
    CliqueResult exact = brute_force_max_clique(ps);
    CHECK(fast.size() == exact.size());
    CHECK(is_clique(ps, fast.indices));
  }
}

TEST_CASE("removing a point never enlarges the baseline result") {
  Rng rng(9);
  PointSet ps;
  for (int i = 0; i < 18; ++i) {
    ps.push_back({uniform_in(rng, 0, 2), uniform_in(rng, 0, 2)});
  }
  const std::size_t full = max_clique_lens_baseline(ps).size();
  for (std::size_t drop = 0; drop < ps.size(); ++drop) {
    PointSet reduced;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (i != drop) reduced.push_back(ps[i]);
    }
    CHECK(max_clique_lens_baseline(reduced).size() <= full);
  }
}

TEST_CASE("subset overload returns original ids and honors target") {
  PointSet ps{{0, 0}, {0.2, 0}, {9, 9}, {0.1, 0.1}};
  std::vector<std::size_t> ids{0, 1, 3};
  CliqueResult r = max_clique_lens_baseline(ps, ids);
  CHECK(r.indices == std::vector<std::size_t>{0, 1, 3});

  CliqueResult early = max_clique_lens_baseline(ps, ids, 2);
  CHECK(early.size() >= 2);
  CHECK(is_clique(ps, early.indices));
}
