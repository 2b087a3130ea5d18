#include "doctest.h"
#include "matsec/errors.hpp"
#include "matsec/families.hpp"
#include "matsec/fixtures.hpp"
#include "matsec/minor.hpp"
#include "matsec/smallset.hpp"
#include "oracles.hpp"

using namespace matsec;
using namespace matsec::testing;

namespace {

MatroidPtr triangle() { return graphic(cycle_graph(3)); }

std::vector<int> all_ids(const Matroid& m) {
  std::vector<int> v(m.size());
  for (int i = 0; i < m.size(); ++i) v[i] = i;
  return v;
}

}  // namespace

TEST_CASE("rank basics") {
  UniformMatroid u24(4, 2);
  CHECK(u24.rank(std::vector<int>{0, 1, 2}) == 2);
  CHECK(triangle()->rank(std::vector<int>{0, 1, 2}) == 2);
  CHECK(u24.rank(std::vector<int>{}) == 0);
  CHECK_THROWS_AS(u24.rank(std::vector<int>{7}), InputError);
}

TEST_CASE("rank agrees with subset-maximum oracle on every family") {
  for (const auto& fx : family_fixtures()) {
    const Matroid& m = *fx.matroid;
    REQUIRE(m.size() <= 10);
    uint64_t total = uint64_t{1} << m.size();
    for (uint64_t mask = 0; mask < total; ++mask) {
      INFO(fx.name, " mask=", mask);
      CHECK(m.rank_mask(mask) == naive_rank(m, mask));
    }
  }
}

TEST_CASE("in_span") {
  UniformMatroid u13(3, 1);
  CHECK(u13.in_span(std::vector<int>{0}, 1));
  UniformMatroid free3(3, 3);
  CHECK_FALSE(free3.in_span(std::vector<int>{0}, 1));
  auto tri = triangle();
  CHECK(tri->in_span(std::vector<int>{0, 1}, 2));
}

TEST_CASE("greedy_opt") {
  UniformMatroid u13(3, 1);
  CHECK(greedy_opt(u13, std::vector<int>{1, 0, 2}) == std::vector<int>{1});
  auto tri = triangle();
  CHECK(greedy_opt(*tri, std::vector<int>{0, 1, 2}) == std::vector<int>{0, 1});

  // A loop first in the order is never kept.
  Multigraph g;
  g.vertices = 2;
  g.add_edge(0, 0);
  g.add_edge(0, 1);
  GraphicMatroid gm(g);
  CHECK(greedy_opt(gm, std::vector<int>{0, 1}) == std::vector<int>{1});

  CHECK_THROWS_AS(greedy_opt(u13, std::vector<int>{1, 1, 2}), InputError);
}

TEST_CASE("greedy output is a basis of constant size for any order") {
  for (const auto& fx : family_fixtures()) {
    const Matroid& m = *fx.matroid;
    std::vector<int> order = all_ids(m);
    size_t expected = greedy_opt(m, order).size();
    CHECK(static_cast<int>(expected) == m.full_rank());
    for (int rot = 1; rot < m.size(); ++rot) {
      std::rotate(order.begin(), order.begin() + 1, order.end());
      auto basis = greedy_opt(m, order);
      CHECK(basis.size() == expected);
      // Maximality: nothing extends it.
      for (int e = 0; e < m.size(); ++e) {
        bool outside = std::find(basis.begin(), basis.end(), e) == basis.end();
        bool extends = outside && m.independent_with(basis, e);
        CHECK_FALSE(extends);
      }
    }
  }
}

TEST_CASE("loops") {
  CHECK(loops(UniformMatroid(4, 2)).empty());
  Multigraph g;
  g.vertices = 2;
  g.add_edge(0, 1);
  g.add_edge(1, 1);
  CHECK(loops(GraphicMatroid(g)) == std::vector<int>{1});
  CHECK(loops(UniformMatroid(2, 0)) == std::vector<int>{0, 1});
}

TEST_CASE("parallel classes") {
  Multigraph doubled;
  doubled.vertices = 3;
  doubled.add_edge(0, 1);
  doubled.add_edge(0, 1);
  doubled.add_edge(1, 2);
  auto classes = parallel_classes(GraphicMatroid(doubled));
  CHECK(classes == std::vector<std::vector<int>>{{0, 1}, {2}});

  auto free4 = free_matroid(4);
  CHECK(parallel_classes(*free4).size() == 4);

  // All edges of a cycle are pairwise 2-cuts, one cographic class.
  CographicMatroid co_c4(cycle_graph(4));
  for (int e = 0; e < 4; ++e)
    for (int f = e + 1; f < 4; ++f) {
      int pair[2] = {e, f};
      CHECK(co_c4.rank(pair) == 1);
    }
  CHECK(parallel_classes(co_c4).size() == 1);

  CHECK_THROWS_AS(parallel_classes(UniformMatroid(2, 0)), InputError);
}

TEST_CASE("cocircuits") {
  // A bridge is a one-element cut.
  GraphicMatroid path(path_graph(3));
  CHECK(min_cocircuit_size(path, 1) == 1);

  GraphicMatroid k4(complete_graph(4));
  for (int e = 0; e < 6; ++e) CHECK(min_cocircuit_size(k4, e) == 3);
  CHECK(c_star(k4) == 3);

  // Dual of U_{1,n} is U_{n-1,n}: every cocircuit is the full set.
  UniformMatroid u15(5, 1);
  CHECK(min_cocircuit_size(u15, 2) == 5);
  CHECK(c_star(u15) == 5);

  CHECK_THROWS_AS(min_cocircuit_size(UniformMatroid(2, 0), 0), InputError);
}

TEST_CASE("minors") {
  auto u24 = std::make_shared<UniformMatroid>(4, 2);
  auto minor = make_minor(u24, {0}, {1, 2, 3});
  CHECK(minor->size() == 3);
  CHECK(minor->full_rank() == 1);  // contraction dropped the rank
  CHECK(minor->independent({0}));
  CHECK_FALSE(minor->independent({0, 1}));

  // Contracting a triangle edge leaves two parallel edges.
  auto tri = triangle();
  auto contracted = make_minor(tri, {0}, {1, 2});
  int pair[2] = {0, 1};
  CHECK(contracted->rank(pair) == 1);

  CHECK_THROWS_AS(make_minor(u24, {0}, {0, 1}), InputError);
}

TEST_CASE("minor views flatten and satisfy the rank identity") {
  auto k4 = graphic(complete_graph(4));
  auto v1 = make_minor(k4, {0}, {1, 2, 3, 4});
  auto v2 = make_minor(MatroidPtr(v1), {0}, {1, 2});
  CHECK(v2->base().get() == k4.get());  // flattened to the root
  CHECK(v2->contracted_set() == std::vector<int>{0, 1});

  // r_view(X) = r(X + C) - r(C) against an independently built table.
  for (const auto& fx : family_fixtures()) {
    if (fx.matroid->size() > 8) continue;
    const auto& m = fx.matroid;
    uint64_t total = uint64_t{1} << m->size();
    for (uint64_t cmask = 0; cmask < total; cmask += 3) {  // sampled contractions
      auto contracted = mask_to_set(cmask);
      auto rest = mask_to_set(~cmask & (total - 1));
      auto view = make_minor(m, contracted, rest);
      int rc = naive_rank(*m, cmask);
      uint64_t vtotal = uint64_t{1} << view->size();
      for (uint64_t vmask = 0; vmask < vtotal; ++vmask) {
        uint64_t base_mask = 0;
        for (int local : mask_to_set(vmask))
          base_mask |= uint64_t{1} << view->to_base(local);
        INFO(fx.name, " C=", cmask, " X=", vmask);
        CHECK(view->rank_mask(vmask) == naive_rank(*m, base_mask | cmask) - rc);
      }
    }
  }
}

TEST_CASE("direct sum") {
  auto ds = direct_sum({std::make_shared<UniformMatroid>(3, 1), free_matroid(2)});
  CHECK(ds->size() == 5);
  CHECK(ds->independent({0, 3}));
  CHECK_FALSE(ds->independent({0, 1}));
  CHECK(ds->full_rank() == 3);
}

TEST_CASE("matroid axioms hold exhaustively on every family fixture") {
  for (const auto& fx : family_fixtures()) {
    INFO(fx.name);
    CHECK(check_matroid_axioms(*fx.matroid));
    CHECK(check_rank_axioms(*fx.matroid));
  }
}

TEST_CASE("rank profile") {
  auto tri = triangle();
  CHECK(rank_profile(*tri, std::vector<int>{0, 1, 2}) == std::vector<int>{1, 2, 2});
  auto free3 = free_matroid(3);
  CHECK(rank_profile(*free3, std::vector<int>{2, 0, 1}) == std::vector<int>{1, 2, 3});
}

TEST_CASE("oracle query counters move") {
  UniformMatroid u(5, 2);
  auto before = u.query_count();
  u.rank(std::vector<int>{0, 1, 2, 3});
  CHECK(u.query_count() > before);
}
