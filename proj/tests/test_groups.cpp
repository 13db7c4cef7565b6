#include <doctest.h>

#include <algorithm>
#include <set>

#include "unigraph/error.hpp"
#include "unigraph/groups.hpp"
#include "unigraph/linedigraph.hpp"

using namespace unigraph;

namespace {

void check_axioms(const FiniteGroup& g) {
  const int n = g.order(), e = g.identity();
  for (int a = 0; a < n; ++a) {
    CHECK(g.mul(a, e) == a);
    CHECK(g.mul(e, a) == a);
    CHECK(g.mul(a, g.inverse(a)) == e);
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
  }
}

const Condition& find(const ConditionList& list, const std::string& name) {
  for (const auto& c : list)
    if (c.name == name) return c;
  FAIL("missing condition " << name);
  return list.front();
}

}  // namespace

TEST_CASE("built-in groups satisfy the axioms") {
  for (const char* spec : {"Z:6", "Z2^3", "prod:Z:2,Z:4", "D:5", "S:4"}) {
    CAPTURE(spec);
    const FiniteGroup g = build_group(spec);
    check_axioms(g);
    for (int a = 0; a < g.order(); ++a) CHECK(g.parse_element(g.name(a)) == a);
  }
  CHECK(build_group("S:4").order() == 24);
  CHECK(build_group("D:6").order() == 12);
  CHECK(build_group("Z2^3").is_abelian());
  CHECK_FALSE(build_group("D:3").is_abelian());
  CHECK_THROWS_AS(build_group("S:8"), CapacityError);
  CHECK_THROWS_AS(build_group("Q:8"), InputError);
}

TEST_CASE("symmetric group composes right to left") {
  for (int n = 3; n <= 6; ++n) {
    const FiniteGroup g = FiniteGroup::symmetric(n);
    std::string cycle = "(", tail = "(";
    for (int i = 1; i <= n; ++i) cycle += std::to_string(i) + (i < n ? " " : ")");
    for (int i = 2; i <= n; ++i) tail += std::to_string(i) + (i < n ? " " : ")");
    CHECK(g.mul(g.parse_element("(1 2)"), g.parse_element(cycle)) == g.parse_element(tail));
  }
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  CHECK(s3.element_order(s3.parse_element("(1 2 3)")) == 3);
  CHECK(s3.parse_element("e") == s3.identity());
  CHECK(s3.parse_element("()") == s3.identity());
}

TEST_CASE("dihedral relations") {
  const FiniteGroup d = FiniteGroup::dihedral(5);
  const int r = d.parse_element("r"), s = d.parse_element("s");
  CHECK(d.power(r, 5) == d.identity());
  CHECK(d.mul(s, d.mul(r, s)) == d.inverse(r));
  CHECK(d.generated({r, s}).size() == 10);
}

TEST_CASE("table groups are validated") {
  CHECK(FiniteGroup::from_table({{0, 1}, {1, 0}}).order() == 2);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), ValidationError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}), ValidationError);
}

TEST_CASE("Cayley digraph arcs are left multiplications") {
  const FiniteGroup g = build_group("S:3");
  const GenSet s = parse_genset(g, "(1 2),(1 2 3)");
  const Digraph d = cayley_digraph(g, s);
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) {
      const bool expected = std::any_of(s.elements.begin(), s.elements.end(), [&](int t) { return g.mul(t, x) == y; });
      CHECK(d.has_arc(x, y) == expected);
    }
  CHECK(regular_representation(g, s.elements[1]).matrix() == d.adjacency() - regular_representation(g, s.elements[0]).matrix());
  CHECK_THROWS_AS(parse_genset(g, "e"), InputError);
  CHECK(parse_genset(g, "e", true).elements.size() == 1);
  CHECK_THROWS_AS(parse_genset(g, "(1 2),(1 2)"), InputError);
}

TEST_CASE("coset generating sets satisfy the line-digraph condition") {
  for (const char* spec : {"S:3", "S:4", "D:4", "D:6", "Z:12", "prod:Z:2,Z:6"}) {
    CAPTURE(spec);
    const FiniteGroup g = build_group(spec);
    int pairs = 0;
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b) {
        if (a == b || a == g.identity() || b == g.identity()) continue;
        if (static_cast<int>(g.generated({a, b}).size()) != g.order()) continue;
        ++pairs;
        const GenSet t = theorem1_generating_set(g, a, b);
        const int c = g.mul(g.inverse(a), b);
        CHECK(static_cast<int>(t.elements.size()) == g.element_order(c));
        CHECK(std::count(t.elements.begin(), t.elements.end(), a) == 1);
        CHECK(std::count(t.elements.begin(), t.elements.end(), b) == 1);
        CHECK(static_cast<int>(g.generated(t.elements).size()) == g.order());
        const auto w = mansilla_serra_check(g, t);
        REQUIRE(w.has_value());
        CHECK(w->subgroup.size() == t.elements.size());
        if (g.order() <= 24) CHECK(recognize_line_digraph(cayley_digraph(g, t)).accepted());
      }
    CHECK(pairs > 0);
  }
  const FiniteGroup z6 = build_group("Z:6");
  CHECK_THROWS_AS(theorem1_generating_set(z6, 2, 4), InputError);
}

TEST_CASE("Mansilla-Serra rejects a non-line Cayley digraph") {
  const FiniteGroup z4 = build_group("Z:4");
  CHECK_FALSE(mansilla_serra_check(z4, parse_genset(z4, "1,2,3")).has_value());
  CHECK_FALSE(recognize_line_digraph(cayley_digraph(z4, parse_genset(z4, "1,2,3"))).accepted());
}

TEST_CASE("dihedral and symmetric Cayley digraphs as line digraphs") {
  for (int n = 3; n <= 6; ++n) {
    const FiniteGroup d = FiniteGroup::dihedral(n);
    const FiniteGroup z = FiniteGroup::cyclic(n);
    const Digraph x = cayley_digraph(d, parse_genset(d, "r,s"));
    const Digraph base = cayley_digraph(z, make_genset(z, {1, n - 1}));
    CHECK(find_isomorphism(x, line_digraph(Multidigraph(base)).digraph).has_value());
  }
  for (int n = 3; n <= 4; ++n) {
    const FiniteGroup s = FiniteGroup::symmetric(n);
    std::string full = "(", shorter = "(";
    for (int i = 1; i <= n; ++i) full += std::to_string(i) + (i < n ? " " : ")");
    for (int i = 1; i < n; ++i) shorter += std::to_string(i) + (i < n - 1 ? " " : ")");
    const Digraph x = cayley_digraph(s, parse_genset(s, full + "," + shorter));
    const Digraph p = arrangement_digraph(n, n - 2);
    CHECK(find_isomorphism(x, line_digraph(Multidigraph(p)).digraph).has_value());
  }
}

TEST_CASE("cyclic condition suite") {
  const FiniteGroup z8 = build_group("Z:8");
  const auto ok = unistochastic_group_conditions(z8, parse_genset(z8, "1,5"));
  for (const char* name : {"involutive_differences", "even_order", "abelian_equal_squares", "cyclic_pair_form",
                           "cyclic_generation", "cyclic_graph_iff_quarter", "cyclic_hamiltonian", "pairwise_complementary"})
    CHECK(find(ok, name).status == Status::Pass);

  const auto quarter = unistochastic_group_conditions(z8, parse_genset(z8, "2,6"));
  CHECK(find(quarter, "cyclic_generation").status == Status::Fail);
  CHECK(find(quarter, "cyclic_graph_iff_quarter").status == Status::Pass);

  const auto bad = unistochastic_group_conditions(z8, parse_genset(z8, "1,2"));
  CHECK(find(bad, "cyclic_pair_form").status == Status::Fail);
  CHECK(find(bad, "abelian_equal_squares").status == Status::Fail);

  const FiniteGroup z5 = build_group("Z:5");
  const auto odd = unistochastic_group_conditions(z5, parse_genset(z5, "1,2"));
  CHECK(find(odd, "even_order").status == Status::Fail);
  CHECK(find(odd, "abelian_all_odd_singleton").status == Status::Fail);
}
