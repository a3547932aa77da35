#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "depthkit/comb_depth.hpp"
#include "depthkit/errors.hpp"
#include "depthkit/partition.hpp"
#include "depthkit/perm_group.hpp"

using namespace depthkit;

namespace {

// Hook length formula: n! / prod hooks.
std::size_t hook_dimension(Partition const& p) {
  std::size_t const n = p.weight();
  std::vector<std::size_t> conj(p.part(0), 0);
  for (std::size_t r : p.parts())
    for (std::size_t c = 0; c < r; ++c) ++conj[c];
  unsigned long long num = 1, den = 1;
  for (std::size_t k = 2; k <= n; ++k) num *= k;
  for (std::size_t i = 0; i < p.length(); ++i)
    for (std::size_t j = 0; j < p.part(i); ++j) den *= (p.part(i) - j - 1) + (conj[j] - i - 1) + 1;
  return static_cast<std::size_t>(num / den);
}

Permutation cyc(std::string const& s, std::size_t degree) {
  return Permutation::parse_cycles(s, degree);
}

}  // namespace

TEST_CASE("partition counts") {
  std::size_t const p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (std::size_t n = 1; n <= 9; ++n) CHECK(partitions(n).size() == p[n]);
  auto const three = partitions(3);
  CHECK(three[0].to_string() == "[3]");
  CHECK(three[1].to_string() == "[2,1]");
  CHECK(three[2].to_string() == "[1,1,1]");
  CHECK_THROWS_AS(Partition({1, 2}), ValidationError);
  CHECK_THROWS_AS(Partition({2, 0}), ValidationError);
}

TEST_CASE("branching matrix of S3 in S4 is M") {
  CHECK(branching_matrix(3) == NonNegMatrix{{1, 1, 0, 0, 0}, {0, 1, 1, 1, 0}, {0, 0, 0, 1, 1}});
  CHECK(branching_matrix(1) == NonNegMatrix{{1, 1}});
}

TEST_CASE("branching matrix restricts dimensions correctly") {
  for (std::size_t n = 1; n <= 7; ++n) {
    auto const rows = partitions(n);
    auto const cols = partitions(n + 1);
    auto const m = branching_matrix(n);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      std::size_t restricted = 0;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        restricted += static_cast<std::size_t>(m(i, j)) * hook_dimension(rows[i]);
      }
      REQUIRE(restricted == hook_dimension(cols[j]));
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::size_t sum = 0;
      for (std::size_t j = 0; j < cols.size(); ++j) sum += static_cast<std::size_t>(m(i, j));
      REQUIRE(sum == rows[i].addable_cells());
    }
  }
}

TEST_CASE("symmetric chain depth is 2n-1") {
  for (std::size_t n = 1; n <= 6; ++n) CHECK(sym_depth(n).min_depth == 2 * n - 1);
}

TEST_CASE("permutations") {
  auto const p = cyc("(1 2 3)", 3);
  CHECK(p[0] == 1);
  CHECK(p[2] == 0);
  CHECK((p * p * p).is_identity());
  CHECK(p.inverse() == p * p);
  CHECK(p.to_cycles() == "(1 2 3)");
  CHECK(cyc("()", 4).to_cycles() == "()");
  // Right-to-left: (1 2)(2 3) sends 3 -> 2 -> 1.
  CHECK((cyc("(1 2)", 3) * cyc("(2 3)", 3))[2] == 0);
  CHECK_THROWS_AS(cyc("(1 2)(2 3)", 3), ParseError);
  CHECK_THROWS_AS(cyc("(1 4)", 3), ParseError);
  CHECK_THROWS_AS(cyc("1 2", 3), ParseError);
}

TEST_CASE("group enumeration") {
  CHECK(PermGroup::symmetric(4).order() == 24);
  CHECK(PermGroup::alternating(4).order() == 12);
  CHECK(PermGroup::trivial(3).order() == 1);
  auto const s4 = PermGroup::symmetric(4);
  CHECK(s4.element(PermGroup::identity()).is_identity());
  for (std::size_t a = 0; a < s4.order(); ++a) {
    CHECK(s4.product(a, s4.inverse(a)) == PermGroup::identity());
    CHECK(s4.element(s4.product(a, 5)) == s4.element(a) * s4.element(5));
  }
  CHECK_THROWS_AS(PermGroup::generate(5, {cyc("(1 2)", 5), cyc("(1 2 3 4 5)", 5)}, 100),
                  ResourceError);
}

TEST_CASE("normalizers") {
  auto const s3 = PermGroup::symmetric(3);
  auto const a3 = PermGroup::alternating(3);
  auto const s2 = PermGroup::generate(3, {cyc("(1 2)", 3)});
  CHECK(is_normal(s3, a3));
  CHECK_FALSE(is_normal(s3, s2));
  CHECK(normalizer(s3, s2).order() == 2);
  CHECK(normalizer_bound(s3, s2) == 6);
  auto const s4 = PermGroup::symmetric(4);
  auto const s3in4 = PermGroup::generate(4, {cyc("(1 2)", 4), cyc("(1 2 3)", 4)});
  CHECK(normalizer_bound(s4, s3in4) == 8);
  CHECK_THROWS_AS(normalizer(s2, s3), ValidationError);
}

TEST_CASE("group spec parsing") {
  auto const spec = parse_group_spec("degree 3\n(1 2)\n---\n(1 2)\n(1 2 3)\nlevel 4\n");
  CHECK(spec.degree == 3);
  CHECK(spec.subgroup_generators.size() == 1);
  CHECK(spec.group_generators.size() == 2);
  CHECK(spec.level == 4u);
  auto const pair = build_pair(spec, 100);
  CHECK(pair.group.order() == 6);
  CHECK(pair.subgroup.order() == 2);

  auto const trivial = parse_group_spec("# trivial H\ndegree 3\n---\n(1 2 3)\n");
  CHECK(trivial.subgroup_generators.empty());
  CHECK(build_pair(trivial, 100).subgroup.order() == 1);

  CHECK_THROWS_AS(parse_group_spec("(1 2)\n---\n(1 2)\n"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("degree 3\n(1 2)\n(1 2 3)\n"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("degree 3\ndegree 3\n---\n"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("degree 3\n(1 5)\n---\n"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("degree 3\n---\n()\nlevel x\n"), ParseError);
  CHECK_THROWS_AS(build_pair(parse_group_spec("degree 3\n(1 2)\n---\n(1 2 3)\n"), 100),
                  ValidationError);
}

TEST_CASE("combinatorial depth of small pairs") {
  auto const s3 = PermGroup::symmetric(3);
  auto const a3 = PermGroup::alternating(3);
  auto const s2 = PermGroup::generate(3, {cyc("(1 2)", 3)});

  auto const normal = combinatorial_depth(s3, a3);
  CHECK(normal.depth == 2u);
  CHECK(normal.normal);

  auto const r = combinatorial_depth(s3, s2);
  CHECK(r.depth == 3u);
  CHECK_FALSE(r.normal);
  CHECK(*r.depth >= sym_depth(2).min_depth);
  CHECK(*r.depth <= normalizer_bound(s3, s2));

  auto const same = combinatorial_depth(s3, s3);
  CHECK(same.improper_pair);
  CHECK(same.depth == 1u);

  auto const trivial = combinatorial_depth(s3, PermGroup::trivial(3));
  CHECK(trivial.depth == 2u);  // {1} is normal

  auto const capped = combinatorial_depth(PermGroup::symmetric(4),
                                          PermGroup::generate(4, {cyc("(1 2)", 4), cyc("(1 2 3)", 4)}),
                                          {4, 48});
  CHECK_FALSE(capped.depth);
  CHECK(capped.lower_bound == 5);

  CHECK_THROWS_AS(combinatorial_depth(s3, s2, {1, 48}), ValidationError);
  CHECK_THROWS_AS(combinatorial_depth(PermGroup::symmetric(4), PermGroup::trivial(4), {8, 10}),
                  ResourceError);
}

TEST_CASE("combinatorial depth bounds over subgroups of S4") {
  auto const s4 = PermGroup::symmetric(4);
  std::vector<std::vector<std::string>> gens = {
      {"(1 2)"},          {"(1 2)(3 4)"},        {"(1 2 3)"},      {"(1 2 3 4)"},
      {"(1 2)", "(3 4)"}, {"(1 2)(3 4)", "(1 3)(2 4)"}, {"(1 2)", "(1 2 3)"},
      {"(1 2 3 4)", "(1 3)"}, {"(1 2 3)", "(1 2)(3 4)"}};
  for (auto const& g : gens) {
    std::vector<Permutation> ps;
    for (auto const& s : g) ps.push_back(cyc(s, 4));
    auto const h = PermGroup::generate(4, ps);
    auto const r = combinatorial_depth(s4, h);
    INFO(g.front());
    REQUIRE(r.depth);
    CHECK(*r.depth <= normalizer_bound(s4, h));
    CHECK((*r.depth <= 2) == r.normal);
  }
  CHECK(combinatorial_depth(s4, PermGroup::generate(4, {cyc("(1 2)", 4), cyc("(1 2 3)", 4)}))
            .depth == 5u);
}

TEST_CASE("combinatorial depth JSON") {
  auto const s3 = PermGroup::symmetric(3);
  auto const a3 = PermGroup::alternating(3);
  CHECK(to_json(combinatorial_depth(s3, a3), 2) ==
        R"({"d_c":2,"lower_bound":2,"normalizer_bound":2,"normal":true})");
  CombDepthResult none;
  none.lower_bound = 9;
  CHECK(to_json(none, 8) == R"({"d_c":null,"lower_bound":9,"normalizer_bound":8,"normal":false})");
}
