#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "parking/core.hpp"
#include "parking/shi_arrangement.hpp"

using namespace parking;

namespace {

std::multiset<std::string> label_strings(const std::vector<Region>& regions, bool bounded_only) {
  std::multiset<std::string> out;
  for (const auto& r : regions)
    if (!bounded_only || r.bounded) out.insert(format_word(r.label, ""));
  return out;
}

// Every sign vector for n, in binary order.
std::vector<SignVector> all_sign_vectors(Value n) {
  const auto m = hyperplane_count(n);
  std::vector<SignVector> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::string s;
    for (std::size_t h = 0; h < m; ++h) s += (mask >> h) & 1 ? '+' : '-';
    out.emplace_back(n, s);
  }
  return out;
}

}  // namespace

TEST_CASE("hyperplanes in lexicographic order") {
  const auto h2 = hyperplanes(2);
  REQUIRE(h2.size() == 2);
  CHECK(h2[0] == Hyperplane{1, 2, 0});
  CHECK(h2[1] == Hyperplane{1, 2, 1});
  CHECK(hyperplanes(3).size() == 6);
  const auto h5 = hyperplanes(5);
  CHECK(h5.size() == 20);
  CHECK(std::is_sorted(h5.begin(), h5.end()));
  CHECK_THROWS_AS(hyperplanes(1), invalid_input);
}

TEST_CASE("sign vectors validate their shape") {
  CHECK_THROWS_AS(SignVector(2, "+"), invalid_input);
  CHECK_THROWS_AS(SignVector(2, "+x"), invalid_input);
  CHECK(SignVector(2, "+-").flipped(1).str() == "++");
}

TEST_CASE("feasibility of small regions") {
  const SignVector strip(2, "+-");
  const auto x = region_witness(strip);
  REQUIRE(x);
  CHECK((*x)[0] - (*x)[1] > 0);
  CHECK((*x)[0] - (*x)[1] < 1);
  CHECK(region_system(strip).satisfied_by({Rational(1, 2), Rational(0)}));

  CHECK_FALSE(is_feasible(SignVector(2, "-+")));

  int feasible = 0;
  for (const auto& sv : all_sign_vectors(3)) feasible += is_feasible(sv);
  CHECK(feasible == 16);
}

TEST_CASE("base region contains the staircase point") {
  for (Value n = 2; n <= 7; ++n) {
    const auto base = base_region(n);
    RationalPoint x;
    for (Value i = 1; i <= n; ++i) x.emplace_back(n - i, n);
    CHECK(region_system(base).satisfied_by(x));
    CHECK(is_feasible(base));
  }
  CHECK(base_region(2).str() == "+-");
  CHECK(base_region(3).str() == "+-+-+-");
}

TEST_CASE("boundedness modulo the all-equal line") {
  CHECK(is_bounded(SignVector(2, "+-")));
  CHECK_FALSE(is_bounded(SignVector(2, "++")));
  CHECK_FALSE(is_bounded(SignVector(2, "--")));

  const auto regions = enumerate_regions(3);
  CHECK(label_strings(regions, true) == std::multiset<std::string>{"111", "112", "121", "211"});
  CHECK(std::count_if(regions.begin(), regions.end(), [](const Region& r) { return !r.bounded; }) == 12);
}

TEST_CASE("region enumeration reproduces the small pictures") {
  const auto r2 = enumerate_regions(2);
  CHECK(label_strings(r2, false) == std::multiset<std::string>{"11", "12", "21"});
  CHECK(label_strings(r2, true) == std::multiset<std::string>{"11"});

  const auto r3 = enumerate_regions(3);
  CHECK(label_strings(r3, false) ==
        std::multiset<std::string>{"221", "231", "131", "132", "122", "123", "113", "112",
                                   "111", "121", "213", "212", "312", "211", "311", "321"});

  const auto r4 = enumerate_regions(4);
  CHECK(r4.size() == 125);
  CHECK(std::count_if(r4.begin(), r4.end(), [](const Region& r) { return r.bounded; }) == 27);
}

TEST_CASE("labels and depths are path independent") {
  for (Value n = 2; n <= 4; ++n) {
    const auto base = base_region(n);
    for (const auto& r : enumerate_regions(n)) {
      REQUIRE(r.label == label_from_separating(r.sign_vector));
      REQUIRE(r.bfs_depth == separating_count(r.sign_vector, base));
      Value sum = 0;
      for (Value v : r.label) {
        REQUIRE(v >= 1);
        sum += v;
      }
      REQUIRE(static_cast<std::size_t>(sum - n) == r.bfs_depth);
      REQUIRE(r.bounded == is_bounded(r));
    }
  }
}

TEST_CASE("single flips reach every nonempty region") {
  for (Value n = 2; n <= 4; ++n) {
    std::set<std::string> scanned, searched;
    for (const auto& sv : all_sign_vectors(n))
      if (is_feasible(sv)) scanned.insert(sv.str());
    for (const auto& r : enumerate_regions(n)) searched.insert(r.sign_vector.str());
    CHECK(scanned == searched);
  }
}

TEST_CASE("region listing is deterministic and BFS ordered") {
  const auto a = enumerate_regions(4);
  const auto b = enumerate_regions(4, {4, 0});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].sign_vector == b[i].sign_vector);
    CHECK(a[i].label == b[i].label);
    CHECK(a[i].bounded == b[i].bounded);
  }
  for (std::size_t i = 1; i < a.size(); ++i) {
    REQUIRE(a[i - 1].bfs_depth <= a[i].bfs_depth);
    if (a[i - 1].bfs_depth == a[i].bfs_depth) REQUIRE(a[i - 1].sign_vector < a[i].sign_vector);
  }
  CHECK(a.front().sign_vector == base_region(4));
}

TEST_CASE("Pak-Stanley verification") {
  CHECK(verify_pak_stanley(2).holds);
  CHECK(verify_pak_stanley(3).holds);
  const auto v4 = verify_pak_stanley(4);
  CHECK(v4.holds);
  CHECK(v4.words_checked == 125);
  CHECK_THROWS_AS(verify_pak_stanley(6), guard_error);
  CHECK_THROWS_AS(enumerate_regions(1), guard_error);
}
