#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace spq;

namespace {

std::int64_t metric(const Report& r, const std::string& name) {
  for (const auto& [k, v] : r.metrics)
    if (k == name) return v;
  FAIL("missing metric ", name);
  return -1;
}

}  // namespace

TEST_CASE("involution counts") {
  const std::uint64_t known[] = {1, 2, 6, 20, 76, 312, 1384, 6512, 32400};
  for (int n = 0; n <= 8; ++n) CHECK(signed_involution_count(n) == known[n]);
  for (int n = 1; n <= 5; ++n) CHECK(signed_involution_count(n) == oracle::signed_involutions_from_group(n).size());
}

TEST_CASE("stratum sizes against the multinomial count") {
  for (int n = 1; n <= 7; ++n)
    for (int p = 0; p <= n; ++p)
      for (int k = 0; k <= n; ++k) {
        INFO(n, " ", p, " ", k);
        CHECK(stratum_size(n, p, k) == oracle::stratum_by_multinomial(n, p, k));
      }
  CHECK(stratum_size(2, 1, 1) == 2);
  CHECK(stratum_size(2, 1, 0) == 2);
}

TEST_CASE("suites pass at small rank") {
  for (const auto& r : verify_tau(4)) CHECK(r.ok());
  for (const auto& r : verify_wallcross(4)) CHECK(r.ok());
  for (const auto& r : verify_counting(6)) CHECK(r.ok());
  auto tau1 = verify_tau(1);
  REQUIRE(tau1.size() == 2);
  CHECK(tau1[0].checked + tau1[1].checked == 2);
}

TEST_CASE("bijection counts match independently enumerated tableau pairs") {
  auto reports = verify_bijection(5);
  for (int n = 1; n <= 5; ++n) {
    auto expected = oracle::tableau_class_pairs(n);
    for (const auto& r : reports) {
      if (r.n != n) continue;
      INFO(n, " ", r.p);
      CHECK(r.ok());
      CHECK(metric(r, "image") == metric(r, "parameters"));
      CHECK(metric(r, "pairs") == expected[r.p]);
      CHECK(static_cast<std::size_t>(metric(r, "parameters")) == enumerate(n, r.p).size());
    }
  }
}

TEST_CASE("the four parameters of S_{2,1} split 1 + 1 + 2 over tableaux") {
  std::map<DominoTableau, int> by_t1;
  for (const auto& s : enumerate(2, 1)) ++by_t1[h_map(s).t1];
  std::vector<int> sizes;
  for (auto& [t, c] : by_t1) sizes.push_back(c);
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector{1, 1, 2});
  CHECK(oracle::tableau_class_pairs(2)[1] == 4);
}

TEST_CASE("cells") {
  auto g = cells(2, 1);
  REQUIRE(g.components.size() == 2);
  std::map<std::string, std::size_t> size_by_descriptor;
  for (std::size_t k = 0; k < g.components.size(); ++k)
    size_by_descriptor[g.descriptors[k].to_string()] = g.components[k].size();
  CHECK(size_by_descriptor == std::map<std::string, std::size_t>{{"2+2+", 3}, {"1+1+1-1-", 1}});

  auto one = cells(1, 1);
  CHECK(one.components.size() == 1);
  CHECK(one.vertices == std::vector{S("1+")});

  auto flat = cells(2, 2);
  CHECK(flat.components.size() == 1);
  CHECK(flat.edges.empty());

  for (int n = 1; n <= 4; ++n)
    for (int p = 0; p <= n; ++p) {
      auto c = cells(n, p);
      std::set<OrbitDescriptor> ds(c.descriptors.begin(), c.descriptors.end());
      CHECK(ds.size() == c.components.size());
    }
  try {
    verify_tau(0);
    FAIL("expected OutOfDomain");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutOfDomain);
  }
}
