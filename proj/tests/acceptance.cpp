// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace spq;

namespace {

constexpr Sign P = Sign::Plus;
constexpr Sign M = Sign::Minus;

DominoTableau T(std::vector<Domino> ds) { return DominoTableau::from_dominoes(std::move(ds)); }
SignedTableau ST(std::vector<DoubleRow> rows) { return SignedTableau::from_rows(std::move(rows)); }

// Collects the first few problems of a criterion.
struct Check {
  std::vector<std::string> problems;
  void expect(bool ok, const std::string& what) {
    if (!ok && problems.size() < 5) problems.push_back(what);
    if (!ok && problems.size() == 5) problems.push_back("...");
  }
  void reports(const std::vector<Report>& rs) {
    for (const auto& r : rs) expect(r.ok(), render_text(r));
  }
};

int failures = 0;

void criterion(int k, const std::string& name, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.problems.push_back(std::string("exception: ") + e.what());
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const bool ok = c.problems.empty();
  if (!ok) ++failures;
  std::printf("%s criterion %d: %s (%.1f ms)\n", ok ? "PASS" : "FAIL", k, name.c_str(), ms);
  for (const auto& p : c.problems) std::printf("    %s\n", p.c_str());
  std::fflush(stdout);
}

const DominoTableau kHorizontalPair = T({Domino::horizontal(1, 1, 1), Domino::horizontal(2, 2, 1)});
const DominoTableau kVerticalPair = T({Domino::vertical(1, 1, 1), Domino::vertical(2, 1, 2)});

}  // namespace

int main() {
  criterion(1, "first worked example", [](Check& c) {
    auto h = h_map(S("(1,2)+"));
    c.expect(h.t1 == kHorizontalPair, "T1 is not horizontal 1 above horizontal 2");
    c.expect(h.t2_class.members() == std::vector{ST({{2, P}}), ST({{2, M}})}, "class is not both sign patterns");
  });

  criterion(2, "second worked example", [](Check& c) {
    auto h = h_map(S("1+ 2- (3,4)+ 5+"));
    auto expected = T({Domino::vertical(1, 1, 1), Domino::horizontal(2, 1, 2), Domino::horizontal(3, 1, 4),
                       Domino::horizontal(4, 2, 2), Domino::horizontal(5, 2, 4)});
    c.expect(h.t1 == expected, "T1 differs:\n" + render_ascii(h.t1));
    c.expect(h.t2_class.members() == std::vector{ST({{5, P}})}, "class is not the single +-+-+ tableau");
    c.expect(render_ascii(h.t2_class.representative()) == "+-+-+\n+-+-+\n", "rows are not +-+-+");
  });

  criterion(3, "cycle facts on shape (2,2)", [](Check& c) {
    auto hc = cycles(kHorizontalPair);
    const auto& two = cycle_of(hc, 2);
    c.expect(two.is_open() && !two.contains_smallest, "2-domino cycle is not an open non-smallest cycle");
    auto moved = move_through(kHorizontalPair, two);
    const auto& d = moved.at(2);
    c.expect(d.orientation() == Orientation::Vertical, "2-domino did not turn");
    c.expect(d.contains({3, 1}), "2-domino does not reach the empty double row");
    c.expect(moved.at(1) == kHorizontalPair.at(1), "1-domino moved");

    auto vc = cycles(kVerticalPair);
    const auto& vtwo = cycle_of(vc, 2);
    c.expect(vtwo.is_open(), "transposed 2-domino cycle is not open");
    auto vmoved = move_through(kVerticalPair, vtwo);
    for (const auto& dd : vmoved.dominoes())
      for (auto sq : {dd.first, dd.second}) c.expect(sq.row <= 2, "transposed cycle meets the empty double row");
  });

  criterion(4, "tau commutes with H for n <= 6", [](Check& c) { c.reports(verify_tau(6)); });

  criterion(5, "wall crossing commutes with H for n <= 5", [](Check& c) { c.reports(verify_wallcross(5)); });

  criterion(6, "H is a bijection onto tableau pairs for n <= 6", [](Check& c) {
    auto reports = verify_bijection(6);
    c.reports(reports);
    std::map<int, std::map<int, std::int64_t>> expected;
    for (int n = 1; n <= 6; ++n) expected[n] = oracle::tableau_class_pairs(n);
    for (const auto& r : reports) {
      std::int64_t image = -1;
      for (const auto& [k, v] : r.metrics)
        if (k == "image") image = v;
      std::ostringstream msg;
      msg << "n=" << r.n << " p=" << r.p << " image=" << image << " oracle pairs=" << expected[r.n][r.p];
      c.expect(image == expected[r.n][r.p], msg.str());
      c.expect(image == static_cast<std::int64_t>(r.checked), msg.str() + " (not injective)");
    }
    std::map<DominoTableau, int> by_t1;
    for (const auto& s : enumerate(2, 1)) ++by_t1[h_map(s).t1];
    std::multiset<int> split;
    for (auto& [t, k] : by_t1) split.insert(k);
    c.expect(split == std::multiset{1, 1, 2} && expected[2][1] == 4, "S_{2,1} does not split as 1+1+2");
  });

  criterion(7, "cells are the descriptor fibres for n <= 5", [](Check& c) {
    for (int n = 1; n <= 5; ++n)
      for (int p = 0; p <= n; ++p) {
        auto g = cells(n, p);
        std::set<OrbitDescriptor> ds(g.descriptors.begin(), g.descriptors.end());
        c.expect(ds.size() == g.components.size(), "cell count differs from descriptor count");
        std::map<OrbitDescriptor, std::size_t> fibre;
        for (const auto& v : g.vertices) ++fibre[associated_variety_of(v)];
        for (std::size_t k = 0; k < g.components.size(); ++k)
          c.expect(fibre[g.descriptors[k]] == g.components[k].size(), "a cell is not a whole fibre");
      }
    auto g = cells(2, 1);
    std::multiset<std::size_t> sizes;
    for (const auto& comp : g.components) sizes.insert(comp.size());
    c.expect(sizes == std::multiset<std::size_t>{1, 3}, "S_{2,1} cells are not of sizes 3 and 1");
  });

  criterion(8, "counting cross-checks", [](Check& c) {
    for (int n = 1; n <= 8; ++n) {
      std::size_t total = 0;
      for (int p = 0; p <= n; ++p) total += enumerate(n, p).size();
      c.expect(total == signed_involution_count(n), "recurrence mismatch at n=" + std::to_string(n));
    }
    for (int n = 1; n <= 6; ++n) {
      std::map<std::pair<int, int>, std::uint64_t> seen;
      for (int p = 0; p <= n; ++p)
        for (const auto& s : enumerate(n, p)) ++seen[{p, s.pair_count()}];
      for (int p = 0; p <= n; ++p)
        for (int k = 0; k <= n; ++k) {
          const auto want = oracle::stratum_by_multinomial(n, p, k);
          auto it = seen.find({p, k});
          c.expect((it == seen.end() ? 0 : it->second) == want && stratum_size(n, p, k) == want,
                   "stratum mismatch n=" + std::to_string(n) + " p=" + std::to_string(p) + " k=" + std::to_string(k));
        }
    }
    c.reports(verify_counting(8));
  });

  criterion(9, "algebraic properties for n <= 5", [](Check& c) {
    for (int n = 1; n <= 5; ++n) {
      for_each_involution(n, std::nullopt, [&](const SignedInvolution& s) {
        const auto text = render_sigma(s);
        for (auto r : simple_roots(n)) c.expect(cross_action(r, cross_action(r, s)) == s, "cross action order " + text);
        for (int i = 1; i < n; ++i) {
          auto st = root_status(s, short_root(i));
          if (st == RootStatus::NoncompactImaginary)
            c.expect(cayley_down(i, cayley_up(i, s)) == s, "cayley up/down " + text);
          if (s.partner(i) == i + 1) c.expect(cayley_up(i, cayley_down(i, s)) == s, "cayley down/up " + text);
        }
      });
      for_each_domino_tableau(n, [&](const DominoTableau& t) {
        for (const auto& cyc : cycles_any_shape(t)) {
          if (cyc.contains_smallest) continue;
          auto moved = move_through(t, cyc);
          bool back = false;
          for (const auto& other : cycles_any_shape(moved))
            if (other.labels == cyc.labels) back = move_through(moved, other) == t;
          c.expect(back, "move-through not involutive");
        }
      });
      for (const auto& t1 : domino_tableaux(n, true))
        for (int p = 0; p <= n; ++p) {
          std::set<SignedTableau> seen;
          for (const auto& cls : classes_of_signature(t1, 2 * p)) {
            const auto d = normalize(cls.representative());
            for (const auto& m : cls.members()) {
              c.expect(seen.insert(m).second, "classes overlap");
              c.expect(class_of(m, t1) == cls, "class depends on its representative");
              c.expect(equivalent(cls.representative(), m, t1) && equivalent(m, cls.representative(), t1),
                       "equivalence not symmetric");
              c.expect(normalize(m) == d, "normalize not constant on a class");
              c.expect(normalized(normalized(m)) == normalized(m), "normalize not idempotent");
            }
          }
        }
    }
  });

  return failures == 0 ? 0 : 1;
}
