#include "spq/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "spq/io.hpp"

namespace spq {

namespace {

std::string roots_text(SimpleRoot a, SimpleRoot b) { return "(" + to_string(a) + "," + to_string(b) + ")"; }

std::string pairs_text(const std::set<TableauPair>& s) {
  std::string out = "{";
  for (const auto& pr : s) {
    if (out.size() > 1) out += "; ";
    out += to_json(pr.t1).dump() + " class of " + std::to_string(pr.t2_class.size());
  }
  return out + "}";
}

void require_positive(int n_max) {
  if (n_max < 1) throw Error(ErrorKind::OutOfDomain, "n_max must be at least 1");
}

}  // namespace

std::vector<Report> verify_tau(int n_max) {
  require_positive(n_max);
  std::vector<Report> out;
  for (int n = 1; n <= n_max; ++n) {
    for (int p = 0; p <= n; ++p) {
      Report r{"tau", n, p, 0, {}, {}};
      for_each_involution(n, p, [&](const SignedInvolution& s) {
        ++r.checked;
        auto from_sigma = tau(s);
        auto from_pair = tau_pair(h_map(s));
        for (auto root : simple_roots(n)) {
          bool a = from_sigma.contains(root), b = from_pair.contains(root);
          if (a != b)
            r.failures.push_back({render_sigma(s), to_string(root) + (a ? " in τ(σ) but not in τ(H(σ))" : " in τ(H(σ)) but not in τ(σ)")});
        }
      });
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<Report> verify_wallcross(int n_max) {
  require_positive(n_max);
  std::vector<Report> out;
  for (int n = 1; n <= n_max; ++n) {
    const auto root_pairs = nonorthogonal_pairs(n);
    for (int p = 0; p <= n; ++p) {
      Report r{"wallcross", n, p, 0, {}, {}};
      for_each_involution(n, p, [&](const SignedInvolution& s) {
        const auto h = h_map(s);
        for (auto [a, b] : root_pairs) {
          if (!in_wall_cross_domain(a, b, s)) continue;
          ++r.checked;
          try {
            std::set<TableauPair> lhs;
            for (const auto& t : wall_cross(a, b, s)) lhs.insert(h_map(t));
            auto rv = wall_cross_pair(a, b, h);
            std::set<TableauPair> rhs(rv.begin(), rv.end());
            if (lhs != rhs)
              r.failures.push_back({render_sigma(s), roots_text(a, b) + ": H(T(σ)) = " + pairs_text(lhs) +
                                                         " but T(H(σ)) = " + pairs_text(rhs)});
          } catch (const Error& e) {
            r.failures.push_back({render_sigma(s), roots_text(a, b) + ": " + e.what()});
          }
        }
      });
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<Report> verify_bijection(int n_max) {
  require_positive(n_max);
  std::vector<Report> out;
  for (int n = 1; n <= n_max; ++n) {
    const auto tableaux = domino_tableaux(n, true);
    for (int p = 0; p <= n; ++p) {
      Report r{"bijection", n, p, 0, {}, {}};
      // Independent side: every domino tableau of doubled shape with every
      // class of signature (2p, 2q) on its shape.
      std::set<TableauPair> targets;
      for (const auto& t : tableaux)
        for (auto& c : classes_of_signature(t, 2 * p)) targets.insert(TableauPair{t, std::move(c)});

      std::map<TableauPair, SignedInvolution> image;
      for_each_involution(n, p, [&](const SignedInvolution& s) {
        ++r.checked;
        auto h = h_map(s);
        if (!targets.contains(h))
          r.failures.push_back({render_sigma(s), "H(σ) is not a (tableau, class) pair of signature (2p,2q)"});
        auto [it, fresh] = image.emplace(std::move(h), s);
        if (!fresh) r.failures.push_back({render_sigma(s), "same image as " + render_sigma(it->second)});
      });
      if (image.size() != targets.size())
        r.failures.push_back({"", "image has " + std::to_string(image.size()) + " pairs, expected " +
                                      std::to_string(targets.size())});
      r.metrics = {{"parameters", r.checked},
                   {"image", static_cast<std::int64_t>(image.size())},
                   {"pairs", static_cast<std::int64_t>(targets.size())}};
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::uint64_t signed_involution_count(int n) {
  if (n < 0) throw Error(ErrorKind::OutOfDomain, "negative rank");
  std::uint64_t prev = 1, cur = 2;
  if (n == 0) return prev;
  for (int m = 2; m <= n; ++m) {
    std::uint64_t next = 2 * cur + 2 * static_cast<std::uint64_t>(m - 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::uint64_t stratum_size(int n, int p, int k) {
  const int q = n - p;
  if (p < 0 || q < 0 || k < 0 || k > p || k > q) return 0;
  auto weyl = [](int m) {
    std::uint64_t v = 1;
    for (int i = 1; i <= m; ++i) v *= 2 * static_cast<std::uint64_t>(i);
    return v;
  };
  return weyl(n) / (weyl(k) * (std::uint64_t{1} << k) * weyl(p - k) * weyl(q - k));
}

std::vector<Report> verify_counting(int n_max) {
  require_positive(n_max);
  std::vector<Report> out;
  for (int n = 1; n <= n_max; ++n) {
    Report r{"counting", n, -1, 0, {}, {}};
    std::map<std::pair<int, int>, std::uint64_t> strata;
    for_each_involution(n, std::nullopt, [&](const SignedInvolution& s) {
      ++r.checked;
      ++strata[{s.p(), s.pair_count()}];
    });
    const auto expected = signed_involution_count(n);
    if (static_cast<std::uint64_t>(r.checked) != expected)
      r.failures.push_back({"", "enumerated " + std::to_string(r.checked) + ", recurrence gives " + std::to_string(expected)});
    for (int p = 0; p <= n; ++p)
      for (int k = 0; k <= std::min(p, n - p); ++k) {
        auto it = strata.find({p, k});
        std::uint64_t seen = it == strata.end() ? 0 : it->second;
        if (seen != stratum_size(n, p, k))
          r.failures.push_back({"", "p=" + std::to_string(p) + " k=" + std::to_string(k) + ": enumerated " +
                                        std::to_string(seen) + ", index formula " + std::to_string(stratum_size(n, p, k))});
      }
    r.metrics = {{"recurrence", static_cast<std::int64_t>(expected)}};
    out.push_back(std::move(r));
  }
  return out;
}

CellGraph cells(int n, int p) {
  if (n < 1 || p < 0 || p > n) throw Error(ErrorKind::OutOfDomain, "cells needs 0 <= p <= n and n >= 1");
  CellGraph g;
  g.n = n;
  g.p = p;
  g.vertices = enumerate(n, p);
  std::map<SignedInvolution, std::size_t> index;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) index.emplace(g.vertices[v], v);

  std::vector<std::size_t> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    for (auto [a, b] : nonorthogonal_pairs(n)) {
      if (!in_wall_cross_domain(a, b, g.vertices[v])) continue;
      for (const auto& t : wall_cross(a, b, g.vertices[v])) {
        std::size_t w = index.at(t);
        g.edges.push_back({v, w, a, b});
        parent[find(v)] = find(w);
      }
    }

  std::map<std::size_t, std::size_t> slot;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    auto [it, fresh] = slot.emplace(find(v), g.components.size());
    if (fresh) g.components.emplace_back();
    g.components[it->second].push_back(v);
  }

  std::map<OrbitDescriptor, std::size_t> owner;
  for (std::size_t c = 0; c < g.components.size(); ++c) {
    const auto& comp = g.components[c];
    auto d = associated_variety_of(g.vertices[comp.front()]);
    for (auto v : comp) {
      auto dv = associated_variety_of(g.vertices[v]);
      if (dv != d)
        throw Error(ErrorKind::VerificationFailure,
                    "cell of " + render_sigma(g.vertices[comp.front()]) + " has descriptors " + d.to_string() +
                        " and " + dv.to_string() + " (at " + render_sigma(g.vertices[v]) + ")");
    }
    if (auto [it, fresh] = owner.emplace(d, c); !fresh)
      throw Error(ErrorKind::VerificationFailure,
                  "descriptor " + d.to_string() + " spans two cells, containing " +
                      render_sigma(g.vertices[g.components[it->second].front()]) + " and " +
                      render_sigma(g.vertices[comp.front()]));
    g.descriptors.push_back(std::move(d));
  }
  return g;
}

}  // namespace spq
