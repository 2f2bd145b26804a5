#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "spq/hmap.hpp"

namespace spq {

struct Failure {
  std::string sigma;
  std::string detail;
  friend bool operator==(const Failure&, const Failure&) = default;
};

struct Report {
  std::string suite;
  int n = 0;
  int p = 0;
  std::int64_t checked = 0;
  std::vector<Failure> failures;
  // Named counts shown alongside the result, e.g. image size for the bijection suite.
  std::vector<std::pair<std::string, std::int64_t>> metrics;

  bool ok() const { return failures.empty(); }
  friend bool operator==(const Report&, const Report&) = default;
};

// One report per (n, p) with 1 <= n <= n_max, ordered by n then p.
std::vector<Report> verify_tau(int n_max);
std::vector<Report> verify_wallcross(int n_max);
std::vector<Report> verify_bijection(int n_max);
// One report per n: enumeration totals against the recurrence, and every
// (p, pair count) stratum against the Weyl-group index.
std::vector<Report> verify_counting(int n_max);

// |S_n| from t(n) = 2 t(n-1) + 2 (n-1) t(n-2).
std::uint64_t signed_involution_count(int n);
// Parameters in S_{n,p} with exactly k pairs, as the index
// |W_n| / (|W_k| 2^k |W_{p-k}| |W_{q-k}|) with |W_m| = 2^m m!.
std::uint64_t stratum_size(int n, int p, int k);

struct CellEdge {
  std::size_t from;
  std::size_t to;
  SimpleRoot alpha;
  SimpleRoot beta;
};

struct CellGraph {
  int n = 0;
  int p = 0;
  std::vector<SignedInvolution> vertices;  // enumeration order
  std::vector<CellEdge> edges;
  std::vector<std::vector<std::size_t>> components;  // ordered by smallest vertex
  std::vector<OrbitDescriptor> descriptors;          // one per component
};

// Builds the wall-crossing graph on S_{n,p} and checks that its components are
// exactly the fibres of associated_variety_of. Throws VerificationFailure naming
// the first offending parameter otherwise.
CellGraph cells(int n, int p);

}  // namespace spq
