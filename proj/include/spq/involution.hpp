#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "spq/error.hpp"

namespace spq {

enum class Sign : std::int8_t { Minus = -1, Plus = 1 };

constexpr Sign operator-(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// (i, ε): a signed fixed point.
struct Singleton {
  int index;
  Sign sign;
  friend bool operator==(const Singleton&, const Singleton&) = default;
};

/// (lo, hi)^ε with lo < hi.
struct Pair {
  int lo;
  int hi;
  Sign sign;
  friend bool operator==(const Pair&, const Pair&) = default;
};

using Element = std::variant<Singleton, Pair>;

int largest_index(const Element& e);

/// A parameter σ in S_{n,p}: a cover of {1..n} by signed singletons and
/// signed pairs. Stored as a partner table; elements() lists them by
/// increasing largest index.
class SignedInvolution {
 public:
  /// Checks the cover and ordering invariants.
  static SignedInvolution validate(const std::vector<Element>& raw, int n);

  int n() const { return static_cast<int>(partner_.size()) - 1; }
  int p() const;
  int q() const { return n() - p(); }
  int pair_count() const;

  /// The partner of index i, or i itself for a singleton.
  int partner(int i) const { return partner_.at(i); }
  Sign sign(int i) const { return sign_.at(i); }
  bool is_singleton(int i) const { return partner(i) == i; }

  std::vector<Element> elements() const;

  friend bool operator==(const SignedInvolution&, const SignedInvolution&) = default;
  friend auto operator<=>(const SignedInvolution& a, const SignedInvolution& b) {
    if (auto c = a.partner_ <=> b.partner_; c != 0) return c;
    return a.sign_ <=> b.sign_;
  }

 private:
  SignedInvolution() = default;
  friend class InvolutionBuilder;

  std::vector<int> partner_;  // index 0 unused
  std::vector<Sign> sign_;
};

/// Unchecked mutable view used by the operations in this module.
class InvolutionBuilder {
 public:
  explicit InvolutionBuilder(const SignedInvolution& s) : value_(s) {}
  explicit InvolutionBuilder(int n);

  void set_singleton(int i, Sign s);
  void set_pair(int i, int j, Sign s);
  int partner(int i) const { return value_.partner_.at(i); }
  Sign sign(int i) const { return value_.sign_.at(i); }
  SignedInvolution build() const { return value_; }

 private:
  SignedInvolution value_;
};

/// Simple roots of type C_n: index 0 is the long root 2e_1, index i >= 1 is
/// e_{i+1} - e_i.
struct SimpleRoot {
  int index = 0;

  static constexpr SimpleRoot long_root() { return SimpleRoot{0}; }
  static constexpr SimpleRoot short_root(int i) { return SimpleRoot{i}; }
  bool is_long() const { return index == 0; }

  friend auto operator<=>(const SimpleRoot&, const SimpleRoot&) = default;
};

std::string to_string(SimpleRoot r);
/// All simple roots of rank n.
std::vector<SimpleRoot> simple_roots(int n);
bool nonorthogonal(SimpleRoot a, SimpleRoot b);
/// Ordered pairs (α, β) of nonorthogonal simple roots of rank n.
std::vector<std::pair<SimpleRoot, SimpleRoot>> nonorthogonal_pairs(int n);

enum class RootStatus { CompactImaginary, NoncompactImaginary, Real, ComplexTau, ComplexNonTau };

const char* to_string(RootStatus s);

/// ±e_k.
struct SignedCoordinate {
  int index;
  Sign sign;
  friend bool operator==(const SignedCoordinate&, const SignedCoordinate&) = default;
};

/// Visits every σ in S_{n,p} (or all of S_n when p is absent) once, in a fixed
/// recursive order on the largest unused index.
void for_each_involution(int n, std::optional<int> p,
                         const std::function<void(const SignedInvolution&)>& visit);
std::vector<SignedInvolution> enumerate(int n, int p);

SignedCoordinate theta_image(const SignedInvolution& s, int i);
RootStatus root_status(const SignedInvolution& s, SimpleRoot root);
bool in_tau(RootStatus st);
std::set<SimpleRoot> tau(const SignedInvolution& s);

/// In(i, j, σ): interchange the occurrences of i and j.
SignedInvolution interchange(const SignedInvolution& s, int i, int j);
/// SC(1, σ): flip the sign of the pair containing 1, if any.
SignedInvolution sign_change_first(const SignedInvolution& s);
SignedInvolution cross_action(SimpleRoot root, const SignedInvolution& s);
SignedInvolution in_prime(const SignedInvolution& s);
SignedInvolution cayley_up(int i, const SignedInvolution& s);
SignedInvolution cayley_down(int i, const SignedInvolution& s);

/// T_{αβ} on parameters. Results are sorted and distinct.
std::vector<SignedInvolution> wall_cross(SimpleRoot alpha, SimpleRoot beta,
                                         const SignedInvolution& s);
bool in_wall_cross_domain(SimpleRoot alpha, SimpleRoot beta, const SignedInvolution& s);

}  // namespace spq
