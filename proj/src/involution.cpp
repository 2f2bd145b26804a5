#include "spq/involution.hpp"

#include <algorithm>
#include <sstream>

namespace spq {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateIndex: return "DuplicateIndex";
    case ErrorKind::MissingIndex: return "MissingIndex";
    case ErrorKind::BadPairOrder: return "BadPairOrder";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotNoncompactImaginary: return "NotNoncompactImaginary";
    case ErrorKind::NotReal: return "NotReal";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::ShapeViolation: return "ShapeViolation";
    case ErrorKind::UnknownCycle: return "UnknownCycle";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

int largest_index(const Element& e) {
  return std::visit(
      [](const auto& x) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Singleton>)
          return x.index;
        else
          return x.hi;
      },
      e);
}

SignedInvolution SignedInvolution::validate(const std::vector<Element>& raw, int n) {
  if (n < 0) throw Error(ErrorKind::IndexOutOfRange, "negative rank");
  InvolutionBuilder b(n);
  std::vector<bool> seen(n + 1, false);
  auto claim = [&](int i) {
    if (i < 1 || i > n)
      throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    if (seen[i]) throw Error(ErrorKind::DuplicateIndex, "index " + std::to_string(i) + " occurs twice");
    seen[i] = true;
  };
  for (const auto& e : raw) {
    if (const auto* s = std::get_if<Singleton>(&e)) {
      claim(s->index);
      b.set_singleton(s->index, s->sign);
    } else {
      const auto& pr = std::get<Pair>(e);
      if (pr.lo >= pr.hi)
        throw Error(ErrorKind::BadPairOrder,
                    "pair (" + std::to_string(pr.lo) + "," + std::to_string(pr.hi) + ") is not increasing");
      claim(pr.lo);
      claim(pr.hi);
      b.set_pair(pr.lo, pr.hi, pr.sign);
    }
  }
  for (int i = 1; i <= n; ++i)
    if (!seen[i]) throw Error(ErrorKind::MissingIndex, "index " + std::to_string(i) + " is not covered");
  return b.build();
}

int SignedInvolution::p() const {
  int count = 0;
  for (int i = 1; i <= n(); ++i) {
    if (is_singleton(i)) {
      if (sign(i) == Sign::Plus) ++count;
    } else if (i < partner(i)) {
      ++count;
    }
  }
  return count;
}

int SignedInvolution::pair_count() const {
  int count = 0;
  for (int i = 1; i <= n(); ++i)
    if (!is_singleton(i) && i < partner(i)) ++count;
  return count;
}

std::vector<Element> SignedInvolution::elements() const {
  std::vector<Element> out;
  for (int i = 1; i <= n(); ++i) {
    int j = partner(i);
    if (j == i)
      out.push_back(Singleton{i, sign(i)});
    else if (j < i)
      out.push_back(Pair{j, i, sign(i)});
  }
  return out;
}

InvolutionBuilder::InvolutionBuilder(int n) {
  value_.partner_.assign(n + 1, 0);
  value_.sign_.assign(n + 1, Sign::Plus);
}

void InvolutionBuilder::set_singleton(int i, Sign s) {
  value_.partner_.at(i) = i;
  value_.sign_.at(i) = s;
}

void InvolutionBuilder::set_pair(int i, int j, Sign s) {
  value_.partner_.at(i) = j;
  value_.partner_.at(j) = i;
  value_.sign_.at(i) = s;
  value_.sign_.at(j) = s;
}

std::string to_string(SimpleRoot r) {
  if (r.is_long()) return "2e1";
  std::ostringstream os;
  os << "e" << r.index + 1 << "-e" << r.index;
  return os.str();
}

std::vector<SimpleRoot> simple_roots(int n) {
  std::vector<SimpleRoot> out;
  if (n >= 1) out.push_back(SimpleRoot::long_root());
  for (int i = 1; i < n; ++i) out.push_back(SimpleRoot::short_root(i));
  return out;
}

bool nonorthogonal(SimpleRoot a, SimpleRoot b) { return std::abs(a.index - b.index) == 1; }

std::vector<std::pair<SimpleRoot, SimpleRoot>> nonorthogonal_pairs(int n) {
  std::vector<std::pair<SimpleRoot, SimpleRoot>> out;
  for (auto a : simple_roots(n))
    for (auto b : simple_roots(n))
      if (nonorthogonal(a, b)) out.emplace_back(a, b);
  return out;
}

const char* to_string(RootStatus s) {
  switch (s) {
    case RootStatus::CompactImaginary: return "CompactImaginary";
    case RootStatus::NoncompactImaginary: return "NoncompactImaginary";
    case RootStatus::Real: return "Real";
    case RootStatus::ComplexTau: return "ComplexTau";
    case RootStatus::ComplexNonTau: return "ComplexNonTau";
  }
  return "Unknown";
}

void for_each_involution(int n, std::optional<int> p,
                         const std::function<void(const SignedInvolution&)>& visit) {
  InvolutionBuilder b(n);
  std::vector<bool> used(n + 1, false);
  std::function<void(int, int)> rec = [&](int top, int pcount) {
    while (top >= 1 && used[top]) --top;
    if (top == 0) {
      if (!p || *p == pcount) visit(b.build());
      return;
    }
    used[top] = true;
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      b.set_singleton(top, s);
      rec(top - 1, pcount + (s == Sign::Plus ? 1 : 0));
    }
    for (int k = 1; k < top; ++k) {
      if (used[k]) continue;
      used[k] = true;
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        b.set_pair(k, top, s);
        rec(top - 1, pcount + 1);
      }
      used[k] = false;
    }
    used[top] = false;
  };
  rec(n, 0);
}

std::vector<SignedInvolution> enumerate(int n, int p) {
  std::vector<SignedInvolution> out;
  if (p < 0 || p > n) return out;
  for_each_involution(n, p, [&](const SignedInvolution& s) { out.push_back(s); });
  return out;
}

SignedCoordinate theta_image(const SignedInvolution& s, int i) {
  if (i < 1 || i > s.n()) throw Error(ErrorKind::IndexOutOfRange, "coordinate " + std::to_string(i));
  int j = s.partner(i);
  if (j == i) return {i, Sign::Plus};
  if (s.sign(i) == Sign::Plus) return {j, Sign::Plus};
  if (std::abs(j - i) == 1) return {i, Sign::Minus};
  return {j, Sign::Minus};
}

namespace {

// Coefficient vector of θ(root), indexed 1..n.
std::vector<int> theta_root(const SignedInvolution& s, SimpleRoot root, std::vector<int>* plain) {
  std::vector<int> v(s.n() + 1, 0);
  std::vector<int> a(s.n() + 1, 0);
  auto add = [&](int coeff, int i) {
    a[i] += coeff;
    auto t = theta_image(s, i);
    v[t.index] += coeff * static_cast<int>(t.sign);
  };
  if (root.is_long()) {
    add(2, 1);
  } else {
    add(1, root.index + 1);
    add(-1, root.index);
  }
  if (plain) *plain = std::move(a);
  return v;
}

bool is_negative_root(const std::vector<int>& v) {
  for (auto i = static_cast<int>(v.size()) - 1; i >= 1; --i)
    if (v[i] != 0) return v[i] < 0;
  return false;
}

}  // namespace

RootStatus root_status(const SignedInvolution& s, SimpleRoot root) {
  if (s.n() < 1 || root.index < 0 || root.index > s.n() - 1)
    throw Error(ErrorKind::IndexOutOfRange, "root " + to_string(root));
  std::vector<int> alpha;
  auto image = theta_root(s, root, &alpha);
  if (image == alpha) {
    bool compact = root.is_long() ? s.is_singleton(1)
                                  : (s.is_singleton(root.index) && s.is_singleton(root.index + 1) &&
                                     s.sign(root.index) == s.sign(root.index + 1));
    return compact ? RootStatus::CompactImaginary : RootStatus::NoncompactImaginary;
  }
  std::vector<int> neg(alpha.size());
  std::transform(alpha.begin(), alpha.end(), neg.begin(), [](int x) { return -x; });
  if (image == neg) return RootStatus::Real;
  return is_negative_root(image) ? RootStatus::ComplexTau : RootStatus::ComplexNonTau;
}

bool in_tau(RootStatus st) {
  return st == RootStatus::CompactImaginary || st == RootStatus::Real || st == RootStatus::ComplexTau;
}

std::set<SimpleRoot> tau(const SignedInvolution& s) {
  std::set<SimpleRoot> out;
  for (auto r : simple_roots(s.n()))
    if (in_tau(root_status(s, r))) out.insert(r);
  return out;
}

SignedInvolution interchange(const SignedInvolution& s, int i, int j) {
  if (i == j || s.partner(i) == j) return s;
  auto swap_index = [&](int k) { return k == i ? j : (k == j ? i : k); };
  InvolutionBuilder b(s.n());
  for (int k = 1; k <= s.n(); ++k) {
    int pk = s.partner(k);
    if (pk == k)
      b.set_singleton(swap_index(k), s.sign(k));
    else if (k < pk)
      b.set_pair(swap_index(k), swap_index(pk), s.sign(k));
  }
  return b.build();
}

SignedInvolution sign_change_first(const SignedInvolution& s) {
  if (s.n() < 1 || s.is_singleton(1)) return s;
  InvolutionBuilder b(s);
  b.set_pair(1, s.partner(1), -s.sign(1));
  return b.build();
}

SignedInvolution cross_action(SimpleRoot root, const SignedInvolution& s) {
  if (root.is_long()) return sign_change_first(s);
  if (root.index < 1 || root.index >= s.n()) throw Error(ErrorKind::IndexOutOfRange, "root " + to_string(root));
  return interchange(s, root.index, root.index + 1);
}

SignedInvolution in_prime(const SignedInvolution& s) {
  if (s.n() >= 2 && !s.is_singleton(1) && !s.is_singleton(2) && s.partner(1) != 2) {
    int i = s.partner(1);
    int j = s.partner(2);
    InvolutionBuilder b(s);
    b.set_pair(1, j, -s.sign(2));
    b.set_pair(2, i, -s.sign(1));
    return b.build();
  }
  return s.n() >= 2 ? interchange(s, 1, 2) : s;
}

SignedInvolution cayley_up(int i, const SignedInvolution& s) {
  if (i < 1 || i >= s.n()) throw Error(ErrorKind::IndexOutOfRange, "cayley index " + std::to_string(i));
  if (root_status(s, SimpleRoot::short_root(i)) != RootStatus::NoncompactImaginary)
    throw Error(ErrorKind::NotNoncompactImaginary, to_string(SimpleRoot::short_root(i)));
  InvolutionBuilder b(s);
  b.set_pair(i, i + 1, s.sign(i));
  return b.build();
}

SignedInvolution cayley_down(int i, const SignedInvolution& s) {
  if (i < 1 || i >= s.n()) throw Error(ErrorKind::IndexOutOfRange, "cayley index " + std::to_string(i));
  // Adjacent negative pairs also make e_{i+1}-e_i real; only the pair itself splits.
  if (root_status(s, SimpleRoot::short_root(i)) != RootStatus::Real || s.partner(i) != i + 1)
    throw Error(ErrorKind::NotReal, to_string(SimpleRoot::short_root(i)) + " is not the root of a pair (i,i+1)");
  InvolutionBuilder b(s);
  Sign e = s.sign(i);
  b.set_singleton(i, e);
  b.set_singleton(i + 1, -e);
  return b.build();
}

bool in_wall_cross_domain(SimpleRoot alpha, SimpleRoot beta, const SignedInvolution& s) {
  if (!nonorthogonal(alpha, beta)) return false;
  auto t = tau(s);
  return !t.contains(alpha) && t.contains(beta);
}

namespace {

std::vector<SignedInvolution> tau_flipped(SimpleRoot alpha, SimpleRoot beta, std::vector<SignedInvolution> cands) {
  std::vector<SignedInvolution> kept;
  for (auto& c : cands) {
    auto t = tau(c);
    if (t.contains(alpha) && !t.contains(beta)) kept.push_back(std::move(c));
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  return kept;
}

std::vector<SignedInvolution> mixed_candidates(const SignedInvolution& s) {
  if (s.partner(1) == 2 && s.sign(1) == Sign::Plus) {
    InvolutionBuilder a(s), b(s);
    a.set_singleton(1, Sign::Plus);
    a.set_singleton(2, Sign::Minus);
    b.set_singleton(1, Sign::Minus);
    b.set_singleton(2, Sign::Plus);
    return {a.build(), b.build()};
  }
  if (s.is_singleton(1) && s.is_singleton(2) && s.sign(1) != s.sign(2)) {
    InvolutionBuilder a(s);
    a.set_pair(1, 2, Sign::Plus);
    return {a.build()};
  }
  std::vector<SignedInvolution> out;
  if (!s.is_singleton(1) || !s.is_singleton(2)) out.push_back(interchange(s, 1, 2));
  if (!s.is_singleton(1)) out.push_back(sign_change_first(s));
  return out;
}

// Same-length candidates in priority order; the first group with a τ-flipping
// member wins. Cayley transforms are taken over the cross-action orbit of the
// root: upward lands on the '+' pair, downward yields both split signs.
std::vector<std::vector<SignedInvolution>> same_length_candidates(SimpleRoot alpha, SimpleRoot beta,
                                                                  const SignedInvolution& s) {
  std::vector<std::vector<SignedInvolution>> groups{{cross_action(alpha, s)}, {cross_action(beta, s)}};
  if (root_status(s, alpha) == RootStatus::NoncompactImaginary) {
    InvolutionBuilder b(s);
    b.set_pair(alpha.index, alpha.index + 1, Sign::Plus);
    groups.push_back({b.build()});
  }
  if (s.partner(beta.index) == beta.index + 1) {
    auto down = cayley_down(beta.index, s);
    groups.push_back({down, cross_action(beta, down)});
  }
  return groups;
}

}  // namespace

std::vector<SignedInvolution> wall_cross(SimpleRoot alpha, SimpleRoot beta, const SignedInvolution& s) {
  if (!nonorthogonal(alpha, beta))
    throw Error(ErrorKind::OutOfDomain, to_string(alpha) + " and " + to_string(beta) + " are orthogonal");
  if (!in_wall_cross_domain(alpha, beta, s))
    throw Error(ErrorKind::OutOfDomain, "domain condition fails for (" + to_string(alpha) + "," + to_string(beta) + ")");

  std::vector<SignedInvolution> out;
  if (alpha.is_long() || beta.is_long()) {
    out = tau_flipped(alpha, beta, mixed_candidates(s));
  } else {
    for (auto& group : same_length_candidates(alpha, beta, s)) {
      out = tau_flipped(alpha, beta, std::move(group));
      if (!out.empty()) break;
    }
  }
  if (out.empty())
    throw Error(ErrorKind::InternalInvariant,
                "no wall-crossing value for (" + to_string(alpha) + "," + to_string(beta) + ")");
  return out;
}

}  // namespace spq
