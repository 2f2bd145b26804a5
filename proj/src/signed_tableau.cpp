#include "spq/signed_tableau.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace spq {

SignedTableau SignedTableau::from_rows(std::vector<DoubleRow> rows) {
  for (const auto& r : rows)
    if (r.length <= 0) throw Error(ErrorKind::ShapeViolation, "double rows must have positive length");
  std::sort(rows.begin(), rows.end());
  SignedTableau t;
  t.rows_ = std::move(rows);
  return t;
}

int SignedTableau::plus_count() const {
  int total = 0;
  for (const auto& r : rows_) total += 2 * r.count(Sign::Plus);
  return total;
}

int SignedTableau::minus_count() const {
  int total = 0;
  for (const auto& r : rows_) total += 2 * r.count(Sign::Minus);
  return total;
}

std::vector<int> SignedTableau::lengths() const {
  std::vector<int> out;
  for (const auto& r : rows_) out.push_back(r.length);
  return out;
}

Shape SignedTableau::shape() const {
  Shape s;
  for (const auto& r : rows_) {
    s.parts.push_back(r.length);
    s.parts.push_back(r.length);
  }
  return s;
}

SignedClass::SignedClass(std::vector<SignedTableau> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SignedClass::contains(const SignedTableau& t) const {
  return std::binary_search(members_.begin(), members_.end(), t);
}

std::string OrbitDescriptor::to_string() const {
  std::string out;
  for (const auto& [len, s] : rows) {
    out += std::to_string(len);
    out += sign_char(s);
  }
  return out;
}

namespace {

std::vector<int> double_row_lengths(const Shape& s) {
  std::vector<int> out;
  for (int k = 0; k + 1 < s.rows(); k += 2) out.push_back(s.parts[k]);
  return out;
}

void require_same_shape(const SignedTableau& t, const DominoTableau& t1) {
  auto shape = t1.shape();
  if (!shape.is_doubled()) throw Error(ErrorKind::ShapeViolation, "domino tableau shape is not doubled");
  if (double_row_lengths(shape) != t.lengths())
    throw Error(ErrorKind::ShapeMismatch, "signed tableau and domino tableau have different shapes");
}

std::vector<SignedTableau> neighbours(const SignedTableau& t, const std::vector<SignFlip>& gens) {
  std::vector<SignedTableau> out;
  const auto& rows = t.rows();
  for (const auto& g : gens) {
    for (std::size_t a = 0; a < rows.size(); ++a) {
      if (rows[a].length != g.first_length) continue;
      if (g.second_length == 0) {
        auto copy = rows;
        copy[a] = copy[a].flipped();
        out.push_back(SignedTableau::from_rows(std::move(copy)));
        continue;
      }
      for (std::size_t b = 0; b < rows.size(); ++b) {
        if (b == a || rows[b].length != g.second_length) continue;
        auto copy = rows;
        copy[a] = copy[a].flipped();
        copy[b] = copy[b].flipped();
        out.push_back(SignedTableau::from_rows(std::move(copy)));
      }
    }
  }
  return out;
}

SignedClass closure(const SignedTableau& start, const std::vector<SignFlip>& gens) {
  std::set<SignedTableau> seen{start};
  std::deque<SignedTableau> queue{start};
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    for (auto& nb : neighbours(cur, gens))
      if (seen.insert(nb).second) queue.push_back(std::move(nb));
  }
  return SignedClass(std::vector<SignedTableau>(seen.begin(), seen.end()));
}

}  // namespace

std::vector<SignFlip> equivalence_generators(const DominoTableau& t1) {
  auto shape = t1.shape();
  if (!shape.is_doubled()) throw Error(ErrorKind::ShapeViolation, "domino tableau shape is not doubled");
  std::set<SignFlip> gens;
  auto lengths = double_row_lengths(shape);
  for (std::size_t k = 0; k + 1 < lengths.size(); ++k)
    if (lengths[k] == lengths[k + 1] && lengths[k] % 2 == 0) gens.insert({lengths[k], lengths[k]});

  auto length_of_row = [&](int row) { return shape.row_length(row); };
  for (const auto& c : cycles(t1)) {
    if (!c.is_open() || c.contains_smallest) continue;
    int hole_len = length_of_row(c.hole->row);
    int corner_len = length_of_row(c.corner->row);
    int hole_dr = (c.hole->row + 1) / 2;
    int corner_dr = (c.corner->row + 1) / 2;
    if (hole_dr == corner_dr) continue;
    if (hole_len % 2 != 0 || corner_len % 2 != 0) continue;
    if (hole_len == corner_len) {
      gens.insert({hole_len, hole_len});
    } else if (hole_len == 0 || corner_len == 0) {
      gens.insert({std::max(hole_len, corner_len), 0});
    } else {
      gens.insert({hole_len, corner_len});
    }
  }
  return {gens.begin(), gens.end()};
}

bool equivalent(const SignedTableau& a, const SignedTableau& b, const DominoTableau& t1) {
  require_same_shape(a, t1);
  require_same_shape(b, t1);
  return closure(a, equivalence_generators(t1)).contains(b);
}

SignedClass class_of(const SignedTableau& t, const DominoTableau& t1) {
  require_same_shape(t, t1);
  return closure(t, equivalence_generators(t1));
}

std::vector<SignedClass> classes_of_signature(const DominoTableau& t1, int plus_count) {
  auto lengths = double_row_lengths(t1.shape());
  auto gens = equivalence_generators(t1);
  std::set<SignedTableau> all;
  const std::size_t m = lengths.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<DoubleRow> rows;
    for (std::size_t k = 0; k < m; ++k) rows.push_back({lengths[k], (mask >> k) & 1 ? Sign::Minus : Sign::Plus});
    auto t = SignedTableau::from_rows(std::move(rows));
    if (t.plus_count() == plus_count) all.insert(t);
  }
  std::vector<SignedClass> out;
  std::set<SignedTableau> assigned;
  for (const auto& t : all) {
    if (assigned.contains(t)) continue;
    auto cls = closure(t, gens);
    for (const auto& m2 : cls.members()) assigned.insert(m2);
    out.push_back(std::move(cls));
  }
  return out;
}

SignedTableau normalized(const SignedTableau& t) {
  auto rows = t.rows();
  for (auto& r : rows)
    if (r.length % 2 == 0) r.start = Sign::Plus;
  return SignedTableau::from_rows(std::move(rows));
}

OrbitDescriptor normalize(const SignedTableau& t) {
  OrbitDescriptor d;
  for (const auto& r : t.rows()) {
    Sign s = r.length % 2 == 0 ? Sign::Plus : r.start;
    d.rows.emplace_back(r.length, s);
    d.rows.emplace_back(r.length, s);
  }
  std::sort(d.rows.begin(), d.rows.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second == Sign::Plus && b.second == Sign::Minus;
  });
  return d;
}

}  // namespace spq
