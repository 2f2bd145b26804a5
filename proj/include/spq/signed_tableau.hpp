#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "spq/domino.hpp"
#include "spq/involution.hpp"

namespace spq {

/// Two identical rows of alternating signs, both starting with `start`.
struct DoubleRow {
  int length = 0;
  Sign start = Sign::Plus;

  Sign end() const { return length % 2 == 1 ? start : -start; }
  /// Squares of sign s in one of the two rows.
  int count(Sign s) const { return s == start ? (length + 1) / 2 : length / 2; }
  DoubleRow flipped() const { return {length, -start}; }

  friend bool operator==(const DoubleRow&, const DoubleRow&) = default;
  /// Longer rows first; among equal lengths '+' before '-'.
  friend std::strong_ordering operator<=>(const DoubleRow& a, const DoubleRow& b) {
    if (a.length != b.length) return b.length <=> a.length;
    return static_cast<int>(b.start) <=> static_cast<int>(a.start);
  }
};

/// A signed tableau with double-row structure, stored as a sorted multiset of
/// double rows (double rows of equal length are interchangeable).
class SignedTableau {
 public:
  SignedTableau() = default;
  static SignedTableau from_rows(std::vector<DoubleRow> rows);

  const std::vector<DoubleRow>& rows() const { return rows_; }
  int plus_count() const;
  int minus_count() const;
  /// Double-row lengths, weakly decreasing.
  std::vector<int> lengths() const;
  /// The row shape (each double row contributes two rows).
  Shape shape() const;

  friend bool operator==(const SignedTableau&, const SignedTableau&) = default;
  friend auto operator<=>(const SignedTableau& a, const SignedTableau& b) { return a.rows_ <=> b.rows_; }

 private:
  std::vector<DoubleRow> rows_;
};

/// An equivalence class relative to a fixed domino tableau; members sorted,
/// the first one is the canonical representative.
class SignedClass {
 public:
  SignedClass() = default;
  explicit SignedClass(std::vector<SignedTableau> members);

  const std::vector<SignedTableau>& members() const { return members_; }
  const SignedTableau& representative() const { return members_.front(); }
  std::size_t size() const { return members_.size(); }
  bool contains(const SignedTableau& t) const;

  friend bool operator==(const SignedClass&, const SignedClass&) = default;
  friend auto operator<=>(const SignedClass& a, const SignedClass& b) { return a.members_ <=> b.members_; }

 private:
  std::vector<SignedTableau> members_;
};

/// Rows of a signed tableau whose even rows all begin with '+'.
struct OrbitDescriptor {
  std::vector<std::pair<int, Sign>> rows;  // sorted: length descending, '+' first

  std::string to_string() const;
  friend bool operator==(const OrbitDescriptor&, const OrbitDescriptor&) = default;
  friend auto operator<=>(const OrbitDescriptor&, const OrbitDescriptor&) = default;
};

/// A generator of the equivalence: flip the start sign of one double row of
/// each of the two lengths (a length of 0 stands for the always-available
/// empty double row, whose flip is a no-op).
struct SignFlip {
  int first_length;
  int second_length;
  friend auto operator<=>(const SignFlip&, const SignFlip&) = default;
};

/// Generators induced by a domino tableau of doubled shape: pairs of equal
/// even-length double rows, and the even-length double rows joined by the
/// hole and corner of an open cycle.
std::vector<SignFlip> equivalence_generators(const DominoTableau& t1);

bool equivalent(const SignedTableau& a, const SignedTableau& b, const DominoTableau& t1);
SignedClass class_of(const SignedTableau& t, const DominoTableau& t1);
/// Every class of the given '+' count on the shape of t1.
std::vector<SignedClass> classes_of_signature(const DominoTableau& t1, int plus_count);

OrbitDescriptor normalize(const SignedTableau& t);
// The same tableau with every even double row starting '+'.
SignedTableau normalized(const SignedTableau& t);

}  // namespace spq
