#pragma once

#include <compare>
#include <set>
#include <vector>

#include "spq/domino.hpp"
#include "spq/involution.hpp"
#include "spq/signed_tableau.hpp"

namespace spq {

struct TableauPair {
  DominoTableau t1;
  SignedClass t2_class;

  friend bool operator==(const TableauPair&, const TableauPair&) = default;
  friend auto operator<=>(const TableauPair& a, const TableauPair& b) {
    if (auto c = a.t1 <=> b.t1; c != 0) return c;
    return a.t2_class <=> b.t2_class;
  }
};

// Intermediate state of the H construction. rows[k] is the signed double row
// occupying rows 2k+1 and 2k+2 of t1; t1 always has doubled shape between steps.
struct HState {
  DominoTableau t1;
  std::vector<DoubleRow> rows;

  SignedTableau signed_tableau() const { return SignedTableau::from_rows(rows); }
};

// Adds a singleton (i, eps) scanning double rows from position `first_row` down.
HState insert_singleton(HState state, int i, Sign eps, std::size_t first_row = 0);
HState insert_pair(HState state, int i, int j, Sign eps);

TableauPair h_map(const SignedInvolution& sigma);
// The H state before class closure.
HState h_state(const SignedInvolution& sigma);

// Inverse of H, by lookup in a table of all parameters of the same rank.
SignedInvolution h_inverse(const TableauPair& pair);

std::set<SimpleRoot> tau_pair(const TableauPair& pair);

// T_{αβ} on tableau pairs. Results sorted, 1 or 2 entries.
std::vector<TableauPair> wall_cross_pair(SimpleRoot alpha, SimpleRoot beta, const TableauPair& pair);
// Label-interchange form for same-length pairs; empty when no interchange of
// the three labels involved yields a standard tableau with the target τ.
std::vector<TableauPair> wall_cross_pair_interchange(SimpleRoot alpha, SimpleRoot beta, const TableauPair& pair);

DominoTableau annihilator_of(const SignedInvolution& sigma);
OrbitDescriptor associated_variety_of(const SignedInvolution& sigma);

}  // namespace spq
