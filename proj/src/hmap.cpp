#include "spq/hmap.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace spq {

namespace {

DominoTableau with_domino(const DominoTableau& t, Domino d) {
  auto ds = t.dominoes();
  ds.push_back(d);
  return DominoTableau::from_dominoes(std::move(ds));
}

int plus_total(const std::vector<DoubleRow>& rows) {
  int total = 0;
  for (const auto& r : rows) total += 2 * r.count(Sign::Plus);
  return total;
}

// Vertical domino at the end of double row `pos`, extending its sign pattern.
void append_vertical(HState& st, std::size_t pos, int label) {
  auto& row = st.rows[pos];
  st.t1 = with_domino(st.t1, Domino::vertical(label, 2 * static_cast<int>(pos) + 1, row.length + 1));
  row.length += 1;
}

}  // namespace

HState insert_singleton(HState st, int i, Sign eps, std::size_t pos) {
  auto& rows = st.rows;
  while (pos < rows.size()) {
    const int len = rows[pos].length;
    std::size_t group_end = pos;
    while (group_end < rows.size() && rows[group_end].length == len) ++group_end;

    auto first = rows.begin() + static_cast<std::ptrdiff_t>(pos);
    auto last = rows.begin() + static_cast<std::ptrdiff_t>(group_end);
    if (auto it = std::find_if(first, last, [&](const DoubleRow& r) { return r.end() == -eps; }); it != last) {
      std::iter_swap(first, it);
      append_vertical(st, pos, i);
      return st;
    }
    if (len % 2 == 1) {
      pos = group_end;
      continue;
    }
    if (group_end - pos >= 2) {
      rows[pos] = rows[pos].flipped();
      rows[pos + 1] = rows[pos + 1].flipped();
      append_vertical(st, pos, i);
      return st;
    }

    // A lone even double row ending in eps: follow the open cycle through the
    // last square of its lower row.
    const Square last_square{2 * static_cast<int>(pos) + 2, len};
    auto all = cycles(st.t1);
    const Cycle& c = cycle_of(all, *st.t1.label_at(last_square));
    if (!c.is_open() || *c.hole != last_square)
      throw Error(ErrorKind::InternalInvariant, "expected an open cycle with hole at the end of a lower row");
    const std::size_t corner_pos = static_cast<std::size_t>((c.corner->row - 1) / 2);
    if (corner_pos >= rows.size()) {
      rows[pos] = rows[pos].flipped();
      append_vertical(st, pos, i);
      return st;
    }
    if (corner_pos != pos) {
      if (rows[corner_pos].length % 2 != 0)
        throw Error(ErrorKind::InternalInvariant, "open cycle links an odd double row");
      rows[pos] = rows[pos].flipped();
      rows[corner_pos] = rows[corner_pos].flipped();
      append_vertical(st, pos, i);
      return st;
    }
    st.t1 = with_domino(move_through(st.t1, c), Domino::horizontal(i, last_square.row, len));
    rows[pos] = DoubleRow{len + 1, eps};
    return st;
  }
  rows.push_back(DoubleRow{1, eps});
  st.t1 = with_domino(st.t1, Domino::vertical(i, 2 * static_cast<int>(pos) + 1, 1));
  return st;
}

HState insert_pair(HState st, int i, int j, Sign eps) {
  auto& rows = st.rows;
  const int plus_before = plus_total(rows);
  auto ins = garfinkle_insert(st.t1, i, eps == Sign::Plus ? InsertPosition::HorizontalRow1 : InsertPosition::VerticalCol1);
  st.t1 = std::move(ins.tableau);
  const Square a = ins.added[0];
  const Square b = ins.added[1];
  const std::size_t pos = static_cast<std::size_t>((a.row - 1) / 2);
  const bool fresh = pos >= rows.size();
  const int len = fresh ? 0 : rows[pos].length;

  if (a.row == b.row) {
    if (a.row % 2 == 0) throw Error(ErrorKind::InternalInvariant, "horizontal growth in a lower row");
    if (len % 2 == 0) {
      st.t1 = with_domino(st.t1, Domino::horizontal(j, a.row + 1, a.col));
      if (fresh)
        rows.push_back(DoubleRow{2, Sign::Minus});
      else
        rows[pos] = DoubleRow{len + 2, -rows[pos].start};
      return st;
    }
    // Odd length: the shape is one open cycle away from being doubled.
    const Square hole{a.row, len + 2};
    const Square corner{a.row + 1, len + 1};
    auto all = cycles_any_shape(st.t1);
    auto it = std::find_if(all.begin(), all.end(), [&](const Cycle& c) {
      return c.is_open() && !c.contains_smallest && c.hole == hole && c.corner == corner;
    });
    if (it == all.end()) throw Error(ErrorKind::InternalInvariant, "no open cycle restores the doubled shape");
    st.t1 = move_through(st.t1, *it);
    rows[pos] = DoubleRow{len + 1, rows[pos].start};
  } else if (fresh) {
    rows.push_back(DoubleRow{1, Sign::Plus});
  } else {
    const Sign end = rows[pos].end();
    rows[pos] = DoubleRow{len + 1, (len + 1) % 2 == 1 ? end : -end};
  }
  const Sign sign_j = plus_total(rows) - plus_before == 2 ? Sign::Minus : Sign::Plus;
  return insert_singleton(std::move(st), j, sign_j, pos + 1);
}

HState h_state(const SignedInvolution& sigma) {
  HState st;
  for (const auto& e : sigma.elements()) {
    if (const auto* s = std::get_if<Singleton>(&e))
      st = insert_singleton(std::move(st), s->index, s->sign);
    else {
      const auto& p = std::get<Pair>(e);
      st = insert_pair(std::move(st), p.lo, p.hi, p.sign);
    }
  }
  return st;
}

TableauPair h_map(const SignedInvolution& sigma) {
  auto st = h_state(sigma);
  auto cls = class_of(st.signed_tableau(), st.t1);
  return TableauPair{std::move(st.t1), std::move(cls)};
}

SignedInvolution h_inverse(const TableauPair& pair) {
  static std::mutex guard;
  static std::map<int, std::map<TableauPair, SignedInvolution>> tables;
  const int n = pair.t1.size();
  std::lock_guard lock(guard);
  auto& table = tables[n];
  if (table.empty())
    for_each_involution(n, std::nullopt, [&](const SignedInvolution& s) { table.emplace(h_map(s), s); });
  auto it = table.find(pair);
  if (it == table.end()) throw Error(ErrorKind::VerificationFailure, "tableau pair is not in the image of H");
  return it->second;
}

std::set<SimpleRoot> tau_pair(const TableauPair& pair) { return tau_tableau(pair.t1); }

namespace {

struct Configuration {
  Domino one;
  Domino two;
};

const Configuration kF1{Domino::vertical(1, 1, 1), Domino::vertical(2, 1, 2)};
const Configuration kF2{Domino::horizontal(1, 1, 1), Domino::horizontal(2, 2, 1)};
const Configuration kF1Tilde{Domino::vertical(1, 1, 1), Domino::horizontal(2, 1, 2)};
const Configuration kF2Tilde{Domino::horizontal(1, 1, 1), Domino::vertical(2, 2, 1)};

bool holds(const DominoTableau& t, const Configuration& f) {
  const auto* one = t.find(1);
  const auto* two = t.find(2);
  return one && two && *one == f.one && *two == f.two;
}

DominoTableau replace(const DominoTableau& t, const Configuration& f) {
  auto ds = t.dominoes();
  for (auto& d : ds) {
    if (d.label == 1) d = f.one;
    if (d.label == 2) d = f.two;
  }
  return DominoTableau::from_dominoes(std::move(ds));
}

// Pairs (X, C) where C is a class relative to X meeting the given class.
std::vector<TableauPair> attach_classes(const std::vector<DominoTableau>& tableaux, const SignedClass& cls) {
  std::set<TableauPair> out;
  for (const auto& x : tableaux)
    for (const auto& m : cls.members()) out.insert(TableauPair{x, class_of(m, x)});
  return {out.begin(), out.end()};
}

void require_domain(SimpleRoot alpha, SimpleRoot beta, const TableauPair& pair) {
  if (!nonorthogonal(alpha, beta)) throw Error(ErrorKind::OutOfDomain, "roots are orthogonal");
  auto t = tau_pair(pair);
  if (t.contains(alpha) || !t.contains(beta))
    throw Error(ErrorKind::OutOfDomain, "pair is not in the domain of " + to_string(alpha) + "," + to_string(beta));
}

std::vector<TableauPair> mixed(SimpleRoot alpha, const TableauPair& pair) {
  const bool long_first = alpha.is_long();
  const Configuration& from = long_first ? kF2 : kF1;
  const Configuration& from_tilde = long_first ? kF2Tilde : kF1Tilde;
  const Configuration& to = long_first ? kF1 : kF2;
  const auto& t = pair.t1;

  if (holds(t, from)) {
    auto t_new = replace(t, to);
    auto all = cycles(t_new);
    const Cycle& c = cycle_of(all, 2);
    if (c.kind == CycleKind::Closed) return attach_classes({move_through(t_new, c), t_new}, pair.t2_class);
    return attach_classes({t_new}, pair.t2_class);
  }
  if (holds(t, from_tilde)) {
    auto all = cycles(t);
    const Cycle& c = cycle_of(all, 2);
    if (c.kind != CycleKind::Closed) throw Error(ErrorKind::InternalInvariant, "2-domino not in a closed cycle");
    auto moved = move_through(t, c);
    if (!holds(moved, from)) throw Error(ErrorKind::InternalInvariant, "moving the closed cycle did not expose F");
    return attach_classes({replace(moved, to)}, pair.t2_class);
  }
  throw Error(ErrorKind::InternalInvariant, "domain tableau has neither configuration");
}

DominoTableau swap_labels(const DominoTableau& t, int a, int b) {
  auto ds = t.dominoes();
  for (auto& d : ds) {
    if (d.label == a)
      d.label = b;
    else if (d.label == b)
      d.label = a;
  }
  return DominoTableau::from_dominoes(std::move(ds));
}

}  // namespace

std::vector<TableauPair> wall_cross_pair_interchange(SimpleRoot alpha, SimpleRoot beta, const TableauPair& pair) {
  require_domain(alpha, beta, pair);
  if (alpha.is_long() || beta.is_long()) return {};
  const int i = std::min(alpha.index, beta.index);
  std::vector<DominoTableau> found;
  for (auto [a, b] : {std::pair{i, i + 1}, std::pair{i + 1, i + 2}}) {
    DominoTableau candidate;
    try {
      candidate = swap_labels(pair.t1, a, b);
    } catch (const Error&) {
      continue;
    }
    auto t = tau_tableau(candidate);
    if (t.contains(alpha) && !t.contains(beta)) found.push_back(std::move(candidate));
  }
  if (found.empty()) return {};
  return attach_classes(found, pair.t2_class);
}

std::vector<TableauPair> wall_cross_pair(SimpleRoot alpha, SimpleRoot beta, const TableauPair& pair) {
  require_domain(alpha, beta, pair);
  if (alpha.is_long() || beta.is_long()) return mixed(alpha, pair);
  if (auto direct = wall_cross_pair_interchange(alpha, beta, pair); !direct.empty()) return direct;
  std::vector<DominoTableau> images;
  for (const auto& s : wall_cross(alpha, beta, h_inverse(pair))) images.push_back(h_map(s).t1);
  return attach_classes(images, pair.t2_class);
}

DominoTableau annihilator_of(const SignedInvolution& sigma) { return h_state(sigma).t1; }

OrbitDescriptor associated_variety_of(const SignedInvolution& sigma) {
  return normalize(h_state(sigma).signed_tableau());
}

}  // namespace spq
