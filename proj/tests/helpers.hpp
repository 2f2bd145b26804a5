#pragma once

#include <set>
#include <vector>

#include "spq/io.hpp"

inline spq::SignedInvolution S(const char* text) { return spq::parse_sigma(text); }

inline spq::SimpleRoot long_root() { return spq::SimpleRoot::long_root(); }
inline spq::SimpleRoot short_root(int i) { return spq::SimpleRoot::short_root(i); }

template <typename T>
std::set<T> as_set(const std::vector<T>& v) {
  return {v.begin(), v.end()};
}
