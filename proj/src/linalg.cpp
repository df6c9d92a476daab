#include "operad/linalg.hpp"

#include <cstdlib>

namespace operad {

long resource_cap() {
  static long cap = [] {
    if (const char* s = std::getenv("OPERAD_MAX_MATRIX_ENTRIES")) {
      long v = std::atol(s);
      if (v > 0) return v;
    }
    return 80L * 1000 * 1000;
  }();
  return cap;
}

sparse_vec sparse_axpy(const sparse_vec& x, const rational& c, const sparse_vec& y) {
  sparse_vec out;
  out.reserve(x.size() + y.size());
  size_t a = 0, b = 0;
  while (a < x.size() || b < y.size()) {
    if (b == y.size() || (a < x.size() && x[a].first < y[b].first)) {
      out.push_back(x[a++]);
    } else if (a == x.size() || y[b].first < x[a].first) {
      rational v = c * y[b].second;
      if (v != 0) out.emplace_back(y[b].first, std::move(v));
      ++b;
    } else {
      rational v = x[a].second + c * y[b].second;
      if (v != 0) out.emplace_back(x[a].first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

sparse_vec echelon::reduce(sparse_vec v) const {
  size_t at = 0;
  while (at < v.size()) {
    auto it = rows_.find(v[at].first);
    if (it == rows_.end()) {
      ++at;
      continue;
    }
    rational c = -v[at].second;
    v = sparse_axpy(v, c, it->second);
    // entries before `at` were untouched; the entry at v[at] vanished
  }
  return v;
}

bool echelon::add(sparse_vec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  rational lead = v.front().second;
  if (lead != 1)
    for (auto& [i, c] : v) c /= lead;
  entries_ += static_cast<long>(v.size());
  if (entries_ > cap_) throw resource_error("echelon row storage");
  int piv = v.front().first;
  rows_.emplace(piv, std::move(v));
  return true;
}

void echelon::normalize() {
  // process pivots from the largest down; rows reduced against later pivots
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    sparse_vec& row = it->second;
    sparse_vec tail(row.begin() + 1, row.end());
    sparse_vec red = reduce(std::move(tail));
    red.insert(red.begin(), row.front());
    row = std::move(red);
  }
}

void column_solver::add_column(int index, const sparse_vec& col) {
  sparse_vec v = col;
  sparse_vec combo = {{index, rational(1)}};
  size_t at = 0;
  while (at < v.size()) {
    auto it = rows_.find(v[at].first);
    if (it == rows_.end()) {
      ++at;
      continue;
    }
    rational c = -v[at].second;
    v = sparse_axpy(v, c, it->second.row);
    combo = sparse_axpy(combo, c, it->second.combo);
  }
  if (v.empty()) {
    kernel_.push_back(std::move(combo));
    return;
  }
  rational lead = v.front().second;
  if (lead != 1) {
    for (auto& [i, c] : v) c /= lead;
    for (auto& [i, c] : combo) c /= lead;
  }
  entries_ += static_cast<long>(v.size() + combo.size());
  if (entries_ > cap_) throw resource_error("column solver storage");
  int piv = v.front().first;
  rows_.emplace(piv, prow{std::move(v), std::move(combo)});
}

bool column_solver::solve(const sparse_vec& b, sparse_vec& solution) const {
  sparse_vec v = b;
  sparse_vec combo;
  size_t at = 0;
  while (at < v.size()) {
    auto it = rows_.find(v[at].first);
    if (it == rows_.end()) {
      ++at;
      continue;
    }
    rational c = -v[at].second;
    v = sparse_axpy(v, c, it->second.row);
    combo = sparse_axpy(combo, c, it->second.combo);
  }
  if (!v.empty()) return false;
  for (auto& [i, c] : combo) c = -c;
  solution = std::move(combo);
  return true;
}

}  // namespace operad
