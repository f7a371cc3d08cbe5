#pragma once

// Brute-force oracles over small finite modules, shared by the unit tests and
// the acceptance binary.

#include <algorithm>
#include <functional>
#include <vector>

#include "qlab/finite_module.hpp"

namespace qlab::oracles {

inline std::vector<FiniteModule> sample_modules() {
  std::vector<FiniteModule> out;
  out.push_back(FiniteModule::self(lukasiewicz_chain(3)));
  out.push_back(FiniteModule::self(lukasiewicz_chain(4)));
  out.push_back(FiniteModule::free(lukasiewicz_chain(2), 2));
  out.push_back(FiniteModule::self(powerset_quantale(FiniteMonoid::cyclic_group(2))));
  out.push_back(FiniteModule::free(lukasiewicz_chain(3), 2));
  out.push_back(FiniteModule::self(tnorm_chain(TNormKind::godel(), 4)));
  return out;
}

// join{n | q*n <= m} by scanning the carrier
inline Elem under_oracle(const FiniteModule& M, Elem q, Elem m) {
  Elem acc = M.bottom();
  for (Elem n = 0; n < M.size(); ++n)
    if (M.leq(M.act(q, n), m)) acc = M.join(acc, n);
  return acc;
}

// join{q | q*n <= m} in Q
inline Elem over_oracle(const FiniteModule& M, Elem m, Elem n) {
  const auto& Q = M.quantale();
  Elem acc = Q.bottom();
  for (Elem q = 0; q < Q.size(); ++q)
    if (M.leq(M.act(q, n), m)) acc = Q.join(acc, q);
  return acc;
}

// Least submodule containing S: all joins of q_x * x over assignments.
inline std::vector<Elem> generated_oracle(const FiniteModule& M, const std::vector<Elem>& s) {
  const int qn = M.quantale().size();
  std::vector<char> hit(M.size(), 0);
  std::vector<int> pick(s.size(), 0);
  for (;;) {
    Elem acc = M.bottom();
    for (std::size_t i = 0; i < s.size(); ++i) acc = M.join(acc, M.act(pick[i], s[i]));
    hit[acc] = 1;
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == qn) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  std::vector<Elem> out;
  for (Elem x = 0; x < M.size(); ++x)
    if (hit[x]) out.push_back(x);
  return out;
}

inline bool compatible(const FiniteModule& M, const std::vector<int>& label) {
  for (Elem x = 0; x < M.size(); ++x)
    for (Elem y = 0; y < M.size(); ++y) {
      if (label[x] != label[y]) continue;
      for (Elem z = 0; z < M.size(); ++z)
        if (label[M.join(x, z)] != label[M.join(y, z)]) return false;
      for (Elem q = 0; q < M.quantale().size(); ++q)
        if (label[M.act(q, x)] != label[M.act(q, y)]) return false;
    }
  return true;
}

// Every congruence as a label vector, by restricted growth strings.
inline std::vector<std::vector<int>> congruences_oracle(const FiniteModule& M) {
  std::vector<std::vector<int>> out;
  std::vector<int> label(M.size(), 0);
  std::function<void(int, int)> rec = [&](int i, int classes) {
    if (i == M.size()) {
      if (compatible(M, label)) out.push_back(label);
      return;
    }
    for (int c = 0; c <= classes; ++c) {
      label[i] = c;
      rec(i + 1, std::max(classes, c + 1));
    }
  };
  rec(0, 0);
  return out;
}

inline bool is_nucleus_oracle(const FiniteModule& M, const std::vector<Elem>& g) {
  for (Elem x = 0; x < M.size(); ++x) {
    if (!M.leq(x, g[x]) || g[g[x]] != g[x]) return false;
    for (Elem y = 0; y < M.size(); ++y)
      if (M.leq(x, y) && !M.leq(g[x], g[y])) return false;
    for (Elem q = 0; q < M.quantale().size(); ++q)
      if (!M.leq(M.act(q, g[x]), g[M.act(q, x)])) return false;
  }
  return true;
}

// All maps M -> M passing the nucleus oracle (carrier small).
inline std::vector<std::vector<Elem>> nuclei_oracle(const FiniteModule& M) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> g(M.size(), 0);
  for (;;) {
    if (is_nucleus_oracle(M, g)) out.push_back(g);
    int i = 0;
    while (i < M.size() && ++g[i] == M.size()) g[i++] = 0;
    if (i == M.size()) break;
  }
  return out;
}

}  // namespace qlab::oracles
