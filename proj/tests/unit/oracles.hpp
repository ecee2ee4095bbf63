#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond the value types.

#include <algorithm>
#include <map>
#include <vector>

#include "symcoh/exterior.hpp"

namespace oracle {

using symcoh::MultiIndex;
using symcoh::Rational;

/// Sign of the permutation that bubble-sorts seq, or 0 on a repeated entry.
inline int bubble_sign(std::vector<int> seq) {
  int sign = 1;
  for (std::size_t pass = 0; pass < seq.size(); ++pass) {
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      if (seq[i] == seq[i + 1]) return 0;
      if (seq[i] > seq[i + 1]) {
        std::swap(seq[i], seq[i + 1]);
        sign = -sign;
      }
    }
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (seq[i] == seq[i + 1]) return 0;
  }
  return sign;
}

/// Forms as maps from sorted position lists.
template <class S>
using ListForm = std::map<std::vector<int>, S>;

template <class S>
ListForm<S> to_list(const symcoh::GradedForm<S>& a) {
  ListForm<S> out;
  for (const auto& [idx, c] : a.terms()) out[idx.positions()] = c;
  return out;
}

template <class S>
symcoh::GradedForm<S> from_list(int generators, const ListForm<S>& a) {
  symcoh::GradedForm<S> out(generators);
  for (const auto& [seq, c] : a) {
    if (!c.is_zero()) out.add_term(MultiIndex::of(std::span<const int>(seq)), c);
  }
  return out;
}

/// Wedge by concatenation and bubble sort.
template <class S>
symcoh::GradedForm<S> wedge(const symcoh::GradedForm<S>& a, const symcoh::GradedForm<S>& b) {
  ListForm<S> out;
  for (const auto& [sa, ca] : to_list(a)) {
    for (const auto& [sb, cb] : to_list(b)) {
      std::vector<int> seq = sa;
      seq.insert(seq.end(), sb.begin(), sb.end());
      const int s = bubble_sign(seq);
      if (s == 0) continue;
      std::sort(seq.begin(), seq.end());
      const S v = s > 0 ? ca * cb : -(ca * cb);
      auto it = out.find(seq);
      if (it == out.end()) out.emplace(seq, v);
      else it->second = it->second + v;
    }
  }
  return from_list(a.generators(), out);
}

/// i_v by moving each slot to the front: sum_j (-1)^j v_{i_j} e_{I without i_j}.
template <class S>
symcoh::GradedForm<S> interior(const std::vector<S>& v, const symcoh::GradedForm<S>& a) {
  ListForm<S> out;
  for (const auto& [seq, c] : to_list(a)) {
    for (std::size_t j = 0; j < seq.size(); ++j) {
      std::vector<int> rest = seq;
      rest.erase(rest.begin() + static_cast<long>(j));
      S v_c = v[seq[j]] * c;
      if (j % 2 == 1) v_c = -v_c;
      auto it = out.find(rest);
      if (it == out.end()) out.emplace(rest, v_c);
      else it->second = it->second + v_c;
    }
  }
  return from_list(a.generators(), out);
}

}  // namespace oracle
