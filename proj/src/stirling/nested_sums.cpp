#include <set>

#include "qjfrac/stirling.hpp"

namespace qjfrac {

namespace {

void extend(int h, int m, int remaining, int next_min, std::vector<int>& cur,
            std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == m) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  const int left = m - static_cast<int>(cur.size());
  // The remaining indices need room: k, k+2, ..., k+2(left-1) <= h.
  for (int k = next_min; k + 2 * (left - 1) <= h; ++k) {
    if (k > remaining) break;
    cur.push_back(k);
    extend(h, m, remaining - k, k + 2, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> nested_index_tuples(int h, int m, int target) {
  std::vector<std::vector<int>> out;
  if (m < 0 || target < 0) return out;
  std::vector<int> cur;
  extend(h, m, target, 2, cur, out);
  return out;
}

ZFraction nested_sum(const JFractionSpec& spec, const NestedSumSpec& s) {
  const bool shifted = s.variant == NestedVariant::numerator_shifted;
  const int lo = shifted ? 2 : 1;
  const int hi = shifted ? s.h + 1 : s.h;
  std::vector<ZPoly> factor(hi + 1);
  for (int i = lo; i <= hi; ++i) factor[i] = ZPoly::one_minus(spec.c(i));

  ZFraction out;
  out.den = ZPoly(1);
  for (int i = lo; i <= hi; ++i) out.den = out.den * factor[i];

  const int target = shifted ? s.s - s.m : s.s;
  for (const auto& tuple : nested_index_tuples(s.h, s.m, target)) {
    QRatFn weight(1);
    std::set<int> used;
    for (int k : tuple) {
      weight *= spec.ab(shifted ? k + 1 : k);
      used.insert(shifted ? k : k - 1);
      used.insert(shifted ? k + 1 : k);
    }
    if (weight.is_zero()) continue;
    ZPoly rest(1);
    for (int i = lo; i <= hi; ++i) {
      if (!used.count(i)) rest = rest * factor[i];
    }
    out.num = out.num + rest.scaled(weight);
  }
  return out;
}

}  // namespace qjfrac
