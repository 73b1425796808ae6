#pragma once

#include "qjfrac/qratfn.hpp"
#include "qjfrac/series.hpp"

// Brute-force ground truth. Nothing here calls into the J-fraction, Stirling
// or divisor code.
namespace qjfrac::oracle {

/// Sum of d^alpha over the divisors d of n >= 1, by trial division.
Integer sigma_alpha(int alpha, long n);

/// (x; q)_n = (1 - x)(1 - xq)...(1 - xq^{n-1}).
QRatFn q_pochhammer(const QRatFn& x, int n);

/// sum_{n>=1} n^alpha q^n/(1 - q^n) truncated to the given order.
QSeries lambert_truncated(int alpha, std::size_t order);

/// Gaussian binomial (n choose k) in the variable `base` by the q-Pascal rule.
QPoly q_binomial(int n, int k, const QPoly& base = QPoly::q());

struct BinomialTheoremCheck {
  bool ok = false;
  QSeries sum_side;
  QSeries product_side;
};

/// Compares sum_n (a;q)_n/(q;q)_n z^n with prod_k (1 - a z q^k)/(1 - z q^k) as
/// q-series. z must vanish at q = 0 and a must be analytic there, otherwise
/// std::domain_error.
BinomialTheoremCheck q_binomial_theorem_check(const QRatFn& a, const QRatFn& z,
                                              std::size_t order);

}  // namespace qjfrac::oracle
