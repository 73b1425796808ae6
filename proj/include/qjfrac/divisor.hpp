#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qjfrac/jfraction.hpp"
#include "qjfrac/stirling.hpp"

namespace qjfrac {

/// Stirling numbers of the second kind S(n, k), 0 <= k <= n <= n_max.
class Stirling2Table {
 public:
  explicit Stirling2Table(int n_max);
  Integer operator()(int n, int k) const;
  int n_max() const { return static_cast<int>(rows_.size()) - 1; }

 private:
  std::vector<std::vector<Integer>> rows_;
};

/// A / Q^power, a rational function of z kept with a single repeated
/// denominator so that derivatives stay exact without gcds.
struct PowerFraction {
  ZPoly num;
  ZPoly base{1};
  int power = 1;

  PowerFraction derivative() const;
  QRatFn eval(const QRatFn& z) const;
};

/// sum_{j=0}^{m} S(m, j) z^j F^{(j)}(z), which maps sum f_n z^n to sum n^m f_n z^n.
PowerFraction power_weight_transform(const PowerFraction& f, int m);

/// d/dz (num/den) = (num' den - num den')/den^2.
ZFraction quotient_derivative(const ZPoly& num, const ZPoly& den);

struct DivisorRequest {
  int alpha = 0;
  int h = 2;
  std::size_t order = 8;
  std::optional<long> modulus;
};

/// 1 <= n < h is covered by the coefficient theorem; h <= n < 2h is where
/// agreement is observed but not proved.
enum class Window { certified, empirical, unverified };
Window window_of(int n, int h);
std::string to_string(Window w);

/// With H(z) = z Conv_h(q, z) for (a, b) = (q, q^2):
///   sum_j S(alpha, j) z^j H^{(j)}(z) at z = q, divided by (1 - q).
/// Coefficient n of its expansion is sigma_alpha(n) in the certified window;
/// the constant term is 0.
QRatFn rational_approximant(int alpha, int h);

/// Taylor expansion of rational_approximant (alpha = 0: the divisor function).
QSeries sigma_gf(const DivisorRequest& req);
QSeries divisor_gf(const DivisorRequest& req);
/// sigma_gf/(1 - q): partial sums sum_{n <= x} sigma_alpha(n).
QSeries partial_sums(const DivisorRequest& req);

struct TableRow {
  int n = 0;
  Rational value;
  Window window = Window::certified;
  /// value mod p when a modulus was requested and value is p-integral.
  std::optional<long> residue;
  /// Set when a modulus was requested and the value is not p-integral.
  bool non_integral = false;
};

/// Rows n = 1 .. order-1 of sigma_gf (or of partial_sums when `cumulative`).
std::vector<TableRow> divisor_table(const DivisorRequest& req, bool cumulative = false);
/// Same rows restricted to the certified and empirical windows, reduced mod p.
std::vector<TableRow> congruence_table(const DivisorRequest& req);

/// r mod p for a p-integral rational; nullopt otherwise.
std::optional<long> reduce_mod(const Rational& r, long p);

nlohmann::json to_json(const TableRow& row);

/// Denominator block of the j-th term of the divisor generating function, two
/// ways: the displayed quadruple-sum expansion, and Q_j Q_{j+1} computed from
/// the coefficient lemma for each factor; both compared against the
/// recurrence product.
struct TildeDReport {
  int j = 0;
  ZPoly literal;
  ZPoly via_lemma;
  ZPoly recurrence_product;
  bool literal_matches = false;
  bool lemma_matches = false;
  /// literal / recurrence_product when their ratio is a constant in Q(q).
  std::optional<QRatFn> literal_ratio;
};

/// Displayed expansion with the (q, q^2) triangle and nested sums.
ZPoly tilde_D0j_literal(const JFractionSpec& spec, int j);
TildeDReport tilde_D0j(const JFractionSpec& spec, int j);
nlohmann::json to_json(const TildeDReport& r);

/// z^k D^k [z^N / G] for k = 1, 2 in closed form; k = 0 gives z^N/G.
ZFraction scaled_derivative_of_power_quotient(int N, const ZPoly& G, int k);

struct SpecialCaseReport {
  int alpha = 0;
  int h = 0;
  /// sigma_gf minus the normalized sum (weights lambda_{j+1}, blocks
  /// z^{2j+1}/(Q_j Q_{j+1}), correct quotient rules); zero in the window.
  QSeries residual_normalized;
  /// sigma_gf minus the sum with the displayed weights, first term and
  /// bracket, with Q_j Q_{j+1} as the denominator block.
  QSeries residual_literal;
  bool normalized_zero = false;
  bool literal_zero = false;
};

/// alpha in {1, 2}; terms j < h; compared through q^{h-1}.
SpecialCaseReport sigma_special_case_check(int alpha, int h);
nlohmann::json to_json(const SpecialCaseReport& r);

}  // namespace qjfrac
