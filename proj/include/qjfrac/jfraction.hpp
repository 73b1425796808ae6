#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qjfrac/qratfn.hpp"
#include "qjfrac/series.hpp"
#include "qjfrac/zpoly.hpp"

namespace qjfrac {

/// The two sequences of a J-fraction 1/(1 - c_1 z - ab_2 z^2/(1 - c_2 z - ...)).
/// c is queried for i >= 1 and ab for i >= 2.
struct JFractionSpec {
  std::string name;
  std::function<QRatFn(int)> c;
  std::function<QRatFn(int)> ab;

  /// c_i -> c_{i+1}, ab_i -> ab_{i+1}.
  JFractionSpec shifted(int by = 1) const;
  /// Same sequences with values cached; the cache is shared between copies and
  /// guarded by a mutex.
  JFractionSpec memoized() const;

  /// Finite table: c = {c_1, c_2, ...}, ab = {ab_2, ab_3, ...}. Queries past
  /// the end throw std::out_of_range.
  static JFractionSpec tabulated(std::string name, std::vector<QRatFn> c, std::vector<QRatFn> ab);
};

/// {"name":..., "c":[...], "ab":[...]} with c_1..c_h and ab_2..ab_h.
nlohmann::json spec_to_json(const JFractionSpec& spec, int h);
JFractionSpec spec_from_json(const nlohmann::json& j);

/// lambda_h = ab_2 ... ab_h, lambda_1 = 1.
QRatFn lambda(const JFractionSpec& spec, int h);

struct PochhammerParams {
  QRatFn a;
  QRatFn b;
};

/// Which closed form to use for c_i, i >= 3. `as_printed` keeps the b-term
/// without its q^{i-2} factor; since c_i first enters [z^n] at n = 2i - 1, the
/// printed sequences generate (a;q)_n/(b;q)_n only for n <= 4.
enum class CForm { corrected, as_printed };

/// Sequences generating (a;q)_n/(b;q)_n. Throws std::invalid_argument for
/// a = 0, b = 0 or b = 1.
JFractionSpec pochhammer_spec(const PochhammerParams& p, CForm form = CForm::corrected);

/// Closed form for lambda_h as displayed for the Pochhammer family (including
/// its leading factor a and the q^{(h-1)^2} power).
QRatFn lambda_closed_form(const PochhammerParams& p, int h);

/// Conv_h = P/Q.
struct ConvergentPair {
  int h = 0;
  ZPoly P;
  ZPoly Q{1};
};

ConvergentPair convergents(const JFractionSpec& spec, int h);
/// Pairs for depth 0..h_max.
std::vector<ConvergentPair> convergent_sequence(const JFractionSpec& spec, int h_max);

/// [z^n] P/Q for 0 <= n < order via the order-h linear recurrence.
ZSeries convergent_coefficients(const ConvergentPair& pair, std::size_t order);
/// Same coefficients by full series division; used for cross-checking.
ZSeries convergent_coefficients_by_division(const ConvergentPair& pair, std::size_t order);

struct DecompositionTerm {
  int i;
  QRatFn lambda;
  ZPoly Q_prev;  // Q_{i-1}
  ZPoly Q_cur;   // Q_i
};

struct Decomposition {
  std::vector<DecompositionTerm> terms;
  bool telescoping_ok = true;
  bool sum_ok = true;
  /// First i at which P_i Q_{i-1} - P_{i-1} Q_i != lambda_i z^{2i-2}.
  std::optional<int> first_failure;
};

/// Conv_h as sum over i of lambda_i z^{2i-2}/(Q_{i-1} Q_i). The telescoping
/// identity is checked for every i; with `clear_all` the full sum is also
/// compared against P_h/Q_h over a common denominator.
Decomposition convergent_sum_decomposition(const JFractionSpec& spec, int h, bool clear_all = false);

struct Inversion {
  std::vector<QRatFn> c;   // c_1..c_k
  std::vector<QRatFn> ab;  // ab_2..ab_k
  /// Set when some ab_{k+1} vanished before the requested depth.
  bool terminated = false;
};

/// Sequences c, ab of the J-fraction whose expansion is `target` (constant
/// term 1, order >= 2 * depth).
Inversion series_to_jfraction(const ZSeries& target, int depth);

/// Rational substitution z := mult in P/Q, Taylor-expanded in q.
QSeries substitute_z_to_q(const ConvergentPair& pair, std::size_t order,
                          const QRatFn& mult = QRatFn::q());
/// Termwise path: sum over n of [z^n] * mult^n, each term Taylor-expanded.
/// Needs mult to vanish at q = 0.
QSeries substitute_z_to_q(const ZSeries& coeffs, std::size_t order,
                          const QRatFn& mult = QRatFn::q());

/// Rows of the table of classical expansions.
enum class Table1Row {
  pochhammer_a,                // (a;q)_n
  reciprocal_qq,               // 1/(q;q)_n
  q_binom2_over_qq,            // q^{n(n-1)/2}/(q;q)_n, not supported
  pochhammer_zqn,              // (z q^{-n};q)_n
  reciprocal_pochhammer_zqn,   // 1/(z q^{-n};q)_n
  pochhammer_ratio,            // (a;q)_n/(b;q)_n
};

/// Parameter values for the rows; `a` and `b` for the Pochhammer rows, `z` for
/// the rows with a second formal parameter.
struct Table1Params {
  QRatFn a = QRatFn::q();
  QRatFn b = QRatFn::q() * QRatFn::q();
  QRatFn z = QRatFn(2);
  /// Use the entries exactly as displayed. Three of them do not generate the
  /// row's target: ab_2 of reciprocal_qq (off by a factor 2), c_h of
  /// reciprocal_pochhammer_zqn (sign of the q^{h-1} z term) and c_h, h >= 3, of
  /// pochhammer_ratio (see CForm).
  bool as_printed = false;
};

/// Thrown for a row whose printed entries cannot be read unambiguously.
class AmbiguousRow : public std::invalid_argument {
 public:
  explicit AmbiguousRow(const std::string& what) : std::invalid_argument(what) {}
};

JFractionSpec table1_preset(Table1Row row, const Table1Params& params = {});
/// Expected [z^n] J for the row, 0 <= n < order.
ZSeries table1_target(Table1Row row, const Table1Params& params, std::size_t order);
std::optional<Table1Row> table1_row_from_name(const std::string& name);
std::string table1_row_name(Table1Row row);

/// Named presets: "qq2" ((a,b) = (q,q^2)), "qq" ((q,q)), "qq2_printed", and the
/// table row names with default parameters.
std::optional<JFractionSpec> named_preset(const std::string& name);
std::vector<std::string> preset_names();

/// Inversion targets j_0 = 1, j_n = n^alpha/(1 - q^n).
ZSeries power_over_lambert_target(int alpha, std::size_t order);
/// "one_over_1mqn" (alpha 0) and "n_over_1mqn" (alpha 1).
std::optional<ZSeries> named_target(const std::string& name, std::size_t order);

}  // namespace qjfrac
