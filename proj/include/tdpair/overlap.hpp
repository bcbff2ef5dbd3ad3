#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tdpair/matrix.hpp"
#include "tdpair/params.hpp"

namespace tdpair {

enum class TMethod { direct_sum, matrix_product, shift_operator };
enum class UMethod { direct_sum, shift_operator, linear_solve };
enum class LimitKind { hahn, krawtchouk };

std::string to_string(TMethod m);
std::string to_string(UMethod m);
std::string to_string(LimitKind k);
TMethod parse_t_method(const std::string& name);
UMethod parse_u_method(const std::string& name);
LimitKind parse_limit_kind(const std::string& name);

/// One Racah-type factor
///   R(i, x, a1, a2; l, b1, b2; Z) = C(l,i) (b1)_i (b2)_x 4F3(-i, -x, a1, a2; b1, b2, -l; Z).
struct RacahFactorSpec {
  int i = 0;
  int x = 0;
  FieldElement a1;
  FieldElement a2;
  FieldElement b1;
  FieldElement b2;
  int ell = 1;

  /// Coefficient of Z^k for k = 0..min(i, x). (b)_i / (b)_k is taken as
  /// (b + k)_{i-k}, so the expansion stays finite even when (b)_k vanishes.
  std::vector<FieldElement> expansion() const;
};

/// Weights attached to joint shifts of (i, x): the operator
/// sum_s w_s e^{s . d}, stored by the accumulated offset vector s.
class ShiftedFunctional {
 public:
  explicit ShiftedFunctional(std::size_t n);

  /// Multiplies on the right by sum_k c_k(s) Z_p^k, where Z_p moves the
  /// offset by step_p per power and c_k is evaluated at the offset reached so far.
  void apply_factor(std::size_t p, int step,
                    const std::function<std::vector<FieldElement>(const MultiIndex& offset)>& coefficients);

  /// Acting on the constant function 1, every shift gives 1.
  FieldElement on_constant_one() const;

  std::size_t size() const { return table_.size(); }

 private:
  std::size_t n_;
  std::map<MultiIndex, FieldElement> table_;
};

/// T_i(x): V_i = sum_x T_i(x) V(x). Validates the parameters.
FieldElement overlap_T(const TDParameters& params, const MultiIndex& i, const MultiIndex& x, TMethod method);

/// U_i(x): V(x) = sum_i U_i(x) V_i. Validates the parameters.
FieldElement overlap_U(const TDParameters& params, const MultiIndex& i, const MultiIndex& x, UMethod method);

/// Full tables with rows i and columns x in graded order.
ExactMatrix overlap_T_table(const TDParameters& params, TMethod method);
ExactMatrix overlap_U_table(const TDParameters& params, UMethod method);

/// Unvalidated evaluators. They also accept parameters over Q(t), which is
/// how the limit procedure feeds them.
FieldElement overlap_T_unchecked(const TDParameters& params, const MultiIndex& i, const MultiIndex& x,
                                 TMethod method);
FieldElement overlap_U_unchecked(const TDParameters& params, const MultiIndex& i, const MultiIndex& x,
                                 UMethod method);

/// Sign of the joint shift carried by Z in the U product: +1 moves (i_p, x_p)
/// up per power of Z, -1 moves them down.
FieldElement overlap_U_shift_with_direction(const TDParameters& params, const MultiIndex& i, const MultiIndex& x,
                                            int direction);
inline constexpr int kUShiftDirection = -1;

/// N = 1 closed forms.
/// T as the univariate Racah 4F3 at argument 1.
FieldElement racah_T_univariate(const TDParameters& params, int i, int x);
/// U as the 4F3 obtained directly from the product formula.
FieldElement racah_U_before_whipple(const TDParameters& params, int i, int x);
/// U after two Whipple transformations, in Racah-normalized form
///   norm * 4F3(-i, i+omega*, -x, x+omega; -l, omega*-a, l+a+omega+1; 1).
/// The i-dependent normalization uses (i-a+omega*)_{l-i} and the overall
/// sign (-1)^l; the variant with (1-a+omega*)_{l-i} and (-1)^x is off by
/// (-1)^{x+l} (1-a+omega*)_{l-i} / (i-a+omega*)_{l-i}.
FieldElement racah_U_after_whipple(const TDParameters& params, int i, int x);

/// Closed formulas of the degenerate kinds. hahn needs only (omega, a_p, l);
/// krawtchouk only l. The parameter set is validated as given.
FieldElement overlap_limit_kind(const TDParameters& params, LimitKind kind, const MultiIndex& i,
                                const MultiIndex& x);
FieldElement overlap_limit_kind_unchecked(const TDParameters& params, LimitKind kind, const MultiIndex& i,
                                          const MultiIndex& x);

/// Substitutions over Q(t): hahn sets h* -> h* t, omega* -> 1/t;
/// krawtchouk sets h -> h t, omega -> 1/t.
TDParameters limit_substitution(const TDParameters& params, LimitKind kind);

/// Value at t = 0 of the substituted general (resp. hahn) T, computed over Q(t).
/// Throws PoleAtZero if the limit does not exist.
Rational limit_of_overlap(const TDParameters& params, LimitKind kind, const MultiIndex& i, const MultiIndex& x);

}  // namespace tdpair
