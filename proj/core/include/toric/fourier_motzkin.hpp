#pragma once

#include <optional>

#include "toric/numeric.hpp"

namespace toric {

/// Linear inequality  coeffs . z >= rhs  with exact integer data.
struct LinIneq {
    IVec coeffs;
    Int rhs;

    bool operator<(const LinIneq& o) const {
        if (coeffs != o.coeffs) return lex_less(coeffs, o.coeffs);
        return rhs < o.rhs;
    }
    bool operator==(const LinIneq& o) const {
        return coeffs == o.coeffs && rhs == o.rhs;
    }
};

using IneqSystem = std::vector<LinIneq>;

/// Eliminate variable `var` by pairing opposite-sign rows.  Rows not
/// involving `var` pass through; the result is gcd-normalized and deduped.
IneqSystem fm_eliminate(const IneqSystem& sys, size_t var);

/// cascade[j] is a system whose rows involve only variables 0..j-1;
/// cascade[nvars] is the input.  cascade[0] holds variable-free rows
/// (0 >= rhs), which decide feasibility.
std::vector<IneqSystem> fm_cascade(const IneqSystem& sys, size_t nvars);

/// Rational interval for variable `var` given fixed values of variables
/// 0..var-1, using only rows of `sys` whose trailing variable is `var`.
struct RatBounds {
    std::optional<Rat> lo, hi;
    bool empty() const { return lo && hi && *lo > *hi; }
};
RatBounds fm_rational_bounds(const IneqSystem& sys, size_t var, const RVec& fixed);

/// Integer interval [lo, hi] for `var` under integer fixed values.
struct IntBounds {
    std::optional<Int> lo, hi;
    bool empty() const { return lo && hi && *lo > *hi; }
};
IntBounds fm_integer_bounds(const IneqSystem& sys, size_t var, const IVec& fixed);

/// All variable-free rows satisfied (0 >= rhs).
bool fm_constant_rows_ok(const IneqSystem& sys0);

/// Exact rational feasibility of  sys  over nvars variables; returns a
/// witness point when feasible.
std::optional<RVec> fm_solve(const IneqSystem& sys, size_t nvars);

}  // namespace toric
