#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "asl/gf2f.hpp"

namespace asl {

// Truncated Laurent series over F_q in the uniformizer x. A series carries an
// absolute precision: coefficients at exponents >= precision() are unknown.
// Finite Laurent polynomials (lifts, literals built in code) may be exact.
//
// The zero series has no stored coefficients and an infinite valuation; with
// a finite precision p it stands for O(x^p).
class LaurentSeries {
  public:
    static constexpr std::int64_t kExact = std::int64_t{1} << 40;
    static constexpr std::int64_t kDefaultPrecision = 64;
    static constexpr std::int64_t kInfiniteValuation = std::numeric_limits<std::int64_t>::max();

    explicit LaurentSeries(FieldPtr field, std::int64_t precision = kExact);

    static LaurentSeries zero(FieldPtr field, std::int64_t precision = kExact);
    static LaurentSeries constant(FieldPtr field, FqElem c, std::int64_t precision = kExact);
    static LaurentSeries monomial(FieldPtr field, FqElem c, std::int64_t exponent,
                                  std::int64_t precision = kExact);
    /// Terms at exponents >= precision are dropped.
    static LaurentSeries from_terms(FieldPtr field, const std::map<std::int64_t, FqElem> &terms,
                                    std::int64_t precision = kExact);

    const FieldPtr &field() const noexcept { return field_; }
    const FieldCtx &ctx() const noexcept { return *field_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_exact() const noexcept { return prec_ >= kExact; }
    std::int64_t valuation() const noexcept { return is_zero() ? kInfiniteValuation : val_; }
    std::int64_t precision() const noexcept { return prec_; }
    /// Valuation, or the precision for a zero series: the lowest exponent
    /// that could carry a nonzero coefficient.
    std::int64_t valuation_bound() const noexcept { return is_zero() ? prec_ : val_; }
    /// One past the highest stored exponent (the valuation for zero).
    std::int64_t support_end() const noexcept {
        return is_zero() ? prec_ : val_ + static_cast<std::int64_t>(coeffs_.size());
    }

    /// Throws PrecisionExhausted when n is at or beyond the precision.
    FqElem coeff(std::int64_t n) const;
    std::map<std::int64_t, FqElem> terms() const;

    LaurentSeries truncated(std::int64_t precision) const;
    /// Coefficients at exponents < bound only; precision is kept.
    LaurentSeries part_below(std::int64_t bound) const;
    /// Coefficients at exponents >= bound only; precision is kept.
    LaurentSeries part_from(std::int64_t bound) const;

    /// Equal on every exponent below the smaller of the two precisions.
    bool agrees_with(const LaurentSeries &other) const;

    friend bool operator==(const LaurentSeries &a, const LaurentSeries &b);

  private:
    void normalize();

    FieldPtr field_;
    std::int64_t val_ = 0;
    std::int64_t prec_ = kExact;
    std::vector<FqElem> coeffs_;

    friend LaurentSeries operator+(const LaurentSeries &, const LaurentSeries &);
    friend LaurentSeries operator*(const LaurentSeries &, const LaurentSeries &);
    friend LaurentSeries inverse(const LaurentSeries &);
    friend LaurentSeries square(const LaurentSeries &);
    friend LaurentSeries derivative(const LaurentSeries &);
};

LaurentSeries operator+(const LaurentSeries &a, const LaurentSeries &b);
/// Subtraction coincides with addition in characteristic 2.
inline LaurentSeries operator-(const LaurentSeries &a, const LaurentSeries &b) { return a + b; }
LaurentSeries operator*(const LaurentSeries &a, const LaurentSeries &b);

/// Throws DivisionByZero for a zero series. An exact polynomial with more
/// than one term is inverted to kDefaultPrecision relative precision.
LaurentSeries inverse(const LaurentSeries &a);
LaurentSeries divide(const LaurentSeries &a, const LaurentSeries &b);
LaurentSeries square(const LaurentSeries &a);
/// Integer power; negative exponents go through inverse().
LaurentSeries power(const LaurentSeries &a, std::int64_t e);

/// Formal derivative d/dx. Even-exponent terms vanish; precision drops by one.
LaurentSeries derivative(const LaurentSeries &a);
/// Coefficient of x^{-1}.
FqElem residue(const LaurentSeries &a);

/// The Artin-Schreier map x -> x^2 + x.
LaurentSeries wp_apply(const LaurentSeries &x);

/// The unique x in p with x^2 + x = y, for y in p. Exact inputs are solved
/// to kDefaultPrecision. Throws DomainError when y is not in p.
LaurentSeries wp_solve(const LaurentSeries &y);

/// Terms in increasing exponent order, e.g. "x^-3 + g*x^-1 + 1".
std::string render(const LaurentSeries &a);

} // namespace asl
