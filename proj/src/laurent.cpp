#include "asl/laurent.hpp"

#include <algorithm>
#include <utility>

#include "asl/errors.hpp"

namespace asl {

namespace {

std::int64_t clamp_precision(std::int64_t p) {
    return p >= LaurentSeries::kExact / 2 ? LaurentSeries::kExact : p;
}

void require_same_field(const LaurentSeries &a, const LaurentSeries &b) {
    if (a.ctx().modulus() != b.ctx().modulus()) {
        throw ContextMismatch("series over different residue fields");
    }
}

std::string render_monomial(int j, std::int64_t n) {
    std::string power;
    if (n == 1) {
        power = "x";
    } else if (n != 0) {
        power = "x^" + std::to_string(n);
    }
    std::string coeff;
    if (j == 1) {
        coeff = "g";
    } else if (j > 1) {
        coeff = "g^" + std::to_string(j);
    }
    if (power.empty()) {
        return coeff.empty() ? "1" : coeff;
    }
    return coeff.empty() ? power : coeff + "*" + power;
}

} // namespace

LaurentSeries::LaurentSeries(FieldPtr field, std::int64_t precision)
    : field_(std::move(field)), prec_(clamp_precision(precision)) {}

LaurentSeries LaurentSeries::zero(FieldPtr field, std::int64_t precision) {
    return LaurentSeries(std::move(field), precision);
}

LaurentSeries LaurentSeries::constant(FieldPtr field, FqElem c, std::int64_t precision) {
    return monomial(std::move(field), c, 0, precision);
}

LaurentSeries LaurentSeries::monomial(FieldPtr field, FqElem c, std::int64_t exponent,
                                      std::int64_t precision) {
    LaurentSeries out(std::move(field), precision);
    if (!c.is_zero() && exponent < out.prec_) {
        out.val_ = exponent;
        out.coeffs_.push_back(c);
    }
    return out;
}

LaurentSeries LaurentSeries::from_terms(FieldPtr field, const std::map<std::int64_t, FqElem> &terms,
                                        std::int64_t precision) {
    LaurentSeries out(std::move(field), precision);
    if (terms.empty()) {
        return out;
    }
    const std::int64_t lo = terms.begin()->first;
    const std::int64_t hi = std::min(terms.rbegin()->first + 1, out.prec_);
    if (hi <= lo) {
        return out;
    }
    out.val_ = lo;
    out.coeffs_.assign(static_cast<std::size_t>(hi - lo), out.field_->zero());
    for (const auto &[n, c] : terms) {
        if (n < hi) {
            out.coeffs_[static_cast<std::size_t>(n - lo)] = out.field_->add(out.coeffs_[static_cast<std::size_t>(n - lo)], c);
        }
    }
    out.normalize();
    return out;
}

void LaurentSeries::normalize() {
    prec_ = clamp_precision(prec_);
    const std::int64_t keep = std::max<std::int64_t>(0, std::min<std::int64_t>(static_cast<std::int64_t>(coeffs_.size()), prec_ - val_));
    coeffs_.resize(static_cast<std::size_t>(keep), field_->zero());
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) {
        ++lead;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        val_ += static_cast<std::int64_t>(lead);
    }
    if (coeffs_.empty()) {
        val_ = 0;
    }
}

FqElem LaurentSeries::coeff(std::int64_t n) const {
    if (n >= prec_) {
        throw PrecisionExhausted("coefficient of x^" + std::to_string(n) + " is beyond precision " +
                                 std::to_string(prec_));
    }
    if (is_zero() || n < val_ || n >= support_end()) {
        return field_->zero();
    }
    return coeffs_[static_cast<std::size_t>(n - val_)];
}

std::map<std::int64_t, FqElem> LaurentSeries::terms() const {
    std::map<std::int64_t, FqElem> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) {
            out.emplace(val_ + static_cast<std::int64_t>(i), coeffs_[i]);
        }
    }
    return out;
}

LaurentSeries LaurentSeries::truncated(std::int64_t precision) const {
    LaurentSeries out = *this;
    out.prec_ = std::min(prec_, clamp_precision(precision));
    out.normalize();
    return out;
}

LaurentSeries LaurentSeries::part_below(std::int64_t bound) const {
    LaurentSeries out = *this;
    if (!is_zero()) {
        const std::int64_t keep = std::clamp<std::int64_t>(bound - val_, 0, static_cast<std::int64_t>(coeffs_.size()));
        out.coeffs_.resize(static_cast<std::size_t>(keep));
    }
    out.normalize();
    return out;
}

LaurentSeries LaurentSeries::part_from(std::int64_t bound) const {
    LaurentSeries out = *this;
    if (!is_zero() && bound > val_) {
        const std::int64_t drop = std::min<std::int64_t>(bound - val_, static_cast<std::int64_t>(coeffs_.size()));
        out.coeffs_.erase(out.coeffs_.begin(), out.coeffs_.begin() + static_cast<std::ptrdiff_t>(drop));
        out.val_ += drop;
    }
    out.normalize();
    return out;
}

bool LaurentSeries::agrees_with(const LaurentSeries &other) const {
    require_same_field(*this, other);
    const std::int64_t p = std::min(prec_, other.prec_);
    return truncated(p).terms() == other.truncated(p).terms();
}

bool operator==(const LaurentSeries &a, const LaurentSeries &b) {
    return a.ctx().modulus() == b.ctx().modulus() && a.prec_ == b.prec_ && a.val_ == b.val_ &&
           a.coeffs_ == b.coeffs_;
}

LaurentSeries operator+(const LaurentSeries &a, const LaurentSeries &b) {
    require_same_field(a, b);
    const FieldCtx &k = a.ctx();
    LaurentSeries out(a.field_, std::min(a.prec_, b.prec_));
    if (a.is_zero() && b.is_zero()) {
        return out;
    }
    if (a.is_zero()) {
        return b.truncated(out.prec_);
    }
    if (b.is_zero()) {
        return a.truncated(out.prec_);
    }
    std::int64_t lo = std::min(a.val_, b.val_);
    std::int64_t hi = std::min(std::max(a.support_end(), b.support_end()), out.prec_);
    if (hi <= lo) {
        return out;
    }
    out.val_ = lo;
    out.coeffs_.assign(static_cast<std::size_t>(hi - lo), k.zero());
    for (const LaurentSeries *s : {&a, &b}) {
        for (std::size_t i = 0; i < s->coeffs_.size(); ++i) {
            const std::int64_t n = s->val_ + static_cast<std::int64_t>(i);
            if (n < hi) {
                auto &slot = out.coeffs_[static_cast<std::size_t>(n - lo)];
                slot = k.add(slot, s->coeffs_[i]);
            }
        }
    }
    out.normalize();
    return out;
}

LaurentSeries operator*(const LaurentSeries &a, const LaurentSeries &b) {
    require_same_field(a, b);
    const FieldCtx &k = a.ctx();
    // An unknown tail O(x^pa) of a meets b at valuation vb, and vice versa.
    const std::int64_t prec = clamp_precision(
        std::min(a.prec_ + b.valuation_bound(), b.prec_ + a.valuation_bound()));
    LaurentSeries out(a.field_, prec);
    if (a.is_zero() || b.is_zero()) {
        return out;
    }
    const std::int64_t lo = a.val_ + b.val_;
    const std::int64_t hi = std::min(a.support_end() + b.support_end() - 1, out.prec_);
    if (hi <= lo) {
        return out;
    }
    out.val_ = lo;
    out.coeffs_.assign(static_cast<std::size_t>(hi - lo), k.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            const std::int64_t n = lo + static_cast<std::int64_t>(i + j);
            if (n >= hi) {
                break;
            }
            auto &slot = out.coeffs_[static_cast<std::size_t>(n - lo)];
            slot = k.add(slot, k.mul(a.coeffs_[i], b.coeffs_[j]));
        }
    }
    out.normalize();
    return out;
}

LaurentSeries inverse(const LaurentSeries &a) {
    if (a.is_zero()) {
        throw DivisionByZero("inverse of the zero series");
    }
    const FieldCtx &k = a.ctx();
    const FqElem lead_inv = k.inv(a.coeffs_.front());
    if (a.is_exact() && a.coeffs_.size() == 1) {
        return LaurentSeries::monomial(a.field_, lead_inv, -a.val_);
    }
    const std::int64_t relative =
        a.is_exact() ? LaurentSeries::kDefaultPrecision : a.prec_ - a.val_;
    LaurentSeries out(a.field_, -a.val_ + relative);
    out.val_ = -a.val_;
    out.coeffs_.assign(static_cast<std::size_t>(relative), k.zero());
    out.coeffs_[0] = lead_inv;
    const std::size_t known = a.coeffs_.size();
    for (std::size_t n = 1; n < out.coeffs_.size(); ++n) {
        FqElem acc = k.zero();
        for (std::size_t i = 1; i <= n && i < known; ++i) {
            acc = k.add(acc, k.mul(a.coeffs_[i], out.coeffs_[n - i]));
        }
        out.coeffs_[n] = k.mul(acc, lead_inv);
    }
    out.normalize();
    return out;
}

LaurentSeries divide(const LaurentSeries &a, const LaurentSeries &b) { return a * inverse(b); }

LaurentSeries square(const LaurentSeries &a) {
    const FieldCtx &k = a.ctx();
    // Cross terms vanish in characteristic 2, so the unknown tail squares too.
    LaurentSeries out(a.field_, a.is_exact() ? LaurentSeries::kExact : 2 * a.prec_);
    if (a.is_zero()) {
        return out;
    }
    out.val_ = 2 * a.val_;
    out.coeffs_.assign(2 * a.coeffs_.size() - 1, k.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        out.coeffs_[2 * i] = k.square(a.coeffs_[i]);
    }
    out.normalize();
    return out;
}

LaurentSeries power(const LaurentSeries &a, std::int64_t e) {
    if (e < 0) {
        return power(inverse(a), -e);
    }
    LaurentSeries result = LaurentSeries::constant(a.field(), a.ctx().one());
    LaurentSeries base = a;
    while (e > 0) {
        if (e & 1) {
            result = result * base;
        }
        e >>= 1;
        if (e > 0) {
            base = square(base);
        }
    }
    return result;
}

LaurentSeries derivative(const LaurentSeries &a) {
    LaurentSeries out(a.field_, a.is_exact() ? LaurentSeries::kExact : a.prec_ - 1);
    if (a.is_zero()) {
        return out;
    }
    out.val_ = a.val_ - 1;
    out.coeffs_.assign(a.coeffs_.size(), a.ctx().zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        const std::int64_t n = a.val_ + static_cast<std::int64_t>(i);
        if ((n & 1) != 0) {
            out.coeffs_[i] = a.coeffs_[i];
        }
    }
    out.normalize();
    return out;
}

FqElem residue(const LaurentSeries &a) { return a.coeff(-1); }

LaurentSeries wp_apply(const LaurentSeries &x) { return square(x) + x; }

LaurentSeries wp_solve(const LaurentSeries &y) {
    if (y.valuation_bound() < 1) {
        throw DomainError("wp_solve needs an argument of positive valuation");
    }
    const std::int64_t prec = y.is_exact() ? LaurentSeries::kDefaultPrecision : y.precision();
    const LaurentSeries target = y.truncated(prec);
    // x <- y + x^2 contracts: the valuation of the error at least doubles.
    LaurentSeries x = LaurentSeries::zero(y.field(), prec);
    for (std::int64_t step = 0; step <= prec; ++step) {
        LaurentSeries next = (target + square(x)).truncated(prec);
        if (next == x) {
            return x;
        }
        x = std::move(next);
    }
    return x;
}

std::string render(const LaurentSeries &a) {
    const auto terms = a.terms();
    if (terms.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[n, c] : terms) {
        for (int j = 0; j < a.ctx().degree(); ++j) {
            if (((c.bits() >> j) & 1U) == 0) {
                continue;
            }
            if (!out.empty()) {
                out += " + ";
            }
            out += render_monomial(j, n);
        }
    }
    return out;
}

} // namespace asl
