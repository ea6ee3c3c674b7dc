#include "asl/gf2f.hpp"

#include <array>
#include <bit>
#include <string>

#include "asl/errors.hpp"

namespace asl {

namespace {

constexpr std::array<std::uint32_t, 17> kDefaultModuli = {
    0x0,     0x2,    0x7,    0xb,    0x13,   0x25,   0x43,   0x83,   0x11b,
    0x203,   0x409,  0x805,  0x1009, 0x201b, 0x4021, 0x8003, 0x1002b,
};

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
    const int dm = std::bit_width(m) - 1;
    for (int da = std::bit_width(a) - 1; da >= dm; da = std::bit_width(a) - 1) {
        a ^= m << (da - dm);
    }
    return a;
}

} // namespace

int poly_degree(std::uint32_t poly) noexcept { return static_cast<int>(std::bit_width(poly)) - 1; }

bool is_irreducible(std::uint32_t poly) {
    const int d = poly_degree(poly);
    if (d < 1) {
        return false;
    }
    for (std::uint32_t q = 2; poly_degree(q) <= d / 2; ++q) {
        if (poly_mod(poly, q) == 0) {
            return false;
        }
    }
    return true;
}

std::uint32_t FieldCtx::default_modulus(int f) {
    if (f < 1 || f > kMaxDegree) {
        throw DegreeMismatch("residue degree f must lie in [1, 16], got " + std::to_string(f));
    }
    return kDefaultModuli[static_cast<std::size_t>(f)];
}

FieldCtx::FieldCtx(int f, std::optional<std::uint32_t> modulus)
    : f_(f), modulus_(modulus ? *modulus : default_modulus(f)) {
    if (f < 1 || f > kMaxDegree) {
        throw DegreeMismatch("residue degree f must lie in [1, 16], got " + std::to_string(f));
    }
    if (poly_degree(modulus_) != f) {
        throw DegreeMismatch("modulus has degree " + std::to_string(poly_degree(modulus_)) +
                             ", expected " + std::to_string(f));
    }
    if (!is_irreducible(modulus_)) {
        throw ReduciblePolynomial("modulus " + modulus_string() + " is reducible over F_2");
    }
}

std::shared_ptr<const FieldCtx> FieldCtx::make(int f, std::optional<std::uint32_t> modulus) {
    return std::make_shared<const FieldCtx>(f, modulus);
}

void FieldCtx::check([[maybe_unused]] FqElem x) const {
#ifndef NDEBUG
    if (x.tag() != modulus_) {
        throw ContextMismatch("element belongs to a different residue field");
    }
#endif
}

FqElem FieldCtx::element(std::uint64_t bits) const {
    return FqElem(static_cast<std::uint32_t>(poly_mod(bits, modulus_)), modulus_);
}

FqElem FieldCtx::add(FqElem x, FqElem y) const {
    check(x);
    check(y);
    return FqElem(x.bits() ^ y.bits(), modulus_);
}

FqElem FieldCtx::mul(FqElem x, FqElem y) const {
    check(x);
    check(y);
    std::uint64_t a = x.bits();
    std::uint64_t b = y.bits();
    std::uint64_t product = 0;
    while (b != 0) {
        if (b & 1U) {
            product ^= a;
        }
        a <<= 1;
        b >>= 1;
    }
    return FqElem(static_cast<std::uint32_t>(poly_mod(product, modulus_)), modulus_);
}

FqElem FieldCtx::pow(FqElem x, std::uint64_t e) const {
    FqElem result = one();
    while (e > 0) {
        if (e & 1U) {
            result = mul(result, x);
        }
        x = mul(x, x);
        e >>= 1;
    }
    return result;
}

FqElem FieldCtx::inv(FqElem x) const {
    check(x);
    if (x.is_zero()) {
        throw DivisionByZero("inverse of zero in F_q");
    }
    return pow(x, order() - 2);
}

int FieldCtx::trace(FqElem x) const {
    check(x);
    FqElem acc = zero();
    FqElem power = x;
    for (int i = 0; i < f_; ++i) {
        acc = add(acc, power);
        power = square(power);
    }
    return static_cast<int>(acc.bits());
}

FqElem FieldCtx::sqrt(FqElem x) const {
    check(x);
    for (int i = 1; i < f_; ++i) {
        x = square(x);
    }
    return x;
}

std::optional<FqElem> FieldCtx::solve_artin_schreier(FqElem c) const {
    check(c);
    // z -> z^2 + z is F_2-linear; row-reduce the augmented system
    // [columns L(g^j) | c] over F_2. Rows are indexed by output bit.
    std::vector<std::uint32_t> column(static_cast<std::size_t>(f_));
    for (int j = 0; j < f_; ++j) {
        const FqElem basis = element(std::uint64_t{1} << j);
        column[static_cast<std::size_t>(j)] = add(square(basis), basis).bits();
    }
    // rows[i] holds bit j = coefficient of z_j in output bit i; bit f = rhs.
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(f_), 0);
    for (int i = 0; i < f_; ++i) {
        std::uint32_t row = 0;
        for (int j = 0; j < f_; ++j) {
            if ((column[static_cast<std::size_t>(j)] >> i) & 1U) {
                row |= 1U << j;
            }
        }
        if ((c.bits() >> i) & 1U) {
            row |= 1U << f_;
        }
        rows[static_cast<std::size_t>(i)] = row;
    }
    // Eliminate from the highest variable down so that z_0 (the kernel
    // direction, since L(1) = 0) is left free.
    std::vector<int> pivot_row_of(static_cast<std::size_t>(f_), -1);
    std::size_t next = 0;
    for (int j = f_ - 1; j >= 0; --j) {
        std::size_t pivot = next;
        while (pivot < rows.size() && ((rows[pivot] >> j) & 1U) == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[pivot], rows[next]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != next && ((rows[r] >> j) & 1U)) {
                rows[r] ^= rows[next];
            }
        }
        pivot_row_of[static_cast<std::size_t>(j)] = static_cast<int>(next);
        ++next;
    }
    for (std::size_t r = next; r < rows.size(); ++r) {
        if ((rows[r] >> f_) & 1U) {
            return std::nullopt;
        }
    }
    std::uint32_t z = 0;
    for (int j = 0; j < f_; ++j) {
        const int r = pivot_row_of[static_cast<std::size_t>(j)];
        if (r >= 0 && ((rows[static_cast<std::size_t>(r)] >> f_) & 1U)) {
            z |= 1U << j;
        }
    }
    return FqElem(z, modulus_);
}

FqElem FieldCtx::trace_one_element() const {
    for (std::uint32_t bits = 1; bits < order(); ++bits) {
        const FqElem x(bits, modulus_);
        if (trace(x) == 1) {
            return x;
        }
    }
    throw DomainError("no element of trace one");
}

std::vector<FqElem> FieldCtx::elements() const {
    std::vector<FqElem> out;
    out.reserve(order());
    for (std::uint32_t bits = 0; bits < order(); ++bits) {
        out.push_back(FqElem(bits, modulus_));
    }
    return out;
}

std::string FieldCtx::render(FqElem x) const {
    check(x);
    if (x.is_zero()) {
        return "0";
    }
    std::string out;
    for (int j = f_ - 1; j >= 0; --j) {
        if (((x.bits() >> j) & 1U) == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "+";
        }
        if (j == 0) {
            out += "1";
        } else if (j == 1) {
            out += "g";
        } else {
            out += "g^" + std::to_string(j);
        }
    }
    return out;
}

std::string FieldCtx::modulus_string() const {
    std::string out;
    for (int j = poly_degree(modulus_); j >= 0; --j) {
        if (((modulus_ >> j) & 1U) == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "+";
        }
        out += j == 0 ? "1" : j == 1 ? "g" : "g^" + std::to_string(j);
    }
    return out;
}

} // namespace asl
