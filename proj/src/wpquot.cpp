#include "asl/wpquot.hpp"

#include <algorithm>
#include <utility>

#include "asl/errors.hpp"

namespace asl {

FqElem distinguished_constant(const FieldCtx &k) { return k.trace_one_element(); }

WpCoset::WpCoset(FieldPtr field) : field_(std::move(field)) {}

WpCoset::WpCoset(FieldPtr field, bool eps, std::map<std::int64_t, FqElem> pp)
    : field_(std::move(field)), eps_(eps) {
    for (const auto &[n, c] : pp) {
        if (n <= 0 || n % 2 == 0) {
            throw DomainError("canonical pole orders must be odd and positive, got " + std::to_string(n));
        }
        if (!field_->owns(c)) {
            throw ContextMismatch("coset coefficient from a different residue field");
        }
        if (!c.is_zero()) {
            pp_.emplace(n, c);
        }
    }
}

WpCoset WpCoset::unramified(FieldPtr field) { return WpCoset(std::move(field), true, {}); }

WpCoset WpCoset::pole(FieldPtr field, FqElem c, std::int64_t n) {
    return WpCoset(std::move(field), false, {{n, c}});
}

std::strong_ordering operator<=>(const WpCoset &a, const WpCoset &b) {
    auto ia = a.pp_.begin();
    auto ib = b.pp_.begin();
    for (; ia != a.pp_.end() && ib != b.pp_.end(); ++ia, ++ib) {
        if (auto c = ia->first <=> ib->first; c != 0) {
            return c;
        }
        if (auto c = ia->second.bits() <=> ib->second.bits(); c != 0) {
            return c;
        }
    }
    if (ia != a.pp_.end()) {
        return std::strong_ordering::greater;
    }
    if (ib != b.pp_.end()) {
        return std::strong_ordering::less;
    }
    return a.eps_ <=> b.eps_;
}

WpCoset operator+(const WpCoset &u, const WpCoset &v) {
    if (u.ctx().modulus() != v.ctx().modulus()) {
        throw ContextMismatch("cosets over different residue fields");
    }
    std::map<std::int64_t, FqElem> pp = u.principal();
    for (const auto &[n, c] : v.principal()) {
        auto [it, inserted] = pp.emplace(n, c);
        if (!inserted) {
            it->second = u.ctx().add(it->second, c);
            if (it->second.is_zero()) {
                pp.erase(it);
            }
        }
    }
    return WpCoset(u.field(), u.eps() != v.eps(), std::move(pp));
}

LaurentSeries lift(const WpCoset &u) {
    std::map<std::int64_t, FqElem> terms;
    for (const auto &[n, c] : u.principal()) {
        terms.emplace(-n, c);
    }
    if (u.eps()) {
        terms.emplace(0, distinguished_constant(u.ctx()));
    }
    return LaurentSeries::from_terms(u.field(), terms);
}

std::string render(const WpCoset &u) {
    if (u.is_zero()) {
        return "0";
    }
    std::map<std::int64_t, FqElem> terms;
    for (const auto &[n, c] : u.principal()) {
        terms.emplace(-n, c);
    }
    std::string out = terms.empty() ? std::string() : render(LaurentSeries::from_terms(u.field(), terms));
    if (u.eps()) {
        out += out.empty() ? "a0" : " + a0";
    }
    return out;
}

CosetLevel coset_level(const WpCoset &u) {
    if (u.is_zero()) {
        return {CosetLevel::Kind::zero, 0};
    }
    if (u.principal().empty()) {
        return {CosetLevel::Kind::unramified, 0};
    }
    return {CosetLevel::Kind::ramified, u.principal().rbegin()->first};
}

LaurentSeries WpWitness::total() const {
    return principal + LaurentSeries::constant(principal.field(), constant) + integral;
}

namespace {

struct Folded {
    std::map<std::int64_t, FqElem> poles;
    std::map<std::int64_t, FqElem> witness;
    int eps = 0;
};

// Fold c x^{-2m} into sqrt(c) x^{-m}, deepest even pole first; the two differ
// by wp(sqrt(c) x^{-m}). The constant term is replaced by Tr(c0) a0.
Folded fold(const LaurentSeries &a) {
    if (a.precision() < 1) {
        throw PrecisionExhausted("constant term is beyond precision " + std::to_string(a.precision()));
    }
    const FieldCtx &k = a.ctx();
    Folded out;
    for (const auto &[n, c] : a.terms()) {
        if (n < 0) {
            out.poles.emplace(-n, c);
        }
    }
    auto accumulate = [&k](std::map<std::int64_t, FqElem> &terms, std::int64_t key, FqElem c) {
        auto [slot, inserted] = terms.emplace(key, c);
        if (!inserted) {
            slot->second = k.add(slot->second, c);
            if (slot->second.is_zero()) {
                terms.erase(slot);
            }
        }
    };
    for (;;) {
        auto even = std::find_if(out.poles.rbegin(), out.poles.rend(),
                                 [](const auto &t) { return t.first % 2 == 0; });
        if (even == out.poles.rend()) {
            break;
        }
        const std::int64_t m = even->first / 2;
        const FqElem root = k.sqrt(even->second);
        out.poles.erase(std::next(even).base());
        accumulate(out.poles, m, root);
        accumulate(out.witness, -m, root);
    }
    out.eps = k.trace(a.coeff(0));
    return out;
}

} // namespace

Reduction reduce_mod_wp_with_witness(const LaurentSeries &a) {
    const FieldPtr &field = a.field();
    const FieldCtx &k = *field;
    Folded folded = fold(a);

    const FqElem c0 = a.coeff(0);
    const FqElem rhs = folded.eps != 0 ? k.add(c0, distinguished_constant(k)) : c0;
    const auto z = k.solve_artin_schreier(rhs);
    if (!z) {
        throw DomainError("trace-zero constant without an Artin-Schreier root");
    }
    return Reduction{WpCoset(field, folded.eps != 0, std::move(folded.poles)),
                     WpWitness{LaurentSeries::from_terms(field, folded.witness), *z,
                               wp_solve(a.part_from(1))}};
}

WpCoset reduce_mod_wp(const LaurentSeries &a) {
    Folded folded = fold(a);
    return WpCoset(a.field(), folded.eps != 0, std::move(folded.poles));
}

std::int64_t filtration_dim(std::int64_t n, const FieldCtx &k) {
    if (n < 0) {
        throw DomainError("filtration level must be non-negative");
    }
    return 1 + k.degree() * ((n + 1) / 2);
}

std::int64_t filtration_dim_prime_field(std::int64_t n) {
    if (n < 0) {
        throw DomainError("filtration level must be non-negative");
    }
    return 1 + (n + 1) / 2;
}

std::vector<WpCoset> vn_basis(std::int64_t n, const FieldPtr &field) {
    if (n < 0) {
        throw DomainError("filtration level must be non-negative");
    }
    std::vector<WpCoset> basis;
    basis.push_back(WpCoset::unramified(field));
    for (std::int64_t m = 1; m <= n; m += 2) {
        for (int j = 0; j < field->degree(); ++j) {
            basis.push_back(WpCoset::pole(field, field->element(std::uint64_t{1} << j), m));
        }
    }
    return basis;
}

WpCoset coset_from_mask(const std::vector<WpCoset> &basis, std::uint64_t mask) {
    if (basis.empty()) {
        throw DomainError("empty basis");
    }
    WpCoset acc(basis.front().field());
    for (std::size_t i = 0; i < basis.size() && mask != 0; ++i, mask >>= 1) {
        if (mask & 1U) {
            acc = acc + basis[i];
        }
    }
    return acc;
}

std::uint64_t coset_mask(const WpCoset &u, std::int64_t n) {
    const int f = u.ctx().degree();
    std::uint64_t mask = u.eps() ? 1U : 0U;
    for (const auto &[m, c] : u.principal()) {
        if (m > n) {
            throw DomainError("coset " + render(u) + " is not in V_" + std::to_string(n));
        }
        const std::uint64_t offset = 1 + static_cast<std::uint64_t>((m - 1) / 2) * static_cast<std::uint64_t>(f);
        mask |= static_cast<std::uint64_t>(c.bits()) << offset;
    }
    return mask;
}

int as_symbol_series(const LaurentSeries &a, const LaurentSeries &b) {
    if (b.is_zero()) {
        throw DivisionByZero("symbol [a, b) needs b != 0");
    }
    const LaurentSeries log_derivative = derivative(b) * inverse(b);
    return a.ctx().trace(residue(a * log_derivative));
}

int as_symbol(const WpCoset &a, const LaurentSeries &b) {
    if (b.is_zero()) {
        throw DivisionByZero("symbol [a, b) needs b != 0");
    }
    if (a.is_zero()) {
        return 0;
    }
    return as_symbol_series(lift(a), b);
}

QuadraticCharacter::QuadraticCharacter(WpCoset a) : coset_(std::move(a)) {
    if (coset_.is_zero()) {
        throw ZeroCoset("quadratic character of the zero coset is trivial");
    }
}

QuadraticCharacter quad_char(const WpCoset &a) { return QuadraticCharacter(a); }

} // namespace asl
