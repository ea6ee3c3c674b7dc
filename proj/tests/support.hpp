#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "asl/gf2f.hpp"
#include "asl/laurent.hpp"
#include "asl/wpquot.hpp"

// Reference implementations written without the library's algorithms, and
// random generators shared by the test binaries.
namespace support {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

std::uint64_t seed();

// Bit-serial multiply: a*g then reduce one bit at a time.
inline std::uint32_t naive_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, int f) {
    std::uint32_t acc = 0;
    const std::uint32_t top = std::uint32_t{1} << f;
    for (int i = f - 1; i >= 0; --i) {
        acc <<= 1;
        if (acc & top) {
            acc ^= modulus;
        }
        if ((b >> i) & 1U) {
            acc ^= a;
        }
    }
    return acc;
}

inline std::uint32_t naive_trace(std::uint32_t x, std::uint32_t modulus, int f) {
    std::uint32_t acc = 0;
    std::uint32_t p = x;
    for (int i = 0; i < f; ++i) {
        acc ^= p;
        p = naive_mul(p, p, modulus, f);
    }
    return acc;
}

// Every product of two polynomials of degree >= 1 with total degree f.
inline bool naive_irreducible(std::uint32_t poly, int f) {
    for (std::uint32_t a = 2; a < (std::uint32_t{1} << f); ++a) {
        for (std::uint32_t b = 2; b < (std::uint32_t{1} << f); ++b) {
            std::uint32_t prod = 0;
            for (int i = 0; i < 32; ++i) {
                if ((a >> i) & 1U) {
                    prod ^= b << i;
                }
            }
            if (prod == poly) {
                return false;
            }
        }
    }
    return true;
}

// Solutions of z^2 + z = c by scanning the whole field.
inline std::vector<asl::FqElem> brute_artin_schreier(const asl::FieldCtx &k, asl::FqElem c) {
    std::vector<asl::FqElem> out;
    for (auto z : k.elements()) {
        if (k.add(k.square(z), z) == c) {
            out.push_back(z);
        }
    }
    return out;
}

using Terms = std::map<std::int64_t, std::uint32_t>;

inline Terms terms_of(const asl::LaurentSeries &a) {
    Terms out;
    for (const auto &[n, c] : a.terms()) {
        out[n] = c.bits();
    }
    return out;
}

// Schoolbook product of finite term maps.
inline Terms naive_product(const Terms &a, const Terms &b, const asl::FieldCtx &k) {
    Terms out;
    for (const auto &[i, x] : a) {
        for (const auto &[j, y] : b) {
            out[i + j] ^= naive_mul(x, y, k.modulus(), k.degree());
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

class Gen {
  public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64 &rng() { return rng_; }

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    asl::FqElem element(const asl::FieldCtx &k) {
        return k.element(static_cast<std::uint64_t>(uniform(0, static_cast<std::int64_t>(k.order()) - 1)));
    }

    asl::FqElem nonzero_element(const asl::FieldCtx &k) {
        return k.element(static_cast<std::uint64_t>(uniform(1, static_cast<std::int64_t>(k.order()) - 1)));
    }

    // Exact Laurent polynomial with support in [lo, hi], about half full.
    asl::LaurentSeries series(const asl::FieldPtr &field, std::int64_t lo, std::int64_t hi) {
        std::map<std::int64_t, asl::FqElem> terms;
        for (std::int64_t n = lo; n <= hi; ++n) {
            if (uniform(0, 1)) {
                terms[n] = element(*field);
            }
        }
        return asl::LaurentSeries::from_terms(field, terms);
    }

    asl::LaurentSeries nonzero_series(const asl::FieldPtr &field, std::int64_t lo, std::int64_t hi) {
        for (;;) {
            auto s = series(field, lo, hi);
            if (!s.is_zero()) {
                return s;
            }
        }
    }

    // Unit times a power of x: the shape of every b fed to the symbol.
    asl::LaurentSeries scaled_unit(const asl::FieldPtr &field, std::int64_t mlo, std::int64_t mhi, std::int64_t span) {
        auto u = series(field, 1, span) + asl::LaurentSeries::constant(field, nonzero_element(*field));
        return u * asl::LaurentSeries::monomial(field, field->one(), uniform(mlo, mhi));
    }

    asl::WpCoset coset(const asl::FieldPtr &field, std::int64_t nmax) {
        return asl::reduce_mod_wp(series(field, -nmax, 3));
    }

  private:
    std::mt19937_64 rng_;
};

// Span of a generating set of cosets, by breadth-first closure under +.
inline std::set<asl::WpCoset> closure(const std::vector<asl::WpCoset> &gens, const asl::FieldPtr &field) {
    std::set<asl::WpCoset> seen{asl::WpCoset(field)};
    std::vector<asl::WpCoset> frontier{asl::WpCoset(field)};
    while (!frontier.empty()) {
        std::vector<asl::WpCoset> next;
        for (const auto &u : frontier) {
            for (const auto &g : gens) {
                auto w = u + g;
                if (seen.insert(w).second) {
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

// Canonical cosets of V_n generated by reducing the monomials c x^{-m},
// m <= n, and the constants: no use of vn_basis.
inline std::set<asl::WpCoset> brute_vn(const asl::FieldPtr &field, std::int64_t n) {
    std::vector<asl::WpCoset> gens;
    for (auto c : field->elements()) {
        if (c.is_zero()) {
            continue;
        }
        gens.push_back(asl::reduce_mod_wp(asl::LaurentSeries::constant(field, c)));
        for (std::int64_t m = 1; m <= n; ++m) {
            gens.push_back(asl::reduce_mod_wp(asl::LaurentSeries::monomial(field, c, -m)));
        }
    }
    return closure(gens, field);
}

// |G_i| for i >= 0 read straight off the three case descriptions:
// kind 1 = one unramified line, 21 = one break, 22 = two breaks.
inline int lower_group_order(int kind, std::int64_t t1, std::int64_t t2, std::int64_t i) {
    if (kind == 1) {
        return i <= t1 ? 2 : 1;
    }
    if (kind == 21) {
        return i <= t1 ? 4 : 1;
    }
    return i <= t1 ? 4 : (i <= 2 * t2 - t1 ? 2 : 1);
}

// sum_{i >= 0} dim(so3 / so3^{G_i}) * |G_i| / |G_0| as {numerator, denominator}.
inline std::pair<std::int64_t, std::int64_t> naive_conductor(int kind, std::int64_t t1, std::int64_t t2 = 0) {
    auto fixed_codim = [](int order) { return order == 4 ? 3 : order == 2 ? 2 : 0; };
    const int g0 = lower_group_order(kind, t1, t2, 0);
    std::int64_t num = 0;
    for (std::int64_t i = 0; i <= 4 * (t1 + t2) + 8; ++i) {
        const int g = lower_group_order(kind, t1, t2, i);
        num += fixed_codim(g) * g;
    }
    return {num, g0};
}

} // namespace support
