#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlc/coeffexpr.hpp"
#include "qlc/qpoly.hpp"
#include "qlc/triangles.hpp"

namespace testutil {

// splitmix64, kept separate from the library's generator so test inputs do
// not depend on the code under test.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

inline qlc::QPoly random_poly(Rng& rng, int max_deg = 4, long lo = -9, long hi = 9) {
    std::vector<qlc::Int> coeffs;
    const int deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg) + 1));
    for (int d = 0; d <= deg; ++d) coeffs.emplace_back(rng.range(lo, hi));
    return qlc::QPoly::from_coeffs(std::move(coeffs));
}

inline qlc::QPoly random_nonneg_poly(Rng& rng, int max_deg = 4, long hi = 9) {
    return random_poly(rng, max_deg, 0, hi);
}

// Seeded triangle-spec generator for the soundness fuzz: a mix of
// constant-coefficient, bell-like, pascal-like and fully random shapes, so a
// healthy fraction passes the criterion hypotheses.
inline qlc::TriangleSpec fuzz_spec(std::uint64_t seed) {
    Rng rng(seed);
    using E = qlc::CoeffExpr;
    auto lit = [](long v) { return E::literal(qlc::Int(v)); };
    auto affine_k = [&](long c0, long c1) {
        return E::add(lit(c0), E::mul(lit(c1), E::variable(E::Var::K)));
    };
    qlc::TriangleSpec spec;
    spec.name = "fuzz-" + std::to_string(seed);
    const auto shape = rng.below(4);
    if (shape == 0) {
        // constant q-polynomials
        auto qpoly = [&](long c0, long c1, long c2) {
            return E::add(E::add(lit(c0), E::mul(lit(c1), E::variable(E::Var::Q))),
                          E::mul(lit(c2), E::pow(E::variable(E::Var::Q), 2)));
        };
        spec.f = lit(1);
        spec.g = qpoly(1 + rng.range(0, 2), rng.range(0, 2), rng.range(0, 1));
        spec.h = qpoly(rng.range(0, 2), rng.range(0, 1), 0);
    } else if (shape == 1) {
        // bell-like: f = 1, g = a + b*k + q, h = q*(d + e*k)
        spec.f = lit(1);
        spec.g = E::add(affine_k(1 + rng.range(0, 1), 1 + rng.range(0, 1)),
                        E::variable(E::Var::Q));
        spec.h = E::mul(E::variable(E::Var::Q),
                        affine_k(1 + rng.range(0, 1), 1 + rng.range(0, 1)));
    } else if (shape == 2) {
        // pascal-like with scaled f and no h
        spec.f = lit(1 + rng.range(0, 2));
        spec.g = affine_k(1 + rng.range(0, 2), rng.range(0, 1));
        spec.h = lit(0);
    } else {
        // fully random bilinear coefficients, frequently failing
        auto coeff = [&] {
            return E::add(affine_k(rng.range(0, 2), rng.range(0, 2)),
                          E::mul(E::variable(E::Var::Q),
                                 affine_k(rng.range(0, 2), rng.range(0, 1))));
        };
        spec.f = coeff();
        spec.g = coeff();
        spec.h = coeff();
    }
    return spec;
}

inline qlc::CoeffExpr random_expr(Rng& rng, int depth = 3) {
    using E = qlc::CoeffExpr;
    if (depth == 0 || rng.below(4) == 0) {
        switch (rng.below(4)) {
            case 0: return E::literal(qlc::Int(rng.range(0, 12)));
            case 1: return E::variable(E::Var::N);
            case 2: return E::variable(E::Var::K);
            default: return E::variable(E::Var::Q);
        }
    }
    switch (rng.below(5)) {
        case 0: return E::add(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 1: return E::sub(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 2: return E::mul(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 3: return E::pow(random_expr(rng, depth - 1), rng.below(4));
        default: return E::negate(random_expr(rng, depth - 1));
    }
}

}  // namespace testutil
