#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlc/errors.hpp"
#include "qlc/transforms.hpp"
#include "testutil.hpp"

using namespace qlc;

namespace {

QPoly P(std::vector<Int> c) {
    return QPoly::from_coeffs(std::move(c));
}

PolySeq constants(const std::vector<Int>& v) {
    PolySeq s;
    for (const Int& x : v) s.emplace_back(x);
    return s;
}

PolySeq gaussian_row(int m) {
    PolySeq row;
    for (int r = 0; r <= m; ++r) row.push_back(gaussian_binomial(m, r));
    return row;
}

}  // namespace

TEST_CASE("binomial convention") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(-2, 0) == 0);
    CHECK(binomial(40, 20) == Int("137846528820"));
}

TEST_CASE("Window validation") {
    CHECK(Window({1, 2, 1}).order() == 2);
    CHECK(Window({3}).order() == 0);
    CHECK(Window({1, 1, 0}).order() == 2);  // trailing zero allowed
    CHECK_THROWS_AS(Window({1, 1, 3}), RangeError);           // not log-concave
    CHECK_THROWS_AS(Window({1, 0, 2}), InternalZerosError);
    CHECK_THROWS_AS(Window({1, -1}), NegativeCoefficientError);
    CHECK_THROWS_AS(Window({}), LengthError);
}

TEST_CASE("binomial_transform basics") {
    const PolySeq ones4 = constants({1, 1, 1, 1});
    const PolySeq y = binomial_transform({0, 0}, ones4, 3);
    CHECK(y == constants({1, 2, 4, 8}));

    const PolySeq y2 = binomial_transform({1, 0}, constants({1, 1, 1}), 2);
    CHECK(y2 == constants({1, 3, 7}));  // 2^{n+1} - 1

    CHECK_THROWS_AS(binomial_transform({0, 0}, ones4, 4), LengthError);
    CHECK_THROWS_AS(binomial_transform({-1, 0}, ones4, 2), RangeError);
}

TEST_CASE("binomial_transform on a gaussian row stays strongly q-log-concave") {
    const PolySeq x = gaussian_row(3);
    const PolySeq y = binomial_transform({0, 0}, x, 3);
    CHECK(is_strong_q_log_concave(y).holds);
}

TEST_CASE("binomial_transform with a < b starts with zeros") {
    const PolySeq y = binomial_transform({0, 2}, constants({1, 1, 1, 1}), 3);
    CHECK(y[0].is_zero());  // C(0,2) = 0
    CHECK(y[1].is_zero());  // C(1,2..5) = 0
    CHECK_FALSE(y[2].is_zero());
    CHECK_FALSE(has_internal_zeros(y));
    CHECK(is_strong_q_log_concave(y).holds);
}

TEST_CASE("shift_sum") {
    CHECK(shift_sum(constants({1, 2, 2, 1})) == constants({3, 4, 3}));
    CHECK(shift_sum(PolySeq{P({5, 1}), QPoly{}}) == PolySeq{P({5, 1})});
    CHECK(shift_sum(PolySeq{QPoly(1), QPoly::q(), P({0, 0, 1})}) ==
          PolySeq{P({1, 1}), P({0, 1, 1})});
    CHECK_THROWS_AS(shift_sum(PolySeq{QPoly(1)}), LengthError);
}

TEST_CASE("shift_sum preserves strong q-log-concavity") {
    for (int m = 2; m <= 7; ++m) {
        const PolySeq z = shift_sum(gaussian_row(m));
        CHECK(is_strong_q_log_concave(z).holds);
    }
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto x = constants(random_log_concave(3 + seed % 6, seed));
        CHECK(is_strong_q_log_concave(shift_sum(x)).holds);
    }
}

TEST_CASE("window_convolve") {
    CHECK(window_convolve(Window({1, 1}), constants({1, 2, 2, 1})) == constants({3, 4, 3}));
    CHECK(window_convolve(Window({1, 2, 1}), constants({1, 1, 1, 1})) == constants({4, 4}));
    const PolySeq z = window_convolve(Window({1, 2, 1}), constants({1, 3, 4, 3, 1}));
    CHECK(z == constants({11, 14, 11}));
    std::vector<Int> nums;
    for (const auto& p : z) nums.push_back(p.coeff(0));
    CHECK(is_log_concave(nums).holds);
    CHECK_THROWS_AS(window_convolve(Window({1, 1, 1}), constants({1, 2})), LengthError);
}

TEST_CASE("window_convolve preserves log-concavity of numeric inputs") {
    testutil::Rng rng(41);
    for (int t = 0; t < 60; ++t) {
        const int wlen = 1 + static_cast<int>(rng.below(4));
        const Window w(random_log_concave(wlen, 500 + static_cast<std::uint64_t>(t)));
        const auto xs = random_log_concave(wlen + 2 + static_cast<int>(rng.below(6)),
                                           900 + static_cast<std::uint64_t>(t));
        const PolySeq z = window_convolve(w, constants(xs));
        std::vector<Int> nums;
        for (const auto& p : z) nums.push_back(p.coeff(0));
        CHECK(is_log_concave(nums).holds);
    }
}

TEST_CASE("multinomial_transform") {
    const Window w({1, 1, 1});
    std::vector<Rat> ones;
    for (int i = 0; i < 17; ++i) ones.emplace_back(1);
    const auto y = multinomial_transform(w, ones, 8);
    Rat power(1);
    for (int n = 0; n <= 8; ++n) {
        CHECK(y[static_cast<std::size_t>(n)] == power);  // 3^n
        power *= 3;
    }
    CHECK_THROWS_AS(multinomial_transform(w, ones, 9), LengthError);

    // order-0 window: y_n = w0^n x_0
    std::vector<Rat> one{Rat(5)};
    const auto y0 = multinomial_transform(Window({2}), one, 4);
    CHECK(y0[3] == Rat(40));
}

TEST_CASE("multinomial_transform preserves both concavity directions") {
    for (std::uint64_t wseed = 0; wseed < 4; ++wseed) {
        const int wlen = 2 + static_cast<int>(wseed % 3);
        const Window w(random_log_concave(wlen, 1000 + wseed));
        const int k = w.order();
        const int upto = 5;
        const int need = k * upto + 1;
        for (std::uint64_t s = 0; s < 10; ++s) {
            std::vector<Rat> xs;
            for (const Int& v : random_log_concave(need, 2000 + s)) xs.emplace_back(v);
            const auto y = multinomial_transform(w, xs, upto);
            CHECK(is_log_concave(y).holds);
        }
        for (std::uint64_t s = 0; s < 10; ++s) {
            std::vector<Rat> xs;
            for (const Int& v : random_log_convex(need, 3000 + s)) xs.emplace_back(v);
            const auto y = multinomial_transform(w, xs, upto);
            CHECK(is_log_convex(y).holds);
        }
    }
}

TEST_CASE("binomial identities hold exactly up to 30") {
    CHECK_FALSE(check_binomial_identities(30).has_value());
}

TEST_CASE("identity 1 needs its divisor") {
    // At (a,b) = (2,1): C(3,1)^2 - C(2,1)C(4,1) = 1, while C(3,0)C(2,1) = 2;
    // the equality only holds after dividing the right side by a-b+1 = 2.
    const Int lhs = binomial(3, 1) * binomial(3, 1) - binomial(2, 1) * binomial(4, 1);
    CHECK(lhs == 1);
    CHECK(binomial(3, 0) * binomial(2, 1) == 2);
}

TEST_CASE("transform decomposes through shift_sum") {
    // y_n(x) = sum_{k<n} C(a+n-1,b+k) z_k + C(a+n-1,b-1) x_0 + C(a+n-1,b+n) x_n
    // with z = shift_sum(x); the boundary terms vanish when a = b = 0.
    testutil::Rng rng(42);
    PolySeq x;
    for (int i = 0; i < 7; ++i) x.push_back(testutil::random_nonneg_poly(rng, 2, 5));
    const PolySeq z = shift_sum(x);
    for (int a = 0; a <= 4; ++a) {
        for (int b = 0; b <= 4; ++b) {
            const PolySeq y = binomial_transform({a, b}, x, 6);
            for (int n = 1; n <= 6; ++n) {
                QPoly rhs;
                for (int k = 0; k < n; ++k)
                    rhs += scale(z[static_cast<std::size_t>(k)], binomial(a + n - 1, b + k));
                rhs += scale(x[0], binomial(a + n - 1, b - 1));
                rhs += scale(x[static_cast<std::size_t>(n)], binomial(a + n - 1, b + n));
                CHECK(y[static_cast<std::size_t>(n)] == rhs);
            }
        }
    }
    // verbatim two-path cross-check where the plain recursion applies
    const PolySeq y00 = binomial_transform({0, 0}, x, 6);
    const PolySeq y00z = binomial_transform({0, 0}, z, 5);
    for (int n = 1; n <= 6; ++n)
        CHECK(y00[static_cast<std::size_t>(n)] == y00z[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("preservation over the whole parameter grid") {
    std::vector<PolySeq> inputs;
    for (std::uint64_t s = 0; s < 12; ++s)
        inputs.push_back(constants(random_log_concave(1 + static_cast<int>(s % 8), s)));
    for (int m = 0; m <= 4; ++m) inputs.push_back(gaussian_row(m));
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (const auto& x : inputs) {
                const PolySeq y =
                    binomial_transform({a, b}, x, static_cast<int>(x.size()) - 1);
                CHECK(is_strong_q_log_concave(y).holds);
            }
}
