#include "qlc/transforms.hpp"

#include <utility>

#include "qlc/errors.hpp"

namespace qlc {

Window::Window(std::vector<Int> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw LengthError("window needs at least one weight");
    const Report rep = is_log_concave(weights_);  // also rejects negatives/internal zeros
    if (!rep.holds)
        throw RangeError("window weights must be log-concave; violation at index " +
                         std::to_string(rep.witness->i));
}

Int binomial(long m, long r) {
    if (r < 0 || r > m || m < 0) return Int(0);
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(r));
    return out;
}

PolySeq binomial_transform(const BinomialParams& p, const PolySeq& x, int upto) {
    if (p.a < 0 || p.b < 0) throw RangeError("binomial transform parameters must be nonnegative");
    if (upto < 0) throw RangeError("upto must be nonnegative");
    if (static_cast<int>(x.size()) < upto + 1)
        throw LengthError("binomial transform needs len(x) >= upto+1, got len " +
                          std::to_string(x.size()) + " for upto " + std::to_string(upto));
    PolySeq y;
    y.reserve(static_cast<std::size_t>(upto) + 1);
    for (int n = 0; n <= upto; ++n) {
        QPoly acc;
        for (int k = 0; k <= n; ++k)
            acc += scale(x[static_cast<std::size_t>(k)], binomial(p.a + n, p.b + k));
        y.push_back(std::move(acc));
    }
    return y;
}

PolySeq shift_sum(const PolySeq& x) {
    if (x.size() < 2) throw LengthError("shift_sum needs a sequence of length >= 2");
    PolySeq z;
    z.reserve(x.size() - 1);
    for (std::size_t n = 0; n + 1 < x.size(); ++n) z.push_back(x[n] + x[n + 1]);
    return z;
}

PolySeq window_convolve(const Window& w, const PolySeq& x) {
    if (x.size() < w.weights().size())
        throw LengthError("window_convolve needs len(x) >= len(w)");
    const std::size_t out_len = x.size() - w.weights().size() + 1;
    PolySeq z;
    z.reserve(out_len);
    for (std::size_t n = 0; n < out_len; ++n) {
        QPoly acc;
        for (std::size_t i = 0; i < w.weights().size(); ++i)
            acc += scale(x[n + i], w.weights()[i]);
        z.push_back(std::move(acc));
    }
    return z;
}

std::vector<Rat> multinomial_transform(const Window& w, const std::vector<Rat>& x, int upto) {
    if (upto < 0) throw RangeError("upto must be nonnegative");
    const int k = w.order();
    const long need = static_cast<long>(k) * upto + 1;
    if (static_cast<long>(x.size()) < need)
        throw LengthError("multinomial transform needs len(x) >= k*upto+1 = " +
                          std::to_string(need) + ", got " + std::to_string(x.size()));
    const QPoly wpoly = QPoly::from_coeffs(w.weights());
    std::vector<Rat> y;
    y.reserve(static_cast<std::size_t>(upto) + 1);
    QPoly power(1);
    for (int n = 0; n <= upto; ++n) {
        Rat acc(0);
        for (long i = 0; i <= static_cast<long>(k) * n; ++i)
            acc += Rat(power.coeff(static_cast<int>(i))) * x[static_cast<std::size_t>(i)];
        y.push_back(std::move(acc));
        if (n < upto) power = power * wpoly;
    }
    return y;
}

std::optional<IdentityFailure> check_binomial_identities(int max_a) {
    const auto C = [](long m, long r) { return Rat(binomial(m, r)); };
    for (int a = 0; a <= max_a; ++a) {
        for (int b = 0; b <= a; ++b) {
            const Rat lhs1 = C(a + 1, b) * C(a + 1, b) - C(a, b) * C(a + 2, b);
            const Rat rhs1 = C(a + 1, b - 1) * C(a, b) / Rat(a - b + 1);
            if (lhs1 != rhs1) return IdentityFailure{1, a, b};

            const Rat lhs2 = C(a + 1, b + 1) * C(a + 1, b + 1) - C(a, b) * C(a + 2, b + 2);
            const Rat rhs2 = C(a + 1, b + 2) * C(a, b) / Rat(b + 1);
            if (lhs2 != rhs2) return IdentityFailure{2, a, b};

            const Rat lhs3 = Rat(2) * C(a + 1, b) * C(a + 1, b + 1) - C(a, b) * C(a + 2, b + 1);
            const Rat rhs3 = Rat(a) * C(a + 1, b + 1) * C(a, b) / Rat(a - b + 1);
            if (lhs3 != rhs3) return IdentityFailure{3, a, b};

            const Rat lhs4 = C(a + 1, b + 1) * C(a + 2, b + 2) - C(a, b) * C(a + 3, b + 3);
            const Rat rhs4 =
                Rat(2 * (a - b)) * C(a, b) * C(a + 2, b + 2) / Rat((b + 1) * (b + 3));
            if (lhs4 != rhs4) return IdentityFailure{4, a, b};
        }
    }
    return std::nullopt;
}

}  // namespace qlc
