#pragma once

#include <optional>
#include <vector>

#include "qlc/qpoly.hpp"
#include "qlc/seqprops.hpp"

namespace qlc {

/// Parameters of the shifted binomial transform y_n = sum_k C(a+n, b+k) x_k.
struct BinomialParams {
    int a = 0;
    int b = 0;
};

/// Nonnegative log-concave weight vector (b_0, ..., b_k) with no internal
/// zeros; validated on construction.
class Window {
  public:
    explicit Window(std::vector<Int> weights);
    const std::vector<Int>& weights() const { return weights_; }
    int order() const { return static_cast<int>(weights_.size()) - 1; }

  private:
    std::vector<Int> weights_;
};

/// C(m, r) with the convention C(m, r) = 0 for r < 0 or r > m.
Int binomial(long m, long r);

/// y_n = sum_{k=0}^n C(a+n, b+k) x_k for n = 0..upto. Needs len(x) >= upto+1.
PolySeq binomial_transform(const BinomialParams& p, const PolySeq& x, int upto);

/// z_n = x_n + x_{n+1}; output one shorter than the input (len >= 2).
PolySeq shift_sum(const PolySeq& x);

/// z_n = sum_i w_i x_{n+i} for n = 0..len(x)-len(w). Needs len(x) >= len(w).
PolySeq window_convolve(const Window& w, const PolySeq& x);

/// y_n = sum_{i=0}^{kn} T(n,k;i) x_i for n = 0..upto, where T(n,k;i) is the
/// degree-i coefficient of (sum_j w_j q^j)^n. Needs len(x) >= k*upto + 1.
std::vector<Rat> multinomial_transform(const Window& w, const std::vector<Rat>& x, int upto);

/// First failure of the binomial identity suite, if any.
struct IdentityFailure {
    int identity = 0;  // 1..4
    int a = 0;
    int b = 0;
};

/// Checks the four exact binomial equalities used by the shifted binomial
/// transform's base case, for all 0 <= b <= a <= max_a:
///   1. C(a+1,b)^2        - C(a,b)C(a+2,b)   = C(a+1,b-1)C(a,b) / (a-b+1)
///   2. C(a+1,b+1)^2      - C(a,b)C(a+2,b+2) = C(a+1,b+2)C(a,b) / (b+1)
///   3. 2C(a+1,b)C(a+1,b+1) - C(a,b)C(a+2,b+1) = a C(a+1,b+1)C(a,b) / (a-b+1)
///   4. C(a+1,b+1)C(a+2,b+2) - C(a,b)C(a+3,b+3)
///        = 2(a-b) C(a,b)C(a+2,b+2) / ((b+1)(b+3))
std::optional<IdentityFailure> check_binomial_identities(int max_a);

}  // namespace qlc
