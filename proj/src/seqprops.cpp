#include "qlc/seqprops.hpp"

#include <algorithm>
#include <utility>

#include "qlc/errors.hpp"
#include "qlc/parallel.hpp"

namespace qlc {

namespace {

template <typename T>
bool entry_is_zero(const T& v) {
    return v == 0;
}

bool entry_is_zero(const QPoly& v) {
    return v.is_zero();
}

template <typename Seq>
std::optional<int> internal_zero_index(const Seq& s) {
    int first = -1, last = -1;
    for (int i = 0; i < static_cast<int>(s.size()); ++i) {
        if (!entry_is_zero(s[static_cast<std::size_t>(i)])) {
            if (first < 0) first = i;
            last = i;
        }
    }
    for (int i = first + 1; i < last; ++i)
        if (entry_is_zero(s[static_cast<std::size_t>(i)])) return i;
    return std::nullopt;
}

template <typename T>
void require_clean(const std::vector<T>& s) {
    for (const T& v : s)
        if (v < 0) throw NegativeCoefficientError("sequence entry is negative");
    if (auto z = internal_zero_index(s)) throw InternalZerosError(*z);
}

void require_clean(const PolySeq& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!s[i].has_nonnegative_coeffs())
            throw NegativeCoefficientError("polynomial at index " + std::to_string(i) +
                                           " has a negative coefficient");
    if (auto z = internal_zero_index(s)) throw InternalZerosError(*z);
}

// Adjacent three-term test shared by the numeric checks: compares
// a_{k-1} a_{k+1} against a_k^2; `concave` picks the required direction.
template <typename T>
Report adjacent_check(std::string property, const std::vector<T>& s, bool concave) {
    Report rep{std::move(property), true, std::nullopt};
    for (std::size_t k = 1; k + 1 < s.size(); ++k) {
        const T outer = s[k - 1] * s[k + 1];
        const T mid = s[k] * s[k];
        const bool bad = concave ? (outer > mid) : (outer < mid);
        if (bad) {
            Witness w;
            w.i = w.j = static_cast<int>(k);
            w.lhs = (concave ? mid : outer).get_str();
            w.rhs = (concave ? outer : mid).get_str();
            rep.holds = false;
            rep.witness = std::move(w);
            return rep;
        }
    }
    return rep;
}

// Pairwise q-comparison over 1 <= i <= j <= len-2; `convex` flips the sides.
Report pairwise_q_check(std::string property, const PolySeq& s, bool adjacent_only, bool convex) {
    require_clean(s);
    Report rep{std::move(property), true, std::nullopt};
    const int N = static_cast<int>(s.size());
    if (N < 3) return rep;

    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i + 1 < N; ++i) {
        if (adjacent_only) {
            pairs.emplace_back(i, i);
        } else {
            for (int j = i; j + 1 < N; ++j) pairs.emplace_back(i, j);
        }
    }

    auto sides = [&](int i, int j) {
        QPoly big = s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)];
        QPoly small = s[static_cast<std::size_t>(i - 1)] * s[static_cast<std::size_t>(j + 1)];
        if (convex) std::swap(big, small);
        return std::make_pair(std::move(big), std::move(small));
    };

    auto found = find_first(pairs.size(), [&](std::size_t idx) {
        const auto [i, j] = pairs[idx];
        const auto [lhs, rhs] = sides(i, j);
        return !q_geq(lhs, rhs).holds;
    });
    if (found) {
        const auto [i, j] = pairs[*found];
        const auto [lhs, rhs] = sides(i, j);
        Witness w;
        w.i = i;
        w.j = j;
        w.degree = q_geq(lhs, rhs).violating_degree;
        w.lhs = to_string(lhs);
        w.rhs = to_string(rhs);
        rep.holds = false;
        rep.witness = std::move(w);
    }
    return rep;
}

}  // namespace

bool has_internal_zeros(const PolySeq& s) {
    return internal_zero_index(s).has_value();
}

bool has_internal_zeros(const std::vector<Int>& s) {
    return internal_zero_index(s).has_value();
}

bool has_internal_zeros(const std::vector<Rat>& s) {
    return internal_zero_index(s).has_value();
}

Report is_log_concave(const std::vector<Rat>& s) {
    require_clean(s);
    return adjacent_check("log-concave", s, true);
}

Report is_log_concave(const std::vector<Int>& s) {
    require_clean(s);
    return adjacent_check("log-concave", s, true);
}

Report is_log_convex(const std::vector<Rat>& s) {
    require_clean(s);
    return adjacent_check("log-convex", s, false);
}

Report is_log_convex(const std::vector<Int>& s) {
    require_clean(s);
    return adjacent_check("log-convex", s, false);
}

Report is_strong_q_log_concave(const PolySeq& s) {
    return pairwise_q_check("strong-q-log-concave", s, false, false);
}

Report is_q_log_concave(const PolySeq& s) {
    return pairwise_q_check("q-log-concave", s, true, false);
}

Report is_strong_q_log_convex(const PolySeq& s) {
    return pairwise_q_check("strong-q-log-convex", s, false, true);
}

Report tp2_window_check(const std::vector<Int>& b) {
    Report rep{"tp2-window", true, std::nullopt};
    const int klen = static_cast<int>(b.size());
    const int W = 2 * klen;
    auto at = [&](int i, int j) -> Int {
        const int d = j - i;
        if (d < 0 || d >= klen) return Int(0);
        return b[static_cast<std::size_t>(d)];
    };
    for (int i1 = 0; i1 < W; ++i1)
        for (int i2 = i1 + 1; i2 < W; ++i2)
            for (int j1 = 0; j1 < W; ++j1)
                for (int j2 = j1 + 1; j2 < W; ++j2) {
                    const Int diag = at(i1, j1) * at(i2, j2);
                    const Int anti = at(i1, j2) * at(i2, j1);
                    if (diag < anti) {
                        Witness w;
                        w.i = i1;
                        w.j = j1;
                        w.lhs = "M(" + std::to_string(i1) + "," + std::to_string(j1) + ")*M(" +
                                std::to_string(i2) + "," + std::to_string(j2) +
                                ")=" + diag.get_str();
                        w.rhs = "M(" + std::to_string(i1) + "," + std::to_string(j2) + ")*M(" +
                                std::to_string(i2) + "," + std::to_string(j1) +
                                ")=" + anti.get_str();
                        rep.holds = false;
                        rep.witness = std::move(w);
                        return rep;
                    }
                }
    return rep;
}

QPoly gaussian_binomial(int m, int r) {
    if (m < 0 || r < 0 || r > m)
        throw RangeError("gaussian_binomial requires 0 <= r <= m, got m=" + std::to_string(m) +
                         " r=" + std::to_string(r));
    // q-Pascal: [m r] = [m-1 r-1] + q^r [m-1 r], row by row.
    std::vector<QPoly> row{QPoly(1)};
    for (int mm = 1; mm <= m; ++mm) {
        std::vector<QPoly> next(static_cast<std::size_t>(mm) + 1);
        for (int rr = 0; rr <= mm; ++rr) {
            QPoly v;
            if (rr > 0) v += row[static_cast<std::size_t>(rr - 1)];
            if (rr < mm)
                v += QPoly::q().pow(static_cast<unsigned long>(rr)) *
                     row[static_cast<std::size_t>(rr)];
            next[static_cast<std::size_t>(rr)] = std::move(v);
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(r)];
}

namespace {

// splitmix64: tiny, fully specified, identical on every platform.
struct SeededRng {
    std::uint64_t state;
    explicit SeededRng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

Int ipow(unsigned long base, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

std::vector<long> exponent_profile(SeededRng& rng, int len, bool concave) {
    std::vector<long> incs(static_cast<std::size_t>(len > 0 ? len - 1 : 0));
    for (auto& d : incs) d = static_cast<long>(rng.below(7)) - 3;
    if (concave)
        std::sort(incs.begin(), incs.end(), std::greater<>());
    else
        std::sort(incs.begin(), incs.end());
    std::vector<long> exps{0};
    for (long d : incs) exps.push_back(exps.back() + d);
    const long lo = *std::min_element(exps.begin(), exps.end());
    for (auto& e : exps) e -= lo;
    return exps;
}

}  // namespace

std::vector<Int> random_log_concave(int len, std::uint64_t seed) {
    if (len < 1) throw RangeError("random_log_concave requires len >= 1");
    SeededRng rng(seed);
    const unsigned long base = 2 + static_cast<unsigned long>(rng.below(2));
    const auto exps = exponent_profile(rng, len, true);
    std::vector<Int> a;
    a.reserve(static_cast<std::size_t>(len));
    for (long e : exps) a.push_back(ipow(base, static_cast<unsigned long>(e)));
    // Perturb downward while the property survives.
    for (int round = 0; round < 2 * len; ++round) {
        const auto k = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(len)));
        const Int div = 2 + static_cast<long>(rng.below(8));
        const Int cand = a[k] - a[k] / div;
        if (cand >= 1) {
            const Int old = a[k];
            a[k] = cand;
            if (!is_log_concave(a).holds) a[k] = old;
        }
    }
    return a;
}

std::vector<Int> random_log_convex(int len, std::uint64_t seed) {
    if (len < 1) throw RangeError("random_log_convex requires len >= 1");
    SeededRng rng(seed);
    const unsigned long base = 2 + static_cast<unsigned long>(rng.below(2));
    const auto exps = exponent_profile(rng, len, false);
    std::vector<Int> a;
    a.reserve(static_cast<std::size_t>(len));
    for (long e : exps) a.push_back(ipow(base, static_cast<unsigned long>(e)));
    for (int round = 0; round < 2 * len; ++round) {
        const auto k = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(len)));
        const Int mul = 1 + static_cast<long>(rng.below(3));
        const Int old = a[k];
        a[k] = a[k] * mul + static_cast<long>(rng.below(3));
        if (!is_log_convex(a).holds) a[k] = old;
    }
    return a;
}

}  // namespace qlc
