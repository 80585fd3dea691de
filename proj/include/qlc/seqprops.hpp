#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlc/qpoly.hpp"

namespace qlc {

/// Finite polynomial sequence, indexed from 0.
using PolySeq = std::vector<QPoly>;

/// Counterexample location for a failed property check.
struct Witness {
    int i = 0;
    int j = 0;
    std::optional<int> degree;  // violating q-degree (polynomial checks only)
    std::string lhs;            // the side required to dominate
    std::string rhs;
    std::optional<int> row;     // set when the sequence is a triangle row
};

/// Structured verdict of a property check; witness present iff !holds.
struct Report {
    std::string property;
    bool holds = true;
    std::optional<Witness> witness;
};

bool has_internal_zeros(const PolySeq& s);
bool has_internal_zeros(const std::vector<Int>& s);
bool has_internal_zeros(const std::vector<Rat>& s);

/// a_{k-1} a_{k+1} <= a_k^2 for all valid k. Entries must be nonnegative
/// with no internal zeros.
Report is_log_concave(const std::vector<Rat>& s);
Report is_log_concave(const std::vector<Int>& s);

/// Reversed inequality.
Report is_log_convex(const std::vector<Rat>& s);
Report is_log_convex(const std::vector<Int>& s);

/// x_i x_j >=_q x_{i-1} x_{j+1} for all 1 <= i <= j <= len-2 (the
/// proof-consistent direction). Requires nonnegative coefficients and no
/// internal zeros; leading/trailing zero entries are fine.
Report is_strong_q_log_concave(const PolySeq& s);

/// Adjacent-only (i = j) inequalities.
Report is_q_log_concave(const PolySeq& s);

/// Reversed: x_{i-1} x_{j+1} >=_q x_i x_j.
Report is_strong_q_log_convex(const PolySeq& s);

/// Every 2x2 minor of the banded Toeplitz matrix [b_{j-i}] over a window of
/// size 2*len(b) is nonnegative. Independent oracle for log-concavity of b.
Report tp2_window_check(const std::vector<Int>& b);

/// Gaussian binomial coefficient by the q-Pascal recurrence. 0 <= r <= m.
QPoly gaussian_binomial(int m, int r);

/// Deterministic-for-seed positive log-concave integer sequence: a concave
/// exponent profile on a small base, then downward perturbations that keep
/// the property.
std::vector<Int> random_log_concave(int len, std::uint64_t seed);

/// Fixture twin of random_log_concave for the log-convex side.
std::vector<Int> random_log_convex(int len, std::uint64_t seed);

}  // namespace qlc
