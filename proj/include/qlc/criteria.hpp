#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlc/coeffexpr.hpp"
#include "qlc/seqprops.hpp"
#include "qlc/triangles.hpp"

namespace qlc {

struct CriterionWitness {
    int n = 0;
    int k = 0;
    int l = 0;
    int degree = 0;
};

struct ConditionVerdict {
    bool holds = true;
    std::optional<CriterionWitness> witness;
};

/// Per-condition verdicts of a criterion check; overall is their conjunction.
struct CriterionReport {
    bool overall = true;
    int max_n = 0;
    std::vector<std::pair<std::string, ConditionVerdict>> conditions;
    std::vector<std::string> warnings;

    const ConditionVerdict* find(const std::string& key) const;
};

/// Verifies the row-concavity criterion hypotheses for n <= maxn and all
/// 1 <= k <= l <= n:
///   f-slc/g-slc/h-slc: rowwise strong q-log-concavity in k of the
///     coefficient rows, evaluated over k in [0, n+1];
///   fg-cross: f_l g_k + f_k g_l >=_q f_{l+1} g_{k-1} + f_{k-1} g_{l+1};
///   gh-cross, fh-cross: the same pattern for (g,h) and (f,h);
///   gg-fh:    g_k g_l >=_q f_{l+1} h_{k-1}.
/// Boundary overrides do not participate; a warning is emitted when present.
CriterionReport check_theorem41(const TriangleSpec& spec, int maxn);

/// Scalar conditions for the boundary-modified constant-coefficient shape:
/// e*g >=_q h, h >=_q 0, g >=_q e, e >=_q 0. Inputs must be n,k-free.
CriterionReport check_proposition(const CoeffExpr& e, const CoeffExpr& g, const CoeffExpr& h);

/// Builds the triangle and checks every row n <= maxn for strong
/// q-log-concavity; cross-validates the criterion above.
Report confirm_conclusion(const TriangleSpec& spec, int maxn);

}  // namespace qlc
