#include "qlc/criteria.hpp"

#include <array>
#include <functional>
#include <utility>

#include "qlc/errors.hpp"
#include "qlc/parallel.hpp"

namespace qlc {

const ConditionVerdict* CriterionReport::find(const std::string& key) const {
    for (const auto& [name, verdict] : conditions)
        if (name == key) return &verdict;
    return nullptr;
}

namespace {

using Coeffs = std::vector<std::vector<QPoly>>;  // [n][k], k in [0, n+1]

Coeffs eval_table(const CoeffExpr& e, const char* which, int maxn) {
    Coeffs table(static_cast<std::size_t>(maxn) + 1);
    for (int n = 1; n <= maxn; ++n) {
        auto& row = table[static_cast<std::size_t>(n)];
        row.reserve(static_cast<std::size_t>(n) + 2);
        for (int k = 0; k <= n + 1; ++k) {
            QPoly p = e.eval(n, k);
            if (!p.has_nonnegative_coeffs())
                throw NegativeCoefficientError(
                    std::string("coefficient ") + which + " = " + e.render() +
                    " evaluates to " + to_string(p) + " with a negative coefficient at (n=" +
                    std::to_string(n) + ", k=" + std::to_string(k) +
                    "); the criterion evaluates coefficients over k in [0, n+1]");
            row.push_back(std::move(p));
        }
    }
    return table;
}

struct Triple {
    int n, k, l;
};

using Sides = std::function<std::pair<QPoly, QPoly>(const Triple&)>;

ConditionVerdict run_condition(const std::vector<Triple>& triples, const Sides& sides) {
    auto found = find_first(triples.size(), [&](std::size_t idx) {
        const auto [lhs, rhs] = sides(triples[idx]);
        return !q_geq(lhs, rhs).holds;
    });
    ConditionVerdict v;
    if (found) {
        const Triple& t = triples[*found];
        const auto [lhs, rhs] = sides(t);
        v.holds = false;
        v.witness = CriterionWitness{t.n, t.k, t.l, *q_geq(lhs, rhs).violating_degree};
    }
    return v;
}

}  // namespace

CriterionReport check_theorem41(const TriangleSpec& spec, int maxn) {
    if (maxn < 0) throw RangeError("check_theorem41 needs maxn >= 0");
    CriterionReport rep;
    rep.max_n = maxn;
    if (spec.has_boundary())
        rep.warnings.push_back(
            "spec '" + spec.name +
            "' overrides g/h at k=0; the criterion checks the general coefficient expressions "
            "only, and boundary behavior is outside its hypotheses");

    const Coeffs F = eval_table(spec.f, "f", maxn);
    const Coeffs G = eval_table(spec.g, "g", maxn);
    const Coeffs H = eval_table(spec.h, "h", maxn);

    // Both the rowwise strong-q-log-concavity pairs and the cross-condition
    // pairs range over 1 <= k <= l <= n for each n <= maxn.
    std::vector<Triple> triples;
    for (int n = 1; n <= maxn; ++n)
        for (int k = 1; k <= n; ++k)
            for (int l = k; l <= n; ++l) triples.push_back({n, k, l});

    auto slc = [](const Coeffs& R) {
        return [Rp = &R](const Triple& t) {
            const auto& row = (*Rp)[static_cast<std::size_t>(t.n)];
            auto at = [&](int k) { return row[static_cast<std::size_t>(k)]; };
            return std::make_pair(at(t.k) * at(t.l), at(t.k - 1) * at(t.l + 1));
        };
    };
    auto cross = [](const Coeffs& A, const Coeffs& B) {
        return [Ap = &A, Bp = &B](const Triple& t) {
            const auto& a = (*Ap)[static_cast<std::size_t>(t.n)];
            const auto& b = (*Bp)[static_cast<std::size_t>(t.n)];
            auto av = [&](int k) { return a[static_cast<std::size_t>(k)]; };
            auto bv = [&](int k) { return b[static_cast<std::size_t>(k)]; };
            QPoly lhs = av(t.l) * bv(t.k) + av(t.k) * bv(t.l);
            QPoly rhs = av(t.l + 1) * bv(t.k - 1) + av(t.k - 1) * bv(t.l + 1);
            return std::make_pair(std::move(lhs), std::move(rhs));
        };
    };
    auto gg_fh = [&](const Triple& t) {
        const auto& f = F[static_cast<std::size_t>(t.n)];
        const auto& g = G[static_cast<std::size_t>(t.n)];
        const auto& h = H[static_cast<std::size_t>(t.n)];
        QPoly lhs = g[static_cast<std::size_t>(t.k)] * g[static_cast<std::size_t>(t.l)];
        QPoly rhs = f[static_cast<std::size_t>(t.l + 1)] * h[static_cast<std::size_t>(t.k - 1)];
        return std::make_pair(std::move(lhs), std::move(rhs));
    };

    rep.conditions.emplace_back("f-slc", run_condition(triples, slc(F)));
    rep.conditions.emplace_back("g-slc", run_condition(triples, slc(G)));
    rep.conditions.emplace_back("h-slc", run_condition(triples, slc(H)));
    rep.conditions.emplace_back("fg-cross", run_condition(triples, cross(F, G)));
    rep.conditions.emplace_back("gh-cross", run_condition(triples, cross(G, H)));
    rep.conditions.emplace_back("fh-cross", run_condition(triples, cross(F, H)));
    rep.conditions.emplace_back("gg-fh", run_condition(triples, gg_fh));

    for (const auto& [name, verdict] : rep.conditions) rep.overall = rep.overall && verdict.holds;
    return rep;
}

CriterionReport check_proposition(const CoeffExpr& e, const CoeffExpr& g, const CoeffExpr& h) {
    for (const auto* expr : {&e, &g, &h})
        if (expr->depends_on_nk())
            throw NonConstantExprError("proposition coefficients must not depend on n or k: " +
                                       expr->render());
    const QPoly E = e.eval(0, 0);
    const QPoly G = g.eval(0, 0);
    const QPoly H = h.eval(0, 0);

    CriterionReport rep;
    rep.max_n = 0;
    auto add = [&rep](const char* name, const QPoly& lhs, const QPoly& rhs) {
        ConditionVerdict v;
        const QGeqResult r = q_geq(lhs, rhs);
        if (!r.holds) {
            v.holds = false;
            v.witness = CriterionWitness{0, 0, 0, *r.violating_degree};
        }
        rep.conditions.emplace_back(name, std::move(v));
    };
    add("eg-geq-h", E * G, H);
    add("h-nonneg", H, QPoly{});
    add("g-geq-e", G, E);
    add("e-nonneg", E, QPoly{});
    for (const auto& [name, verdict] : rep.conditions) rep.overall = rep.overall && verdict.holds;
    return rep;
}

Report confirm_conclusion(const TriangleSpec& spec, int maxn) {
    if (maxn < 0) throw RangeError("confirm_conclusion needs maxn >= 0");
    const Triangle t = build(spec, maxn + 1);
    Report rep{"thm41-conclusion", true, std::nullopt};
    for (int n = 0; n <= maxn; ++n) {
        Report row = is_strong_q_log_concave(t.rows[static_cast<std::size_t>(n)]);
        if (!row.holds) {
            rep.holds = false;
            rep.witness = std::move(row.witness);
            rep.witness->row = n;
            return rep;
        }
    }
    return rep;
}

}  // namespace qlc
