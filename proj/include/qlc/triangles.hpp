#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlc/coeffexpr.hpp"
#include "qlc/seqprops.hpp"
#include "qlc/transforms.hpp"

namespace qlc {

/// Recurrence definition of a triangular array:
///   A(n,k) = f(n,k) A(n-1,k-1) + g(n,k) A(n-1,k) + h(n,k) A(n-1,k+1)
/// with A(0,0) = 1 and entries outside 0 <= k <= n identically zero.
/// boundary_g0/boundary_h0, when present, replace g and h at k = 0.
struct TriangleSpec {
    std::string name;
    CoeffExpr f, g, h;
    std::optional<CoeffExpr> boundary_g0;
    std::optional<CoeffExpr> boundary_h0;

    bool has_boundary() const { return boundary_g0 || boundary_h0; }
};

struct Triangle {
    std::vector<PolySeq> rows;

    int nrows() const { return static_cast<int>(rows.size()); }

    /// Entry at (n, k); zero outside the stored shape.
    QPoly at(int n, int k) const;

    bool operator==(const Triangle&) const = default;
};

/// Builds rows 0..nrows-1 exactly. Coefficient evaluations are checked for
/// nonnegative coefficients at each (n,k) actually used.
Triangle build(const TriangleSpec& spec, int nrows);

/// The eight built-in families: catalan-aigner, catalan-shapiro, motzkin,
/// schroeder, bell, bell-poly, eulerian-poly, narayana-poly.
TriangleSpec builtin(const std::string& name);
std::vector<std::string> builtin_names();

/// Row n = coefficient list of (sum_j w_j x^j)^n, padded to length k*n+1.
Triangle multinomial_triangle(const Window& w, int nrows);

/// Entries rows[n][k] for every stored row long enough to contain column k.
PolySeq column(const Triangle& t, int k);

}  // namespace qlc
