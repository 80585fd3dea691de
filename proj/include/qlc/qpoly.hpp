#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace qlc {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients, stored ascending by degree. Trailing zeros are always
/// trimmed; the zero polynomial is the empty coefficient list. Values are
/// immutable in practice: every operation returns a fresh polynomial, so
/// instances can be shared freely across threads.
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(long value);
    explicit QPoly(Int value);

    /// Builds from an ascending coefficient list, trimming trailing zeros.
    static QPoly from_coeffs(std::vector<Int> coeffs);

    /// The polynomial q itself.
    static QPoly q();

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of a nonzero polynomial; nullopt for zero (no -1 arithmetic).
    std::optional<int> degree() const;

    /// Coefficient of q^d; zero outside the stored range.
    Int coeff(int d) const;

    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool has_nonnegative_coeffs() const;

    /// Exponentiation by squaring; pow(0) is 1 for every base.
    QPoly pow(unsigned long e) const;

    /// Exact rational evaluation by Horner's scheme.
    Rat eval_at(const Rat& q0) const;

    QPoly operator-() const;
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly& operator+=(const QPoly& o);

    bool operator==(const QPoly&) const = default;

  private:
    std::vector<Int> coeffs_;
};

/// Scalar multiple c*p.
QPoly scale(const QPoly& p, const Int& c);

/// Result of the coefficientwise comparison a >=_q b.
struct QGeqResult {
    bool holds = false;
    /// Smallest degree of a-b with a negative coefficient, when !holds.
    std::optional<int> violating_degree;
    explicit operator bool() const { return holds; }
};

/// a >=_q b iff a-b has only nonnegative coefficients.
QGeqResult q_geq(const QPoly& a, const QPoly& b);

/// Canonical rendering, descending powers: "q^2+4*q+1", "0" for zero.
std::string to_string(const QPoly& p);

}  // namespace qlc
