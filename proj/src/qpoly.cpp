#include "qlc/qpoly.hpp"

#include <algorithm>
#include <utility>

namespace qlc {

namespace {

void trim(std::vector<Int>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

QPoly::QPoly(long value) {
    if (value != 0) coeffs_.emplace_back(value);
}

QPoly::QPoly(Int value) {
    if (value != 0) coeffs_.push_back(std::move(value));
}

QPoly QPoly::from_coeffs(std::vector<Int> coeffs) {
    trim(coeffs);
    QPoly p;
    p.coeffs_ = std::move(coeffs);
    return p;
}

QPoly QPoly::q() {
    return from_coeffs({0, 1});
}

std::optional<int> QPoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

Int QPoly::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return Int(0);
    return coeffs_[static_cast<std::size_t>(d)];
}

bool QPoly::has_nonnegative_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c >= 0; });
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Int> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
    return QPoly::from_coeffs(std::move(r));
}

QPoly QPoly::operator-() const {
    std::vector<Int> r(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = -coeffs_[i];
    return from_coeffs(std::move(r));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    return a + (-b);
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly{};
    std::vector<Int> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return QPoly::from_coeffs(std::move(r));
}

QPoly& QPoly::operator+=(const QPoly& o) {
    *this = *this + o;
    return *this;
}

QPoly QPoly::pow(unsigned long e) const {
    QPoly result(1);
    QPoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

Rat QPoly::eval_at(const Rat& q0) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q0 + *it;
    return acc;
}

QPoly scale(const QPoly& p, const Int& c) {
    if (c == 0) return QPoly{};
    std::vector<Int> r(p.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.coeffs()[i] * c;
    return QPoly::from_coeffs(std::move(r));
}

QGeqResult q_geq(const QPoly& a, const QPoly& b) {
    const QPoly d = a - b;
    for (std::size_t i = 0; i < d.coeffs().size(); ++i)
        if (d.coeffs()[i] < 0) return {false, static_cast<int>(i)};
    return {true, std::nullopt};
}

std::string to_string(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int d = *p.degree(); d >= 0; --d) {
        const Int c = p.coeff(d);
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += '-';
        } else {
            out += (c < 0) ? '-' : '+';
        }
        const Int mag = abs(c);
        if (d == 0) {
            out += mag.get_str();
        } else {
            if (mag != 1) {
                out += mag.get_str();
                out += '*';
            }
            out += (d == 1) ? "q" : "q^" + std::to_string(d);
        }
    }
    return out;
}

}  // namespace qlc
