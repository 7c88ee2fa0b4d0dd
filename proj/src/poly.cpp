#include "dehnkit/poly.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "dehnkit/errors.hpp"

namespace dehnkit {

Poly::Poly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

Poly Poly::x_pow(int n) {
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = Rational(1);
    return Poly(std::move(c));
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monic() const {
    if (c_.empty()) return *this;
    Rational l = c_.back().inv();
    return l * *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly operator+(const Poly& p, const Poly& q) {
    std::vector<Rational> c(std::max(p.c_.size(), q.c_.size()), Rational(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) c[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) c[i] += q.c_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    std::vector<Rational> c(p.c_.size() + q.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
        for (std::size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
    return Poly(std::move(c));
}

Poly operator*(const Rational& k, const Poly& p) {
    Poly r = p;
    for (auto& c : r.c_) c *= k;
    r.trim();
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) raise(ErrorKind::DivisionByZero, "polynomial division by zero");
    std::vector<Rational> r = c_;
    int dd = d.degree();
    if (degree() < dd) return {Poly(), *this};
    std::vector<Rational> q(degree() - dd + 1, Rational(0));
    Rational lead_inv = d.leading().inv();
    for (int i = degree(); i >= dd; --i) {
        if (r[i].is_zero()) continue;
        Rational f = r[i] * lead_inv;
        q[i - dd] = f;
        for (int j = 0; j <= dd; ++j) r[i - dd + j] -= f * d.c_[j];
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        Rational a = c.abs();
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        bool unit = a == Rational(1);
        if (i == 0 || !unit) out += a.str();
        if (i > 0 && !unit) out += "*";
        if (i == 1) out += "x";
        if (i > 1) out += "x^" + std::to_string(i);
    }
    return out;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly cyclotomic(int n) {
    static std::mutex mu;
    static std::map<int, Poly> cache;
    if (n < 1) raise(ErrorKind::MalformedInput, "cyclotomic order must be positive");
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    Poly p = Poly::x_pow(n) - Poly::constant(Rational(1));
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = p.divmod(cyclotomic(d)).first;
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(n, p);
    return p;
}

const std::vector<int>& small_cyclotomic_orders() {
    static const std::vector<int> orders{1, 2, 3, 4, 5, 6, 8, 10, 12};
    return orders;
}

std::optional<std::vector<int>> cyclotomic_factorization(const Poly& p) {
    if (p.is_zero() || p.degree() == 0) return std::nullopt;
    Poly rest = p.monic();
    std::vector<int> orders;
    for (int n : small_cyclotomic_orders()) {
        Poly phi = cyclotomic(n);
        auto [q, r] = rest.divmod(phi);
        if (r.is_zero()) {
            orders.push_back(n);
            rest = q;
        }
    }
    if (rest.degree() != 0) return std::nullopt;  // leftover factor, or a repeated cyclotomic
    return orders;
}

}  // namespace dehnkit
