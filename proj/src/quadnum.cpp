#include "dehnkit/quadnum.hpp"

#include <algorithm>
#include <cctype>

#include "dehnkit/errors.hpp"

namespace dehnkit {

QuadNum::QuadNum(const Rational& a, long D) : a_(a) {
    if (D >= 0) raise(ErrorKind::MalformedInput, "field discriminant must be negative");
    D_ = squarefree_part(mpz_class(D));
}

QuadNum::QuadNum(const Rational& a, const Rational& b, long D) : a_(a), b_(b) {
    if (D >= 0) raise(ErrorKind::MalformedInput, "field discriminant must be negative");
    mpz_class f;
    D_ = squarefree_part(mpz_class(D), &f);
    if (f != 1) b_ *= Rational(f, 1);
}

QuadNum QuadNum::sqrt_of(long D) { return QuadNum(Rational(0), Rational(1), D); }

QuadNum QuadNum::with_field(long D) const {
    if (!is_rational()) {
        if (squarefree_part(mpz_class(D)) != D_) raise(ErrorKind::FieldMismatch, "cannot move " + str() + " to another field");
        return *this;
    }
    return QuadNum(a_, D);
}

long QuadNum::common_field(const QuadNum& x, const QuadNum& y) {
    if (x.is_rational()) return y.D_;
    if (y.is_rational()) return x.D_;
    if (x.D_ != y.D_)
        raise(ErrorKind::FieldMismatch, "mixed fields sqrt(" + std::to_string(x.D_) + ") and sqrt(" + std::to_string(y.D_) + ")");
    return x.D_;
}

QuadNum& QuadNum::operator+=(const QuadNum& o) {
    D_ = common_field(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& o) {
    D_ = common_field(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& o) {
    long D = common_field(*this, o);
    Rational na = a_ * o.a_ + b_ * o.b_ * Rational(D);
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    D_ = D;
    return *this;
}

QuadNum& QuadNum::operator/=(const QuadNum& o) { return *this *= o.inv(); }

bool operator==(const QuadNum& x, const QuadNum& y) {
    if (x.a_ != y.a_ || x.b_ != y.b_) return false;
    return x.b_.is_zero() || x.D_ == y.D_;
}

QuadNum QuadNum::inv() const {
    if (is_zero()) raise(ErrorKind::DivisionByZero, "inverse of zero in Q(sqrt(" + std::to_string(D_) + "))");
    Rational n = norm(*this);
    return QuadNum(a_ / n, -b_ / n, D_, raw_tag{});
}

QuadNum QuadNum::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    QuadNum result(Rational(1), Rational(0), D_, raw_tag{});
    QuadNum base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::string QuadNum::str() const {
    if (b_.is_zero()) return a_.str();
    std::string root = "sqrt(" + std::to_string(D_) + ")";
    std::string coef;
    if (b_ == Rational(1)) coef = root;
    else if (b_ == Rational(-1)) coef = "-" + root;
    else coef = b_.str() + "*" + root;
    if (a_.is_zero()) return coef;
    return a_.str() + (coef[0] == '-' ? "" : "+") + coef;
}

std::ostream& operator<<(std::ostream& os, const QuadNum& x) { return os << x.str(); }

namespace {

std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

}  // namespace

QuadNum QuadNum::parse(std::string_view text) {
    std::string s = strip_spaces(text);
    auto bad = [&]() -> QuadNum { raise(ErrorKind::MalformedInput, "malformed quadratic number: '" + std::string(text) + "'"); };
    if (s.empty()) return bad();
    auto p = s.find("sqrt(");
    if (p == std::string::npos) return QuadNum(Rational::parse(s));
    if (s.back() != ')') return bad();
    std::string dstr = s.substr(p + 5, s.size() - p - 6);
    Rational dval = Rational::parse(dstr);
    if (!dval.is_integer() || dval.sign() >= 0 || !dval.num().fits_slong_p()) return bad();
    long D = dval.num().get_si();

    std::string prefix = s.substr(0, p);
    Rational a(0), coef(1);
    bool star = !prefix.empty() && prefix.back() == '*';
    if (star) prefix.pop_back();
    if (star) {
        std::size_t split = std::string::npos;
        for (std::size_t i = prefix.size(); i-- > 1;) {
            if ((prefix[i] == '+' || prefix[i] == '-') && prefix[i - 1] != '/') { split = i; break; }
        }
        if (split == std::string::npos) {
            coef = Rational::parse(prefix);
        } else {
            a = Rational::parse(prefix.substr(0, split));
            coef = Rational::parse(prefix.substr(split));
        }
    } else if (prefix.empty() || prefix == "+") {
        coef = Rational(1);
    } else if (prefix == "-") {
        coef = Rational(-1);
    } else {
        char sign = prefix.back();
        if (sign != '+' && sign != '-') return bad();
        a = Rational::parse(prefix.substr(0, prefix.size() - 1));
        coef = Rational(sign == '+' ? 1 : -1);
    }
    return QuadNum(a, coef, D);
}

QuadNum conj(const QuadNum& x) {
    if (x.is_rational()) return x;
    return QuadNum(x.a(), -x.b(), x.D());
}

Rational norm(const QuadNum& x) { return x.a() * x.a() - x.b() * x.b() * Rational(x.D()); }

std::optional<QuadNum> sqrt_in_field(const QuadNum& x) {
    const long D = x.D();
    Rational r;
    if (x.is_rational()) {
        if (x.a().sign() >= 0) {
            if (x.a().sqrt_exact(r)) return QuadNum(r, D);
            return std::nullopt;
        }
        if ((x.a() / Rational(D)).sqrt_exact(r)) return QuadNum(Rational(0), r, D);
        return std::nullopt;
    }
    // (u + v√D)² = x  ⇔  u² + Dv² = a, 2uv = b; then u² − Dv² = √(a² − b²D).
    Rational s;
    if (!norm(x).sqrt_exact(s)) return std::nullopt;
    Rational u;
    if (!((x.a() + s) / Rational(2)).sqrt_exact(u) || u.is_zero()) return std::nullopt;
    if (x.b().sign() < 0) u = -u;
    Rational v = x.b() / (Rational(2) * u);
    return QuadNum(u, v, D);
}

std::vector<RootOfUnity> roots_of_unity_in_field(long D) {
    QuadNum one(Rational(1), D);
    std::vector<RootOfUnity> out{{one, 1}, {-one, 2}};
    long Dr = squarefree_part(mpz_class(D));
    if (Dr == -1) {
        QuadNum i = QuadNum::sqrt_of(-1);
        out.push_back({-i, 4});
        out.push_back({i, 4});
    } else if (Dr == -3) {
        QuadNum r = QuadNum::sqrt_of(-3);
        Rational h(1, 2);
        out.push_back({QuadNum(-h, -h, -3), 3});
        out.push_back({QuadNum(-h, h, -3), 3});
        out.push_back({QuadNum(h, -h, -3), 6});
        out.push_back({QuadNum(h, h, -3), 6});
    }
    return out;
}

std::optional<int> root_of_unity_order(const QuadNum& x) {
    for (const auto& r : roots_of_unity_in_field(x.D()))
        if (r.value == x) return r.order;
    return std::nullopt;
}

}  // namespace dehnkit
