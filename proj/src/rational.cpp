#include "dehnkit/rational.hpp"

#include <cctype>
#include <functional>

#include "dehnkit/errors.hpp"

namespace dehnkit {

Rational::Rational(long n, long d) {
    if (d == 0) raise(ErrorKind::DivisionByZero, "zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) raise(ErrorKind::DivisionByZero, "zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

namespace {

bool valid_integer(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

mpz_class to_mpz(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view s = trim(text);
    auto slash = s.find('/');
    std::string_view ns = s.substr(0, slash);
    std::string_view ds = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!valid_integer(ns) || !valid_integer(ds))
        raise(ErrorKind::MalformedInput, "malformed rational: '" + std::string(text) + "'");
    mpz_class d = to_mpz(ds);
    if (d == 0) raise(ErrorKind::MalformedInput, "malformed rational: zero denominator in '" + std::string(text) + "'");
    return Rational(to_mpz(ns), d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) raise(ErrorKind::DivisionByZero, "rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inv() const {
    if (is_zero()) raise(ErrorKind::DivisionByZero, "inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

bool Rational::sqrt_exact(Rational& out) const {
    if (sign() < 0) return false;
    const mpz_class& n = v_.get_num();
    const mpz_class& d = v_.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    out = Rational(rn, rd);
    return true;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

int Rational::cmp_tuple(const Rational& a, const Rational& b) {
    int c = cmp(a.v_.get_num(), b.v_.get_num());
    if (c != 0) return c < 0 ? -1 : 1;
    c = cmp(a.v_.get_den(), b.v_.get_den());
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::size_t Rational::hash() const {
    std::size_t h = std::hash<std::string>{}(v_.get_num().get_str(16));
    return h * 1000003u ^ std::hash<std::string>{}(v_.get_den().get_str(16));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

long squarefree_part(const mpz_class& n, mpz_class* root) {
    if (n == 0) raise(ErrorKind::MalformedInput, "square-free part of zero");
    mpz_class m = ::abs(n);
    mpz_class sq = 1;
    mpz_class rest = 1;
    for (mpz_class p = 2; p * p <= m; ++p) {
        int e = 0;
        while (m % p == 0) { m /= p; ++e; }
        for (int i = 0; i < e / 2; ++i) sq *= p;
        if (e % 2) rest *= p;
    }
    rest *= m;
    if (root) *root = sq;
    if (!rest.fits_slong_p()) raise(ErrorKind::MalformedInput, "field discriminant too large");
    long r = rest.get_si();
    return n < 0 ? -r : r;
}

}  // namespace dehnkit
