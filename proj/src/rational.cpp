#include "adelic/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace adelic {

Rat::Rat(const Int& n, const Int& d) {
    if (sgn(d) == 0) throw DivisionByZeroCoefficient();
    q_ = mpq_class(n) / mpq_class(d);
}

Rat Rat::parse(const std::string& text) {
    auto digits = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!digits(text)) throw ParseError("malformed rational '" + text + "'", 0);
        return Rat(Int(text));
    }
    std::string n = text.substr(0, slash), d = text.substr(slash + 1);
    if (!digits(n) || !digits(d)) throw ParseError("malformed rational '" + text + "'", slash);
    Int den(d);
    if (sgn(den) == 0) throw DivisionByZeroCoefficient();
    return Rat(Int(n), den);
}

Rat Rat::inverse() const {
    if (is_zero()) throw DivisionByZeroCoefficient();
    return Rat(mpq_class(1 / q_));
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    if (is_zero()) {
        if (e < 0) throw DivisionByZeroCoefficient();
        return Rat(0);
    }
    mpq_class base = (e < 0) ? mpq_class(1 / q_) : q_;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), k);
    mpq_class r(n);
    r /= mpq_class(d);
    return Rat(r);
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw DivisionByZeroCoefficient();
    return Rat(mpq_class(a.q_ / b.q_));
}

double log_abs_int(const Int& z) {
    if (sgn(z) == 0) throw ValuationOfZero();
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

double Rat::log_abs() const {
    if (is_zero()) throw ValuationOfZero();
    return log_abs_int(q_.get_num()) - log_abs_int(q_.get_den());
}

std::string Rat::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace adelic
