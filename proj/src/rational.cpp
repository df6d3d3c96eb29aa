#include "fairsquare/rational.hpp"

namespace fairsq {

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw InvalidParameter("empty rational literal");
    std::string num = s, den = "1";
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (!is_int(num) || !is_int(den)) throw InvalidParameter("bad rational literal: " + s);
    Int n(num), d(den);
    if (d == 0) throw InvalidParameter("zero denominator: " + s);
    Rat r(n, d);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rat_decimal(const Rat& r, int digits) {
    Int num = r.get_num(), den = r.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    Int ip = num / den;
    Int rem = num % den;
    std::string out = (neg ? "-" : "") + ip.get_str();
    if (digits <= 0) return out;
    out += '.';
    for (int i = 0; i < digits; ++i) {
        rem *= 10;
        Int d = rem / den;
        rem %= den;
        out += static_cast<char>('0' + d.get_si());
    }
    return out;
}

Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Int rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

long rat_floor_long(const Rat& r) {
    Int q = rat_floor(r);
    if (!q.fits_slong_p()) throw InvalidParameter("floor out of range");
    return q.get_si();
}

std::optional<Rat> rat_sqrt_exact(const Rat& r) {
    if (r < 0) return std::nullopt;
    Int num = r.get_num(), den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rat root(sn, sd);
    root.canonicalize();
    return root;
}

Rat simplest_rational_between(const Rat& lo, const Rat& hi) {
    if (lo > hi) throw InvalidParameter("empty interval");
    if (lo == hi) return lo;
    if (lo <= 0 && hi >= 0) return Rat(0);
    if (hi < 0) return -simplest_rational_between(Rat(-hi), Rat(-lo));
    // Both positive: peel off integer parts.
    Int c = rat_ceil(lo);
    if (Rat(c) <= hi) return Rat(c);
    Int a = rat_floor(lo);
    Rat tail = simplest_rational_between(Rat(1) / (hi - Rat(a)), Rat(1) / (lo - Rat(a)));
    Rat out = Rat(a) + Rat(1) / tail;
    out.canonicalize();
    return out;
}

const Rat& mark_epsilon() {
    static const Rat eps = [] {
        Int den = 1;
        den <<= 64;
        Rat e(Int(1), den);
        e.canonicalize();
        return e;
    }();
    return eps;
}

}  // namespace fairsq
