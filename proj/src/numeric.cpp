#include "binform/numeric.hpp"

namespace binform {

Int factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Int binomial(const Int& n, long k) {
    if (k < 0) return 0;
    if (n >= 0 && Int(k) > n) return 0;
    if (n < 0) {
        // binom(n, k) = (-1)^k binom(k - n - 1, k); not used by the syzygy
        // formulas (their arguments are nonnegative in range) but kept total.
        Int m = Int(k) - n - 1;
        Int r = binomial(m, k);
        return (k % 2 == 0) ? r : Int(-r);
    }
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Rat rat_binomial(long n, long k) { return Rat(binomial(Int(n), k)); }

std::string rat_to_string(const Rat& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) {
        s += "/";
        s += q.get_den().get_str();
    }
    return s;
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    Rat q;
    if (slash == std::string::npos) {
        q = Rat(Int(s));
    } else {
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::domain_error("parse_rat: zero denominator");
        q = Rat(num);
        q /= Rat(den);
    }
    return q;
}

std::string int_to_string(const Int& n) { return n.get_str(); }

std::string sqrt_decimal_string(const Int& num, const Int& den, int digits) {
    if (num < 0 || den <= 0) throw std::domain_error("sqrt_decimal_string: negative radicand");
    // floor(sqrt(num/den) * 10^digits) = floor(sqrt(num * den * 10^(2*digits)) / den)
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Int radicand = num * den * scale * scale;
    Int root;
    mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
    Int whole = root / (den * scale);
    Int frac = root / den - whole * scale;
    std::string f = frac.get_str();
    while (static_cast<int>(f.size()) < digits) f.insert(f.begin(), '0');
    return whole.get_str() + "." + f;
}

}  // namespace binform
