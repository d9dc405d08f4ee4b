#include "nearcentral/numeric.hpp"

#include <cstdlib>

namespace nearcentral {

Integer factorial(int n) {
    if (n < 0) throw DomainError("factorial of negative number");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer ipow(const Integer& base, unsigned exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational rpow(const Rational& base, unsigned exponent) {
    Rational r(ipow(base.get_num(), exponent), ipow(base.get_den(), exponent));
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Integer require_integer(const Rational& q, const char* what) {
    if (q.get_den() != 1) {
        throw std::logic_error(std::string(what) + ": expected an integer, got " + to_string(q));
    }
    return q.get_num();
}

int default_max_n() {
    if (const char* env = std::getenv("NEARCENTRAL_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 16) return static_cast<int>(v);
    }
    return 9;
}

}  // namespace nearcentral
