#include "ringlab/localized.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ringlab {

namespace {

// Strip every factor of p out of n.
void divide_out(mpz_class& n, const mpz_class& p) {
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
}

// Product of the distinct primes of m that divide n.  Correct whenever the
// prime support of n is contained in that of m.
mpz_class radical_within(const mpz_class& n, const mpz_class& m) {
    mpz_class rad = 1;
    for (const mpz_class& p : prime_support(m))
        if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) rad *= p;
    return rad;
}

bool support_in(const mpz_class& n, const std::vector<mpz_class>& primes) {
    mpz_class d = n;
    for (const mpz_class& p : primes) divide_out(d, p);
    return d == 1;
}

}  // namespace

LocalizedRational::LocalizedRational(mpq_class value, mpz_class m)
    : value_(std::move(value)), m_(std::move(m)) {
    if (m_ < 1) throw PreconditionError("localization modulus must be >= 1");
    value_.canonicalize();
    if (!support_in(value_.get_den(), prime_support(m_)))
        throw PreconditionError("denominator of " + value_.get_str() +
                                " is not invertible in Z[1/" + m_.get_str() + "]");
}

LocalizedRational LocalizedRational::parse(const std::string& text) {
    auto at = text.find('@');
    if (at == std::string::npos || at == 0 || at + 1 == text.size())
        throw ParseError("expected num/den@m, got \"" + text + "\"");
    try {
        mpq_class v(text.substr(0, at));
        return LocalizedRational(std::move(v), mpz_class(text.substr(at + 1)));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational \"" + text + "\"");
    }
}

LocalizedRational LocalizedRational::operator+(const LocalizedRational& o) const {
    if (m_ != o.m_) throw PreconditionError("mixed localization moduli");
    return LocalizedRational(value_ + o.value_, m_);
}

LocalizedRational LocalizedRational::operator-(const LocalizedRational& o) const {
    if (m_ != o.m_) throw PreconditionError("mixed localization moduli");
    return LocalizedRational(value_ - o.value_, m_);
}

LocalizedRational LocalizedRational::operator*(const LocalizedRational& o) const {
    if (m_ != o.m_) throw PreconditionError("mixed localization moduli");
    return LocalizedRational(value_ * o.value_, m_);
}

LocalizedRational LocalizedRational::operator-() const {
    return LocalizedRational(-value_, m_);
}

std::string LocalizedRational::str() const {
    return value_.get_str() + "@" + m_.get_str();
}

std::vector<mpz_class> prime_support(const mpz_class& n) {
    if (n < 1) throw PreconditionError("prime_support needs n >= 1");
    std::vector<mpz_class> primes;
    mpz_class rest = n;
    mpz_class p = 2;
    while (p * p <= rest) {
        if (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            primes.push_back(p);
            divide_out(rest, p);
        }
        p += (p == 2) ? 1 : 2;
    }
    if (rest > 1) primes.push_back(rest);
    return primes;
}

LocalizedRational class_representative(const LocalizedRational& a) {
    mpz_class b = radical_within(a.den(), a.modulus());
    return LocalizedRational(mpq_class(1, b), a.modulus());
}

std::optional<IntPolynomial> membership_witness(const LocalizedRational& a,
                                                const LocalizedRational& target,
                                                std::uint32_t degree_bound,
                                                std::int64_t coeff_bound) {
    (void)degree_bound;
    (void)coeff_bound;
    if (a.modulus() != target.modulus())
        throw PreconditionError("mixed localization moduli");
    // target lies in the unital subring generated by a exactly when its
    // denominator uses no prime beyond those of den(a); outside that, no
    // polynomial over Z can reach it.
    mpz_class da = a.den(), dt = target.den();
    std::vector<mpz_class> pa;
    for (const mpz_class& p : prime_support(a.modulus()))
        if (mpz_divisible_p(da.get_mpz_t(), p.get_mpz_t())) pa.push_back(p);
    if (!support_in(dt, pa)) return std::nullopt;
    if (a == target) return IntPolynomial::x();

    // First leg: send a to the squarefree representative 1/B.  With
    // u*num + v*den = 1, (den/B)(u*a + v) = 1/B.
    mpz_class B = 1;
    for (const mpz_class& p : pa) B *= p;
    mpz_class g, u, v;
    mpz_class na = a.num();
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), na.get_mpz_t(),
               da.get_mpz_t());
    mpz_class cof = da / B;
    IntPolynomial first(std::vector<mpz_class>{v * cof, u * cof});

    // Second leg: reach the target from 1/B as num*(B^k/den)*(1/B)^k with
    // k large enough that den | B^k.
    std::size_t k = 0;
    mpz_class Bk = 1;
    while (!mpz_divisible_p(Bk.get_mpz_t(), dt.get_mpz_t())) {
        Bk *= B;
        ++k;
    }
    IntPolynomial second = IntPolynomial::monomial(target.num() * (Bk / dt), k);

    IntPolynomial q = second.compose(first);
    if (q.eval(a.value()) != target.value())
        throw std::logic_error("localized witness failed verification");
    return q;
}

CompressedGraph lambda1_localized(const mpz_class& m, const Config& cfg) {
    std::vector<mpz_class> primes = prime_support(m);
    if (primes.size() >= 63 || (std::uint64_t{1} << primes.size()) > cfg.graph_order_limit)
        throw BudgetError("lambda1_localized: 2^" + std::to_string(primes.size()) +
                          " vertices exceeds graph_order_limit");
    std::vector<mpz_class> dens;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << primes.size()); ++mask) {
        mpz_class prod = 1;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) prod *= primes[i];
        dens.push_back(prod);
    }
    std::sort(dens.begin(), dens.end());
    CompressedGraph g = complete_with_loops(static_cast<std::uint32_t>(dens.size()));
    for (std::size_t i = 0; i < dens.size(); ++i)
        g.vertex_labels[i] = dens[i] == 1 ? "1" : "1/" + dens[i].get_str();
    return g;
}

std::uint64_t divisor_count(std::uint64_t n) {
    if (n == 0) throw PreconditionError("divisor_count needs n >= 1");
    std::uint64_t count = 1;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
        std::uint64_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        count *= e + 1;
    }
    if (n > 1) count *= 2;
    return count;
}

}  // namespace ringlab
