#include "ringlab/polynomial.hpp"

#include <sstream>

#include "ringlab/config.hpp"

namespace ringlab {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) {
    return IntPolynomial{{c}};
}

IntPolynomial IntPolynomial::monomial(const mpz_class& c, std::size_t degree) {
    std::vector<mpz_class> v(degree + 1, mpz_class(0));
    v[degree] = c;
    return IntPolynomial{std::move(v)};
}

IntPolynomial IntPolynomial::x() {
    return monomial(1, 1);
}

IntPolynomial IntPolynomial::parse(const std::string& text) {
    std::vector<mpz_class> v;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw ParseError("empty coefficient in polynomial: " + text);
        item = item.substr(b, e - b + 1);
        try {
            v.emplace_back(item);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad coefficient '" + item + "' in polynomial: " + text);
        }
    }
    if (v.empty()) throw ParseError("empty polynomial");
    return IntPolynomial{std::move(v)};
}

mpz_class IntPolynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
}

mpz_class IntPolynomial::leading() const {
    return coeffs_.empty() ? mpz_class(0) : coeffs_.back();
}

bool IntPolynomial::is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == 1;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<mpz_class> v(std::max(coeffs_.size(), o.coeffs_.size()), mpz_class(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return IntPolynomial{std::move(v)};
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    return *this + (-o);
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<mpz_class> v = coeffs_;
    for (auto& c : v) c = -c;
    return IntPolynomial{std::move(v)};
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<mpz_class> v(coeffs_.size() + o.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial{std::move(v)};
}

IntPolynomial IntPolynomial::scaled(const mpz_class& c) const {
    std::vector<mpz_class> v = coeffs_;
    for (auto& x : v) x *= c;
    return IntPolynomial{std::move(v)};
}

IntPolynomial IntPolynomial::compose(const IntPolynomial& p) const {
    IntPolynomial acc;  // Horner on the outer polynomial
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * p + constant(*it);
    return acc;
}

mpq_class IntPolynomial::eval(const mpq_class& x) const {
    mpq_class acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + mpq_class(*it);
    return acc;
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
    mpz_class acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::reduced_mod(const mpz_class& m) const {
    if (m < 1) throw PreconditionError("reduced_mod wants m >= 1");
    std::vector<mpz_class> v = coeffs_;
    for (auto& c : v) {
        mpz_class r;
        mpz_mod(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());  // always in [0, m)
        c = r;
    }
    return IntPolynomial{std::move(v)};
}

void IntPolynomial::divmod_monic(const IntPolynomial& d, IntPolynomial& q, IntPolynomial& r) const {
    if (!d.is_monic()) throw PreconditionError("divmod_monic wants a monic divisor");
    std::vector<mpz_class> rem = coeffs_;
    std::size_t dd = static_cast<std::size_t>(d.degree());
    std::vector<mpz_class> quo;
    if (rem.size() > dd) quo.assign(rem.size() - dd, mpz_class(0));
    while (rem.size() > dd) {
        mpz_class c = rem.back();
        std::size_t shift = rem.size() - 1 - dd;
        quo[shift] = c;
        for (std::size_t i = 0; i <= dd; ++i) rem[shift + i] -= c * d.coeffs_[i];
        while (!rem.empty() && rem.back() == 0) rem.pop_back();  // top term cancels exactly
    }
    q = IntPolynomial{std::move(quo)};
    r = IntPolynomial{std::move(rem)};
}

std::string IntPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out << ",";
        out << coeffs_[i].get_str();
    }
    return out.str();
}

std::string IntPolynomial::pretty() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const mpz_class& c = coeffs_[i];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) out << a.get_str();
        if (i >= 1) out << "x";
        if (i >= 2) out << "^" << i;
    }
    return out.str();
}

mpz_class content(const IntPolynomial& q) {
    if (q.is_zero()) throw PreconditionError("content of the zero polynomial is undefined");
    mpz_class g(0);
    for (const auto& c : q.coeffs()) g = gcd(g, c);
    return abs(g);
}

}  // namespace ringlab
