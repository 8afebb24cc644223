#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/config.hpp"
#include "ringlab/graph.hpp"
#include "ringlab/polynomial.hpp"

namespace ringlab {

// An element of Z[1/m]: a reduced rational whose denominator only involves
// primes dividing m.  The modulus rides along so mixed-ring arithmetic can
// be rejected.
class LocalizedRational {
  public:
    LocalizedRational() : value_(0), m_(1) {}
    LocalizedRational(mpq_class value, mpz_class m);
    // Accepts "num/den@m" and "num@m".
    static LocalizedRational parse(const std::string& text);

    const mpq_class& value() const { return value_; }
    const mpz_class& modulus() const { return m_; }
    mpz_class num() const { return value_.get_num(); }
    mpz_class den() const { return value_.get_den(); }
    bool is_integer() const { return value_.get_den() == 1; }

    LocalizedRational operator+(const LocalizedRational& o) const;
    LocalizedRational operator-(const LocalizedRational& o) const;
    LocalizedRational operator*(const LocalizedRational& o) const;
    LocalizedRational operator-() const;
    bool operator==(const LocalizedRational& o) const {
        return m_ == o.m_ && value_ == o.value_;
    }
    bool operator!=(const LocalizedRational& o) const { return !(*this == o); }

    std::string str() const;  // "5/12@6", "3@6"

  private:
    mpq_class value_;
    mpz_class m_;
};

// Distinct primes dividing n, ascending.  n >= 1.
std::vector<mpz_class> prime_support(const mpz_class& n);

// The canonical class representative 1/(product of distinct primes dividing
// the denominator); integers map to 1.
LocalizedRational class_representative(const LocalizedRational& a);

// A polynomial q with q(a) = target, when target lies in the unital subring
// generated by a (decidable by denominator support).  The construction can
// exceed the requested bounds; anything returned has been verified by exact
// evaluation.  nullopt means no witness exists at all.
std::optional<IntPolynomial> membership_witness(
    const LocalizedRational& a, const LocalizedRational& target,
    std::uint32_t degree_bound = Config::defaults().witness_degree,
    std::int64_t coeff_bound = Config::defaults().witness_coeff);

// The unital compressed commuting graph of Z[1/m]: complete with loops on
// 2^s vertices, one per subset of the prime support, labeled by the
// representative fraction and ordered by denominator.
CompressedGraph lambda1_localized(const mpz_class& m,
                                  const Config& cfg = Config::defaults());

// Number of positive divisors of n >= 1.
std::uint64_t divisor_count(std::uint64_t n);

}  // namespace ringlab
