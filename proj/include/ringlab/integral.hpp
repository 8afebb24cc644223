#pragma once

#include <vector>

#include "ringlab/config.hpp"
#include "ringlab/polynomial.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// R modulo the two-sided ideal kR = {k*x : x in R}, materialized as a table
// ring on the additive cosets.  coset_of maps old ids to quotient ids.
struct QuotientByMultiple {
    Ring quotient;
    std::vector<Elem> coset_of;
};

QuotientByMultiple quotient_mod_multiple(const Ring& r, const mpz_class& k,
                                         const Config& cfg = Config::defaults());

// Given a unital finite ring, an element a, and a content-1 polynomial q
// with q(a) = 0, produce a monic polynomial that also kills a: split the
// characteristic into prime powers, run the division-algorithm descent in
// each quotient R/(p^n R), and recombine with an extended-gcd partition of
// unity.  The result is re-verified by evaluation before being returned.
IntPolynomial monic_annihilator(const Ring& r, Elem a, const IntPolynomial& q,
                                const Config& cfg = Config::defaults());

}  // namespace ringlab
