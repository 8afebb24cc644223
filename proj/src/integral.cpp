#include "ringlab/integral.hpp"

#include <algorithm>
#include <stdexcept>

#include "ringlab/localized.hpp"

namespace ringlab {

namespace {

// q = p*s1 + s0 with every coefficient of s0 coprime to p.
void split_by_prime(const IntPolynomial& q, const mpz_class& p, IntPolynomial& s0,
                    IntPolynomial& s1) {
    std::vector<mpz_class> c0(q.coeffs().size()), c1(q.coeffs().size());
    for (std::size_t i = 0; i < q.coeffs().size(); ++i) {
        const mpz_class& c = q.coeffs()[i];
        if (mpz_divisible_p(c.get_mpz_t(), p.get_mpz_t()))
            c1[i] = c / p;
        else
            c0[i] = c;
    }
    s0 = IntPolynomial(std::move(c0));
    s1 = IntPolynomial(std::move(c1));
}

// Monic annihilator of aq in a ring of characteristic p^n, by the
// division-algorithm descent: after normalizing the prime-free part s0 to
// leading coefficient 1, repeatedly divide s1 by s0 + p*r and keep the
// remainder; after n-1 rounds s0 + p*r kills aq.
IntPolynomial prime_power_branch(const Ring& q_ring, Elem aq, IntPolynomial q,
                                 const mpz_class& p, unsigned n) {
    mpz_class pn;
    mpz_pow_ui(pn.get_mpz_t(), p.get_mpz_t(), n);
    q = q.reduced_mod(pn);

    IntPolynomial s0, s1;
    split_by_prime(q, p, s0, s1);
    if (s0.is_zero()) throw PreconditionError("polynomial content is divisible by " + p.get_str());
    if (s0.leading() != 1) {
        mpz_class k;
        if (mpz_invert(k.get_mpz_t(), s0.leading().get_mpz_t(), pn.get_mpz_t()) == 0)
            throw std::logic_error("leading coefficient not invertible mod prime power");
        q = q.scaled(k).reduced_mod(pn);
        split_by_prime(q, p, s0, s1);
    }

    IntPolynomial r;  // r_0 = 0
    for (unsigned i = 1; i < n; ++i) {
        IntPolynomial divisor = s0 + r.scaled(p);
        IntPolynomial h, rem;
        s1.divmod_monic(divisor, h, rem);
        r = rem.reduced_mod(pn);
    }
    IntPolynomial monic = (s0 + r.scaled(p)).reduced_mod(pn);
    if (!monic.is_monic() || q_ring.eval(monic, aq) != q_ring.zero())
        throw std::logic_error("descent produced a bad annihilator mod " + p.get_str() + "^" +
                               std::to_string(n));
    return monic;
}

}  // namespace

QuotientByMultiple quotient_mod_multiple(const Ring& r, const mpz_class& k, const Config& cfg) {
    if (k < 1) throw PreconditionError("quotient_mod_multiple needs k >= 1");
    const std::uint64_t order = r.order();
    // kR is an additive subgroup and a two-sided ideal: k(xy) = (kx)y = x(ky).
    std::vector<bool> in_ideal(order, false);
    for (Elem x = 0; x < order; ++x) in_ideal[r.zmul(k, x)] = true;
    std::vector<Elem> ideal;
    for (Elem x = 0; x < order; ++x)
        if (in_ideal[x]) ideal.push_back(x);

    // Name each coset by its least member.
    std::vector<Elem> leader(order, 0);
    std::vector<bool> seen(order, false);
    std::vector<Elem> reps;
    for (Elem x = 0; x < order; ++x) {
        if (seen[x]) continue;
        for (Elem j : ideal) {
            Elem y = r.add(x, j);
            seen[y] = true;
            leader[y] = x;
        }
        reps.push_back(x);
    }
    std::vector<Elem> dense(order, 0);
    for (std::size_t i = 0; i < reps.size(); ++i) dense[reps[i]] = static_cast<Elem>(i);

    std::vector<Elem> coset_of(order);
    for (Elem x = 0; x < order; ++x) coset_of[x] = dense[leader[x]];

    const std::uint64_t qn = reps.size();
    std::vector<Elem> add(qn * qn), mul(qn * qn);
    for (std::uint64_t i = 0; i < qn; ++i)
        for (std::uint64_t j = 0; j < qn; ++j) {
            add[i * qn + j] = coset_of[r.add(reps[i], reps[j])];
            mul[i * qn + j] = coset_of[r.mul(reps[i], reps[j])];
        }
    std::optional<Elem> one;
    if (r.is_unital()) one = coset_of[*r.identity()];
    Ring q = ring_from_tables(qn, std::move(add), std::move(mul), one,
                              r.descriptor() + "/(" + k.get_str() + "*R)", cfg);
    return QuotientByMultiple{std::move(q), std::move(coset_of)};
}

IntPolynomial monic_annihilator(const Ring& r, Elem a, const IntPolynomial& q,
                                const Config& cfg) {
    if (!r.is_unital()) throw PreconditionError("monic_annihilator needs a unital ring");
    if (a >= r.order()) throw PreconditionError("element id out of range");
    if (q.is_zero() || content(q) != 1)
        throw PreconditionError("polynomial must have content 1");
    if (r.eval(q, a) != r.zero())
        throw PreconditionError("polynomial does not annihilate the element");
    mpz_class m(static_cast<unsigned long>(r.characteristic()));
    if (m < 1) throw PreconditionError("ring characteristic unknown");
    if (m == 1) return IntPolynomial::x();  // zero ring: anything monic kills 0

    // Factor m, run one descent per prime power.
    std::vector<std::pair<mpz_class, unsigned>> factors;
    {
        mpz_class rest = m;
        for (const mpz_class& p : prime_support(m)) {
            unsigned e = 0;
            while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
                rest /= p;
                ++e;
            }
            factors.emplace_back(p, e);
        }
    }
    std::vector<IntPolynomial> branch;
    std::vector<mpz_class> cofactor;  // m_i = m / p_i^{n_i}
    for (const auto& [p, n] : factors) {
        mpz_class pn;
        mpz_pow_ui(pn.get_mpz_t(), p.get_mpz_t(), n);
        QuotientByMultiple qb = quotient_mod_multiple(r, pn, cfg);
        if (qb.quotient.characteristic() != pn.get_ui())
            throw std::logic_error("quotient characteristic mismatch");
        branch.push_back(prime_power_branch(qb.quotient, qb.coset_of[a], q, p, n));
        cofactor.push_back(m / pn);
    }

    // Partition of unity over the pairwise-coprime cofactors, then stitch the
    // branch polynomials together at a common degree.
    std::vector<mpz_class> c(branch.size());
    mpz_class g = cofactor[0];
    c[0] = 1;
    for (std::size_t i = 1; i < branch.size(); ++i) {
        mpz_class g2, u, v;
        mpz_gcdext(g2.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t(),
                   cofactor[i].get_mpz_t());
        for (std::size_t j = 0; j < i; ++j) c[j] *= u;
        c[i] = v;
        g = g2;
    }
    if (g != 1) throw std::logic_error("cofactors not coprime");

    long d = 0;
    for (const auto& b : branch) d = std::max(d, b.degree());
    IntPolynomial s;
    for (std::size_t i = 0; i < branch.size(); ++i) {
        IntPolynomial shifted =
            branch[i] * IntPolynomial::monomial(1, static_cast<std::size_t>(d - branch[i].degree()));
        s = s + shifted.scaled(c[i] * cofactor[i]);
    }
    s = s.reduced_mod(m);
    if (!s.is_monic() || r.eval(s, a) != r.zero())
        throw std::logic_error("recombined annihilator failed verification");
    return s;
}

}  // namespace ringlab
