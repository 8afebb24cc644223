#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/config.hpp"
#include "ringlab/graph.hpp"
#include "ringlab/localized.hpp"
#include "ringlab/polynomial.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// ----------------------------------------------------------- finite rings

// R^1 = Z_m x R with (k,a)(n,b) = (kn, na+kb+ab) and identity (1,0), where
// m is the characteristic of R.  Element (k,a) has id k*|R| + a, so the
// canonical embedding a -> (0,a) keeps the id.
Ring unitalization(const Ring& r, const Config& cfg = Config::defaults());

struct PropIsoResult {
    bool holds = false;
    // vertex i of the nonunital graph of R -> vertex of the unital graph
    // of R^1, induced by a -> (0,a).
    std::vector<std::uint32_t> vertex_map;
};

// Checks that a -> (0,a) induces an isomorphism between the nonunital
// graph of R and the unital graph of R^1.  A false result signals a bug
// somewhere, never a mathematical possibility.
PropIsoResult check_prop_iso(const Ring& r, const Config& cfg = Config::defaults());

// Two-sided action of a finite ring Z on a finite ring I, tabulated:
// left[z*|I| + x] = z.x and right[x*|Z| + z] = x.z.
struct ActionTables {
    std::vector<Elem> left;
    std::vector<Elem> right;
};

// The action by additive multiples, n.x = nx; this turns Z_m x R into R^1.
ActionTables natural_action(const Ring& z, const Ring& i);

// Empty string if every bimodule/associativity law holds; otherwise a
// description of the first violated law with its witnesses.
std::string validate_action(const Ring& z, const Ring& i, const ActionTables& act);

// Z x I with (z1,x1)(z2,x2) = (z1 z2, z1.x2 + x1.z2 + x1 x2); id = z*|I| + x.
// Unital iff Z is unital and some idempotent e satisfies 1.x = x - ex,
// x.1 = x - xe (searched exhaustively); the identity is then (1,e).
Ring semidirect_finite(const Ring& z, const Ring& i, const ActionTables& act,
                       const Config& cfg = Config::defaults());

// ----------------------------------------------- Z[1/m] |x I, symbolically

// The action of Z[1/m] on finite I is stored through its value on the
// generator 1/m: additive endomorphisms L (left) and Rm (right), plus the
// idempotent e that makes (1,e) the identity.  Everything is validated by
// finite checks before a handle is built.
struct SemidirectData {
    mpz_class m = 1;
    Ring ideal;
    Elem e = 0;
    std::vector<Elem> L;
    std::vector<Elem> Rm;
};

// JSON: {"m": 2, "ideal": "<ring-spec>", "e": 0, "L": [...], "Rm": [...]}.
SemidirectData semidirect_data_from_json(const std::string& text,
                                         const Config& cfg = Config::defaults());
SemidirectData semidirect_data_from_file(const std::string& path,
                                         const Config& cfg = Config::defaults());

// All violated validation conditions, with witnesses; empty means valid.
std::vector<std::string> validate_semidirect_data(const SemidirectData& d);

struct SDElement {
    LocalizedRational z;
    Elem x = 0;

    bool operator==(const SDElement& o) const { return z == o.z && x == o.x; }
    bool operator!=(const SDElement& o) const { return !(*this == o); }
    std::string str() const;  // "(1/2, 3)"
};

// Exact arithmetic in Z[1/m] |x I.  Immutable after construction.
class SemidirectRing {
  public:
    // Validates; throws PreconditionError listing the failures otherwise.
    static SemidirectRing create(SemidirectData d, const Config& cfg = Config::defaults());

    const SemidirectData& data() const { return d_; }
    const mpz_class& modulus() const { return d_.m; }
    const Ring& ideal() const { return d_.ideal; }

    SDElement element(LocalizedRational z, Elem x) const;
    SDElement zero() const;
    SDElement identity() const;  // (1, e)

    // z.x and x.z for any z in Z[1/m]: write z = a/m^k with k >= 1 and
    // apply a * L^k (resp. a * Rm^k).
    Elem act_left(const LocalizedRational& z, Elem x) const;
    Elem act_right(Elem x, const LocalizedRational& z) const;

    SDElement add(const SDElement& a, const SDElement& b) const;
    SDElement sub(const SDElement& a, const SDElement& b) const;
    SDElement neg(const SDElement& a) const;
    SDElement mul(const SDElement& a, const SDElement& b) const;
    SDElement int_scale(const mpz_class& n, const SDElement& a) const;
    SDElement power(const SDElement& a, std::uint64_t k) const;  // k >= 1
    // Unital evaluation: the constant coefficient multiplies (1, e).
    SDElement eval(const IntPolynomial& q, const SDElement& a) const;

  private:
    explicit SemidirectRing(SemidirectData d) : d_(std::move(d)) {}
    SemidirectData d_;
};

struct Stabilization {
    std::uint64_t u = 0, v = 0;  // least u > v >= 1 with f_u == f_v
    IntPolynomial h;             // x^u - x^v
};

// Finds the least exponents with (a,r)^u and (a,r)^v sharing their second
// component for every r in I; then h((a,r)) = (h(a), 0) for all r.
Stabilization stabilize_power_functions(const SemidirectRing& sd,
                                        const LocalizedRational& a);

// Exact membership of `target` in the unital subring generated by `elem`:
// returns a verified polynomial witness, or nullopt when target is provably
// outside.  Unbounded: witnesses can have any degree.
std::optional<IntPolynomial> sd_membership_witness(const SemidirectRing& sd,
                                                   const SDElement& elem,
                                                   const SDElement& target);

// Witness within explicit bounds: degree <= degree_bound and every
// coefficient in [-coeff_bound, coeff_bound].  Exhaustive over that box.
std::optional<IntPolynomial> sd_bounded_witness(const SemidirectRing& sd,
                                                const SDElement& elem,
                                                const SDElement& target,
                                                std::uint32_t degree_bound,
                                                std::int64_t coeff_bound);

struct CanonicalizeResult {
    SDElement canonical;       // (b, r + g1*e)
    IntPolynomial to_canonical;    // verified witness elem -> canonical
    IntPolynomial from_canonical;  // verified witness canonical -> elem
};

// The representative (b, g1 e + r) of the class of (a, r), where b is the
// squarefree representative of a and g1 the constant coefficient of
// K1(G1(x)); both directions are certified by witnesses.
CanonicalizeResult canonicalize(const SemidirectRing& sd, const SDElement& elem,
                                const Config& cfg = Config::defaults());

struct SDMerge {
    std::uint32_t from = 0, to = 0;  // candidate indices, same b
    IntPolynomial forward;           // candidate[from] -> candidate[to]
    IntPolynomial backward;
};

struct SDUnresolved {
    std::uint32_t first = 0, second = 0;
    std::string reason;
};

struct Lambda1SDResult {
    CompressedGraph graph;
    std::vector<SDElement> candidates;        // (b, r) in enumeration order
    std::vector<std::uint32_t> vertex_of;     // candidate -> graph vertex
    std::vector<SDMerge> merges;              // witnessed identifications
    std::vector<SDUnresolved> unresolved;     // equal classes, no in-bounds witness
};

// The unital compressed commuting graph of Z[1/m] |x I, built from the
// 2^s * |I| candidates (b, r).  Candidates are merged only on a pair of
// verified witnesses within cfg.merge_degree / cfg.merge_coeff; pairs that
// are provably equivalent but lack in-bounds witnesses are reported as
// unresolved (and kept separate in the graph).
Lambda1SDResult lambda1_semidirect(const SemidirectRing& sd,
                                   const Config& cfg = Config::defaults());

std::string lambda1_report_json(const Lambda1SDResult& r);

}  // namespace ringlab
