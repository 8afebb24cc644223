#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/config.hpp"
#include "ringlab/polynomial.hpp"

namespace ringlab {

// Elements are dense ids 0 .. order-1.
using Elem = std::uint32_t;

namespace detail {
struct RingData {
    std::uint64_t order = 0;
    Elem zero = 0;
    std::optional<Elem> one;
    std::uint64_t characteristic = 0;  // 0 = could not be determined
    std::string descriptor;
    bool tabled = false;
    std::vector<Elem> add_t, mul_t, neg_t;  // row-major, only when tabled
    std::function<Elem(Elem, Elem)> add_f, mul_f;
    std::function<Elem(Elem)> neg_f;
};
}  // namespace detail

// A finite ring with dense element ids.  Immutable after construction and
// cheap to copy (shared carrier).  Small rings materialize full operation
// tables; large ones keep closed-form rules.
class Ring {
  public:
    Ring() = default;

    std::uint64_t order() const { return d_->order; }
    Elem zero() const { return d_->zero; }
    std::optional<Elem> identity() const { return d_->one; }
    bool is_unital() const { return d_->one.has_value(); }
    // Least m >= 1 with m*x = 0 for all x; 0 if unknown (defective tables).
    std::uint64_t characteristic() const { return d_->characteristic; }
    const std::string& descriptor() const { return d_->descriptor; }
    bool table_backed() const { return d_->tabled; }
    bool valid() const { return d_ != nullptr; }
    bool same_ring(const Ring& o) const { return d_ == o.d_; }

    Elem add(Elem a, Elem b) const {
        return d_->tabled ? d_->add_t[static_cast<std::size_t>(a) * d_->order + b]
                          : d_->add_f(a, b);
    }
    Elem mul(Elem a, Elem b) const {
        return d_->tabled ? d_->mul_t[static_cast<std::size_t>(a) * d_->order + b]
                          : d_->mul_f(a, b);
    }
    Elem neg(Elem a) const { return d_->tabled ? d_->neg_t[a] : d_->neg_f(a); }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    // n*a as an additive multiple (n may be negative or huge).
    Elem zmul(const mpz_class& n, Elem a) const;
    // a^k, k >= 1.
    Elem pow(Elem a, std::uint64_t k) const;
    // q(a); a nonzero constant term needs an identity element.
    Elem eval(const IntPolynomial& q, Elem a) const;

    const detail::RingData& data() const { return *d_; }

    // Low-level assembly from rules; tables are materialized when the order
    // is within cfg.table_order_limit.
    static Ring assemble(std::uint64_t order, std::function<Elem(Elem, Elem)> add,
                         std::function<Elem(Elem, Elem)> mul, std::function<Elem(Elem)> neg,
                         Elem zero, std::optional<Elem> one, std::uint64_t characteristic,
                         std::string descriptor, const Config& cfg = Config::defaults());

  private:
    explicit Ring(std::shared_ptr<const detail::RingData> d) : d_(std::move(d)) {}
    std::shared_ptr<const detail::RingData> d_;
    friend Ring ring_from_tables(std::uint64_t, std::vector<Elem>, std::vector<Elem>,
                                 std::optional<Elem>, std::string, const Config&);
};

// ------------------------------------------------------------- constructors

// Z_n; n = 1 is the zero ring (unital, 1 = 0, characteristic 1).
Ring z_mod(std::uint64_t n, const Config& cfg = Config::defaults());

// Additive group Z_n with all products zero.  Not unital for n > 1.
Ring zero_mult_ring(std::uint64_t n, const Config& cfg = Config::defaults());

// GF(p^n) as Z_p[x] modulo the lexicographically smallest monic irreducible
// of degree n (coefficient tuples compared constant term first).  Element id
// encodes the coefficient vector in base p, constant digit least significant.
Ring galois_field(std::uint64_t p, std::uint32_t n, const Config& cfg = Config::defaults());

// The modulus digits (constant first, length n+1, leading 1) used above.
std::vector<std::uint32_t> smallest_irreducible(std::uint64_t p, std::uint32_t n);

enum class MatrixShape { full, upper_triangular };

// k x k matrices over a unital base ring; upper_triangular keeps entries on
// and above the diagonal.  Entry tuples are encoded mixed-radix, first listed
// entry least significant; entries are listed row by row.
Ring matrix_ring(const Ring& base, std::uint32_t k, MatrixShape shape,
                 const Config& cfg = Config::defaults());

std::vector<Elem> matrix_decode(const Ring& base, std::uint32_t k, MatrixShape shape, Elem id);
Elem matrix_encode(const Ring& base, std::uint32_t k, MatrixShape shape,
                   const std::vector<Elem>& entries);

// R x S with componentwise operations; id = a * |S| + b.
Ring direct_product(const Ring& r, const Ring& s, const Config& cfg = Config::defaults());
Elem product_encode(const Ring& r, const Ring& s, Elem a, Elem b);
std::pair<Elem, Elem> product_decode(const Ring& r, const Ring& s, Elem x);

// A finite unital ring whose unital compressed commuting graph is the
// complete graph with loops on alpha vertices: the zero ring for alpha = 1,
// GF(2^(2^(alpha-1))) otherwise.  Refuses alphas whose carrier would exceed
// the graph budget (alpha <= 4 with stock settings).
Ring realize_complete_graph(std::uint32_t alpha, const Config& cfg = Config::defaults());

// Explicit tables (row-major).  Defects are tolerated here and reported by
// validate_ring; a missing additive identity falls back to id 0.
Ring ring_from_tables(std::uint64_t order, std::vector<Elem> add, std::vector<Elem> mul,
                      std::optional<Elem> identity, std::string descriptor,
                      const Config& cfg = Config::defaults());

// JSON: {"order": n, "add": [[..]], "mul": [[..]], "identity": i?, "name": s?}
Ring ring_from_table_json(const std::string& text, const Config& cfg = Config::defaults());
Ring ring_from_table_file(const std::string& path, const Config& cfg = Config::defaults());

// The subring on `members` (sorted ids, must be closed under add/neg/mul and
// contain zero) with inherited operations and fresh dense ids.
Ring subring_as_ring(const Ring& r, const std::vector<Elem>& members,
                     const Config& cfg = Config::defaults());

// ---------------------------------------------------------------- validation

struct AxiomFailure {
    std::string axiom;
    std::vector<Elem> witness;
};

struct RingReport {
    bool is_ring = false;
    bool is_unital = false;
    std::uint64_t characteristic = 0;
    bool exhaustive = false;  // full triple scan vs seeded sampling
    std::vector<AxiomFailure> failures;
};

// Checks the ring axioms: exhaustively up to cfg.exhaustive_validate_limit,
// by seeded sampling above it.  Violations come back as data.
RingReport validate_ring(const Ring& r, const Config& cfg = Config::defaults());

std::string ring_report_json(const RingReport& report);

}  // namespace ringlab
