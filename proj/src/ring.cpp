#include "ringlab/ring.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "json.hpp"

namespace ringlab {

// --------------------------------------------------------------- primitives

Ring Ring::assemble(std::uint64_t order, std::function<Elem(Elem, Elem)> add,
                    std::function<Elem(Elem, Elem)> mul, std::function<Elem(Elem)> neg,
                    Elem zero, std::optional<Elem> one, std::uint64_t characteristic,
                    std::string descriptor, const Config& cfg) {
    if (order == 0) throw PreconditionError("a ring needs at least one element");
    if (order > cfg.rule_order_limit)
        throw BudgetError("carrier of " + descriptor + " exceeds rule_order_limit (" +
                          std::to_string(cfg.rule_order_limit) + ")");
    auto d = std::make_shared<detail::RingData>();
    d->order = order;
    d->zero = zero;
    d->one = one;
    d->characteristic = characteristic;
    d->descriptor = std::move(descriptor);
    if (order <= cfg.table_order_limit) {
        d->tabled = true;
        d->add_t.resize(order * order);
        d->mul_t.resize(order * order);
        d->neg_t.resize(order);
        for (Elem a = 0; a < order; ++a) {
            d->neg_t[a] = neg(a);
            for (Elem b = 0; b < order; ++b) {
                d->add_t[static_cast<std::size_t>(a) * order + b] = add(a, b);
                d->mul_t[static_cast<std::size_t>(a) * order + b] = mul(a, b);
            }
        }
    } else {
        d->add_f = std::move(add);
        d->mul_f = std::move(mul);
        d->neg_f = std::move(neg);
    }
    return Ring{std::move(d)};
}

Elem Ring::zmul(const mpz_class& n, Elem a) const {
    mpz_class k = n;
    if (d_->characteristic >= 1) {
        mpz_class m(static_cast<unsigned long>(d_->characteristic));
        mpz_mod(k.get_mpz_t(), k.get_mpz_t(), m.get_mpz_t());
    } else if (k < 0) {
        return neg(zmul(-k, a));
    }
    Elem acc = zero(), base = a;
    mpz_class rest = k;
    while (rest != 0) {
        if (mpz_odd_p(rest.get_mpz_t())) acc = add(acc, base);
        base = add(base, base);
        rest >>= 1;
    }
    return acc;
}

Elem Ring::pow(Elem a, std::uint64_t k) const {
    if (k == 0) throw PreconditionError("pow wants k >= 1");
    int top = 63;
    while (top > 0 && !((k >> top) & 1)) --top;
    Elem acc = a;
    for (int bit = top - 1; bit >= 0; --bit) {
        acc = mul(acc, acc);
        if ((k >> bit) & 1) acc = mul(acc, a);
    }
    return acc;
}

Elem Ring::eval(const IntPolynomial& q, Elem a) const {
    Elem acc = zero();
    if (q.is_zero()) return acc;
    const auto& c = q.coeffs();
    if (c[0] != 0) {
        if (!is_unital())
            throw PreconditionError("constant term needs an identity in " + descriptor());
        acc = zmul(c[0], *identity());
    }
    Elem p = zero();
    for (std::size_t t = 1; t < c.size(); ++t) {
        p = (t == 1) ? a : mul(p, a);
        if (c[t] != 0) acc = add(acc, zmul(c[t], p));
    }
    return acc;
}

// ------------------------------------------------------------ constructions

Ring z_mod(std::uint64_t n, const Config& cfg) {
    if (n == 0) throw PreconditionError("z_mod wants n >= 1");
    auto add = [n](Elem a, Elem b) { return static_cast<Elem>((static_cast<std::uint64_t>(a) + b) % n); };
    auto mul = [n](Elem a, Elem b) { return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % n); };
    auto neg = [n](Elem a) { return static_cast<Elem>(a == 0 ? 0 : n - a); };
    std::optional<Elem> one = (n == 1) ? Elem{0} : Elem{1};
    return Ring::assemble(n, add, mul, neg, 0, one, n, "Z_" + std::to_string(n), cfg);
}

Ring zero_mult_ring(std::uint64_t n, const Config& cfg) {
    if (n == 0) throw PreconditionError("zero_mult_ring wants n >= 1");
    auto add = [n](Elem a, Elem b) { return static_cast<Elem>((static_cast<std::uint64_t>(a) + b) % n); };
    auto mul = [](Elem, Elem) { return Elem{0}; };
    auto neg = [n](Elem a) { return static_cast<Elem>(a == 0 ? 0 : n - a); };
    std::optional<Elem> one;
    if (n == 1) one = 0;  // the zero ring is unital with 1 = 0
    return Ring::assemble(n, add, mul, neg, 0, one, n, "zero-mult Z_" + std::to_string(n), cfg);
}

// --- GF(p)[x] scratch arithmetic on digit vectors (constant term first) ----

namespace {

using Digits = std::vector<std::uint32_t>;

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void dig_trim(Digits& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a * b reduced by the monic modulus f (degree n), all mod p.
Digits dig_mulmod(const Digits& a, const Digits& b, const Digits& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    std::size_t n = f.size() - 1;
    std::vector<std::uint64_t> conv(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) conv[i + j] += static_cast<std::uint64_t>(a[i]) * b[j] % p;
    for (auto& c : conv) c %= p;
    for (std::size_t i = conv.size(); i-- > n;) {
        std::uint64_t c = conv[i] % p;
        if (c == 0) continue;
        conv[i] = 0;
        for (std::size_t j = 0; j < n; ++j) {
            std::uint64_t sub = c * f[j] % p;
            conv[i - n + j] = (conv[i - n + j] + p - sub) % p;
        }
    }
    conv.resize(std::min(conv.size(), n));
    Digits out(conv.begin(), conv.end());
    dig_trim(out);
    return out;
}

// x^e mod f, exponent as big integer.
Digits dig_xpowmod(const mpz_class& e, const Digits& f, std::uint64_t p) {
    Digits result{1};  // 1
    Digits base{0, 1};  // x
    if (f.size() == 2) {  // degree-1 modulus: reduce x first
        base = dig_mulmod(Digits{1}, Digits{0, 1}, f, p);
    }
    mpz_class rest = e;
    std::size_t bits = mpz_sizeinbase(rest.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = dig_mulmod(result, result, f, p);
        if (mpz_tstbit(rest.get_mpz_t(), i)) result = dig_mulmod(result, base, f, p);
    }
    return result;
}

std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

Digits dig_gcd(Digits a, Digits b, std::uint64_t p) {
    dig_trim(a);
    dig_trim(b);
    while (!b.empty()) {
        // a mod b via synthetic division (b made monic on the fly)
        std::uint64_t lead_inv = inv_mod_u64(b.back(), p);
        while (a.size() >= b.size()) {
            std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
            std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t sub = c * b[j] % p;
                a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
            }
            dig_trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

mpz_class mpz_pow_u(std::uint64_t base, std::uint64_t exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return r;
}

bool dig_is_x(const Digits& a) { return a.size() == 2 && a[0] == 0 && a[1] == 1; }

// Finite-field irreducibility test: f (monic, degree n) is irreducible over
// GF(p) iff x^(p^n) = x mod f and gcd(x^(p^(n/q)) - x, f) = 1 for every
// prime q | n.
bool dig_irreducible(const Digits& f, std::uint64_t p) {
    std::size_t n = f.size() - 1;
    Digits xp = dig_xpowmod(mpz_pow_u(p, n), f, p);
    if (!dig_is_x(xp)) return false;
    std::vector<std::uint64_t> prime_divs;
    std::uint64_t m = n;
    for (std::uint64_t q = 2; q * q <= m; ++q)
        while (m % q == 0) {
            if (prime_divs.empty() || prime_divs.back() != q) prime_divs.push_back(q);
            m /= q;
        }
    if (m > 1) prime_divs.push_back(m);
    for (std::uint64_t q : prime_divs) {
        Digits h = dig_xpowmod(mpz_pow_u(p, n / q), f, p);
        // h - x
        Digits diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
        dig_trim(diff);
        Digits g = dig_gcd(diff, f, p);
        if (g.size() > 1) return false;
    }
    return true;
}

}  // namespace

std::vector<std::uint32_t> smallest_irreducible(std::uint64_t p, std::uint32_t n) {
    if (!is_prime_u64(p)) throw PreconditionError("galois_field wants a prime p");
    if (n == 0) throw PreconditionError("galois_field wants n >= 1");
    if (n == 1) return {0, 1};  // x
    // Scan coefficient tuples (c_0, ..., c_{n-1}) in lexicographic order,
    // constant term compared first.
    mpz_class count = mpz_pow_u(p, n);
    for (mpz_class k(0); k < count; ++k) {
        Digits f(n + 1, 0);
        f[n] = 1;
        mpz_class rest = k;
        for (std::uint32_t i = 0; i < n; ++i) {
            // digit for c_i sits at weight p^(n-1-i): c_0 most significant
            mpz_class w = mpz_pow_u(p, n - 1 - i);
            mpz_class d = rest / w;
            rest -= d * w;
            f[i] = static_cast<std::uint32_t>(d.get_ui());
        }
        if (dig_irreducible(f, p)) return {f.begin(), f.end()};
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

Ring galois_field(std::uint64_t p, std::uint32_t n, const Config& cfg) {
    if (!is_prime_u64(p)) throw PreconditionError("galois_field wants a prime p");
    if (n == 0) throw PreconditionError("galois_field wants n >= 1");
    mpz_class order_z = mpz_pow_u(p, n);
    if (order_z > static_cast<unsigned long>(cfg.rule_order_limit))
        throw BudgetError("GF(" + std::to_string(p) + "^" + std::to_string(n) +
                          ") exceeds rule_order_limit");
    std::uint64_t order = static_cast<std::uint64_t>(order_z.get_ui());
    Digits f = smallest_irreducible(p, n);
    auto decode = [p, n](Elem id) {
        Digits d(n);
        std::uint64_t rest = id;
        for (std::uint32_t i = 0; i < n; ++i) {
            d[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        return d;
    };
    auto encode = [p, n](const Digits& d) {
        std::uint64_t id = 0, w = 1;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (i < d.size()) id += d[i] * w;
            w *= p;
        }
        return static_cast<Elem>(id);
    };
    auto add = [=](Elem a, Elem b) {
        Digits x = decode(a), y = decode(b);
        for (std::uint32_t i = 0; i < n; ++i) x[i] = static_cast<std::uint32_t>((x[i] + y[i]) % p);
        return encode(x);
    };
    auto neg = [=](Elem a) {
        Digits x = decode(a);
        for (auto& c : x) c = static_cast<std::uint32_t>((p - c) % p);
        return encode(x);
    };
    auto mul = [=](Elem a, Elem b) {
        Digits x = decode(a), y = decode(b);
        dig_trim(x);
        dig_trim(y);
        return encode(dig_mulmod(x, y, f, p));
    };
    std::ostringstream desc;
    desc << "GF(" << p;
    if (n > 1) desc << "^" << n;
    desc << ")";
    return Ring::assemble(order, add, mul, neg, 0, Elem{1}, p, desc.str(), cfg);
}

// ------------------------------------------------------------- matrix rings

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> entry_slots(std::uint32_t k,
                                                                 MatrixShape shape) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j)
            if (shape == MatrixShape::full || j >= i) slots.emplace_back(i, j);
    return slots;
}

}  // namespace

std::vector<Elem> matrix_decode(const Ring& base, std::uint32_t k, MatrixShape shape, Elem id) {
    auto slots = entry_slots(k, shape);
    std::uint64_t b = base.order();
    std::vector<Elem> entries(slots.size());
    std::uint64_t rest = id;
    for (std::size_t t = 0; t < slots.size(); ++t) {
        entries[t] = static_cast<Elem>(rest % b);
        rest /= b;
    }
    return entries;
}

Elem matrix_encode(const Ring& base, std::uint32_t k, MatrixShape shape,
                   const std::vector<Elem>& entries) {
    auto slots = entry_slots(k, shape);
    if (entries.size() != slots.size()) throw PreconditionError("wrong entry count");
    std::uint64_t b = base.order(), id = 0, w = 1;
    for (std::size_t t = 0; t < slots.size(); ++t) {
        id += entries[t] * w;
        w *= b;
    }
    return static_cast<Elem>(id);
}

Ring matrix_ring(const Ring& base, std::uint32_t k, MatrixShape shape, const Config& cfg) {
    if (!base.is_unital()) throw PreconditionError("matrix_ring wants a unital base ring");
    if (k == 0) throw PreconditionError("matrix_ring wants k >= 1");
    auto slots = entry_slots(k, shape);
    mpz_class order_z = 1;
    for (std::size_t t = 0; t < slots.size(); ++t) order_z *= static_cast<unsigned long>(base.order());
    if (order_z > static_cast<unsigned long>(cfg.rule_order_limit))
        throw BudgetError("matrix ring carrier exceeds rule_order_limit");
    std::uint64_t order = static_cast<std::uint64_t>(order_z.get_ui());

    // slot index for (i, j); full matrices store every entry, triangular ones
    // only j >= i (reads below the diagonal yield zero).
    auto slot_of = [k, shape](std::uint32_t i, std::uint32_t j) -> std::size_t {
        if (shape == MatrixShape::full) return static_cast<std::size_t>(i) * k + j;
        return static_cast<std::size_t>(i) * k - static_cast<std::size_t>(i) * (i - 1) / 2 + (j - i);
    };
    auto add = [=](Elem a, Elem b) {
        auto x = matrix_decode(base, k, shape, a), y = matrix_decode(base, k, shape, b);
        for (std::size_t t = 0; t < x.size(); ++t) x[t] = base.add(x[t], y[t]);
        return matrix_encode(base, k, shape, x);
    };
    auto neg = [=](Elem a) {
        auto x = matrix_decode(base, k, shape, a);
        for (auto& e : x) e = base.neg(e);
        return matrix_encode(base, k, shape, x);
    };
    auto mul = [=](Elem a, Elem b) {
        auto x = matrix_decode(base, k, shape, a), y = matrix_decode(base, k, shape, b);
        std::vector<Elem> z(x.size(), base.zero());
        for (std::uint32_t i = 0; i < k; ++i) {
            std::uint32_t j0 = (shape == MatrixShape::full) ? 0 : i;
            for (std::uint32_t j = j0; j < k; ++j) {
                Elem acc = base.zero();
                std::uint32_t l0 = (shape == MatrixShape::full) ? 0 : i;
                std::uint32_t l1 = (shape == MatrixShape::full) ? k - 1 : j;
                for (std::uint32_t l = l0; l <= l1; ++l)
                    acc = base.add(acc, base.mul(x[slot_of(i, l)], y[slot_of(l, j)]));
                z[slot_of(i, j)] = acc;
            }
        }
        return matrix_encode(base, k, shape, z);
    };
    std::vector<Elem> id_entries(slots.size(), base.zero());
    for (std::size_t t = 0; t < slots.size(); ++t)
        if (slots[t].first == slots[t].second) id_entries[t] = *base.identity();
    Elem one = matrix_encode(base, k, shape, id_entries);
    std::string desc = (shape == MatrixShape::full ? "M_" : "T_") + std::to_string(k) + "(" +
                       base.descriptor() + ")";
    return Ring::assemble(order, add, mul, neg, 0, one, base.characteristic(), desc, cfg);
}

// ----------------------------------------------------------- direct product

Elem product_encode(const Ring& r, const Ring& s, Elem a, Elem b) {
    (void)r;
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * s.order() + b);
}

std::pair<Elem, Elem> product_decode(const Ring& r, const Ring& s, Elem x) {
    (void)r;
    return {static_cast<Elem>(x / s.order()), static_cast<Elem>(x % s.order())};
}

Ring direct_product(const Ring& r, const Ring& s, const Config& cfg) {
    mpz_class order_z = mpz_class(static_cast<unsigned long>(r.order())) *
                        static_cast<unsigned long>(s.order());
    if (order_z > static_cast<unsigned long>(cfg.rule_order_limit))
        throw BudgetError("direct product carrier exceeds rule_order_limit");
    std::uint64_t so = s.order();
    auto add = [=](Elem a, Elem b) {
        return static_cast<Elem>(static_cast<std::uint64_t>(r.add(a / so, b / so)) * so +
                                 s.add(a % so, b % so));
    };
    auto mul = [=](Elem a, Elem b) {
        return static_cast<Elem>(static_cast<std::uint64_t>(r.mul(a / so, b / so)) * so +
                                 s.mul(a % so, b % so));
    };
    auto neg = [=](Elem a) {
        return static_cast<Elem>(static_cast<std::uint64_t>(r.neg(a / so)) * so + s.neg(a % so));
    };
    Elem zero = product_encode(r, s, r.zero(), s.zero());
    std::optional<Elem> one;
    if (r.is_unital() && s.is_unital()) one = product_encode(r, s, *r.identity(), *s.identity());
    std::uint64_t ch = (r.characteristic() && s.characteristic())
                           ? std::lcm(r.characteristic(), s.characteristic())
                           : 0;
    return Ring::assemble(static_cast<std::uint64_t>(order_z.get_ui()), add, mul, neg, zero, one,
                          ch, r.descriptor() + " x " + s.descriptor(), cfg);
}

Ring realize_complete_graph(std::uint32_t alpha, const Config& cfg) {
    if (alpha == 0) throw PreconditionError("realize_complete_graph wants alpha >= 1");
    if (alpha == 1) return z_mod(1, cfg);
    if (alpha > 21) throw BudgetError("alpha far beyond any configurable budget");
    std::uint32_t n = 1u << (alpha - 1);
    mpz_class order_z = mpz_pow_u(2, n);
    if (order_z > static_cast<unsigned long>(cfg.graph_order_limit))
        throw BudgetError("realize_complete_graph(" + std::to_string(alpha) +
                          ") needs carrier 2^" + std::to_string(n) +
                          " > graph_order_limit (alpha <= 4 with stock settings)");
    return galois_field(2, n, cfg);
}

// ------------------------------------------------------------- table-backed

Ring ring_from_tables(std::uint64_t order, std::vector<Elem> add, std::vector<Elem> mul,
                      std::optional<Elem> identity, std::string descriptor, const Config& cfg) {
    if (order == 0) throw PreconditionError("a ring needs at least one element");
    if (order > cfg.table_order_limit)
        throw BudgetError("explicit tables above table_order_limit");
    if (add.size() != order * order || mul.size() != order * order)
        throw ParseError("operation tables must be order x order");
    for (Elem v : add)
        if (v >= order) throw ParseError("add table entry out of range");
    for (Elem v : mul)
        if (v >= order) throw ParseError("mul table entry out of range");
    if (identity && *identity >= order) throw ParseError("identity id out of range");

    auto at = [order](const std::vector<Elem>& t, Elem a, Elem b) {
        return t[static_cast<std::size_t>(a) * order + b];
    };
    // Additive identity: first element acting as one (defects tolerated).
    Elem zero = 0;
    for (Elem z = 0; z < order; ++z) {
        bool ok = true;
        for (Elem x = 0; x < order && ok; ++x)
            ok = at(add, z, x) == x && at(add, x, z) == x;
        if (ok) {
            zero = z;
            break;
        }
    }
    auto d = std::make_shared<detail::RingData>();
    d->order = order;
    d->zero = zero;
    d->tabled = true;
    d->add_t = std::move(add);
    d->mul_t = std::move(mul);
    d->neg_t.assign(order, 0);
    for (Elem a = 0; a < order; ++a) {
        d->neg_t[a] = a;  // fallback when no inverse exists
        for (Elem b = 0; b < order; ++b)
            if (at(d->add_t, a, b) == zero) {
                d->neg_t[a] = b;
                break;
            }
    }
    if (identity) {
        d->one = identity;
    } else {
        for (Elem e = 0; e < order; ++e) {
            bool ok = true;
            for (Elem x = 0; x < order && ok; ++x)
                ok = at(d->mul_t, e, x) == x && at(d->mul_t, x, e) == x;
            if (ok) {
                d->one = e;
                break;
            }
        }
    }
    // Characteristic: lcm of additive orders, 0 when some orbit never closes.
    std::uint64_t ch = 1;
    for (Elem a = 0; a < order && ch; ++a) {
        Elem acc = a;
        std::uint64_t k = 1;
        while (acc != zero && k <= order) {
            acc = at(d->add_t, acc, a);
            ++k;
        }
        if (acc != zero)
            ch = 0;
        else
            ch = std::lcm(ch, k);
    }
    d->characteristic = ch;
    d->descriptor = std::move(descriptor);
    return Ring{std::move(d)};
}

Ring ring_from_table_json(const std::string& text, const Config& cfg) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad table-ring JSON: ") + e.what());
    }
    try {
        std::uint64_t order = j.at("order").get<std::uint64_t>();
        auto flatten = [order](const nlohmann::json& rows) {
            std::vector<Elem> t;
            t.reserve(order * order);
            if (rows.size() != order) throw ParseError("table row count != order");
            for (const auto& row : rows) {
                if (row.size() != order) throw ParseError("table row length != order");
                for (const auto& v : row) t.push_back(v.get<Elem>());
            }
            return t;
        };
        std::vector<Elem> add = flatten(j.at("add"));
        std::vector<Elem> mul = flatten(j.at("mul"));
        std::optional<Elem> identity;
        if (j.contains("identity") && !j["identity"].is_null())
            identity = j["identity"].get<Elem>();
        std::string name = j.value("name", std::string("table-ring"));
        return ring_from_tables(order, std::move(add), std::move(mul), identity, name, cfg);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad table-ring JSON: ") + e.what());
    }
}

Ring ring_from_table_file(const std::string& path, const Config& cfg) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open ring table file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return ring_from_table_json(buf.str(), cfg);
}

Ring subring_as_ring(const Ring& r, const std::vector<Elem>& members, const Config& cfg) {
    if (members.empty()) throw PreconditionError("a subring needs at least one element");
    if (!std::is_sorted(members.begin(), members.end()) ||
        std::adjacent_find(members.begin(), members.end()) != members.end())
        throw PreconditionError("subring members must be sorted and distinct");
    std::vector<Elem> local(r.order(), static_cast<Elem>(-1));
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<Elem>(i);
    auto inside = [&](Elem g) { return g < r.order() && local[g] != static_cast<Elem>(-1); };
    if (!inside(r.zero())) throw PreconditionError("subring must contain zero");
    for (Elem a : members) {
        if (!inside(r.neg(a))) throw PreconditionError("subring not closed under negation");
        for (Elem b : members) {
            if (!inside(r.add(a, b))) throw PreconditionError("subring not closed under addition");
            if (!inside(r.mul(a, b)))
                throw PreconditionError("subring not closed under multiplication");
        }
    }
    std::vector<Elem> mem = members;
    // capture the carrier by value to keep it alive inside the closures
    Ring carrier = r;
    auto add2 = [carrier, mem, local](Elem a, Elem b) { return local[carrier.add(mem[a], mem[b])]; };
    auto mul2 = [carrier, mem, local](Elem a, Elem b) { return local[carrier.mul(mem[a], mem[b])]; };
    auto neg2 = [carrier, mem, local](Elem a) { return local[carrier.neg(mem[a])]; };
    Elem zero = local[r.zero()];
    // identity of the subring (may differ from the ambient one or be absent)
    std::optional<Elem> one;
    for (std::size_t e = 0; e < mem.size(); ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < mem.size() && ok; ++x)
            ok = r.mul(mem[e], mem[x]) == mem[x] && r.mul(mem[x], mem[e]) == mem[x];
        if (ok) {
            one = static_cast<Elem>(e);
            break;
        }
    }
    std::uint64_t ch = 1;
    for (Elem a : mem) {
        Elem acc = a;
        std::uint64_t k = 1;
        while (acc != r.zero()) {
            acc = r.add(acc, a);
            ++k;
        }
        ch = std::lcm(ch, k);
    }
    std::ostringstream desc;
    desc << "subring{";
    for (std::size_t i = 0; i < mem.size(); ++i) desc << (i ? "," : "") << mem[i];
    desc << "} of " << r.descriptor();
    return Ring::assemble(mem.size(), add2, mul2, neg2, zero, one, ch, desc.str(), cfg);
}

// ---------------------------------------------------------------- validation

RingReport validate_ring(const Ring& r, const Config& cfg) {
    RingReport rep;
    std::uint64_t n = r.order();
    auto record = [&rep](const std::string& axiom, std::initializer_list<Elem> w) {
        for (const auto& f : rep.failures)
            if (f.axiom == axiom) return;  // keep only the first (minimal) witness
        rep.failures.push_back({axiom, std::vector<Elem>(w)});
    };

    if (n <= cfg.exhaustive_validate_limit) {
        rep.exhaustive = true;
        Elem zero = r.zero();
        for (Elem a = 0; a < n; ++a) {
            if (r.add(zero, a) != a) record("zero-identity", {a});
            if (r.add(a, r.neg(a)) != zero) record("additive-inverse", {a});
        }
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                if (r.add(a, b) != r.add(b, a)) record("add-commutativity", {a, b});
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                for (Elem c = 0; c < n; ++c) {
                    if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
                        record("add-associativity", {a, b, c});
                    if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
                        record("mul-associativity", {a, b, c});
                    if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
                        record("left-distributivity", {a, b, c});
                    if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)))
                        record("right-distributivity", {a, b, c});
                }
        // independent identity scan
        std::optional<Elem> found;
        for (Elem e = 0; e < n && !found; ++e) {
            bool ok = true;
            for (Elem x = 0; x < n && ok; ++x) ok = r.mul(e, x) == x && r.mul(x, e) == x;
            if (ok) found = e;
        }
        rep.is_unital = found.has_value();
        // characteristic = lcm of additive orders
        std::uint64_t ch = 1;
        for (Elem a = 0; a < n && ch; ++a) {
            Elem acc = a;
            std::uint64_t k = 1;
            while (acc != zero && k <= n) {
                acc = r.add(acc, a);
                ++k;
            }
            ch = (acc == zero) ? std::lcm(ch, k) : 0;
        }
        rep.characteristic = ch;
    } else {
        rep.exhaustive = false;
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
        Elem zero = r.zero();
        for (std::uint64_t s = 0; s < cfg.validate_samples; ++s) {
            Elem a = static_cast<Elem>(pick(rng));
            Elem b = static_cast<Elem>(pick(rng));
            Elem c = static_cast<Elem>(pick(rng));
            if (r.add(zero, a) != a) record("zero-identity", {a});
            if (r.add(a, r.neg(a)) != zero) record("additive-inverse", {a});
            if (r.add(a, b) != r.add(b, a)) record("add-commutativity", {a, b});
            if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
                record("add-associativity", {a, b, c});
            if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
                record("mul-associativity", {a, b, c});
            if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
                record("left-distributivity", {a, b, c});
            if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)))
                record("right-distributivity", {a, b, c});
            if (r.is_unital()) {
                Elem e = *r.identity();
                if (r.mul(e, a) != a || r.mul(a, e) != a) record("declared-identity", {a});
            }
        }
        rep.is_unital = r.is_unital();
        if (r.is_unital()) {
            // characteristic of a unital ring = additive order of 1
            Elem acc = *r.identity();
            std::uint64_t k = 1;
            while (acc != zero && k <= n) {
                acc = r.add(acc, *r.identity());
                ++k;
            }
            rep.characteristic = (acc == zero) ? k : 0;
        } else {
            rep.characteristic = r.characteristic();
        }
    }
    rep.is_ring = rep.failures.empty();
    return rep;
}

std::string ring_report_json(const RingReport& report) {
    nlohmann::json j;
    j["is_ring"] = report.is_ring;
    j["is_unital"] = report.is_unital;
    j["characteristic"] = report.characteristic;
    j["exhaustive"] = report.exhaustive;
    j["failures"] = nlohmann::json::array();
    for (const auto& f : report.failures)
        j["failures"].push_back({{"axiom", f.axiom}, {"witness", f.witness}});
    return j.dump(2) + "\n";
}

}  // namespace ringlab
