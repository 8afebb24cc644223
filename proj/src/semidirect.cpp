#include "ringlab/semidirect.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "ringlab/ringspec.hpp"
#include "ringlab/subring.hpp"

namespace ringlab {

// ----------------------------------------------------------- finite rings

Ring unitalization(const Ring& r, const Config& cfg) {
    const std::uint64_t m = r.characteristic();
    if (m == 0)
        throw PreconditionError("unitalization needs a known finite characteristic: " +
                                r.descriptor());
    const std::uint64_t n = r.order();
    Ring base = r;
    auto add = [base, m, n](Elem s, Elem t) {
        std::uint64_t k1 = s / n, k2 = t / n;
        Elem a = static_cast<Elem>(s % n), b = static_cast<Elem>(t % n);
        return static_cast<Elem>(((k1 + k2) % m) * n + base.add(a, b));
    };
    auto neg = [base, m, n](Elem s) {
        std::uint64_t k = s / n;
        Elem a = static_cast<Elem>(s % n);
        return static_cast<Elem>(((m - k) % m) * n + base.neg(a));
    };
    auto mul = [base, m, n](Elem s, Elem t) {
        std::uint64_t k1 = s / n, k2 = t / n;
        Elem a = static_cast<Elem>(s % n), b = static_cast<Elem>(t % n);
        Elem x = base.add(base.zmul(mpz_class(static_cast<unsigned long>(k2)), a),
                          base.add(base.zmul(mpz_class(static_cast<unsigned long>(k1)), b),
                                   base.mul(a, b)));
        return static_cast<Elem>(((k1 * k2) % m) * n + x);
    };
    Elem zero = static_cast<Elem>(base.zero());
    Elem one = static_cast<Elem>(((1 % m) * n) + base.zero());
    return Ring::assemble(m * n, add, mul, neg, zero, one, m,
                          "(" + r.descriptor() + ")^1 [embed a -> (0,a) = id a]", cfg);
}

PropIsoResult check_prop_iso(const Ring& r, const Config& cfg) {
    ClassPartition pr = compress_classes(r, GenMode::nonunital, cfg);
    Ring r1 = unitalization(r, cfg);
    ClassPartition p1 = compress_classes(r1, GenMode::unital, cfg);
    CompressedGraph g = graph_of_partition(pr);
    CompressedGraph h = graph_of_partition(p1);

    PropIsoResult out;
    out.holds = pr.classes.size() == p1.classes.size();
    out.vertex_map.resize(pr.classes.size());
    std::vector<bool> hit(p1.classes.size(), false);
    for (std::size_t i = 0; i < pr.classes.size() && out.holds; ++i) {
        // the embedding keeps element ids, so class members map directly
        std::uint32_t image = p1.class_of[pr.classes[i].members.front()];
        out.vertex_map[i] = image;
        for (Elem a : pr.classes[i].members)
            if (p1.class_of[a] != image) out.holds = false;  // map ill-defined
        if (hit[image]) out.holds = false;  // not injective
        hit[image] = true;
    }
    if (out.holds)
        for (std::uint32_t i = 0; i < pr.classes.size() && out.holds; ++i)
            for (std::uint32_t j = i + 1; j < pr.classes.size(); ++j)
                if (g.has_edge(i, j) != h.has_edge(out.vertex_map[i], out.vertex_map[j])) {
                    out.holds = false;
                    break;
                }
    return out;
}

ActionTables natural_action(const Ring& z, const Ring& i) {
    const std::uint64_t nz = z.order(), ni = i.order();
    ActionTables act;
    act.left.resize(nz * ni);
    act.right.resize(ni * nz);
    for (Elem zz = 0; zz < nz; ++zz)
        for (Elem x = 0; x < ni; ++x) {
            Elem v = i.zmul(mpz_class(static_cast<unsigned long>(zz)), x);
            act.left[zz * ni + x] = v;
            act.right[x * nz + zz] = v;
        }
    return act;
}

std::string validate_action(const Ring& z, const Ring& i, const ActionTables& act) {
    const std::uint64_t nz = z.order(), ni = i.order();
    auto spot = [](const char* law, Elem a, Elem b, Elem c) {
        std::ostringstream o;
        o << law << " fails at (" << a << ", " << b << ", " << c << ")";
        return o.str();
    };
    if (act.left.size() != nz * ni || act.right.size() != ni * nz)
        return "action tables have the wrong size";
    for (Elem v : act.left)
        if (v >= ni) return "left action value out of range";
    for (Elem v : act.right)
        if (v >= ni) return "right action value out of range";
    auto L = [&](Elem zz, Elem x) { return act.left[zz * ni + x]; };
    auto R = [&](Elem x, Elem zz) { return act.right[x * nz + zz]; };

    for (Elem zz = 0; zz < nz; ++zz)
        for (Elem x = 0; x < ni; ++x)
            for (Elem y = 0; y < ni; ++y) {
                if (L(zz, i.add(x, y)) != i.add(L(zz, x), L(zz, y)))
                    return spot("z.(x+y) = z.x + z.y", zz, x, y);
                if (R(i.add(x, y), zz) != i.add(R(x, zz), R(y, zz)))
                    return spot("(x+y).z = x.z + y.z", zz, x, y);
                if (L(zz, i.mul(x, y)) != i.mul(L(zz, x), y))
                    return spot("z.(xy) = (z.x)y", zz, x, y);
                if (i.mul(x, L(zz, y)) != i.mul(R(x, zz), y))
                    return spot("x(z.y) = (x.z)y", zz, x, y);
                if (R(i.mul(x, y), zz) != i.mul(x, R(y, zz)))
                    return spot("(xy).z = x(y.z)", zz, x, y);
            }
    for (Elem z1 = 0; z1 < nz; ++z1)
        for (Elem z2 = 0; z2 < nz; ++z2)
            for (Elem x = 0; x < ni; ++x) {
                if (L(z.add(z1, z2), x) != i.add(L(z1, x), L(z2, x)))
                    return spot("(z+z').x = z.x + z'.x", z1, z2, x);
                if (R(x, z.add(z1, z2)) != i.add(R(x, z1), R(x, z2)))
                    return spot("x.(z+z') = x.z + x.z'", z1, z2, x);
                if (L(z.mul(z1, z2), x) != L(z1, L(z2, x)))
                    return spot("(zz').x = z.(z'.x)", z1, z2, x);
                if (R(x, z.mul(z1, z2)) != R(R(x, z1), z2))
                    return spot("x.(zz') = (x.z).z'", z1, z2, x);
                if (R(L(z1, x), z2) != L(z1, R(x, z2)))
                    return spot("(z.x).z' = z.(x.z')", z1, z2, x);
            }
    return "";
}

Ring semidirect_finite(const Ring& z, const Ring& i, const ActionTables& act,
                       const Config& cfg) {
    std::string bad = validate_action(z, i, act);
    if (!bad.empty()) throw PreconditionError("invalid action: " + bad);
    const std::uint64_t nz = z.order(), ni = i.order();
    Ring zr = z, ir = i;
    ActionTables a = act;
    auto add = [zr, ir, ni](Elem s, Elem t) {
        return static_cast<Elem>(zr.add(s / ni, t / ni) * ni + ir.add(s % ni, t % ni));
    };
    auto neg = [zr, ir, ni](Elem s) {
        return static_cast<Elem>(zr.neg(s / ni) * ni + ir.neg(s % ni));
    };
    auto mul = [zr, ir, a, nz, ni](Elem s, Elem t) {
        Elem z1 = static_cast<Elem>(s / ni), x1 = static_cast<Elem>(s % ni);
        Elem z2 = static_cast<Elem>(t / ni), x2 = static_cast<Elem>(t % ni);
        Elem x = ir.add(a.left[z1 * ni + x2], ir.add(a.right[x1 * nz + z2], ir.mul(x1, x2)));
        return static_cast<Elem>(zr.mul(z1, z2) * ni + x);
    };
    Elem zero = static_cast<Elem>(z.zero() * ni + i.zero());
    std::optional<Elem> one;
    if (z.is_unital()) {
        Elem oz = *z.identity();
        for (Elem e = 0; e < ni && !one; ++e) {
            if (i.mul(e, e) != e) continue;
            bool fits = true;
            for (Elem x = 0; x < ni && fits; ++x)
                fits = act.left[oz * ni + x] == i.sub(x, i.mul(e, x)) &&
                       act.right[x * nz + oz] == i.sub(x, i.mul(x, e));
            if (fits) one = static_cast<Elem>(oz * ni + e);
        }
    }
    std::uint64_t ch = 0;
    if (z.characteristic() != 0 && i.characteristic() != 0)
        ch = std::lcm(z.characteristic(), i.characteristic());
    return Ring::assemble(nz * ni, add, mul, neg, zero, one, ch,
                          z.descriptor() + " |x " + i.descriptor(), cfg);
}

// ----------------------------------------------- Z[1/m] |x I, symbolically

SemidirectData semidirect_data_from_json(const std::string& text, const Config& cfg) {
    try {
        auto j = nlohmann::json::parse(text);
        SemidirectData d;
        d.m = mpz_class(j.at("m").get<std::int64_t>());
        d.ideal = parse_ring_spec(j.at("ideal").get<std::string>(), cfg);
        d.e = j.at("e").get<Elem>();
        d.L = j.at("L").get<std::vector<Elem>>();
        d.Rm = j.at("Rm").get<std::vector<Elem>>();
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("semidirect data: ") + e.what());
    }
}

SemidirectData semidirect_data_from_file(const std::string& path, const Config& cfg) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return semidirect_data_from_json(buf.str(), cfg);
}

std::vector<std::string> validate_semidirect_data(const SemidirectData& d) {
    std::vector<std::string> bad;
    if (!d.ideal.valid()) {
        bad.push_back("missing ideal ring");
        return bad;
    }
    const Ring& I = d.ideal;
    const std::uint64_t n = I.order();
    if (d.m < 1) bad.push_back("m must be >= 1");
    if (d.e >= n) bad.push_back("e out of range");
    if (d.L.size() != n || d.Rm.size() != n) bad.push_back("L/Rm must map every element");
    if (!bad.empty()) return bad;
    for (Elem v : d.L)
        if (v >= n) {
            bad.push_back("L value out of range");
            return bad;
        }
    for (Elem v : d.Rm)
        if (v >= n) {
            bad.push_back("Rm value out of range");
            return bad;
        }

    auto complain = [&bad](const std::string& law, Elem x, std::optional<Elem> y = {}) {
        std::string msg = law + " fails at x=" + std::to_string(x);
        if (y) msg += ", y=" + std::to_string(*y);
        bad.push_back(msg);
    };
    if (I.mul(d.e, d.e) != d.e) bad.push_back("e is not idempotent");
    const Elem z = I.zero();
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
            if (d.L[I.add(x, y)] != I.add(d.L[x], d.L[y])) {
                complain("L(x+y) = L(x)+L(y)", x, y);
                goto additive_done;
            }
            if (d.Rm[I.add(x, y)] != I.add(d.Rm[x], d.Rm[y])) {
                complain("Rm(x+y) = Rm(x)+Rm(y)", x, y);
                goto additive_done;
            }
        }
    }
additive_done:
    for (Elem x = 0; x < n; ++x) {
        if (I.zmul(d.m, d.L[x]) != I.sub(x, I.mul(d.e, x))) {
            complain("m*L(x) = x - ex", x);
            break;
        }
    }
    for (Elem x = 0; x < n; ++x) {
        if (I.zmul(d.m, d.Rm[x]) != I.sub(x, I.mul(x, d.e))) {
            complain("m*Rm(x) = x - xe", x);
            break;
        }
    }
    for (Elem x = 0; x < n; ++x) {
        if (I.mul(d.e, d.L[x]) != z) {
            complain("e*L(x) = 0", x);
            break;
        }
    }
    for (Elem x = 0; x < n; ++x) {
        if (d.L[I.mul(d.e, x)] != z) {
            complain("L(ex) = 0", x);
            break;
        }
    }
    for (Elem x = 0; x < n; ++x) {
        if (I.mul(d.Rm[x], d.e) != z) {
            complain("Rm(x)*e = 0", x);
            break;
        }
    }
    for (Elem x = 0; x < n; ++x) {
        if (d.Rm[I.mul(x, d.e)] != z) {
            complain("Rm(xe) = 0", x);
            break;
        }
    }
    bool ok1 = true, ok2 = true, ok3 = true;
    for (Elem x = 0; x < n && (ok1 || ok2 || ok3); ++x)
        for (Elem y = 0; y < n; ++y) {
            if (ok1 && d.L[I.mul(x, y)] != I.mul(d.L[x], y)) {
                complain("L(xy) = L(x)y", x, y);
                ok1 = false;
            }
            if (ok2 && d.Rm[I.mul(x, y)] != I.mul(x, d.Rm[y])) {
                complain("Rm(xy) = x Rm(y)", x, y);
                ok2 = false;
            }
            if (ok3 && I.mul(x, d.L[y]) != I.mul(d.Rm[x], y)) {
                complain("x L(y) = Rm(x) y", x, y);
                ok3 = false;
            }
        }
    for (Elem x = 0; x < n; ++x) {
        if (d.L[d.Rm[x]] != d.Rm[d.L[x]]) {
            complain("L(Rm(x)) = Rm(L(x))", x);
            break;
        }
    }
    return bad;
}

std::string SDElement::str() const {
    return "(" + z.value().get_str() + ", " + std::to_string(x) + ")";
}

SemidirectRing SemidirectRing::create(SemidirectData d, const Config& cfg) {
    (void)cfg;
    std::vector<std::string> bad = validate_semidirect_data(d);
    if (!bad.empty()) {
        std::string msg = "semidirect data invalid:";
        for (const auto& b : bad) msg += " [" + b + "]";
        throw PreconditionError(msg);
    }
    return SemidirectRing(std::move(d));
}

SDElement SemidirectRing::element(LocalizedRational z, Elem x) const {
    if (z.modulus() != d_.m) throw PreconditionError("localization modulus mismatch");
    if (x >= d_.ideal.order()) throw PreconditionError("ideal element out of range");
    return SDElement{std::move(z), x};
}

SDElement SemidirectRing::zero() const {
    return SDElement{LocalizedRational(mpq_class(0), d_.m), d_.ideal.zero()};
}

SDElement SemidirectRing::identity() const {
    return SDElement{LocalizedRational(mpq_class(1), d_.m), d_.e};
}

Elem SemidirectRing::act_left(const LocalizedRational& z, Elem x) const {
    if (z.modulus() != d_.m) throw PreconditionError("localization modulus mismatch");
    // z = a/m^k with k >= 1; then z.x = a * L^k(x).
    mpz_class mk = d_.m;
    std::uint32_t k = 1;
    while (!mpz_divisible_p(mk.get_mpz_t(), z.den().get_mpz_t())) {
        mk *= d_.m;
        ++k;
    }
    mpz_class a = z.num() * (mk / z.den());
    Elem g = x;
    for (std::uint32_t t = 0; t < k; ++t) g = d_.L[g];
    return d_.ideal.zmul(a, g);
}

Elem SemidirectRing::act_right(Elem x, const LocalizedRational& z) const {
    if (z.modulus() != d_.m) throw PreconditionError("localization modulus mismatch");
    mpz_class mk = d_.m;
    std::uint32_t k = 1;
    while (!mpz_divisible_p(mk.get_mpz_t(), z.den().get_mpz_t())) {
        mk *= d_.m;
        ++k;
    }
    mpz_class a = z.num() * (mk / z.den());
    Elem g = x;
    for (std::uint32_t t = 0; t < k; ++t) g = d_.Rm[g];
    return d_.ideal.zmul(a, g);
}

SDElement SemidirectRing::add(const SDElement& a, const SDElement& b) const {
    return SDElement{a.z + b.z, d_.ideal.add(a.x, b.x)};
}

SDElement SemidirectRing::sub(const SDElement& a, const SDElement& b) const {
    return add(a, neg(b));
}

SDElement SemidirectRing::neg(const SDElement& a) const {
    return SDElement{-a.z, d_.ideal.neg(a.x)};
}

SDElement SemidirectRing::mul(const SDElement& a, const SDElement& b) const {
    Elem x = d_.ideal.add(act_left(a.z, b.x),
                          d_.ideal.add(act_right(a.x, b.z), d_.ideal.mul(a.x, b.x)));
    return SDElement{a.z * b.z, x};
}

SDElement SemidirectRing::int_scale(const mpz_class& n, const SDElement& a) const {
    return SDElement{LocalizedRational(mpq_class(n) * a.z.value(), d_.m),
                     d_.ideal.zmul(n, a.x)};
}

SDElement SemidirectRing::power(const SDElement& a, std::uint64_t k) const {
    if (k == 0) throw PreconditionError("power needs k >= 1");
    SDElement acc = a;
    for (std::uint64_t t = 1; t < k; ++t) acc = mul(acc, a);
    return acc;
}

SDElement SemidirectRing::eval(const IntPolynomial& q, const SDElement& a) const {
    SDElement acc = zero();
    for (long t = q.degree(); t >= 0; --t)
        acc = add(mul(acc, a), int_scale(q.coeff(static_cast<std::size_t>(t)), identity()));
    return acc;
}

Stabilization stabilize_power_functions(const SemidirectRing& sd, const LocalizedRational& a) {
    const Ring& I = sd.ideal();
    const std::uint64_t n = I.order();
    // per-r second components f_u(r) of (a,r)^u, advanced jointly with
    // g_u(r) = a^u . r
    std::vector<Elem> f(n), g(n);
    for (Elem r = 0; r < n; ++r) {
        f[r] = r;
        g[r] = sd.act_left(a, r);
    }
    std::map<std::vector<Elem>, std::uint64_t> seen;
    seen.emplace(f, 1);
    const std::uint64_t budget = 1u << 16;
    for (std::uint64_t u = 2; u <= budget; ++u) {
        std::vector<Elem> nf(n), ng(n);
        for (Elem r = 0; r < n; ++r) {
            nf[r] = I.add(g[r], I.add(sd.act_right(f[r], a), I.mul(f[r], r)));
            ng[r] = sd.act_left(a, g[r]);
        }
        f = std::move(nf);
        g = std::move(ng);
        auto it = seen.find(f);
        if (it != seen.end()) {
            Stabilization st;
            st.u = u;
            st.v = it->second;
            st.h = IntPolynomial::monomial(1, u) - IntPolynomial::monomial(1, st.v);
            return st;
        }
        seen.emplace(f, u);
    }
    throw BudgetError("power functions did not stabilize within 2^16 steps");
}

namespace {

// Second components of powers of a fixed element: sigma^t = (z^t, f[t]),
// extended on demand; f[0] = e by the (1,e) identity convention.
struct PowerTrace {
    const SemidirectRing* sd;
    SDElement sigma;
    std::vector<Elem> f;
    std::vector<Elem> g;  // g[t] = z^t . x, driving the recurrence

    PowerTrace(const SemidirectRing& s, SDElement el) : sd(&s), sigma(std::move(el)) {
        f = {s.data().e, sigma.x};
        g = {0, s.act_left(sigma.z, sigma.x)};
    }
    void ensure(std::size_t upto) {
        const Ring& I = sd->ideal();
        while (f.size() <= upto) {
            std::size_t t = f.size() - 1;
            f.push_back(I.add(g[t], I.add(sd->act_right(f[t], sigma.z), I.mul(f[t], sigma.x))));
            g.push_back(sd->act_left(sigma.z, g[t]));
        }
    }
    // second component of q(sigma)
    Elem second_of(const IntPolynomial& q) {
        const Ring& I = sd->ideal();
        if (q.is_zero()) return I.zero();
        ensure(static_cast<std::size_t>(q.degree()));
        Elem acc = I.zero();
        for (std::size_t t = 0; t < q.coeffs().size(); ++t)
            acc = I.add(acc, I.zmul(q.coeffs()[t], f[t]));
        return acc;
    }
};

// Additive subgroup N of I spanned by {D*f[t+1] - n*f[t] : t >= 0} -- the
// image of the kernel of first-coordinate evaluation (generated over Z[x]
// by (Dx - n)x^t).  Holding a BFS tree lets us rebuild a polynomial for any
// member.
struct RelationModule {
    std::vector<std::pair<std::size_t, Elem>> gens;  // (t, value), distinct values
    std::vector<char> in;
    std::vector<Elem> prev;
    std::vector<std::int32_t> via;
    std::vector<std::int8_t> sgn;
};

RelationModule relation_module(PowerTrace& tr) {
    const Ring& I = tr.sd->ideal();
    const std::uint64_t order = I.order();
    const mpz_class D = tr.sigma.z.den();
    const mpz_class n = tr.sigma.z.num();

    RelationModule rm;
    std::set<std::pair<Elem, Elem>> states;
    std::set<Elem> values;
    for (std::size_t t = 0;; ++t) {
        tr.ensure(t + 1);
        if (t >= 1 && !states.insert({tr.g[t], tr.f[t]}).second)
            break;  // (g,f) state repeats: every later generator already seen
        Elem w = I.sub(I.zmul(D, tr.f[t + 1]), I.zmul(n, tr.f[t]));
        if (w != I.zero() && values.insert(w).second) rm.gens.emplace_back(t, w);
    }

    rm.in.assign(order, 0);
    rm.prev.assign(order, 0);
    rm.via.assign(order, -1);
    rm.sgn.assign(order, 0);
    std::vector<Elem> queue{I.zero()};
    rm.in[I.zero()] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Elem y = queue[head];
        for (std::size_t gi = 0; gi < rm.gens.size(); ++gi) {
            Elem w = rm.gens[gi].second;
            for (int s : {+1, -1}) {
                Elem y2 = s > 0 ? I.add(y, w) : I.sub(y, w);
                if (rm.in[y2]) continue;
                rm.in[y2] = 1;
                rm.prev[y2] = y;
                rm.via[y2] = static_cast<std::int32_t>(gi);
                rm.sgn[y2] = static_cast<std::int8_t>(s);
                queue.push_back(y2);
            }
        }
    }
    return rm;
}

// A polynomial in the first-coordinate kernel whose second component is nu.
IntPolynomial kernel_polynomial(const RelationModule& rm, const Ring& I, const mpz_class& D,
                                const mpz_class& n, Elem nu) {
    IntPolynomial acc;
    Elem cur = nu;
    while (cur != I.zero()) {
        const auto& [t, w] = rm.gens[static_cast<std::size_t>(rm.via[cur])];
        IntPolynomial gen = IntPolynomial::monomial(D, t + 1) + IntPolynomial::monomial(-n, t);
        acc = rm.sgn[cur] > 0 ? acc + gen : acc - gen;
        cur = rm.prev[cur];
    }
    return acc;
}

}  // namespace

std::optional<IntPolynomial> sd_membership_witness(const SemidirectRing& sd,
                                                   const SDElement& elem,
                                                   const SDElement& target) {
    // First coordinate: q(z) = z_target is decided (and witnessed) exactly in
    // Z[1/m]; the witness is then shifted by a kernel polynomial to fix the
    // second coordinate, which is possible iff the defect lies in the
    // relation module.
    std::optional<IntPolynomial> base = membership_witness(elem.z, target.z);
    if (!base) return std::nullopt;
    const Ring& I = sd.ideal();
    PowerTrace tr(sd, elem);
    RelationModule rm = relation_module(tr);
    Elem nu = I.sub(target.x, tr.second_of(*base));
    if (!rm.in[nu]) return std::nullopt;
    IntPolynomial q = *base + kernel_polynomial(rm, I, elem.z.den(), elem.z.num(), nu);
    if (sd.eval(q, elem) != target)
        throw std::logic_error("semidirect membership witness failed verification");
    return q;
}

std::optional<IntPolynomial> sd_bounded_witness(const SemidirectRing& sd, const SDElement& elem,
                                                const SDElement& target,
                                                std::uint32_t degree_bound,
                                                std::int64_t coeff_bound) {
    auto fits = [&](const IntPolynomial& q) {
        if (q.degree() > static_cast<long>(degree_bound)) return false;
        for (const mpz_class& c : q.coeffs())
            if (abs(c) > coeff_bound) return false;
        return true;
    };
    // the exact engine often produces a witness that is already small
    if (std::optional<IntPolynomial> exact = sd_membership_witness(sd, elem, target);
        exact && fits(*exact))
        return exact;

    const mpz_class den = elem.z.den(), num = elem.z.num();
    PowerTrace tr(sd, elem);
    // 0, 1, -1, 2, -2, ...: small coefficients come first
    auto zigzag = [](std::int64_t k) {
        std::int64_t mag = (k + 1) / 2;
        return (k % 2 == 1) ? mag : -mag;
    };
    auto submul = [](mpz_class& a, const mpz_class& w, std::int64_t delta) {
        if (delta >= 0)
            mpz_submul_ui(a.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(delta));
        else
            mpz_addmul_ui(a.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(-delta));
    };
    for (std::size_t d = 0; d <= degree_bound; ++d) {
        // Clear denominators in sum_t c_t (num/den)^t = z_target: the
        // constant coefficient is determined by the free ones, so only the
        // box over c_1..c_d is searched (leading coefficient nonzero; lower
        // degrees were already covered by earlier passes).
        mpz_class denD = 1;
        for (std::size_t t = 0; t < d; ++t) denD *= den;
        mpq_class rhs_q = target.z.value() * mpq_class(denD);
        if (rhs_q.get_den() != 1) continue;  // no witness of this degree exists
        std::vector<mpz_class> weight(d + 1);  // num^t * den^(d-t)
        weight[0] = denD;
        for (std::size_t t = 1; t <= d; ++t) weight[t] = weight[t - 1] / den * num;

        const std::int64_t steps = 2 * coeff_bound + 1;
        std::vector<std::int64_t> idx(d + 1, 0);
        mpz_class acc = rhs_q.get_num();  // rhs - sum_t c_t w_t, maintained incrementally
        while (true) {
            if (mpz_divisible_p(acc.get_mpz_t(), weight[0].get_mpz_t())) {
                mpz_class c0 = acc / weight[0];
                if (abs(c0) <= coeff_bound && (d == 0 || zigzag(idx[d]) != 0)) {
                    std::vector<mpz_class> c(d + 1);
                    c[0] = c0;
                    for (std::size_t t = 1; t <= d; ++t) c[t] = zigzag(idx[t]);
                    IntPolynomial q{std::move(c)};
                    if (tr.second_of(q) == target.x) {
                        if (sd.eval(q, elem) != target)
                            throw std::logic_error("bounded witness failed verification");
                        return q;
                    }
                }
            }
            std::size_t t = 1;
            for (; t <= d; ++t) {
                if (idx[t] + 1 < steps) {
                    submul(acc, weight[t], zigzag(idx[t] + 1) - zigzag(idx[t]));
                    ++idx[t];
                    break;
                }
                submul(acc, weight[t], -zigzag(idx[t]));
                idx[t] = 0;
            }
            if (t > d) break;
        }
    }
    return std::nullopt;
}

CanonicalizeResult canonicalize(const SemidirectRing& sd, const SDElement& elem,
                                const Config& cfg) {
    const Ring& I = sd.ideal();
    LocalizedRational b = class_representative(elem.z);
    if (elem.z == b) return CanonicalizeResult{elem, IntPolynomial::x(), IntPolynomial::x()};

    std::optional<IntPolynomial> p1 =
        membership_witness(elem.z, b, cfg.witness_degree, cfg.witness_coeff);
    Stabilization st = stabilize_power_functions(sd, elem.z);
    LocalizedRational ha(st.h.eval(elem.z.value()), sd.modulus());
    std::optional<IntPolynomial> g1poly =
        membership_witness(ha, elem.z, cfg.witness_degree, cfg.witness_coeff);
    if (!p1 || !g1poly) throw std::logic_error("constructive witnesses unavailable");

    IntPolynomial k1 = *p1 - IntPolynomial::x();
    mpz_class g1 = k1.eval(g1poly->coeff(0));  // constant coefficient of K1(G1(x))
    SDElement canonical = sd.element(b, I.add(elem.x, I.zmul(g1, sd.data().e)));

    // replay K1(G1(H(x))) + x on the element itself
    SDElement chain = sd.eval(st.h, elem);
    chain = sd.eval(*g1poly, chain);
    chain = sd.eval(k1, chain);
    chain = sd.add(chain, elem);
    if (chain != canonical) throw std::logic_error("canonicalization chain mismatch");

    std::optional<IntPolynomial> fwd = sd_membership_witness(sd, elem, canonical);
    std::optional<IntPolynomial> back = sd_membership_witness(sd, canonical, elem);
    if (!fwd || !back) throw std::logic_error("canonical element is not mutually reachable");
    return CanonicalizeResult{canonical, *fwd, *back};
}

Lambda1SDResult lambda1_semidirect(const SemidirectRing& sd, const Config& cfg) {
    const Ring& I = sd.ideal();
    const std::uint64_t ni = I.order();
    std::vector<mpz_class> primes = prime_support(sd.modulus());
    if (primes.size() >= 20 ||
        (std::uint64_t{1} << primes.size()) * ni > cfg.graph_order_limit)
        throw BudgetError("lambda1_semidirect: candidate count exceeds graph_order_limit");

    std::vector<mpz_class> dens;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << primes.size()); ++mask) {
        mpz_class prod = 1;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) prod *= primes[i];
        dens.push_back(prod);
    }
    std::sort(dens.begin(), dens.end());

    Lambda1SDResult out;
    for (const mpz_class& den : dens)
        for (Elem r = 0; r < ni; ++r)
            out.candidates.push_back(sd.element(LocalizedRational(mpq_class(1, den), sd.modulus()), r));

    const std::size_t total = out.candidates.size();
    std::vector<std::uint32_t> root(total);
    for (std::size_t i = 0; i < total; ++i) root[i] = static_cast<std::uint32_t>(i);
    std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t i) {
        while (root[i] != i) {
            root[i] = root[root[i]];
            i = root[i];
        }
        return i;
    };

    // merging can only happen between candidates sharing b
    for (std::size_t g = 0; g < dens.size(); ++g) {
        const std::size_t base = g * ni;
        for (std::size_t i = base; i < base + ni; ++i)
            for (std::size_t j = i + 1; j < base + ni; ++j) {
                if (find(i) == find(j)) continue;
                std::optional<IntPolynomial> fwd =
                    sd_membership_witness(sd, out.candidates[i], out.candidates[j]);
                if (!fwd) continue;
                std::optional<IntPolynomial> back =
                    sd_membership_witness(sd, out.candidates[j], out.candidates[i]);
                if (!back) continue;
                // same class; merge only on witnesses inside the search box
                std::optional<IntPolynomial> bij = sd_bounded_witness(
                    sd, out.candidates[i], out.candidates[j], cfg.merge_degree, cfg.merge_coeff);
                std::optional<IntPolynomial> bji = sd_bounded_witness(
                    sd, out.candidates[j], out.candidates[i], cfg.merge_degree, cfg.merge_coeff);
                if (bij && bji) {
                    std::uint32_t ri = find(i), rj = find(j);
                    root[std::max(ri, rj)] = std::min(ri, rj);
                    SDMerge m;
                    m.from = static_cast<std::uint32_t>(j);
                    m.to = static_cast<std::uint32_t>(i);
                    m.forward = *bji;
                    m.backward = *bij;
                    out.merges.push_back(std::move(m));
                } else {
                    SDUnresolved u;
                    u.first = static_cast<std::uint32_t>(i);
                    u.second = static_cast<std::uint32_t>(j);
                    u.reason = "classes are equal but no witness fits degree <= " +
                               std::to_string(cfg.merge_degree) + ", |coeff| <= " +
                               std::to_string(cfg.merge_coeff);
                    out.unresolved.push_back(std::move(u));
                }
            }
    }
    // merges made later can connect a pair that was flagged before
    std::erase_if(out.unresolved,
                  [&](const SDUnresolved& u) { return find(u.first) == find(u.second); });

    out.vertex_of.assign(total, 0);
    std::vector<std::uint32_t> vertex_rep;  // least candidate index per vertex
    std::map<std::uint32_t, std::uint32_t> seen;
    for (std::size_t i = 0; i < total; ++i) {
        std::uint32_t r = find(i);
        auto it = seen.find(r);
        if (it == seen.end()) {
            it = seen.emplace(r, static_cast<std::uint32_t>(vertex_rep.size())).first;
            vertex_rep.push_back(static_cast<std::uint32_t>(i));
        }
        out.vertex_of[i] = it->second;
    }

    CompressedGraph& graph = out.graph;
    for (std::uint32_t v = 0; v < vertex_rep.size(); ++v) {
        graph.vertex_labels.push_back(out.candidates[vertex_rep[v]].str());
        graph.loops.push_back(v);
    }
    for (std::uint32_t u = 0; u < vertex_rep.size(); ++u)
        for (std::uint32_t v = u + 1; v < vertex_rep.size(); ++v) {
            const SDElement& su = out.candidates[vertex_rep[u]];
            const SDElement& sv = out.candidates[vertex_rep[v]];
            if (sd.mul(su, sv) == sd.mul(sv, su)) graph.edges.emplace_back(u, v);
        }
    graph.normalize();
    return out;
}

std::string lambda1_report_json(const Lambda1SDResult& r) {
    nlohmann::json j;
    j["graph"] = nlohmann::json::parse(emit_json(r.graph));
    j["candidates"] = nlohmann::json::array();
    for (const auto& c : r.candidates) j["candidates"].push_back(c.str());
    j["merges"] = nlohmann::json::array();
    for (const auto& m : r.merges)
        j["merges"].push_back({{"from", r.candidates[m.from].str()},
                               {"to", r.candidates[m.to].str()},
                               {"forward", m.forward.str()},
                               {"backward", m.backward.str()}});
    j["unresolved"] = nlohmann::json::array();
    for (const auto& u : r.unresolved)
        j["unresolved"].push_back({{"first", r.candidates[u.first].str()},
                                   {"second", r.candidates[u.second].str()},
                                   {"reason", u.reason}});
    j["vertices"] = r.graph.vertex_count();
    return j.dump(2) + "\n";
}

}  // namespace ringlab
