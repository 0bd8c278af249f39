#include "stacky/mor.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace stacky {

namespace {

std::string index_set_str(const std::vector<int>& s) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) os << ",";
        os << s[i];
    }
    os << "}";
    return os.str();
}

// exponent of x_j minus exponent of xb_j, per ray
std::vector<int> net_exponents(const Monomial& m, int nrays) {
    std::vector<int> net(nrays, 0);
    for (const auto& [v, e] : m.exps) {
        if (v < nrays)
            net[v] += e;
        else
            net[v - nrays] -= e;
    }
    return net;
}

long to_long(const Int& x, const char* what) {
    if (!x.fits_slong_p()) throw std::invalid_argument(std::string(what) + ": value too large");
    return x.get_si();
}

} // namespace

RefinementMorphism refinement_matrix(const StackyFan& source, const StackyFan& target) {
    if (source.rank != target.rank)
        throw std::invalid_argument("refinement: source and target lattice ranks differ");
    for (const Cone& c : target.max_cones)
        if (c.dim() != target.rank)
            throw std::invalid_argument(
                "refinement: every maximal cone of the target must be full-dimensional");

    RefinementMorphism m;
    m.source = source;
    m.target = target;
    m.alpha = IntMatrix(target.nrays(), source.nrays());
    for (int j = 0; j < source.nrays(); ++j) {
        auto cp = minimal_cone_containing(target, source.rays[j]);
        if (!cp)
            throw std::invalid_argument("not a refinement: source ray " + std::to_string(j) +
                                        " lies outside the target support");
        for (int k = 0; k < cp->cone.dim(); ++k) {
            if (!is_integer(cp->coeffs[k]))
                throw std::invalid_argument(
                    "non-integral coefficient " + rat_str(cp->coeffs[k]) + " expressing source ray " +
                    std::to_string(j) + " over target cone " + index_set_str(cp->cone.ray_indices));
            m.alpha.at(cp->cone.ray_indices[k], j) = cp->coeffs[k].get_num();
        }
        m.supports.push_back(cp->cone);
    }
    for (const Cone& s : source.max_cones) {
        std::set<int> u;
        for (int j : s.ray_indices)
            for (int i : m.supports[j].ray_indices) u.insert(i);
        std::vector<int> uv(u.begin(), u.end());
        if (!is_face_of_some_cone(target, uv))
            throw std::invalid_argument("not a refinement: source cone " +
                                        index_set_str(s.ray_indices) +
                                        " is not contained in a single target cone");
    }
    m.source_pres = k_presentation(source);
    m.target_pres = k_presentation(target);
    return m;
}

Poly pullback_raw(const RefinementMorphism& m, const Poly& target_poly) {
    const int nt = m.target.nrays();
    const int ns = m.source.nrays();
    if (target_poly.nvars != 2 * nt)
        throw std::invalid_argument("pullback: polynomial is not in the target variables");
    LaurentPoly lp;
    for (const auto& [mono, coeff] : target_poly.terms) {
        std::vector<int> r = net_exponents(mono, nt);
        std::vector<int> s(ns, 0);
        for (int j = 0; j < ns; ++j) {
            Int acc(0);
            for (int i = 0; i < nt; ++i) acc += m.alpha.at(i, j) * r[i];
            s[j] = static_cast<int>(to_long(acc, "pullback exponent"));
        }
        auto [it, fresh] = lp.emplace(std::move(s), coeff);
        if (!fresh) it->second += coeff;
    }
    return laurent_to_poly(ns, lp);
}

KClass pullback(const RefinementMorphism& m, const KClass& c) {
    if (c.pres != m.target_pres)
        throw std::invalid_argument("pullback: class does not live in the target presentation");
    return k_from_poly(m.source_pres, pullback_raw(m, c.p));
}

BlowupMorphism weighted_blowup(const StackyFan& fan, const Cone& center,
                               const std::vector<Int>& weights) {
    const int d = center.dim();
    if (d <= 1)
        throw std::domain_error("blowup center must contain at least two rays; use reweight");
    if (static_cast<int>(weights.size()) != d)
        throw std::invalid_argument("blowup: expected one weight per center ray");
    for (const Int& h : weights)
        if (h < 1) throw std::invalid_argument("blowup: weights must be positive");
    bool is_cone = false;
    for (const Cone& m : fan.max_cones)
        if (center.subset_of(m)) { is_cone = true; break; }
    if (!is_cone) throw std::invalid_argument("blowup: center is not a cone of the fan");
    for (const Cone& c : fan.max_cones)
        if (c.dim() != fan.rank)
            throw std::invalid_argument(
                "blowup: every maximal cone of the fan must be full-dimensional");

    IntVec new_ray(fan.rank, Int(0));
    for (int k = 0; k < d; ++k)
        for (int r = 0; r < fan.rank; ++r)
            new_ray[r] += weights[k] * fan.rays[center.ray_indices[k]][r];
    for (int i = 0; i < fan.nrays(); ++i)
        if (same_ray_direction(new_ray, fan.rays[i]))
            throw std::domain_error("blowup: the inserted ray is parallel to existing ray " +
                                    std::to_string(i));

    std::vector<IntVec> rays = fan.rays;
    rays.push_back(new_ray);
    const int nr = fan.nrays();
    std::vector<std::vector<int>> cones;
    for (const Cone& m : fan.max_cones) {
        if (!center.subset_of(m)) {
            cones.push_back(m.ray_indices);
            continue;
        }
        for (int omit : center.ray_indices) {
            std::vector<int> piece;
            for (int i : m.ray_indices)
                if (i != omit) piece.push_back(i);
            piece.push_back(nr);
            cones.push_back(piece);
        }
    }

    BlowupMorphism b;
    StackyFan source = make_fan(fan.rank, rays, cones);
    b.base = refinement_matrix(source, fan);
    b.center = center;
    b.weights = weights;
    b.new_ray = nr;
    return b;
}

ReweightMorphism codim1_reweight(const StackyFan& fan, int ray, const Int& factor) {
    if (ray < 0 || ray >= fan.nrays())
        throw std::invalid_argument("reweight: ray index out of range");
    if (factor < 1) throw std::invalid_argument("reweight: factor must be positive");

    std::vector<IntVec> rays = fan.rays;
    for (Int& x : rays[ray]) x *= factor;
    std::vector<std::vector<int>> cones;
    for (const Cone& c : fan.max_cones) cones.push_back(c.ray_indices);

    ReweightMorphism m;
    m.base = refinement_matrix(make_fan(fan.rank, rays, cones), fan);
    m.ray = ray;
    m.factor = factor;
    return m;
}

KClass push_R_inverse_power(const BlowupMorphism& b, const Int& l) {
    if (l < 0) throw std::invalid_argument("push_R_inverse_power: negative power");
    const KPresPtr& tp = b.base.target_pres;
    const int nt = tp->nrays;
    const int d = b.center.dim();

    // sum over s >= 0 with h.s < l
    Poly sum = Poly::zero(2 * nt);
    std::vector<long> s(d, 0);
    std::function<void(int, Int)> walk = [&](int k, Int left) { // left = l - h.s so far
        if (k == d) {
            Monomial mono = Monomial::one();
            for (int i = 0; i < d; ++i)
                if (s[i] > 0)
                    mono = mono_mul(mono, Monomial::var(nt + b.center.ray_indices[i],
                                                        static_cast<int>(s[i])));
            sum.add_term(mono, Rat(1));
            return;
        }
        for (Int si(0); b.weights[k] * si < left; ++si) {
            s[k] = to_long(si, "push_R_inverse_power exponent");
            walk(k + 1, left - b.weights[k] * si);
        }
        s[k] = 0;
    };
    walk(0, l);

    Poly prod = Poly::constant(2 * nt, Rat(1));
    for (int i : b.center.ray_indices)
        prod = prod * (Poly::constant(2 * nt, Rat(1)) - Poly::variable(2 * nt, nt + i));
    return k_from_poly(tp, Poly::constant(2 * nt, Rat(1)) - prod * sum);
}

KClass push_hilbert_oracle(const BlowupMorphism& b, const Int& l) {
    if (l < 1) throw std::invalid_argument("push_hilbert_oracle: power must be >= 1");
    const KPresPtr& tp = b.base.target_pres;
    const int d = b.center.dim();

    // minimal s >= 0 with h.s >= l: dropping any used coordinate goes below l
    std::vector<std::vector<long>> gens;
    std::vector<long> bound(d), s(d, 0);
    for (int i = 0; i < d; ++i) {
        Int q = (l + b.weights[i] - 1) / b.weights[i];
        bound[i] = to_long(q, "push_hilbert_oracle bound");
    }
    std::function<void(int, Int)> walk = [&](int k, Int dot) {
        if (k == d) {
            if (dot < l) return;
            for (int i = 0; i < d; ++i)
                if (s[i] > 0 && dot - b.weights[i] >= l) return;
            gens.push_back(s);
            return;
        }
        for (long si = 0; si <= bound[k]; ++si) {
            s[k] = si;
            walk(k + 1, dot + b.weights[k] * si);
        }
        s[k] = 0;
    };
    walk(0, Int(0));

    // inclusion-exclusion over lcms of generator subsets
    LaurentPoly lp;
    const size_t g = gens.size();
    if (g > 24) throw std::invalid_argument("push_hilbert_oracle: too many minimal generators");
    for (size_t mask = 1; mask < (size_t(1) << g); ++mask) {
        std::vector<long> lcm(d, 0);
        int bits = 0;
        for (size_t t = 0; t < g; ++t)
            if (mask & (size_t(1) << t)) {
                ++bits;
                for (int i = 0; i < d; ++i) lcm[i] = std::max(lcm[i], gens[t][i]);
            }
        std::vector<int> exps(tp->nrays, 0);
        for (int i = 0; i < d; ++i)
            exps[b.center.ray_indices[i]] = -static_cast<int>(lcm[i]);
        Rat sign = (bits % 2) ? Rat(1) : Rat(-1);
        auto [it, fresh] = lp.emplace(std::move(exps), sign);
        if (!fresh) it->second += sign;
    }
    return k_from_laurent(tp, lp);
}

namespace {

// LHS coefficients vs a closed-form RHS series, both reduced in the target ring
SeriesCheck compare_series(const KPresPtr& tp, int T,
                           const std::function<KClass(const Int&)>& lhs_coeff,
                           const std::vector<std::pair<int, Int>>& inverse_factors) {
    if (T < 0) throw std::invalid_argument("series check: negative truncation order");
    const int nv = 2 * tp->nrays;
    TruncatedSeries all = geometric_series(Poly::constant(nv, Rat(1)), 1, T); // 1/(1-t)
    TruncatedSeries prod = series_shift(all, 1);                              // t/(1-t)
    for (const auto& [ray, h] : inverse_factors) {
        Poly xb = Poly::variable(nv, tp->nrays + ray);
        prod = series_scale(Poly::constant(nv, Rat(1)) - xb, prod);
        prod = series_mul(prod, geometric_series(xb, static_cast<int>(to_long(h, "weight")), T));
    }
    TruncatedSeries rhs = series_sub(all, prod);

    SeriesCheck out;
    for (int t = 0; t <= T; ++t) {
        KClass lc = lhs_coeff(Int(t));
        KClass rc = k_from_poly(tp, rhs.coeff[t]);
        out.lhs.push_back(k_to_string(lc));
        out.rhs.push_back(k_to_string(rc));
        if (!(lc == rc) && out.first_mismatch < 0) {
            out.equal = false;
            out.first_mismatch = t;
        }
    }
    return out;
}

} // namespace

SeriesCheck push_series_identity_check(const BlowupMorphism& b, int T) {
    std::vector<std::pair<int, Int>> factors;
    for (int k = 0; k < b.center.dim(); ++k)
        factors.emplace_back(b.center.ray_indices[k], b.weights[k]);
    return compare_series(b.base.target_pres, T,
                          [&](const Int& l) { return push_R_inverse_power(b, l); }, factors);
}

namespace {

// u^k = sum_{j<k} q[j] u^j, the first linear dependence among normal forms
struct PowerRelation {
    int k = 0;
    std::vector<Rat> q;
};

PowerRelation first_power_relation(const KPresPtr& pres, const Poly& u) {
    long bound = k_dimension(pres);
    const MonomialOrder ord = pres->gb.order;
    // rows kept sorted by decreasing leading monomial, each remembering its
    // expression over the original powers
    std::vector<std::pair<Poly, std::vector<Rat>>> rows;
    Poly cur = normal_form(Poly::constant(u.nvars, Rat(1)), pres->gb);
    for (int m = 0;; ++m) {
        if (m > bound)
            throw std::logic_error("power relation not found within the quotient dimension");
        Poly r = cur;
        std::vector<Rat> expr(m + 1, Rat(0));
        expr[m] = Rat(1);
        for (auto& [rp, rexpr] : rows) {
            if (r.is_zero()) break;
            auto it = r.terms.find(rp.leading_monomial(ord));
            if (it == r.terms.end()) continue;
            Rat c = it->second / rp.leading_coeff(ord);
            r = r - c * rp;
            for (size_t j = 0; j < rexpr.size(); ++j) expr[j] -= c * rexpr[j];
        }
        if (r.is_zero()) {
            PowerRelation rel;
            rel.k = m;
            rel.q.assign(m, Rat(0));
            for (int j = 0; j < m; ++j) rel.q[j] = -expr[j];
            return rel;
        }
        auto pos = rows.begin();
        while (pos != rows.end() &&
               mono_less(r.leading_monomial(ord), pos->first.leading_monomial(ord), ord))
            ++pos;
        rows.insert(pos, {r, expr});
        cur = normal_form(cur * u, pres->gb);
    }
}

// coefficient vectors in u, reduced so the degree stays below rel.k
std::vector<Rat> u_mul(const std::vector<Rat>& a, const std::vector<Rat>& b,
                       const PowerRelation& rel) {
    std::vector<Rat> prod(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
    for (size_t t = prod.size(); t-- > static_cast<size_t>(rel.k);) {
        Rat c = prod[t];
        if (c == 0) continue;
        prod[t] = Rat(0);
        for (int j = 0; j < rel.k; ++j) prod[t - rel.k + j] += c * rel.q[j];
    }
    prod.resize(std::max<size_t>(rel.k, 1), Rat(0));
    return prod;
}

} // namespace

KClass push_class(const BlowupMorphism& b, const KClass& c) {
    if (c.pres != b.base.source_pres)
        throw std::invalid_argument("push_class: class does not live in the source presentation");
    const KPresPtr& tp = b.base.target_pres;
    const int ns = b.base.source.nrays();
    const int nt = tp->nrays;
    const int d = b.center.dim();

    std::optional<PowerRelation> rel;
    std::map<Int, KClass> push_cache;
    auto pushed_inverse = [&](const Int& l) -> const KClass& {
        auto it = push_cache.find(l);
        if (it == push_cache.end())
            it = push_cache.emplace(l, push_R_inverse_power(b, l)).first;
        return it->second;
    };

    KClass out = k_zero(tp);
    for (const auto& [mono, coeff] : c.p.terms) {
        std::vector<int> net = net_exponents(mono, ns);
        Int e(net[b.new_ray]);
        for (int k = 0; k < d; ++k) e -= b.weights[k] * net[b.center.ray_indices[k]];

        std::vector<int> texp(net.begin(), net.begin() + nt);
        KClass a = k_from_laurent(tp, LaurentPoly{{texp, Rat(1)}});

        KClass contrib = k_zero(tp);
        if (e <= 0) {
            contrib = k_mul(a, pushed_inverse(-e));
        } else {
            if (!rel) {
                Poly u = Poly::variable(2 * ns, ns + b.new_ray);
                rel = first_power_relation(b.base.source_pres, u);
                if (rel->k == 0 || rel->q[0] == 0)
                    throw std::logic_error("push_class: inverse power relation is degenerate");
            }
            // R = u^{-1} = (u^{k-1} - sum_{j>=1} q_j u^{j-1}) / q_0
            std::vector<Rat> gamma(rel->k, Rat(0));
            gamma[rel->k - 1] += Rat(1) / rel->q[0];
            for (int j = 1; j < rel->k; ++j) gamma[j - 1] -= rel->q[j] / rel->q[0];
            std::vector<Rat> rp{Rat(1)};
            for (Int i(0); i < e; ++i) rp = u_mul(rp, gamma, *rel);
            for (size_t l = 0; l < rp.size(); ++l) {
                if (rp[l] == 0) continue;
                contrib = k_add(contrib, k_scale(rp[l], k_mul(a, pushed_inverse(Int(l)))));
            }
        }
        out = k_add(out, k_scale(coeff, contrib));
    }
    return out;
}

SeriesCheck push_codim1_series_check(const ReweightMorphism& m, int T) {
    return compare_series(m.base.target_pres, T,
                          [&](const Int& l) {
                              return l == 0 ? k_one(m.base.target_pres) : push_codim1(m, l);
                          },
                          {{m.ray, m.factor}});
}

KClass push_codim1(const ReweightMorphism& m, const Int& mexp) {
    if (mexp < 1) throw std::invalid_argument("push_codim1: power must be >= 1");
    Int l = (mexp - 1) / m.factor;
    return k_ray_power(m.base.target_pres, m.ray, -(l + 1));
}

} // namespace stacky
