#include "stacky/kth.hpp"

#include <stdexcept>

namespace stacky {

namespace {

void check_same_presentation(const KClass& a, const KClass& b) {
    if (a.pres != b.pres)
        throw std::invalid_argument("classes live in different K-theory presentations");
}

// single Laurent monomial as a polynomial monomial: positive exponents go to
// x_i (variable i), negative ones to xb_i (variable n + i)
Monomial laurent_monomial(int nrays, const std::vector<int>& exps) {
    Monomial m = Monomial::one();
    for (int i = 0; i < nrays; ++i) {
        if (i >= static_cast<int>(exps.size())) break;
        if (exps[i] > 0)
            m = mono_mul(m, Monomial::var(i, exps[i]));
        else if (exps[i] < 0)
            m = mono_mul(m, Monomial::var(nrays + i, -exps[i]));
    }
    return m;
}

} // namespace

bool KClass::operator==(const KClass& other) const {
    return pres == other.pres && p == other.p;
}

Poly laurent_to_poly(int nrays, const LaurentPoly& lp) {
    Poly out = Poly::zero(2 * nrays);
    for (const auto& [exps, coeff] : lp) {
        if (static_cast<int>(exps.size()) > nrays)
            throw std::invalid_argument("laurent_to_poly: exponent vector too long");
        out.add_term(laurent_monomial(nrays, exps), coeff);
    }
    return out;
}

KPresPtr k_presentation(const StackyFan& fan) {
    auto pres = std::make_shared<KPresentation>();
    pres->fan = fan;
    const int n = fan.nrays();
    pres->nrays = n;
    pres->names.resize(2 * n);
    for (int i = 0; i < n; ++i) {
        pres->names[i] = "x" + std::to_string(i);
        pres->names[n + i] = "xb" + std::to_string(i);
    }

    std::vector<Poly> rels;
    for (int i = 0; i < n; ++i) {
        Poly r = Poly::monomial(2 * n, mono_mul(Monomial::var(i, 1), Monomial::var(n + i, 1)), Rat(1));
        r = r - Poly::constant(2 * n, Rat(1));
        rels.push_back(r);
    }
    for (int r = 0; r < fan.rank; ++r) {
        Monomial pos = Monomial::one(), neg = Monomial::one();
        for (int i = 0; i < n; ++i) {
            Int a = fan.rays[i][r];
            if (!a.fits_sint_p())
                throw std::invalid_argument("k_presentation: ray coordinate too large");
            int ai = static_cast<int>(a.get_si());
            if (ai > 0)
                pos = mono_mul(pos, Monomial::var(i, ai));
            else if (ai < 0)
                neg = mono_mul(neg, Monomial::var(n + i, -ai));
        }
        Poly rel = Poly::monomial(2 * n, mono_mul(pos, neg), Rat(1)) - Poly::constant(2 * n, Rat(1));
        if (!rel.is_zero()) rels.push_back(rel);
    }
    for (const auto& nf : minimal_nonfaces(fan)) {
        Poly prod = Poly::constant(2 * n, Rat(1));
        for (int i : nf) {
            Poly factor = Poly::constant(2 * n, Rat(1)) -
                          Poly::monomial(2 * n, Monomial::var(i, 1), Rat(1));
            prod = prod * factor;
        }
        rels.push_back(prod);
    }
    pres->relations = rels;
    pres->gb = groebner(rels, MonomialOrder::degrevlex);
    pres->dimension = quotient_dimension(pres->gb);
    return pres;
}

KClass k_zero(const KPresPtr& pres) {
    return KClass{pres, Poly::zero(2 * pres->nrays)};
}

KClass k_one(const KPresPtr& pres) {
    return k_from_poly(pres, Poly::constant(2 * pres->nrays, Rat(1)));
}

KClass k_from_poly(const KPresPtr& pres, const Poly& raw) {
    if (raw.nvars != 2 * pres->nrays)
        throw std::invalid_argument("k_from_poly: wrong number of variables");
    return KClass{pres, normal_form(raw, pres->gb)};
}

KClass k_ray_power(const KPresPtr& pres, int ray, const Int& m) {
    if (ray < 0 || ray >= pres->nrays)
        throw std::invalid_argument("k_ray_power: ray index out of range");
    if (!m.fits_sint_p()) throw std::invalid_argument("k_ray_power: exponent too large");
    int e = static_cast<int>(m.get_si());
    Monomial mono = e >= 0 ? (e == 0 ? Monomial::one() : Monomial::var(ray, e))
                           : Monomial::var(pres->nrays + ray, -e);
    return k_from_poly(pres, Poly::monomial(2 * pres->nrays, mono, Rat(1)));
}

KClass k_from_laurent(const KPresPtr& pres, const LaurentPoly& lp) {
    return k_from_poly(pres, laurent_to_poly(pres->nrays, lp));
}

KClass k_add(const KClass& a, const KClass& b) {
    check_same_presentation(a, b);
    return KClass{a.pres, a.p + b.p};  // normal form is linear, no re-reduction needed
}

KClass k_sub(const KClass& a, const KClass& b) {
    check_same_presentation(a, b);
    return KClass{a.pres, a.p - b.p};
}

KClass k_mul(const KClass& a, const KClass& b) {
    check_same_presentation(a, b);
    return KClass{a.pres, normal_form(a.p * b.p, a.pres->gb)};
}

KClass k_scale(const Rat& c, const KClass& a) {
    return KClass{a.pres, c * a.p};
}

KClass k_pow(const KClass& a, long m) {
    if (m < 0) throw std::invalid_argument("k_pow: negative exponent");
    KClass acc = k_one(a.pres);
    for (long i = 0; i < m; ++i) acc = k_mul(acc, a);
    return acc;
}

long k_dimension(const KPresPtr& pres) {
    if (!pres->dimension)
        throw std::domain_error("K-theory presentation has infinite vector-space dimension");
    return *pres->dimension;
}

std::vector<Monomial> k_basis(const KPresPtr& pres) {
    return standard_monomials(pres->gb);
}

std::string k_to_string(const KClass& c) {
    return poly_to_string(c.p, c.pres->names, c.pres->gb.order);
}

} // namespace stacky
