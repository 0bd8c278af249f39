#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stacky/fan.hpp"
#include "stacky/ring.hpp"

namespace stacky {

// Laurent exponent vectors over the rays: exps[i] is the (possibly negative)
// exponent of the class attached to ray i.
using LaurentPoly = std::map<std::vector<int>, Rat>;

// Presentation of the K-theory ring of a stacky fan as a quotient of a
// polynomial ring in variables x_i (one per ray) and their inverses xb_i:
//   x_i * xb_i = 1,
//   one relation per lattice coordinate making prod_i x_i^{v_i[r]} trivial,
//   prod_{i in S} (1 - x_i) for every minimal nonface S.
struct KPresentation {
    StackyFan fan;
    int nrays = 0;
    std::vector<Poly> relations;     // raw generators before the basis computation
    GroebnerBasis gb;                // degrevlex basis of the relation ideal
    std::optional<long> dimension;   // vector-space dimension, if finite
    std::vector<std::string> names;  // x0..x{n-1}, xb0..xb{n-1}
};

using KPresPtr = std::shared_ptr<const KPresentation>;

struct KClass {
    KPresPtr pres;
    Poly p;  // always kept in normal form w.r.t. pres->gb

    bool operator==(const KClass& other) const;
};

KPresPtr k_presentation(const StackyFan& fan);

KClass k_zero(const KPresPtr& pres);
KClass k_one(const KPresPtr& pres);
// x_i^m for m >= 0, xb_i^{-m} for m < 0
KClass k_ray_power(const KPresPtr& pres, int ray, const Int& m);
KClass k_from_poly(const KPresPtr& pres, const Poly& raw);
KClass k_from_laurent(const KPresPtr& pres, const LaurentPoly& lp);

KClass k_add(const KClass& a, const KClass& b);
KClass k_sub(const KClass& a, const KClass& b);
KClass k_mul(const KClass& a, const KClass& b);
KClass k_scale(const Rat& c, const KClass& a);
KClass k_pow(const KClass& a, long m);

long k_dimension(const KPresPtr& pres);            // throws if infinite
std::vector<Monomial> k_basis(const KPresPtr& pres);
std::string k_to_string(const KClass& c);

// x_i -> exps[i], xb_i -> -exps[i]; used to transport classes along maps
Poly laurent_to_poly(int nrays, const LaurentPoly& lp);

} // namespace stacky
