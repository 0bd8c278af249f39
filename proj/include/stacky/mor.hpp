#pragma once

#include <string>
#include <vector>

#include "stacky/fan.hpp"
#include "stacky/kth.hpp"
#include "stacky/ring.hpp"

namespace stacky {

// A map of stacky fans refining the target: each source ray is an integer
// combination of the rays of the smallest target cone containing it, and
// every source cone fits inside a target cone.
struct RefinementMorphism {
    StackyFan source;
    StackyFan target;
    IntMatrix alpha;            // target.nrays() x source.nrays(); v'_j = sum_i alpha(i,j) v_i
    std::vector<Cone> supports; // minimal target cone containing each source ray
    KPresPtr source_pres;
    KPresPtr target_pres;
};

RefinementMorphism refinement_matrix(const StackyFan& source, const StackyFan& target);

// x_i -> prod_j (x'_j)^{alpha(i,j)} on Laurent monomials, extended linearly
KClass pullback(const RefinementMorphism& m, const KClass& c);
// same substitution on a raw polynomial in the target variables, not reduced
Poly pullback_raw(const RefinementMorphism& m, const Poly& target_poly);

// Star subdivision at a cone of dimension >= 2: the extra ray is the
// weighted sum of the center's rays and every cone through the center is
// split into one piece per omitted center ray.
struct BlowupMorphism {
    RefinementMorphism base;
    Cone center;
    std::vector<Int> weights;
    int new_ray = -1; // index of the extra ray in the source fan
};

BlowupMorphism weighted_blowup(const StackyFan& fan, const Cone& center,
                               const std::vector<Int>& weights);

// Same fan, one ray marking multiplied by a positive integer.
struct ReweightMorphism {
    RefinementMorphism base;
    int ray = -1;
    Int factor = 1;
};

ReweightMorphism codim1_reweight(const StackyFan& fan, int ray, const Int& factor);

// Direct image of R^{-l} for the blowup, R the class of the extra ray:
//   1 - prod_{i in center} (1 - xb_i) * sum_{s >= 0, h.s < l} prod xb_i^{s_i}
KClass push_R_inverse_power(const BlowupMorphism& b, const Int& l);

// Independent computation of the same class through the monomial ideal
// generated by {z^s : h.s >= l}: inclusion-exclusion over the lcms of its
// minimal generators gives the numerator of the ideal's Hilbert series,
// evaluated at the inverse ray classes.
KClass push_hilbert_oracle(const BlowupMorphism& b, const Int& l);

struct SeriesCheck {
    bool equal = true;
    int first_mismatch = -1;         // t-power of the first difference, -1 if none
    std::vector<std::string> lhs;    // canonical renderings, one per t-power
    std::vector<std::string> rhs;
};

// sum_l mu_*(R^{-l}) t^l against the closed form
//   1/(1-t) - t/(1-t) * prod_i (1 - xb_i)/(1 - xb_i t^{h_i})
SeriesCheck push_series_identity_check(const BlowupMorphism& b, int T);

// Direct image of an arbitrary source class: each Laurent monomial factors as
// a pulled-back target monomial times an integer power of R; nonnegative
// inverse powers push via push_R_inverse_power and the projection formula,
// positive powers are first rewritten through the minimal polynomial of R^{-1}.
KClass push_class(const BlowupMorphism& b, const KClass& c);

// mu_*(R'^{-m}) for the reweighting: with m = l*factor + r, 1 <= r <= factor,
// this is xb_ray^{l+1} in the target.
KClass push_codim1(const ReweightMorphism& m, const Int& mexp);

// sum_m mu_*(R'^{-m}) t^m against
//   1/(1-t) - t/(1-t) * (1 - xb_ray)/(1 - xb_ray t^factor)
SeriesCheck push_codim1_series_check(const ReweightMorphism& m, int T);

} // namespace stacky
