#pragma once

#include "stacky/latlin.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace stacky {

// A cone is stored as the sorted set of ray indices spanning it.  Fans are
// simplicial, so faces are exactly the index subsets of listed cones.
struct Cone {
    std::vector<int> ray_indices;

    int dim() const { return static_cast<int>(ray_indices.size()); }
    bool contains(int i) const;
    bool subset_of(const Cone& other) const;

    auto operator<=>(const Cone&) const = default;
};

// Reduced stacky fan: lattice rank, marked ray vectors v_i (nonzero, not
// necessarily primitive), and the maximal cones.  Construct through
// validate_fan / make_fan; operations assume a validated fan.
struct StackyFan {
    int rank = 0;
    std::vector<IntVec> rays;
    std::vector<Cone> max_cones; // normalized: sorted, none contained in another

    int nrays() const { return static_cast<int>(rays.size()); }
};

struct FanCandidate {
    int rank = 0;
    std::vector<IntVec> rays;
    std::vector<std::vector<int>> max_cones;
    std::string name;
};

// Support/shape flags that are reported but are not validity requirements.
struct SupportInfo {
    bool pure_full_dim = false;  // every maximal cone has dimension == rank
    bool complete = false;       // support is all of the ambient space
    bool convex_support = false; // support confirmed convex (complete implies it)
};

struct FanValidation {
    std::optional<StackyFan> fan; // engaged iff diagnostics is empty
    std::vector<std::string> diagnostics;
    SupportInfo support;
};

FanValidation validate_fan(const FanCandidate& cand);

// Validate-or-throw convenience used heavily in tests.
StackyFan make_fan(int rank, std::vector<IntVec> rays, std::vector<std::vector<int>> cones);

SupportInfo support_info(const StackyFan& f);

bool is_face_of_some_cone(const StackyFan& f, const std::vector<int>& indices);

// v = lambda * w for some rational lambda > 0
bool same_ray_direction(const IntVec& v, const IntVec& w);

struct ConePoint {
    Cone cone;      // minimal cone containing the point
    RatVec coeffs;  // parallel to cone.ray_indices, all strictly positive
};

// Minimal cone of the fan containing w, with the coefficients w = sum a_i v_i;
// nullopt when w is outside the support.
std::optional<ConePoint> minimal_cone_containing(const StackyFan& f, const IntVec& w);

// Sum of the coefficients from minimal_cone_containing; throws std::domain_error
// when w is outside the support.
Rat degree_of(const StackyFan& f, const IntVec& w);

// Inclusion-minimal ray index sets contained in no cone.
std::vector<std::vector<int>> minimal_nonfaces(const StackyFan& f);

struct BoxElement {
    IntVec point;
    Cone minimal_cone;
    std::map<int, Rat> coefficients; // ray index -> coefficient in (0,1)

    Rat degree() const;
};

// All lattice points sum a_i v_i over C's rays with a_i in [0,1), enumerated
// through the finite quotient (lattice points of the rational span) / (integer
// span of the rays).
std::vector<BoxElement> box_of_cone(const StackyFan& f, const Cone& c);

// Deduplicated union over all cones, sorted by point (lexicographically).
std::vector<BoxElement> box_of_fan(const StackyFan& f);

struct QuotientFan {
    StackyFan fan;              // lives in the quotient lattice of rank rank - |C|
    std::vector<int> link_rays; // original index of each quotient ray
    IntMatrix projection;       // (rank - |C|) x rank matrix realizing the quotient map
};

// Image of the star of C in N / (saturation of the span of C's rays).
QuotientFan quotient_fan(const StackyFan& f, const Cone& c);

// All lattice points in the support with degree <= D, with their exact degrees,
// sorted by point.
std::vector<std::pair<IntVec, Rat>> lattice_points_of_degree_at_most(const StackyFan& f,
                                                                     const Rat& D);

} // namespace stacky
