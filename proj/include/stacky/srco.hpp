#pragma once

#include <string>
#include <vector>

#include "stacky/fan.hpp"
#include "stacky/kth.hpp"
#include "stacky/ring.hpp"

namespace stacky {

// dimension of each graded piece, keyed by exact rational degree;
// only nonzero counts are stored
struct GradedDimension {
    std::map<Rat, long> entries;

    void add(const Rat& degree, long count);
    long total() const;
    long at(const Rat& degree) const;  // 0 if absent
    bool operator==(const GradedDimension&) const = default;
};

// quotient presentation attached to a box element: one variable per link ray
// of its minimal cone, monomial relations from the quotient fan's nonfaces,
// and one linear form per coordinate of the quotient lattice
struct SectorPresentation {
    QuotientFan qfan;
    std::vector<Poly> generators;
    GroebnerBasis gb;
};

struct SectorData {
    BoxElement box;
    SectorPresentation pres;
    long dimension = 0;
    GradedDimension graded;  // degrees shifted by the box element's degree
};

struct SRCohomology {
    GradedDimension graded;
    long total = 0;
    std::vector<SectorData> sectors;
};

SectorPresentation sector_presentation(const StackyFan& f, const BoxElement& v);
SRCohomology sr_dimension(const StackyFan& f);

// direct computation on the partial semigroup ring, degree by degree:
// basis = lattice points of the given degree; relations = products of the
// degree-one forms with all points one degree down
GradedDimension sr_truncated_oracle(const StackyFan& f, const Rat& D);

struct FormulaRow {
    Rat degree;
    Int product_side;   // coefficient of t^degree in (1-t)^rank * sum t^deg(w)
    long sector_side;   // graded dimension from the sector decomposition
};

struct FormulaCheck {
    bool equal = false;
    bool support_confirmed = false;
    std::vector<std::string> warnings;
    std::vector<FormulaRow> rows;
};

FormulaCheck graded_dim_formula_check(const StackyFan& f, const Rat& D);

struct ChernRow {
    BoxElement box;  // coefficients double as the rotation numbers
    long sector_dimension = 0;
};

struct ChernTable {
    std::vector<ChernRow> rows;
    long total = 0;
};

// one row per box element; checks that the sector dimensions sum to the
// K-theory dimension and throws logic_error if they do not
ChernTable chern_table(const StackyFan& f);

} // namespace stacky
