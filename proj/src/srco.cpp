#include "stacky/srco.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace stacky {

void GradedDimension::add(const Rat& degree, long count) {
    if (count == 0) return;
    auto it = entries.find(degree);
    if (it == entries.end()) {
        entries.emplace(degree, count);
    } else {
        it->second += count;
        if (it->second == 0) entries.erase(it);
    }
}

long GradedDimension::total() const {
    long t = 0;
    for (const auto& [d, c] : entries) t += c;
    return t;
}

long GradedDimension::at(const Rat& degree) const {
    auto it = entries.find(degree);
    return it == entries.end() ? 0 : it->second;
}

SectorPresentation sector_presentation(const StackyFan& f, const BoxElement& v) {
    SectorPresentation sp;
    sp.qfan = quotient_fan(f, v.minimal_cone);
    const int k = static_cast<int>(sp.qfan.link_rays.size());

    for (const auto& nf : minimal_nonfaces(sp.qfan.fan)) {
        Monomial m = Monomial::one();
        for (int j : nf) m = mono_mul(m, Monomial::var(j, 1));
        sp.generators.push_back(Poly::monomial(k, m, Rat(1)));
    }
    for (int r = 0; r < sp.qfan.fan.rank; ++r) {
        Poly lin = Poly::zero(k);
        for (int j = 0; j < k; ++j) {
            const Int& c = sp.qfan.fan.rays[j][r];
            if (c != 0) lin.add_term(Monomial::var(j, 1), Rat(c));
        }
        if (!lin.is_zero()) sp.generators.push_back(lin);
    }
    sp.gb = groebner(sp.generators, MonomialOrder::degrevlex);
    return sp;
}

SRCohomology sr_dimension(const StackyFan& f) {
    SRCohomology out;
    for (const BoxElement& v : box_of_fan(f)) {
        SectorData sd;
        sd.box = v;
        sd.pres = sector_presentation(f, v);
        Rat shift = v.degree();
        for (const Monomial& m : standard_monomials(sd.pres.gb))
            sd.graded.add(shift + Rat(m.total_degree()), 1);
        sd.dimension = sd.graded.total();
        for (const auto& [deg, c] : sd.graded.entries) out.graded.add(deg, c);
        out.sectors.push_back(std::move(sd));
    }
    out.total = out.graded.total();
    return out;
}

GradedDimension sr_truncated_oracle(const StackyFan& f, const Rat& D) {
    if (D < 0) throw std::invalid_argument("sr_truncated_oracle: negative degree bound");
    auto points = lattice_points_of_degree_at_most(f, D);

    std::map<Rat, std::vector<IntVec>> by_degree;
    for (auto& [pt, deg] : points) by_degree[deg].push_back(pt);

    // minimal cone of each point, for the partial-product rule
    std::map<IntVec, Cone> min_cone;
    for (const auto& [pt, deg] : points) {
        auto cp = minimal_cone_containing(f, pt);
        if (!cp) throw std::logic_error("sr_truncated_oracle: point escaped the support");
        min_cone.emplace(pt, cp->cone);
    }

    GradedDimension out;
    for (const auto& [d, basis] : by_degree) {
        std::map<IntVec, int> col;
        for (size_t i = 0; i < basis.size(); ++i) col[basis[i]] = static_cast<int>(i);

        std::vector<RatVec> rows;
        auto prev = by_degree.find(d - Rat(1));
        if (prev != by_degree.end()) {
            for (const IntVec& w : prev->second) {
                const Cone& cw = min_cone.at(w);
                for (int r = 0; r < f.rank; ++r) {
                    RatVec row(basis.size(), Rat(0));
                    bool nonzero = false;
                    for (int j = 0; j < f.nrays(); ++j) {
                        if (f.rays[j][r] == 0) continue;
                        // [w]*[v_j] vanishes unless both live in a common cone
                        std::vector<int> joined = cw.ray_indices;
                        if (!cw.contains(j)) {
                            joined.push_back(j);
                            std::sort(joined.begin(), joined.end());
                        }
                        if (!is_face_of_some_cone(f, joined)) continue;
                        IntVec tgt = w;
                        for (int t = 0; t < f.rank; ++t) tgt[t] += f.rays[j][t];
                        auto it = col.find(tgt);
                        if (it == col.end())
                            throw std::logic_error("sr_truncated_oracle: product left the degree slice");
                        row[it->second] += Rat(f.rays[j][r]);
                        nonzero = true;
                    }
                    if (nonzero) rows.push_back(std::move(row));
                }
            }
        }
        long dim = static_cast<long>(basis.size()) - rational_rank(rows);
        if (dim > 0) out.add(d, dim);
    }
    return out;
}

namespace {

Int binomial(int n, int k) {
    if (k < 0 || k > n) return Int(0);
    Int b(1);
    for (int i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);
    }
    return b;
}

} // namespace

FormulaCheck graded_dim_formula_check(const StackyFan& f, const Rat& D) {
    FormulaCheck out;
    SupportInfo s = support_info(f);
    out.support_confirmed = s.complete || (s.pure_full_dim && s.convex_support);
    if (!out.support_confirmed)
        out.warnings.push_back(
            "support is neither complete nor confirmed convex; "
            "the product formula is not guaranteed to hold");

    std::map<Rat, Int> count;  // lattice points per exact degree
    for (const auto& [pt, deg] : lattice_points_of_degree_at_most(f, D)) count[deg] += 1;

    GradedDimension graded = sr_dimension(f).graded;

    std::set<Rat> degrees;
    for (const auto& [d, c] : count)
        for (int k = 0; k <= f.rank; ++k)
            if (d + Rat(k) <= D) degrees.insert(d + Rat(k));
    for (const auto& [d, c] : graded.entries)
        if (d <= D) degrees.insert(d);

    out.equal = true;
    for (const Rat& e : degrees) {
        Int lhs(0);
        for (int k = 0; k <= f.rank; ++k) {
            auto it = count.find(e - Rat(k));
            if (it == count.end()) continue;
            Int term = binomial(f.rank, k) * it->second;
            if (k % 2) lhs -= term; else lhs += term;
        }
        long rhs = graded.at(e);
        if (lhs == 0 && rhs == 0) continue;
        out.rows.push_back(FormulaRow{e, lhs, rhs});
        if (Rat(lhs) != Rat(rhs)) out.equal = false;
    }
    return out;
}

ChernTable chern_table(const StackyFan& f) {
    ChernTable t;
    SRCohomology sr = sr_dimension(f);
    for (const SectorData& sd : sr.sectors) {
        t.rows.push_back(ChernRow{sd.box, sd.dimension});
        t.total += sd.dimension;
    }
    long kdim = k_dimension(k_presentation(f));
    if (kdim != t.total)
        throw std::logic_error("chern_table: K-theory dimension " + std::to_string(kdim) +
                               " differs from sector total " + std::to_string(t.total));
    return t;
}

} // namespace stacky
