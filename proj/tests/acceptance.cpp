// Acceptance checks: one pass/fail line per criterion, exact arithmetic
// everywhere (tolerance zero), wall-clock limits enforced where stated.

#include <chrono>
#include <cstdio>
#include <exception>
#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "stacky/kth.hpp"
#include "stacky/mor.hpp"
#include "stacky/srco.hpp"

using namespace stacky;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// limit <= 0 means no wall-clock requirement for the criterion as a whole
template <typename Body>
void criterion(int idx, const char* label, double limit, Body body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        ok = false;
        note = std::string("exception: ") + e.what();
    }
    double secs = seconds_since(t0);
    if (ok && limit > 0 && secs >= limit) {
        ok = false;
        note = "time limit " + std::to_string(limit) + "s exceeded";
    }
    std::printf("%s criterion %d: %s [%.2fs]%s%s\n", ok ? "PASS" : "FAIL", idx, label, secs,
                note.empty() ? "" : " -- ", note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool fail(std::string& note, const std::string& msg) {
    note = msg;
    return false;
}

// --- samplers ------------------------------------------------------------

std::vector<int> random_exponents(std::mt19937& rng, int nrays) {
    std::uniform_int_distribution<int> e(-3, 3);
    std::vector<int> exps(nrays);
    for (int& x : exps) x = e(rng);
    return exps;
}

KClass random_monomial_class(std::mt19937& rng, const KPresPtr& pres) {
    LaurentPoly lp;
    lp[random_exponents(rng, pres->nrays)] = Rat(1);
    return k_from_laurent(pres, lp);
}

KClass random_class(std::mt19937& rng, const KPresPtr& pres) {
    std::uniform_int_distribution<int> c(-4, 4);
    std::uniform_int_distribution<int> n(1, 4);
    LaurentPoly lp;
    int terms = n(rng);
    for (int t = 0; t < terms; ++t) lp[random_exponents(rng, pres->nrays)] = Rat(c(rng));
    return k_from_laurent(pres, lp);
}

// --- criteria ------------------------------------------------------------

bool crit1(std::string& note) {
    SRCohomology sr = sr_dimension(load_fan("quadrant_pair"));
    if (sr.total != 3) return fail(note, "total " + std::to_string(sr.total) + " != 3");
    if (sr.graded.at(Rat(0)) != 1 || sr.graded.at(Rat(1)) != 2 || sr.graded.entries.size() != 2)
        return fail(note, "graded pieces differ from {0:1, 1:2}");
    return true;
}

bool crit2(std::string& note) {
    struct Row {
        const char* name;
        long expected;
    };
    const Row corpus[] = {{"p1", 2},          {"p2", 3},           {"p1xp1", 4},
                          {"p112", 4},        {"stacky_p1_2", 3},  {"stacky_p1_3", 4},
                          {"stacky_p1_4", 5}, {"quadrant_pair", 3}, {"affine", 1}};
    for (const Row& row : corpus) {
        auto t0 = std::chrono::steady_clock::now();
        StackyFan f = load_fan(row.name);
        long kd = k_dimension(k_presentation(f));
        long sd = sr_dimension(f).total;
        double secs = seconds_since(t0);
        if (kd != row.expected || sd != row.expected)
            return fail(note, std::string(row.name) + ": k_dimension " + std::to_string(kd) +
                                  ", sector total " + std::to_string(sd) + ", expected " +
                                  std::to_string(row.expected));
        if (secs >= 10.0)
            return fail(note, std::string(row.name) + " exceeded the 10s per-fan limit");
    }
    return true;
}

bool crit3(std::string& note) {
    ChernTable ct = chern_table(load_fan("p112"));
    if (ct.rows.size() != 2) return fail(note, "expected exactly two box elements");
    const ChernRow& twisted = ct.rows[0];
    const ChernRow& zero = ct.rows[1];
    if (twisted.box.point != IntVec{0, -1} || zero.box.point != IntVec{0, 0})
        return fail(note, "box points differ from {(0,-1), 0}");
    if (twisted.box.coefficients.size() != 2 ||
        twisted.box.coefficients.at(0) != make_rat(1, 2) ||
        twisted.box.coefficients.at(2) != make_rat(1, 2))
        return fail(note, "rotation numbers differ from (1/2, -, 1/2)");
    if (zero.sector_dimension != 3 || twisted.sector_dimension != 1)
        return fail(note, "sector dimensions differ from (3, 1)");
    if (ct.total != 4) return fail(note, "table total != 4");
    return true;
}

bool crit4(std::string& note) {
    for (const char* name : {"p2", "p112", "quadrant_pair"}) {
        auto t0 = std::chrono::steady_clock::now();
        StackyFan f = load_fan(name);
        GradedDimension oracle = sr_truncated_oracle(f, Rat(4));
        GradedDimension expect;
        for (const auto& [deg, cnt] : sr_dimension(f).graded.entries)
            if (deg <= Rat(4)) expect.add(deg, cnt);
        if (!(oracle == expect))
            return fail(note, std::string(name) + ": oracle disagrees with the sectors");
        if (seconds_since(t0) >= 30.0)
            return fail(note, std::string(name) + " exceeded the 30s per-fan limit");
    }
    return true;
}

bool crit5(std::string& note) {
    StackyFan p2 = load_fan("p2");
    for (auto weights : {std::vector<Int>{Int(2), Int(3)}, std::vector<Int>{Int(1), Int(1)}}) {
        BlowupMorphism b = weighted_blowup(p2, Cone{{0, 1}}, weights);
        std::string tag = "weights (" + weights[0].get_str() + "," + weights[1].get_str() + ")";
        SeriesCheck sc = push_series_identity_check(b, 8);
        if (!sc.equal || sc.first_mismatch != -1)
            return fail(note, tag + ": series identity fails at t^" +
                                  std::to_string(sc.first_mismatch));
        for (long l = 1; l <= 10; ++l)
            if (!(push_R_inverse_power(b, Int(l)) == push_hilbert_oracle(b, Int(l))))
                return fail(note, tag + ": closed form differs from the Hilbert oracle at l=" +
                                      std::to_string(l));
    }
    return true;
}

bool crit6(std::string& note) {
    ReweightMorphism m = codim1_reweight(load_fan("p1"), 0, Int(3));
    KPresPtr tp = m.base.target_pres;
    KClass xb = k_ray_power(tp, 0, Int(-1));
    KClass xb2 = k_ray_power(tp, 0, Int(-2));
    for (long e = 1; e <= 3; ++e)
        if (!(push_codim1(m, Int(e)) == xb))
            return fail(note, "m=" + std::to_string(e) + " does not push to the inverse class");
    for (long e = 4; e <= 6; ++e)
        if (!(push_codim1(m, Int(e)) == xb2))
            return fail(note, "m=" + std::to_string(e) + " does not push to its square");
    SeriesCheck sc = push_codim1_series_check(m, 9);
    if (!sc.equal || sc.lhs.size() != 10)
        return fail(note, "series identity fails at t^" + std::to_string(sc.first_mismatch));
    return true;
}

bool crit7(std::string& note) {
    struct Expected {
        const char* name;
        long c0, c1, c2;
    };
    for (Expected e : {Expected{"p2", 1, 1, 1}, Expected{"p112", 1, 2, 1}}) {
        FormulaCheck fc = graded_dim_formula_check(load_fan(e.name), Rat(4));
        if (!fc.support_confirmed || !fc.warnings.empty())
            return fail(note, std::string(e.name) + ": support unexpectedly unconfirmed");
        if (!fc.equal) return fail(note, std::string(e.name) + ": formula mismatch");
        if (fc.rows.size() != 3)
            return fail(note, std::string(e.name) + ": expected three nonzero degrees");
        long want[3] = {e.c0, e.c1, e.c2};
        for (int d = 0; d < 3; ++d) {
            const FormulaRow& row = fc.rows[d];
            if (row.degree != d || row.product_side != want[d] || row.sector_side != want[d])
                return fail(note, std::string(e.name) + ": coefficient of t^" +
                                      std::to_string(d) + " differs");
        }
    }
    return true;
}

bool crit8a(std::string& note) {
    std::mt19937 rng(42u);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix a(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a.at(i, j) = coef(rng);
        SmithDecomposition s = smith_normal_form(a);
        Int du = mat_det(s.U), dv = mat_det(s.V);
        if (!((du == 1 || du == -1) && (dv == 1 || dv == -1)))
            return fail(note, "transform not unimodular on trial " + std::to_string(trial));
        if (!(mat_mul(mat_mul(s.U, a), s.V) == s.S))
            return fail(note, "U*A*V != S on trial " + std::to_string(trial));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j && s.S.at(i, j) != 0)
                    return fail(note, "S not diagonal on trial " + std::to_string(trial));
        for (int i = 0; i + 1 < 3; ++i) {
            if (s.S.at(i, i) < 0) return fail(note, "negative invariant factor");
            if (s.S.at(i + 1, i + 1) != 0 &&
                (s.S.at(i, i) == 0 || s.S.at(i + 1, i + 1) % s.S.at(i, i) != 0))
                return fail(note, "divisibility chain broken on trial " + std::to_string(trial));
        }
    }
    return true;
}

bool crit8b(std::string& note) {
    std::mt19937 rng(43u);
    for (const char* name : {"p1", "p2", "p112", "quadrant_pair", "stacky_p1_3"}) {
        KPresPtr pres = k_presentation(load_fan(name));
        const GroebnerBasis& gb = pres->gb;
        for (size_t i = 0; i < gb.gens.size(); ++i)
            for (size_t j = i + 1; j < gb.gens.size(); ++j)
                if (!normal_form(s_polynomial(gb.gens[i], gb.gens[j], gb.order), gb).is_zero())
                    return fail(note, std::string(name) + ": an s-polynomial does not reduce");
        for (int trial = 0; trial < 10; ++trial) {
            Poly p = random_class(rng, pres).p;
            // Perturb off normal form by a random multiple of a relation.
            std::uniform_int_distribution<size_t> pick(0, pres->relations.size() - 1);
            Poly q = p + pres->relations[pick(rng)] * random_class(rng, pres).p;
            Poly n1 = normal_form(q, gb);
            if (!(normal_form(n1, gb) == n1))
                return fail(note, std::string(name) + ": normal form is not idempotent");
            if (!(n1 == p))
                return fail(note, std::string(name) + ": relation multiple changed the class");
        }
    }
    return true;
}

bool crit8c(std::string& note) {
    std::mt19937 rng(44u);
    StackyFan p2 = load_fan("p2");
    std::vector<std::pair<std::string, RefinementMorphism>> morphisms;
    morphisms.emplace_back("blowup(2,3)",
                           weighted_blowup(p2, Cone{{0, 1}}, {Int(2), Int(3)}).base);
    morphisms.emplace_back("blowup(1,1)",
                           weighted_blowup(p2, Cone{{0, 1}}, {Int(1), Int(1)}).base);
    morphisms.emplace_back("reweight(3)", codim1_reweight(load_fan("p1"), 0, Int(3)).base);

    for (const auto& [tag, m] : morphisms) {
        for (const Poly& rel : m.target_pres->relations)
            if (!(k_from_poly(m.source_pres, pullback_raw(m, rel)) == k_zero(m.source_pres)))
                return fail(note, tag + ": a target relation survives the pullback");
        KClass prev = k_one(m.target_pres);
        for (int s = 0; s < 20; ++s) {
            KClass mono = random_monomial_class(rng, m.target_pres);
            if (!(pullback(m, k_mul(mono, prev)) == k_mul(pullback(m, mono), pullback(m, prev))))
                return fail(note, tag + ": pullback is not multiplicative on sample " +
                                      std::to_string(s));
            if (!(pullback(m, k_add(mono, prev)) == k_add(pullback(m, mono), pullback(m, prev))))
                return fail(note, tag + ": pullback is not additive on sample " +
                                      std::to_string(s));
            prev = mono;
        }
        if (!(pullback(m, k_one(m.target_pres)) == k_one(m.source_pres)))
            return fail(note, tag + ": pullback does not preserve the identity");
    }
    return true;
}

bool crit8d(std::string& note) {
    std::mt19937 rng(45u);
    StackyFan p2 = load_fan("p2");
    for (auto weights : {std::vector<Int>{Int(2), Int(3)}, std::vector<Int>{Int(1), Int(1)}}) {
        BlowupMorphism b = weighted_blowup(p2, Cone{{0, 1}}, weights);
        const RefinementMorphism& m = b.base;
        for (int s = 0; s < 5; ++s) {
            KClass a = random_class(rng, m.target_pres);
            for (long l = 0; l <= 5; ++l) {
                KClass lhs = push_class(
                    b, k_mul(pullback(m, a), k_ray_power(m.source_pres, b.new_ray, Int(-l))));
                KClass rhs = k_mul(a, push_R_inverse_power(b, Int(l)));
                if (!(lhs == rhs))
                    return fail(note, "projection formula fails for sample " + std::to_string(s) +
                                          " at l=" + std::to_string(l));
            }
        }
    }
    return true;
}

} // namespace

int main() {
    criterion(1, "box-sector cohomology of the disjoint-quadrant fan is {0:1, 1:2}", 1.0, crit1);
    criterion(2, "K-theory dimension equals the sector total across the corpus", 0.0, crit2);
    criterion(3, "box/sector table of the weighted projective plane", 0.0, crit3);
    criterion(4, "truncated oracle matches the sector grading up to degree 4", 0.0, crit4);
    criterion(5, "blowup pushforward: series identity and Hilbert oracle", 60.0, crit5);
    criterion(6, "single-ray reweighting pushforward and its series identity", 10.0, crit6);
    criterion(7, "graded-dimension product formula on the projective planes", 10.0, crit7);
    criterion(8, "property suites: normal forms, pullbacks, projection formula", 0.0, [](std::string& note) {
        return crit8a(note) && crit8b(note) && crit8c(note) && crit8d(note);
    });

    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criterion(s) failed\n", failures);
    return 1;
}
