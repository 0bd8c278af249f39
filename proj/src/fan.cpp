#include "stacky/fan.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace stacky {

bool Cone::contains(int i) const {
    return std::binary_search(ray_indices.begin(), ray_indices.end(), i);
}

bool Cone::subset_of(const Cone& other) const {
    return std::includes(other.ray_indices.begin(), other.ray_indices.end(),
                         ray_indices.begin(), ray_indices.end());
}

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

IntMatrix ray_columns(const StackyFan& f, const std::vector<int>& indices) {
    std::vector<IntVec> cols;
    cols.reserve(indices.size());
    for (int i : indices) cols.push_back(f.rays[i]);
    return IntMatrix::from_columns(cols, f.rank);
}

int rational_rank_of_columns(const IntMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    SmithDecomposition d = smith_normal_form(m);
    int r = 0;
    for (int t = 0; t < std::min(m.rows, m.cols); ++t)
        if (d.S.at(t, t) != 0) ++r;
    return r;
}

bool is_zero_vec(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

// v == lambda * w for some rational lambda > 0?
bool positive_parallel(const IntVec& v, const IntVec& w) {
    int k = -1;
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0) { k = static_cast<int>(i); break; }
    if (k < 0) return false;
    if (v[k] == 0) return false;
    Rat lambda = make_rat(v[k], w[k]);
    if (lambda <= 0) return false;
    for (size_t i = 0; i < w.size(); ++i)
        if (Rat(v[i]) != lambda * Rat(w[i])) return false;
    return true;
}

void for_each_subset_of_size(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        fn(idx);
        int p = k - 1;
        while (p >= 0 && idx[p] == n - k + p) --p;
        if (p < 0) break;
        ++idx[p];
        for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
}

// Does cone(A) ∩ cone(B) equal the cone on their common rays?  The
// intersection lives in span(A) ∩ span(B), parametrized by the kernel of
// [A | -B]; its extreme rays are found among the kernel-coefficient vectors
// annihilating all but one of a maximal independent set of sign constraints.
bool cones_meet_in_common_face(const StackyFan& f, const Cone& a, const Cone& b) {
    const int d1 = a.dim(), d2 = b.dim();
    if (d1 == 0 || d2 == 0) return true;
    std::vector<IntVec> cols;
    for (int i : a.ray_indices) cols.push_back(f.rays[i]);
    for (int i : b.ray_indices) {
        IntVec neg = f.rays[i];
        for (Int& x : neg) x = -x;
        cols.push_back(neg);
    }
    auto ker = integer_kernel(IntMatrix::from_columns(cols, f.rank));
    const int m = static_cast<int>(ker.size());
    if (m == 0) return true; // the spans meet only at the origin

    std::vector<int> common;
    std::set_intersection(a.ray_indices.begin(), a.ray_indices.end(),
                          b.ray_indices.begin(), b.ray_indices.end(),
                          std::back_inserter(common));

    bool ok = true;
    for_each_subset_of_size(d1 + d2, m - 1, [&](const std::vector<int>& rows) {
        if (!ok) return;
        // kernel of the selected constraint rows, in kernel coordinates
        IntMatrix g(static_cast<int>(rows.size()), m);
        for (int r = 0; r < g.rows; ++r)
            for (int k = 0; k < m; ++k) g.at(r, k) = ker[k][rows[r]];
        auto lam = integer_kernel(g);
        if (lam.size() != 1) return;
        // candidate coefficient vector c = sum lam_k * ker[k]
        IntVec c(d1 + d2, Int(0));
        for (int k = 0; k < m; ++k)
            for (int r = 0; r < d1 + d2; ++r) c[r] += lam[0][k] * ker[k][r];
        bool nonneg = true, nonpos = true;
        for (const Int& x : c) {
            if (x < 0) nonneg = false;
            if (x > 0) nonpos = false;
        }
        if (!nonneg && !nonpos) return; // not feasible for either sign
        if (nonpos)
            for (Int& x : c) x = -x;
        if (is_zero_vec(c)) return;
        // the candidate point, expressed through cone(A)
        IntVec x(f.rank, Int(0));
        for (int i = 0; i < d1; ++i)
            for (int r = 0; r < f.rank; ++r) x[r] += c[i] * f.rays[a.ray_indices[i]][r];
        if (common.empty()) { ok = false; return; } // nonzero meet, no common rays
        auto sol = rational_solve(ray_columns(f, common), x);
        if (!sol) { ok = false; return; }
        for (const Rat& q : *sol)
            if (q < 0) { ok = false; return; }
    });
    return ok;
}

} // namespace

SupportInfo support_info(const StackyFan& f) {
    SupportInfo s;
    s.pure_full_dim = true;
    for (const Cone& c : f.max_cones)
        if (c.dim() != f.rank) s.pure_full_dim = false;
    if (f.rank == 0) {
        s.complete = true;
        s.convex_support = true;
        return s;
    }
    if (!s.pure_full_dim || f.max_cones.empty()) return s;

    // wall = (rank-1)-subset of a maximal cone; interior walls occur twice
    std::map<std::vector<int>, int> wall_count;
    for (const Cone& c : f.max_cones)
        for (int r : c.ray_indices) {
            std::vector<int> wall;
            for (int i : c.ray_indices)
                if (i != r) wall.push_back(i);
            ++wall_count[wall];
        }
    s.complete = true;
    for (const auto& [wall, count] : wall_count)
        if (count != 2) s.complete = false;
    if (s.complete) {
        s.convex_support = true;
        return s;
    }

    // convex iff each boundary wall supports the whole ray set
    s.convex_support = true;
    for (const Cone& c : f.max_cones) {
        for (int r : c.ray_indices) {
            std::vector<int> wall;
            for (int i : c.ray_indices)
                if (i != r) wall.push_back(i);
            if (wall_count[wall] != 1) continue;
            std::vector<IntVec> wall_rows;
            for (int i : wall) wall_rows.push_back(f.rays[i]);
            auto ker = integer_kernel(IntMatrix::from_rows(wall_rows, f.rank));
            if (ker.size() != 1) { s.convex_support = false; break; }
            IntVec ell = ker[0];
            Int on_r(0);
            for (int k = 0; k < f.rank; ++k) on_r += ell[k] * f.rays[r][k];
            if (on_r == 0) { s.convex_support = false; break; }
            if (on_r < 0)
                for (Int& x : ell) x = -x;
            for (const IntVec& v : f.rays) {
                Int val(0);
                for (int k = 0; k < f.rank; ++k) val += ell[k] * v[k];
                if (val < 0) { s.convex_support = false; break; }
            }
            if (!s.convex_support) break;
        }
        if (!s.convex_support) break;
    }
    return s;
}

FanValidation validate_fan(const FanCandidate& cand) {
    FanValidation out;
    auto& diag = out.diagnostics;

    if (cand.rank < 0) {
        diag.push_back("rank is negative");
        return out;
    }
    for (size_t i = 0; i < cand.rays.size(); ++i) {
        if (static_cast<int>(cand.rays[i].size()) != cand.rank)
            diag.push_back("ray " + std::to_string(i) + " has " +
                           std::to_string(cand.rays[i].size()) + " coordinates, expected " +
                           std::to_string(cand.rank));
        else if (is_zero_vec(cand.rays[i]))
            diag.push_back("ray " + std::to_string(i) + " is the zero vector");
    }
    const int n = static_cast<int>(cand.rays.size());
    for (size_t c = 0; c < cand.max_cones.size(); ++c) {
        std::vector<int> s = cand.max_cones[c];
        std::sort(s.begin(), s.end());
        for (size_t k = 0; k < s.size(); ++k) {
            if (s[k] < 0 || s[k] >= n) {
                diag.push_back("cone " + std::to_string(c) + " references ray index " +
                               std::to_string(s[k]) + " out of range");
                break;
            }
            if (k > 0 && s[k] == s[k - 1]) {
                diag.push_back("cone " + std::to_string(c) + " repeats ray index " +
                               std::to_string(s[k]));
                break;
            }
        }
    }
    if (!diag.empty()) return out;

    // normalize: sorted index sets, duplicates and non-maximal (subset) cones dropped
    std::vector<Cone> cones;
    for (const auto& raw : cand.max_cones) {
        Cone c{raw};
        std::sort(c.ray_indices.begin(), c.ray_indices.end());
        cones.push_back(std::move(c));
    }
    std::sort(cones.begin(), cones.end());
    cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
    std::vector<Cone> maximal;
    for (size_t i = 0; i < cones.size(); ++i) {
        bool inside_other = false;
        for (size_t j = 0; j < cones.size() && !inside_other; ++j)
            if (i != j && cones[i].subset_of(cones[j]) && cones[i] != cones[j]) inside_other = true;
        if (!inside_other) maximal.push_back(cones[i]);
    }

    StackyFan fan;
    fan.rank = cand.rank;
    fan.rays = cand.rays;
    fan.max_cones = maximal;

    std::vector<bool> simplicial(maximal.size(), true);
    for (size_t c = 0; c < maximal.size(); ++c) {
        if (maximal[c].dim() == 0) continue;
        IntMatrix m = ray_columns(fan, maximal[c].ray_indices);
        if (rational_rank_of_columns(m) != maximal[c].dim()) {
            simplicial[c] = false;
            diag.push_back("cone " + index_set_str(maximal[c].ray_indices) +
                           " is not simplicial: its rays are linearly dependent");
        }
    }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (positive_parallel(fan.rays[i], fan.rays[j]))
                diag.push_back("rays " + std::to_string(i) + " and " + std::to_string(j) +
                               " span the same ray of the fan");

    for (size_t i = 0; i < maximal.size(); ++i)
        for (size_t j = i + 1; j < maximal.size(); ++j) {
            if (!simplicial[i] || !simplicial[j]) continue;
            if (!cones_meet_in_common_face(fan, maximal[i], maximal[j]))
                diag.push_back("cones " + index_set_str(maximal[i].ray_indices) + " and " +
                               index_set_str(maximal[j].ray_indices) +
                               " do not intersect in a common face");
        }

    for (int i = 0; i < n; ++i) {
        bool covered = false;
        for (const Cone& c : maximal)
            if (c.contains(i)) { covered = true; break; }
        if (!covered)
            diag.push_back("ray " + std::to_string(i) + " lies in no cone");
    }

    if (!finite_index_span(fan.rays, fan.rank))
        diag.push_back("rays do not span a finite-index subgroup of the lattice");

    if (!diag.empty()) return out;
    out.support = support_info(fan);
    out.fan = std::move(fan);
    return out;
}

StackyFan make_fan(int rank, std::vector<IntVec> rays, std::vector<std::vector<int>> cones) {
    FanCandidate cand;
    cand.rank = rank;
    cand.rays = std::move(rays);
    cand.max_cones = std::move(cones);
    FanValidation v = validate_fan(cand);
    if (!v.fan) {
        std::string msg = "invalid fan:";
        for (const auto& d : v.diagnostics) msg += " " + d + ";";
        throw std::invalid_argument(msg);
    }
    return *v.fan;
}

bool same_ray_direction(const IntVec& v, const IntVec& w) {
    return positive_parallel(v, w);
}

bool is_face_of_some_cone(const StackyFan& f, const std::vector<int>& indices) {
    for (const Cone& c : f.max_cones) {
        bool inside = true;
        for (int i : indices)
            if (!c.contains(i)) { inside = false; break; }
        if (inside) return true;
    }
    return false;
}

std::optional<ConePoint> minimal_cone_containing(const StackyFan& f, const IntVec& w) {
    if (static_cast<int>(w.size()) != f.rank)
        throw std::invalid_argument("minimal_cone_containing: vector length mismatch");
    if (is_zero_vec(w)) return ConePoint{Cone{}, {}};
    for (const Cone& c : f.max_cones) {
        if (c.dim() == 0) continue;
        auto sol = rational_solve(ray_columns(f, c.ray_indices), w);
        if (!sol) continue;
        bool nonneg = true;
        for (const Rat& q : *sol)
            if (q < 0) { nonneg = false; break; }
        if (!nonneg) continue;
        ConePoint cp;
        for (int k = 0; k < c.dim(); ++k)
            if ((*sol)[k] > 0) {
                cp.cone.ray_indices.push_back(c.ray_indices[k]);
                cp.coeffs.push_back((*sol)[k]);
            }
        return cp;
    }
    return std::nullopt;
}

Rat degree_of(const StackyFan& f, const IntVec& w) {
    auto cp = minimal_cone_containing(f, w);
    if (!cp) throw std::domain_error("degree_of: point lies outside the fan support");
    Rat d(0);
    for (const Rat& q : cp->coeffs) d += q;
    return d;
}

std::vector<std::vector<int>> minimal_nonfaces(const StackyFan& f) {
    const int n = f.nrays();
    std::vector<std::vector<int>> found;
    for (int size = 1; size <= n; ++size) {
        for_each_subset_of_size(n, size, [&](const std::vector<int>& s) {
            for (const auto& nf : found)
                if (std::includes(s.begin(), s.end(), nf.begin(), nf.end())) return;
            if (!is_face_of_some_cone(f, s)) found.push_back(s);
        });
    }
    return found;
}

Rat BoxElement::degree() const {
    Rat d(0);
    for (const auto& [i, a] : coefficients) d += a;
    return d;
}

std::vector<BoxElement> box_of_cone(const StackyFan& f, const Cone& c) {
    std::vector<BoxElement> out;
    if (c.dim() == 0) {
        out.push_back(BoxElement{IntVec(f.rank, Int(0)), Cone{}, {}});
        return out;
    }
    const int d = c.dim();
    IntMatrix b = ray_columns(f, c.ray_indices);
    SmithDecomposition snf = smith_normal_form(b);
    IntVec invf(d);
    for (int i = 0; i < d; ++i) {
        invf[i] = snf.S.at(i, i);
        if (invf[i] == 0)
            throw std::logic_error("box_of_cone: cone rays are linearly dependent");
    }
    // enumerate the quotient group ⊕ Z/invf_i; class (c_1..c_d) has rational
    // cone coordinates gamma = sum_i (c_i/invf_i) * V.col(i), reduced mod Z^d
    std::vector<Int> cls(d, Int(0));
    for (;;) {
        RatVec alpha(d, Rat(0));
        for (int j = 0; j < d; ++j) {
            Rat g(0);
            for (int i = 0; i < d; ++i) g += make_rat(cls[i] * snf.V.at(j, i), invf[i]);
            alpha[j] = g - Rat(rat_floor(g));
        }
        BoxElement be;
        be.point.assign(f.rank, Int(0));
        for (int r = 0; r < f.rank; ++r) {
            Rat p(0);
            for (int j = 0; j < d; ++j) p += alpha[j] * Rat(b.at(r, j));
            if (!is_integer(p)) throw std::logic_error("box_of_cone: non-integral box point");
            be.point[r] = p.get_num();
        }
        for (int j = 0; j < d; ++j)
            if (alpha[j] > 0) {
                be.minimal_cone.ray_indices.push_back(c.ray_indices[j]);
                be.coefficients[c.ray_indices[j]] = alpha[j];
            }
        out.push_back(std::move(be));

        int i = 0;
        while (i < d) {
            cls[i] += 1;
            if (cls[i] < invf[i]) break;
            cls[i] = 0;
            ++i;
        }
        if (i == d) break;
    }
    std::sort(out.begin(), out.end(),
              [](const BoxElement& x, const BoxElement& y) { return x.point < y.point; });
    return out;
}

std::vector<BoxElement> box_of_fan(const StackyFan& f) {
    std::map<IntVec, BoxElement> seen;
    seen.emplace(IntVec(f.rank, Int(0)), BoxElement{IntVec(f.rank, Int(0)), Cone{}, {}});
    for (const Cone& c : f.max_cones)
        for (BoxElement& be : box_of_cone(f, c)) {
            IntVec key = be.point;
            seen.emplace(std::move(key), std::move(be));
        }
    std::vector<BoxElement> out;
    out.reserve(seen.size());
    for (auto& [pt, be] : seen) out.push_back(be);
    return out;
}

QuotientFan quotient_fan(const StackyFan& f, const Cone& c) {
    if (c.dim() == 0) {
        QuotientFan q;
        q.fan = f;
        q.link_rays.resize(f.nrays());
        for (int i = 0; i < f.nrays(); ++i) q.link_rays[i] = i;
        q.projection = IntMatrix::identity(f.rank);
        return q;
    }
    bool is_cone = false;
    for (const Cone& m : f.max_cones)
        if (c.subset_of(m)) { is_cone = true; break; }
    if (!is_cone) throw std::invalid_argument("quotient_fan: not a cone of the fan");

    const int d = c.dim();
    SmithDecomposition snf = smith_normal_form(ray_columns(f, c.ray_indices));
    // rows d.. of U span the quotient by the saturated span of C's rays
    IntMatrix p(f.rank - d, f.rank);
    for (int i = 0; i < p.rows; ++i)
        for (int j = 0; j < f.rank; ++j) p.at(i, j) = snf.U.at(d + i, j);

    std::set<int> link_set;
    std::vector<Cone> stars;
    for (const Cone& m : f.max_cones)
        if (c.subset_of(m)) {
            stars.push_back(m);
            for (int i : m.ray_indices)
                if (!c.contains(i)) link_set.insert(i);
        }
    std::vector<int> link(link_set.begin(), link_set.end());
    std::map<int, int> pos;
    for (size_t k = 0; k < link.size(); ++k) pos[link[k]] = static_cast<int>(k);

    FanCandidate cand;
    cand.rank = f.rank - d;
    for (int i : link) cand.rays.push_back(mat_vec(p, f.rays[i]));
    for (const Cone& m : stars) {
        std::vector<int> img;
        for (int i : m.ray_indices)
            if (!c.contains(i)) img.push_back(pos[i]);
        cand.max_cones.push_back(img);
    }
    FanValidation v = validate_fan(cand);
    if (!v.fan) {
        std::string msg = "quotient_fan: image fan is not a valid stacky fan:";
        for (const auto& dg : v.diagnostics) msg += " " + dg + ";";
        throw std::runtime_error(msg);
    }
    QuotientFan q;
    q.fan = *v.fan;
    q.link_rays = link;
    q.projection = p;
    return q;
}

std::vector<std::pair<IntVec, Rat>> lattice_points_of_degree_at_most(const StackyFan& f,
                                                                     const Rat& D) {
    if (D < 0) throw std::invalid_argument("lattice_points_of_degree_at_most: negative bound");
    std::map<IntVec, Rat> out;
    out.emplace(IntVec(f.rank, Int(0)), Rat(0));
    for (const Cone& c : f.max_cones) {
        if (c.dim() == 0) continue;
        const int d = c.dim();
        IntMatrix b = ray_columns(f, c.ray_indices);
        for (const BoxElement& be : box_of_cone(f, c)) {
            Rat base = be.degree();
            if (base > D) continue;
            Int budget_z = rat_floor(D - base);
            if (!budget_z.fits_slong_p())
                throw std::invalid_argument("lattice_points_of_degree_at_most: bound too large");
            long budget = budget_z.get_si();
            // walk all shift vectors m >= 0 with |m| <= budget
            std::vector<long> m(d, 0);
            IntVec pt = be.point;
            std::function<void(int, long)> walk = [&](int j, long left) {
                if (j == d) {
                    long used = 0;
                    for (long mi : m) used += mi;
                    auto [it, fresh] = out.emplace(pt, base + Rat(used));
                    if (!fresh && it->second != base + Rat(used))
                        throw std::logic_error("lattice point with inconsistent degrees");
                    return;
                }
                for (long s = 0; s <= left; ++s) {
                    m[j] = s;
                    walk(j + 1, left - s);
                    // undo before next exponent
                    for (int r = 0; r < f.rank; ++r) pt[r] += b.at(r, j);
                }
                for (int r = 0; r < f.rank; ++r) pt[r] -= (left + 1) * b.at(r, j);
                m[j] = 0;
            };
            walk(0, budget);
        }
    }
    std::vector<std::pair<IntVec, Rat>> v(out.begin(), out.end());
    return v;
}

} // namespace stacky
