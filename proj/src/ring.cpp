#include "stacky/ring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace stacky {

Monomial Monomial::var(int v, int e) {
    Monomial m;
    if (e < 0) throw std::invalid_argument("Monomial::var: negative exponent");
    if (e > 0) m.exps.emplace_back(v, e);
    return m;
}

int Monomial::exponent(int v) const {
    for (const auto& [var, e] : exps)
        if (var == v) return e;
    return 0;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [var, e] : exps) d += e;
    return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < a.exps.size() || j < b.exps.size()) {
        if (j == b.exps.size() || (i < a.exps.size() && a.exps[i].first < b.exps[j].first))
            r.exps.push_back(a.exps[i++]);
        else if (i == a.exps.size() || b.exps[j].first < a.exps[i].first)
            r.exps.push_back(b.exps[j++]);
        else {
            r.exps.emplace_back(a.exps[i].first, a.exps[i].second + b.exps[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    size_t j = 0;
    for (const auto& [var, e] : a.exps) {
        while (j < b.exps.size() && b.exps[j].first < var) ++j;
        if (j == b.exps.size() || b.exps[j].first != var || b.exps[j].second < e) return false;
    }
    return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r;
    size_t i = 0;
    for (const auto& [var, e] : b.exps) {
        int sub = 0;
        if (i < a.exps.size() && a.exps[i].first == var) {
            sub = a.exps[i].second;
            ++i;
        }
        if (e < sub) throw std::invalid_argument("mono_div: not divisible");
        if (e > sub) r.exps.emplace_back(var, e - sub);
    }
    if (i != a.exps.size()) throw std::invalid_argument("mono_div: not divisible");
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < a.exps.size() || j < b.exps.size()) {
        if (j == b.exps.size() || (i < a.exps.size() && a.exps[i].first < b.exps[j].first))
            r.exps.push_back(a.exps[i++]);
        else if (i == a.exps.size() || b.exps[j].first < a.exps[i].first)
            r.exps.push_back(b.exps[j++]);
        else {
            r.exps.emplace_back(a.exps[i].first, std::max(a.exps[i].second, b.exps[j].second));
            ++i;
            ++j;
        }
    }
    return r;
}

bool mono_less(const Monomial& a, const Monomial& b, MonomialOrder order) {
    if (a.exps == b.exps) return false;
    if (order == MonomialOrder::lex) {
        // first variable (lowest index) where the exponents differ decides;
        // larger exponent there means larger monomial
        size_t i = 0, j = 0;
        while (i < a.exps.size() && j < b.exps.size()) {
            if (a.exps[i].first < b.exps[j].first) return false; // a has the var, b doesn't
            if (b.exps[j].first < a.exps[i].first) return true;
            if (a.exps[i].second != b.exps[j].second) return a.exps[i].second < b.exps[j].second;
            ++i;
            ++j;
        }
        return i == a.exps.size() && j < b.exps.size();
    }
    // degrevlex
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    // equal degree: the last variable where they differ decides, and the
    // *smaller* exponent there marks the larger monomial
    auto ia = a.exps.rbegin();
    auto ib = b.exps.rbegin();
    while (ia != a.exps.rend() && ib != b.exps.rend()) {
        if (ia->first > ib->first) return true;  // a involves a later var: a is smaller
        if (ib->first > ia->first) return false;
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    return ia != a.exps.rend();
}

Poly Poly::constant(int nvars, const Rat& c) {
    Poly p{nvars, {}};
    if (c != 0) p.terms.emplace(Monomial::one(), c);
    return p;
}

Poly Poly::monomial(int nvars, const Monomial& m, const Rat& c) {
    Poly p{nvars, {}};
    if (c != 0) p.terms.emplace(m, c);
    return p;
}

Poly Poly::variable(int nvars, int v) { return monomial(nvars, Monomial::var(v)); }

void Poly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

const Monomial& Poly::leading_monomial(MonomialOrder order) const {
    if (terms.empty()) throw std::invalid_argument("leading_monomial of zero polynomial");
    auto best = terms.begin();
    for (auto it = std::next(terms.begin()); it != terms.end(); ++it)
        if (mono_less(best->first, it->first, order)) best = it;
    return best->first;
}

const Rat& Poly::leading_coeff(MonomialOrder order) const {
    return terms.at(leading_monomial(order));
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    r.nvars = std::max(a.nvars, b.nvars);
    for (const auto& [m, c] : b.terms) r.add_term(m, c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    r.nvars = std::max(a.nvars, b.nvars);
    for (const auto& [m, c] : b.terms) r.add_term(m, -c);
    return r;
}

Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& [m, c] : r.terms) c = -c;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r = Poly::zero(std::max(a.nvars, b.nvars));
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

Poly operator*(const Rat& c, const Poly& a) {
    Poly r = Poly::zero(a.nvars);
    if (c == 0) return r;
    for (const auto& [m, cc] : a.terms) r.terms.emplace(m, c * cc);
    return r;
}

Poly poly_pow(const Poly& a, long e) {
    if (e < 0) throw std::invalid_argument("poly_pow: negative exponent");
    Poly r = Poly::constant(a.nvars, Rat(1));
    Poly base = a;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

namespace {

Poly make_monic(const Poly& p, MonomialOrder order) {
    if (p.is_zero()) return p;
    Rat lc = p.leading_coeff(order);
    return Rat(Rat(1) / lc) * p;
}

// full multivariate division, returning the remainder
Poly reduce_by(const Poly& p, const std::vector<Poly>& basis, MonomialOrder order) {
    Poly rem = Poly::zero(p.nvars);
    Poly work = p;
    while (!work.is_zero()) {
        const Monomial lm = work.leading_monomial(order);
        const Rat lc = work.terms.at(lm);
        bool reduced = false;
        for (const Poly& g : basis) {
            if (g.is_zero()) continue;
            const Monomial& glm = g.leading_monomial(order);
            if (!mono_divides(glm, lm)) continue;
            Rat f = lc / g.terms.at(glm);
            Monomial q = mono_div(lm, glm);
            work = work - (f * Poly::monomial(work.nvars, q) * g);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(lm, lc);
            work.terms.erase(lm);
        }
    }
    return rem;
}

} // namespace

Poly s_polynomial(const Poly& f, const Poly& g, MonomialOrder order) {
    const Monomial& lf = f.leading_monomial(order);
    const Monomial& lg = g.leading_monomial(order);
    Monomial l = mono_lcm(lf, lg);
    int nv = std::max(f.nvars, g.nvars);
    Poly a = Poly::monomial(nv, mono_div(l, lf), Rat(1) / f.terms.at(lf)) * f;
    Poly b = Poly::monomial(nv, mono_div(l, lg), Rat(1) / g.terms.at(lg)) * g;
    return a - b;
}

GroebnerBasis groebner(const std::vector<Poly>& generators, MonomialOrder order) {
    GroebnerBasis gb;
    gb.order = order;
    for (const Poly& p : generators) gb.nvars = std::max(gb.nvars, p.nvars);

    std::vector<Poly> basis;
    for (const Poly& p : generators)
        if (!p.is_zero()) basis.push_back(make_monic(p, order));

    // pending pairs keyed by (lcm degree, i, j) for a deterministic
    // minimal-lcm-degree selection
    std::set<std::tuple<int, int, int>> pending;
    std::set<std::pair<int, int>> handled;
    auto queue_pairs_with = [&](int j) {
        for (int i = 0; i < j; ++i) {
            Monomial l = mono_lcm(basis[i].leading_monomial(order), basis[j].leading_monomial(order));
            pending.insert({l.total_degree(), i, j});
        }
    };
    for (int j = 0; j < static_cast<int>(basis.size()); ++j) queue_pairs_with(j);

    while (!pending.empty()) {
        auto [deg, i, j] = *pending.begin();
        pending.erase(pending.begin());
        const Monomial& li = basis[i].leading_monomial(order);
        const Monomial& lj = basis[j].leading_monomial(order);
        Monomial lij = mono_lcm(li, lj);

        // coprime leading monomials: S-polynomial reduces to zero
        if (lij == mono_mul(li, lj)) {
            handled.insert({i, j});
            continue;
        }
        // chain criterion: some k with LM_k | lcm and both (i,k), (j,k) already handled
        bool skip = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
            if (k == i || k == j) continue;
            if (!mono_divides(basis[k].leading_monomial(order), lij)) continue;
            auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (handled.count(key(i, k)) && handled.count(key(j, k))) skip = true;
        }
        if (skip) {
            handled.insert({i, j});
            continue;
        }

        Poly r = reduce_by(s_polynomial(basis[i], basis[j], order), basis, order);
        handled.insert({i, j});
        if (!r.is_zero()) {
            basis.push_back(make_monic(r, order));
            queue_pairs_with(static_cast<int>(basis.size()) - 1);
        }
    }

    // minimalize: drop generators whose leading monomial is divisible by another's
    std::vector<Poly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        const Monomial& li = basis[i].leading_monomial(order);
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& lj = basis[j].leading_monomial(order);
            if (!mono_divides(lj, li)) continue;
            // on ties keep the earlier element
            if (lj == li ? j < i : true) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // inter-reduce: leading terms are untouched (no other LM divides them),
    // so a single pass with the current values yields the reduced basis
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        minimal[i] = make_monic(reduce_by(minimal[i], others, order), order);
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) {
        return mono_less(a.leading_monomial(order), b.leading_monomial(order), order);
    });
    gb.gens = std::move(minimal);
    return gb;
}

Poly normal_form(const Poly& p, const GroebnerBasis& g) {
    Poly q = p;
    q.nvars = std::max(p.nvars, g.nvars);
    return reduce_by(q, g.gens, g.order);
}

std::optional<long> quotient_dimension(const GroebnerBasis& g) {
    for (const Poly& p : g.gens)
        if (!p.is_zero() && p.leading_monomial(g.order).is_one()) return 0; // unit ideal
    std::vector<int> bound(g.nvars, -1);
    for (const Poly& p : g.gens) {
        if (p.is_zero()) continue;
        const Monomial& lm = p.leading_monomial(g.order);
        if (lm.exps.size() == 1) {
            auto [v, e] = lm.exps[0];
            if (bound[v] < 0 || e < bound[v]) bound[v] = e;
        }
    }
    for (int v = 0; v < g.nvars; ++v)
        if (bound[v] < 0) return std::nullopt;

    std::vector<Monomial> lms;
    for (const Poly& p : g.gens)
        if (!p.is_zero()) lms.push_back(p.leading_monomial(g.order));

    long count = 0;
    std::vector<int> exp(g.nvars, 0);
    auto standard = [&]() {
        Monomial m;
        for (int v = 0; v < g.nvars; ++v)
            if (exp[v] > 0) m.exps.emplace_back(v, exp[v]);
        for (const Monomial& lm : lms)
            if (mono_divides(lm, m)) return false;
        return true;
    };
    // bounded odometer over candidate exponents
    for (;;) {
        if (standard()) ++count;
        int v = 0;
        while (v < g.nvars) {
            if (++exp[v] < bound[v]) break;
            exp[v] = 0;
            ++v;
        }
        if (v == g.nvars) break;
    }
    return count;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& g) {
    for (const Poly& p : g.gens)
        if (!p.is_zero() && p.leading_monomial(g.order).is_one()) return {};
    std::vector<int> bound(g.nvars, -1);
    for (const Poly& p : g.gens) {
        if (p.is_zero()) continue;
        const Monomial& lm = p.leading_monomial(g.order);
        if (lm.exps.size() == 1) {
            auto [v, e] = lm.exps[0];
            if (bound[v] < 0 || e < bound[v]) bound[v] = e;
        }
    }
    for (int v = 0; v < g.nvars; ++v)
        if (bound[v] < 0)
            throw std::domain_error("standard_monomials: quotient ring is infinite-dimensional");

    std::vector<Monomial> lms;
    for (const Poly& p : g.gens)
        if (!p.is_zero()) lms.push_back(p.leading_monomial(g.order));

    std::vector<Monomial> out;
    std::vector<int> exp(g.nvars, 0);
    for (;;) {
        Monomial m;
        for (int v = 0; v < g.nvars; ++v)
            if (exp[v] > 0) m.exps.emplace_back(v, exp[v]);
        bool ok = true;
        for (const Monomial& lm : lms)
            if (mono_divides(lm, m)) { ok = false; break; }
        if (ok) out.push_back(m);
        int v = 0;
        while (v < g.nvars) {
            if (++exp[v] < bound[v]) break;
            exp[v] = 0;
            ++v;
        }
        if (v == g.nvars) break;
    }
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return mono_less(a, b, g.order); });
    return out;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
    if (m.is_one()) return "1";
    std::string s;
    for (const auto& [v, e] : m.exps) {
        if (!s.empty()) s += "*";
        s += (v < static_cast<int>(names.size())) ? names[v] : ("v" + std::to_string(v));
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string poly_to_string(const Poly& p, const std::vector<std::string>& names,
                           MonomialOrder order) {
    if (p.is_zero()) return "0";
    std::vector<const Monomial*> ms;
    for (const auto& [m, c] : p.terms) ms.push_back(&m);
    std::sort(ms.begin(), ms.end(),
              [&](const Monomial* a, const Monomial* b) { return mono_less(*b, *a, order); });
    std::string s;
    bool first = true;
    for (const Monomial* m : ms) {
        Rat c = p.terms.at(*m);
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        std::string body;
        if (m->is_one())
            body = rat_str(a);
        else if (a == 1)
            body = monomial_to_string(*m, names);
        else
            body = rat_str(a) + "*" + monomial_to_string(*m, names);
        if (first) {
            s = neg ? "-" + body : body;
            first = false;
        } else {
            s += neg ? " - " : " + ";
            s += body;
        }
    }
    return s;
}

TruncatedSeries series_zero(int nvars, int T) {
    TruncatedSeries s;
    s.T = T;
    s.coeff.assign(T + 1, Poly::zero(nvars));
    return s;
}

TruncatedSeries series_one(int nvars, int T) {
    TruncatedSeries s = series_zero(nvars, T);
    s.coeff[0] = Poly::constant(nvars, Rat(1));
    return s;
}

static void check_same_T(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.T != b.T) throw std::invalid_argument("series: truncation orders differ");
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_T(a, b);
    TruncatedSeries s = a;
    for (int i = 0; i <= a.T; ++i) s.coeff[i] = s.coeff[i] + b.coeff[i];
    return s;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_T(a, b);
    TruncatedSeries s = a;
    for (int i = 0; i <= a.T; ++i) s.coeff[i] = s.coeff[i] - b.coeff[i];
    return s;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_T(a, b);
    int nv = 0;
    for (const Poly& p : a.coeff) nv = std::max(nv, p.nvars);
    for (const Poly& p : b.coeff) nv = std::max(nv, p.nvars);
    TruncatedSeries s = series_zero(nv, a.T);
    for (int i = 0; i <= a.T; ++i) {
        if (a.coeff[i].is_zero()) continue;
        for (int j = 0; i + j <= a.T; ++j) {
            if (b.coeff[j].is_zero()) continue;
            s.coeff[i + j] = s.coeff[i + j] + a.coeff[i] * b.coeff[j];
        }
    }
    return s;
}

TruncatedSeries series_scale(const Poly& c, const TruncatedSeries& a) {
    TruncatedSeries s = a;
    for (int i = 0; i <= a.T; ++i) s.coeff[i] = c * s.coeff[i];
    return s;
}

TruncatedSeries series_shift(const TruncatedSeries& a, int by) {
    if (by < 0) throw std::invalid_argument("series_shift: negative shift");
    TruncatedSeries s = series_zero(a.coeff.empty() ? 0 : a.coeff[0].nvars, a.T);
    for (int i = 0; i + by <= a.T; ++i) s.coeff[i + by] = a.coeff[i];
    return s;
}

TruncatedSeries geometric_series(const Poly& c, int h, int T) {
    if (h <= 0) throw std::invalid_argument("geometric_series: step must be positive");
    TruncatedSeries s = series_zero(c.nvars, T);
    s.coeff[0] = Poly::constant(c.nvars, Rat(1));
    Poly power = Poly::constant(c.nvars, Rat(1));
    for (int m = 1; m * h <= T; ++m) {
        power = power * c;
        s.coeff[m * h] = power;
    }
    return s;
}

} // namespace stacky
