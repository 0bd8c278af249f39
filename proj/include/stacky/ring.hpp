#pragma once

#include "stacky/arith.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stacky {

// Sparse monomial: sorted (variable, exponent) pairs, exponents > 0.
struct Monomial {
    std::vector<std::pair<int, int>> exps;

    static Monomial one() { return {}; }
    static Monomial var(int v, int e = 1);

    int exponent(int v) const;
    int total_degree() const;
    bool is_one() const { return exps.empty(); }

    auto operator<=>(const Monomial&) const = default; // container order only
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b); // a | b
Monomial mono_div(const Monomial& b, const Monomial& a); // b / a (requires a | b)
Monomial mono_lcm(const Monomial& a, const Monomial& b);

enum class MonomialOrder { degrevlex, lex };

// strict "a comes before b" in *increasing* order
bool mono_less(const Monomial& a, const Monomial& b, MonomialOrder order);

struct Poly {
    int nvars = 0;
    std::map<Monomial, Rat> terms; // no zero coefficients stored

    static Poly zero(int nvars) { return Poly{nvars, {}}; }
    static Poly constant(int nvars, const Rat& c);
    static Poly monomial(int nvars, const Monomial& m, const Rat& c = Rat(1));
    static Poly variable(int nvars, int v);

    bool is_zero() const { return terms.empty(); }
    void add_term(const Monomial& m, const Rat& c);
    const Monomial& leading_monomial(MonomialOrder order) const; // requires nonzero
    const Rat& leading_coeff(MonomialOrder order) const;

    bool operator==(const Poly&) const = default;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rat& c, const Poly& a);
Poly poly_pow(const Poly& a, long e);

struct GroebnerBasis {
    int nvars = 0;
    MonomialOrder order = MonomialOrder::degrevlex;
    std::vector<Poly> gens; // reduced basis: monic, pairwise fully reduced
};

GroebnerBasis groebner(const std::vector<Poly>& generators,
                       MonomialOrder order = MonomialOrder::degrevlex);

// Unique remainder of division by a Groebner basis (zero iff p is in the ideal).
Poly normal_form(const Poly& p, const GroebnerBasis& g);

Poly s_polynomial(const Poly& f, const Poly& g, MonomialOrder order);

// Number of standard monomials, or nullopt when the quotient ring is
// infinite-dimensional (some variable has no pure power among the leading terms).
std::optional<long> quotient_dimension(const GroebnerBasis& g);

// Monomial basis of a finite-dimensional quotient; throws otherwise.
std::vector<Monomial> standard_monomials(const GroebnerBasis& g);

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);
std::string poly_to_string(const Poly& p, const std::vector<std::string>& names,
                           MonomialOrder order = MonomialOrder::degrevlex);

// Power series in one formal variable t with Poly coefficients, truncated at t^T.
struct TruncatedSeries {
    int T = 0;
    std::vector<Poly> coeff; // size T + 1
};

TruncatedSeries series_zero(int nvars, int T);
TruncatedSeries series_one(int nvars, int T);
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const Poly& c, const TruncatedSeries& a);
TruncatedSeries series_shift(const TruncatedSeries& a, int by); // multiply by t^by

// sum_{m >= 0} c^m t^{h m} truncated at T
TruncatedSeries geometric_series(const Poly& c, int h, int T);

} // namespace stacky
