#include "belyi/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace belyi {

Rational parse_rational(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) throw std::invalid_argument("parse_rational: empty input");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return make_rational(Integer(s), Integer(1));
        return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("parse_rational: bad rational '" + text + "'");
    }
}

std::string rational_to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly RatPoly::monomial(Rational c, int k) {
    if (k < 0) throw std::invalid_argument("monomial: negative exponent");
    std::vector<Rational> cs(k + 1, Rational(0));
    cs[k] = std::move(c);
    return RatPoly(std::move(cs));
}

const Rational& RatPoly::leading() const {
    if (is_zero()) throw std::logic_error("leading() of zero polynomial");
    return coeffs_.back();
}

Rational RatPoly::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

ExtPoint RatPoly::evaluate(const ExtPoint& x) const {
    if (x.is_finite()) return ExtPoint::finite(evaluate(x.value()));
    if (degree() >= 1) return ExtPoint::infinity();
    return ExtPoint::finite(is_zero() ? Rational(0) : coeffs_[0]);
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading());
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rational> cs(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) cs[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) cs[i] += o.coeffs_[i];
    return RatPoly(std::move(cs));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator-() const {
    std::vector<Rational> cs(coeffs_);
    for (auto& c : cs) c = -c;
    return RatPoly(std::move(cs));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<Rational> cs(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) cs[i + j] += coeffs_[i] * o.coeffs_[j];
    return RatPoly(std::move(cs));
}

RatPoly RatPoly::operator*(const Rational& c) const {
    std::vector<Rational> cs(coeffs_);
    for (auto& x : cs) x *= c;
    return RatPoly(std::move(cs));
}

RatPoly RatPoly::pow(unsigned n) const {
    RatPoly acc = RatPoly::constant(Rational(1));
    RatPoly base = *this;
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

std::string RatPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coeffs_[k];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rational a = abs(c);
        if (k == 0 || a != 1) os << rational_to_string(a);
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

PolyDivision poly_divmod(const RatPoly& num, const RatPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
    RatPoly rem = num;
    std::vector<Rational> q;
    int dd = den.degree();
    if (rem.degree() >= dd) q.assign(rem.degree() - dd + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        Rational c = rem.leading() / den.leading();
        q[shift] = c;
        rem = rem - RatPoly::monomial(c, shift) * den;
    }
    return {RatPoly(std::move(q)), std::move(rem)};
}

bool poly_divides(const RatPoly& divisor, const RatPoly& p) {
    if (divisor.is_zero()) return p.is_zero();
    return poly_divmod(p, divisor).remainder.is_zero();
}

RatPoly poly_derivative(const RatPoly& p) {
    if (p.degree() < 1) return RatPoly();
    std::vector<Rational> cs(p.degree());
    for (int k = 1; k <= p.degree(); ++k) cs[k - 1] = p.coeff(k) * Rational(k);
    return RatPoly(std::move(cs));
}

RatPoly poly_compose(const RatPoly& outer, const RatPoly& inner) {
    RatPoly acc;
    for (int k = outer.degree(); k >= 0; --k)
        acc = acc * inner + RatPoly::constant(outer.coeff(k));
    return acc;
}

RatPoly poly_gcd(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("poly_gcd: gcd(0, 0)");
    RatPoly a = f, b = g;
    while (!b.is_zero()) {
        RatPoly r = poly_divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

RatPoly squarefree_part(const RatPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    if (f.degree() == 0) return RatPoly::constant(Rational(1));
    RatPoly g = poly_gcd(f, poly_derivative(f));
    return poly_divmod(f, g).quotient.monic();
}

std::vector<Integer> primitive_integer_coeffs(const RatPoly& f) {
    if (f.is_zero()) return {};
    Integer den(1);
    for (const auto& c : f.coeffs()) {
        Integer d = c.get_den();
        Integer g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        den = den / g * d;
    }
    std::vector<Integer> out;
    out.reserve(f.coeffs().size());
    Integer content(0);
    for (const auto& c : f.coeffs()) {
        Integer v = c.get_num() * (den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    if (out.back() < 0) content = -content;
    for (auto& v : out) v /= content;
    return out;
}

namespace {

// Fraction-free (Bareiss) determinant of an integer matrix; destroys m.
Integer bareiss_det(std::vector<std::vector<Integer>>& m) {
    const size_t n = m.size();
    Integer sign(1), prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return Integer(0);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

namespace {

Rational rational_pow(const Rational& base, int e) {
    Rational acc(1);
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
}

// Euclidean resultant over Q; efficient when the degrees are unbalanced.
Rational resultant_euclid(const RatPoly& f, const RatPoly& g) {
    const int m = f.degree(), n = g.degree();
    if (m == 0) return rational_pow(f.coeffs()[0], n);
    if (n == 0) return rational_pow(g.coeffs()[0], m);
    if (m < n) {
        Rational sign((m * n) % 2 == 0 ? 1 : -1);
        return sign * resultant_euclid(g, f);
    }
    RatPoly r = poly_divmod(f, g).remainder;
    if (r.is_zero()) return Rational(0);
    Rational sign((m * n) % 2 == 0 ? 1 : -1);
    return sign * rational_pow(g.leading(), m - r.degree()) * resultant_euclid(g, r);
}

}  // namespace

Rational resultant(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("resultant: both inputs zero");
    if (f.is_zero() || g.is_zero()) return Rational(0);
    const int m = f.degree(), n = g.degree();
    if (m + n > 60) return resultant_euclid(f, g);
    if (m == 0) {
        Rational acc(1);
        for (int i = 0; i < n; ++i) acc *= f.coeffs()[0];
        return acc;
    }
    if (n == 0) {
        Rational acc(1);
        for (int i = 0; i < m; ++i) acc *= g.coeffs()[0];
        return acc;
    }
    // Sylvester matrix, rows scaled to integers; det corrected afterwards.
    Integer den_f(1), den_g(1);
    for (const auto& c : f.coeffs()) {
        Integer d = c.get_den(), gg;
        mpz_gcd(gg.get_mpz_t(), den_f.get_mpz_t(), d.get_mpz_t());
        den_f = den_f / gg * d;
    }
    for (const auto& c : g.coeffs()) {
        Integer d = c.get_den(), gg;
        mpz_gcd(gg.get_mpz_t(), den_g.get_mpz_t(), d.get_mpz_t());
        den_g = den_g / gg * d;
    }
    const size_t size = m + n;
    std::vector<std::vector<Integer>> mat(size, std::vector<Integer>(size, Integer(0)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) {
            const Rational& c = f.coeffs()[m - k];
            mat[r][r + k] = c.get_num() * (den_f / c.get_den());
        }
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) {
            const Rational& c = g.coeffs()[n - k];
            mat[n + r][r + k] = c.get_num() * (den_g / c.get_den());
        }
    Integer det = bareiss_det(mat);
    Integer denom(1);
    for (int i = 0; i < n; ++i) denom *= den_f;
    for (int i = 0; i < m; ++i) denom *= den_g;
    return make_rational(det, denom);
}

namespace {

// Sturm chain of a squarefree polynomial.
std::vector<RatPoly> sturm_chain(const RatPoly& f) {
    std::vector<RatPoly> chain{f, poly_derivative(f)};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        RatPoly r = poly_divmod(chain[chain.size() - 2], chain.back()).remainder;
        chain.push_back(-r);
    }
    if (chain.back().is_zero()) chain.pop_back();
    return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rational& x) {
    int count = 0, last = 0;
    for (const auto& p : chain) {
        Rational v = p.evaluate(x);
        int s = sgn(v);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

// Integer roots of a monic squarefree integer polynomial, via Sturm
// bisection over half-integer endpoints (never roots of a monic poly).
void integer_roots_rec(const RatPoly& g, const std::vector<RatPoly>& chain, const Rational& lo,
                       const Rational& hi, std::vector<Integer>& out) {
    int count = sign_variations(chain, lo) - sign_variations(chain, hi);
    if (count <= 0) return;
    if (hi - lo == 1) {
        // (k - 1/2, k + 1/2]: the only rational candidate is the integer k
        Rational mid = (lo + hi) / 2;
        if (g.evaluate(mid) == 0) out.push_back(mid.get_num());
        return;
    }
    Integer width = Rational(hi - lo).get_num();  // integer width
    Rational mid = lo + Rational(width / 2);
    integer_roots_rec(g, chain, lo, mid, out);
    integer_roots_rec(g, chain, mid, hi, out);
}

}  // namespace

std::vector<Rational> rational_roots(const RatPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<Rational> roots;
    RatPoly sf = squarefree_part(f);
    if (sf.degree() < 1) return roots;
    if (sf.coeff(0) == 0) {
        roots.emplace_back(0);
        sf = poly_divmod(sf, RatPoly::identity()).quotient;
    }
    if (sf.degree() >= 1) {
        // monicize over Z: rational roots of F become integer roots of
        // G(w) = lc^(n-1) F(w / lc), recovered as w / lc
        std::vector<Integer> ic = primitive_integer_coeffs(sf);
        const int n = static_cast<int>(ic.size()) - 1;
        Integer lc = ic[n];
        std::vector<Rational> gc(n + 1);
        Integer pw(1);
        for (int k = n; k >= 0; --k) {
            gc[k] = Rational(ic[k] * pw);
            if (k > 0) pw *= lc;
        }
        RatPoly g{std::move(gc)};
        Integer bound(1);
        for (int k = 0; k <= n; ++k) {
            Integer a = abs(g.coeff(k).get_num());
            if (a > bound) bound = a;
        }
        ++bound;
        auto chain = sturm_chain(g);
        std::vector<Integer> int_roots;
        Rational lo = Rational(-bound) - make_rational(1, 2);
        Rational hi = Rational(bound) + make_rational(1, 2);
        integer_roots_rec(g, chain, lo, hi, int_roots);
        for (const auto& w : int_roots) roots.push_back(make_rational(w, lc));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace belyi
