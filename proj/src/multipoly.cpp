#include "insep/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace insep {

Packed packed_mul(Packed a, Packed b) {
    Packed r = 0;
    for (std::uint32_t j = 0; j < kMaxVars; ++j) {
        std::uint32_t s = packed_get(a, j) + packed_get(b, j);
        if (s > kMaxExp) throw Error("monomial exponent overflow");
        r = packed_set(r, j, s);
    }
    return r;
}

bool packed_divides(Packed a, Packed b) {
    for (std::uint32_t j = 0; j < kMaxVars; ++j)
        if (packed_get(a, j) > packed_get(b, j)) return false;
    return true;
}

Packed packed_div(Packed b, Packed a) {
    Packed r = 0;
    for (std::uint32_t j = 0; j < kMaxVars; ++j) {
        std::uint32_t eb = packed_get(b, j), ea = packed_get(a, j);
        if (ea > eb) throw Error("monomial not divisible");
        r = packed_set(r, j, eb - ea);
    }
    return r;
}

MultiPoly::MultiPoly(std::uint32_t p, std::uint32_t nvars) : p_(p), nvars_(nvars) {
    if (nvars > kMaxVars) throw ConfigError("at most 4 variables are supported");
    if (p < 2) throw ConfigError("p must be at least 2");
}

MultiPoly MultiPoly::constant(std::uint32_t p, std::uint32_t nvars, std::uint64_t c) {
    MultiPoly f(p, nvars);
    f.add_term(0, c);
    return f;
}

MultiPoly MultiPoly::monomial(std::uint32_t p, std::uint32_t nvars, Packed m, std::uint64_t c) {
    MultiPoly f(p, nvars);
    f.add_term(m, c);
    return f;
}

MultiPoly MultiPoly::variable(std::uint32_t p, std::uint32_t nvars, std::uint32_t var) {
    if (var >= nvars) throw Error("variable index out of range");
    return monomial(p, nvars, packed_set(0, var, 1), 1);
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first == 0);
}

bool MultiPoly::is_one() const {
    return terms_.size() == 1 && terms_.front().first == 0 && terms_.front().second == 1;
}

std::uint32_t MultiPoly::constant_value() const {
    // The zero monomial sorts first when present.
    return (!terms_.empty() && terms_.front().first == 0) ? terms_.front().second : 0;
}

Packed MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.back().first;
}

std::uint32_t MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.back().second;
}

std::uint32_t MultiPoly::total_degree() const {
    return terms_.empty() ? 0 : packed_degree(terms_.back().first);
}

std::uint32_t MultiPoly::degree_in(std::uint32_t var) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, packed_get(m, var));
    return d;
}

void MultiPoly::add_term(Packed m, std::uint64_t c) {
    std::uint32_t cv = fp::reduce(c, p_);
    if (cv == 0) return;
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), m,
        [](const Term& t, Packed key) { return GrlexLess{}(t.first, key); });
    if (it != terms_.end() && it->first == m) {
        it->second = fp::add(it->second, cv, p_);
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, {m, cv});
    }
}

void check_compatible(const MultiPoly& a, const MultiPoly& b) {
    if (a.prime() != b.prime() || a.nvars() != b.nvars())
        throw Error("mixed polynomial contexts");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(p_, nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, fp::neg(c, p_));
    return r;
}

namespace {

// Merge of two term lists with the second negated when sub is set.
MultiPoly::TermMap merge_terms(const MultiPoly::TermMap& a, const MultiPoly::TermMap& b,
                               std::uint32_t p, bool sub) {
    MultiPoly::TermMap out;
    out.reserve(a.size() + b.size());
    GrlexLess less;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && less(a[i].first, b[j].first))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || less(b[j].first, a[i].first)) {
            std::uint32_t c = sub ? fp::neg(b[j].second, p) : b[j].second;
            if (c) out.emplace_back(b[j].first, c);
            ++j;
        } else {
            std::uint32_t c = sub ? fp::sub(a[i].second, b[j].second, p)
                                  : fp::add(a[i].second, b[j].second, p);
            if (c) out.emplace_back(a[i].first, c);
            ++i, ++j;
        }
    }
    return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_compatible(*this, o);
    terms_ = merge_terms(terms_, o.terms_, p_, false);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_compatible(*this, o);
    terms_ = merge_terms(terms_, o.terms_, p_, true);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_compatible(*this, o);
    MultiPoly r(p_, nvars_);
    r.terms_ = merge_terms(terms_, o.terms_, p_, false);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_compatible(*this, o);
    MultiPoly r(p_, nvars_);
    r.terms_ = merge_terms(terms_, o.terms_, p_, true);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(*this, o);
    MultiPoly r(p_, nvars_);
    if (terms_.empty() || o.terms_.empty()) return r;

    // Single-term factors preserve the term order.
    if (terms_.size() == 1 || o.terms_.size() == 1) {
        const auto& single = terms_.size() == 1 ? terms_ : o.terms_;
        const auto& many = terms_.size() == 1 ? o.terms_ : terms_;
        auto [sm, sc] = single.front();
        r.terms_.reserve(many.size());
        for (const auto& [m, c] : many) {
            std::uint32_t v = fp::mul(c, sc, p_);
            if (v) r.terms_.emplace_back(packed_mul(m, sm), v);
        }
        return r;
    }

    std::vector<std::pair<Packed, std::uint32_t>> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            acc.emplace_back(packed_mul(ma, mb), fp::mul(ca, cb, p_));
    std::sort(acc.begin(), acc.end(), [](const auto& l, const auto& rgt) {
        return GrlexLess{}(l.first, rgt.first);
    });
    r.terms_.reserve(acc.size());
    std::size_t k = 0;
    while (k < acc.size()) {
        Packed m = acc[k].first;
        std::uint32_t s = 0;
        for (; k < acc.size() && acc[k].first == m; ++k) s = fp::add(s, acc[k].second, p_);
        if (s) r.terms_.emplace_back(m, s);
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return p_ == o.p_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::scaled(std::uint32_t c) const {
    MultiPoly r(p_, nvars_);
    std::uint32_t cc = fp::reduce(c, p_);
    if (cc == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [m, cv] : terms_) r.terms_.emplace_back(m, fp::mul(cv, cc, p_));
    return r;
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(fp::inv(leading_coeff(), p_));
}

MultiPoly MultiPoly::partial(std::uint32_t var) const {
    MultiPoly r(p_, nvars_);
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = packed_get(m, var);
        if (e == 0) continue;
        std::uint32_t ce = fp::mul(c, e % p_, p_);
        if (ce == 0) continue;
        r.terms_.emplace_back(packed_set(m, var, e - 1), ce);
    }
    return r;
}

MultiPoly MultiPoly::pow(std::uint64_t n) const {
    MultiPoly r = constant(p_, nvars_, 1);
    MultiPoly base = *this;
    while (n) {
        if (n & 1) r = r * base;
        if (n >>= 1) base = base * base;
    }
    return r;
}

MultiPoly MultiPoly::pow_frobenius(std::uint32_t k) const {
    // In characteristic p, f^(p^k) scales every exponent by p^k while the
    // F_p coefficients are fixed by Frobenius.
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) q *= p_;
    MultiPoly r(p_, nvars_);
    for (const auto& [m, c] : terms_) {
        Packed nm = 0;
        for (std::uint32_t j = 0; j < kMaxVars; ++j) {
            std::uint64_t e = static_cast<std::uint64_t>(packed_get(m, j)) * q;
            if (e > kMaxExp) throw Error("monomial exponent overflow");
            nm = packed_set(nm, j, static_cast<std::uint32_t>(e));
        }
        r.terms_.emplace_back(nm, c);
    }
    return r;
}

MultiPoly MultiPoly::coeff_in(std::uint32_t var, std::uint32_t k) const {
    MultiPoly r(p_, nvars_);
    for (const auto& [m, c] : terms_)
        if (packed_get(m, var) == k) r.terms_.emplace_back(packed_set(m, var, 0), c);
    return r;
}

MultiPoly MultiPoly::lead_coeff_in(std::uint32_t var) const {
    return coeff_in(var, degree_in(var));
}

MultiPoly MultiPoly::shifted(std::uint32_t var, std::uint32_t k) const {
    MultiPoly r(p_, nvars_);
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = packed_get(m, var) + k;
        if (e > kMaxExp) throw Error("monomial exponent overflow");
        r.terms_.emplace_back(packed_set(m, var, e), c);
    }
    return r;
}

MultiPoly div_exact(const MultiPoly& f, const MultiPoly& g) {
    check_compatible(f, g);
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    MultiPoly q(f.prime(), f.nvars());
    MultiPoly r = f;
    Packed gm = g.leading_monomial();
    std::uint32_t gc_inv = fp::inv(g.leading_coeff(), g.prime());
    while (!r.is_zero()) {
        Packed rm = r.leading_monomial();
        if (!packed_divides(gm, rm)) throw Error("polynomial division not exact");
        Packed qm = packed_div(rm, gm);
        std::uint32_t qc = fp::mul(r.leading_coeff(), gc_inv, r.prime());
        MultiPoly t = MultiPoly::monomial(f.prime(), f.nvars(), qm, qc);
        q += t;
        r -= t * g;
    }
    return q;
}

MultiPoly content_in(const MultiPoly& f, std::uint32_t var) {
    // gcd of the coefficients of f viewed as a polynomial in var.
    MultiPoly c(f.prime(), f.nvars());
    for (std::uint32_t k = 0; k <= f.degree_in(var); ++k) {
        MultiPoly ck = f.coeff_in(var, k);
        if (ck.is_zero()) continue;
        c = gcd(c, ck);
        if (c.is_one()) break;
    }
    return c;
}

MultiPoly pseudo_rem(MultiPoly a, const MultiPoly& b, std::uint32_t var) {
    std::uint32_t db = b.degree_in(var);
    MultiPoly lb = b.lead_coeff_in(var);
    while (!a.is_zero()) {
        std::uint32_t da = a.degree_in(var);
        if (da < db) break;
        MultiPoly la = a.lead_coeff_in(var);
        a = lb * a - (la * b).shifted(var, da - db);
    }
    return a;
}

namespace {

// Smallest variable index appearing with positive degree in f or g, or nvars.
std::uint32_t main_variable(const MultiPoly& f, const MultiPoly& g) {
    for (std::uint32_t v = 0; v < f.nvars(); ++v)
        if (f.degree_in(v) > 0 || g.degree_in(v) > 0) return v;
    return f.nvars();
}

// Componentwise minimum of all exponent vectors: the monomial content.
Packed monomial_content(const MultiPoly& f) {
    Packed m = f.leading_monomial();
    for (const auto& [t, c] : f.terms()) {
        (void)c;
        for (std::uint32_t j = 0; j < kMaxVars; ++j)
            m = packed_set(m, j, std::min(packed_get(m, j), packed_get(t, j)));
        if (m == 0) break;
    }
    return m;
}

MultiPoly strip_monomial(const MultiPoly& f, Packed m) {
    if (m == 0) return f;
    MultiPoly r(f.prime(), f.nvars());
    for (const auto& [t, c] : f.terms()) r.add_term(packed_div(t, m), c);
    return r;
}

// Bounded trial division used as a gcd fast path: returns true when g
// divides f exactly, false on non-divisibility or when the step budget runs
// out (in which case the caller falls back to the remainder sequence).
bool divides_within(const MultiPoly& f, const MultiPoly& g, std::size_t budget) {
    MultiPoly r = f;
    Packed gm = g.leading_monomial();
    std::uint32_t gc_inv = fp::inv(g.leading_coeff(), g.prime());
    while (!r.is_zero()) {
        if (budget-- == 0) return false;
        Packed rm = r.leading_monomial();
        if (!packed_divides(gm, rm)) return false;
        std::uint32_t qc = fp::mul(r.leading_coeff(), gc_inv, r.prime());
        r -= MultiPoly::monomial(f.prime(), f.nvars(), packed_div(rm, gm), qc) * g;
    }
    return true;
}

}  // namespace

MultiPoly gcd(const MultiPoly& f, const MultiPoly& g) {
    check_compatible(f, g);
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    if (f.is_constant() || g.is_constant()) return MultiPoly::constant(f.prime(), f.nvars(), 1);
    if (f == g) return f.monic();

    // Split off the monomial content of both sides first; it is cheap and it
    // shrinks everything downstream.
    Packed mf = monomial_content(f), mg = monomial_content(g);
    Packed shared = 0;
    for (std::uint32_t j = 0; j < kMaxVars; ++j)
        shared = packed_set(shared, j, std::min(packed_get(mf, j), packed_get(mg, j)));
    MultiPoly a0 = strip_monomial(f, mf), b0 = strip_monomial(g, mg);
    MultiPoly unit = MultiPoly::monomial(f.prime(), f.nvars(), shared, 1);
    if (a0.is_constant() || b0.is_constant()) return unit;
    if (a0 == b0) return (unit * a0).monic();

    // Divisibility fast path: covers the very common case of one input being
    // a multiple (e.g. powers of a shared denominator).
    const MultiPoly& small = a0.term_count() <= b0.term_count() ? a0 : b0;
    const MultiPoly& large = a0.term_count() <= b0.term_count() ? b0 : a0;
    if (packed_divides(small.leading_monomial(), large.leading_monomial()) &&
        divides_within(large, small, 4 * (large.term_count() + small.term_count()) + 32))
        return (unit * small).monic();

    std::uint32_t var = main_variable(a0, b0);
    if (var >= f.nvars()) return unit;
    if (a0.degree_in(var) == 0) return (unit * gcd(a0, content_in(b0, var))).monic();
    if (b0.degree_in(var) == 0) return (unit * gcd(b0, content_in(a0, var))).monic();

    // Primitive polynomial remainder sequence in the main variable.
    MultiPoly cf = content_in(a0, var), cg = content_in(b0, var);
    MultiPoly c = gcd(cf, cg);
    MultiPoly a = div_exact(a0, cf), b = div_exact(b0, cg);
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    while (!b.is_zero()) {
        MultiPoly r = pseudo_rem(a, b, var);
        if (!r.is_zero()) {
            MultiPoly cr = content_in(r, var);
            r = div_exact(r, cr);
        }
        a = b;
        b = r;
    }
    return (unit * c * a).monic();
}

std::string MultiPoly::to_string(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Canonical form lists terms in descending graded-lex order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) out << " + ";
        first = false;
        const auto& [m, c] = *it;
        bool printed = false;
        if (c != 1 || m == 0) {
            out << c;
            printed = true;
        }
        for (std::uint32_t j = 0; j < nvars_; ++j) {
            std::uint32_t e = packed_get(m, j);
            if (e == 0) continue;
            if (printed) out << "*";
            out << (j < vars.size() ? vars[j] : "v" + std::to_string(j));
            if (e > 1) out << "^" << e;
            printed = true;
        }
    }
    return out.str();
}

std::string MultiPoly::key() const {
    std::ostringstream out;
    out << p_ << ";" << nvars_ << ";";
    for (const auto& [m, c] : terms_) out << std::hex << m << ":" << std::dec << c << ",";
    return out.str();
}

}  // namespace insep
