#include "insep/prespoly.hpp"

namespace insep {

PresPoly::PresPoly(std::uint32_t nvars, std::uint32_t p, std::uint32_t ambient_nvars)
    : nvars_(nvars), p_(p), an_(ambient_nvars) {}

PresPoly PresPoly::constant(std::uint32_t nvars, RatFunc c) {
    PresPoly f(nvars, c.prime(), c.nvars());
    f.add_term(Expo(nvars, 0), c);
    return f;
}

PresPoly PresPoly::variable(std::uint32_t nvars, std::uint32_t var, std::uint32_t p,
                            std::uint32_t ambient_nvars) {
    PresPoly f(nvars, p, ambient_nvars);
    Expo e(nvars, 0);
    e.at(var) = 1;
    f.add_term(e, RatFunc::constant(p, ambient_nvars, 1));
    return f;
}

PresPoly PresPoly::monomial(std::uint32_t nvars, Expo e, RatFunc c) {
    PresPoly f(nvars, c.prime(), c.nvars());
    f.add_term(e, c);
    return f;
}

void PresPoly::add_term(const Expo& e, const RatFunc& c) {
    if (c.is_zero()) return;
    if (e.size() != nvars_) throw DimensionMismatch("presentation exponent length");
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PresPoly PresPoly::operator+(const PresPoly& o) const {
    PresPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

PresPoly PresPoly::operator-(const PresPoly& o) const { return *this + (-o); }

PresPoly PresPoly::operator-() const {
    PresPoly r(nvars_, p_, an_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

PresPoly PresPoly::operator*(const PresPoly& o) const {
    PresPoly r(nvars_, p_, an_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Expo e(nvars_);
            for (std::uint32_t j = 0; j < nvars_; ++j) {
                std::uint32_t s = ea[j] + eb[j];
                if (s > 0xFFFF) throw Error("presentation exponent overflow");
                e[j] = static_cast<std::uint16_t>(s);
            }
            r.add_term(e, ca * cb);
        }
    return r;
}

PresPoly PresPoly::scaled(const RatFunc& c) const {
    PresPoly r(nvars_, p_, an_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, c * v);
    return r;
}

PresPoly PresPoly::partial(std::uint32_t var) const {
    PresPoly r(nvars_, p_, an_);
    for (const auto& [e, c] : terms_) {
        std::uint32_t k = e[var];
        if (k == 0) continue;
        RatFunc ck = c * RatFunc::constant(p_, an_, k % p_);
        if (ck.is_zero()) continue;
        Expo d = e;
        d[var] = static_cast<std::uint16_t>(k - 1);
        r.add_term(d, ck);
    }
    return r;
}

RatFunc PresPoly::eval(const std::vector<RatFunc>& vals) const {
    if (vals.size() != nvars_) throw DimensionMismatch("evaluation point length");
    RatFunc acc(p_, an_);
    for (const auto& [e, c] : terms_) {
        RatFunc t = c;
        for (std::uint32_t j = 0; j < nvars_; ++j)
            if (e[j] > 0) t *= vals[j].pow(e[j]);
        acc += t;
    }
    return acc;
}

PresPoly PresPoly::substitute(const std::vector<PresPoly>& images) const {
    if (images.size() != nvars_) throw DimensionMismatch("substitution image count");
    std::uint32_t out_vars = images.empty() ? 0 : images[0].nvars();
    PresPoly acc(out_vars, p_, an_);
    for (const auto& [e, c] : terms_) {
        PresPoly t = PresPoly::constant(out_vars, c);
        for (std::uint32_t j = 0; j < nvars_; ++j)
            if (e[j] > 0) t = t * images[j].pow(e[j]);
        acc = acc + t;
    }
    return acc;
}

PresPoly PresPoly::frobenius(std::uint32_t k) const {
    std::uint64_t pk = 1;
    for (std::uint32_t i = 0; i < k; ++i) pk *= p_;
    PresPoly r(nvars_, p_, an_);
    for (const auto& [e, c] : terms_) {
        Expo f(nvars_);
        for (std::uint32_t j = 0; j < nvars_; ++j) {
            std::uint64_t s = e[j] * pk;
            if (s > 0xFFFF) throw Error("presentation exponent overflow");
            f[j] = static_cast<std::uint16_t>(s);
        }
        r.terms_.emplace(f, c.pow_frobenius(k));
    }
    return r;
}

PresPoly PresPoly::pow(std::uint64_t n) const {
    PresPoly r = PresPoly::constant(nvars_, RatFunc::constant(p_, an_, 1));
    PresPoly base = *this;
    while (n) {
        if (n & 1) r = r * base;
        if (n >>= 1) base = base * base;
    }
    return r;
}

std::uint32_t PresPoly::degree_in(std::uint32_t var) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) {
        (void)c;
        d = std::max<std::uint32_t>(d, e[var]);
    }
    return d;
}

PresPoly triangular_reduce(PresPoly g, const std::vector<Relation>& rels,
                           std::vector<PresPoly>* quotients) {
    std::uint32_t n = g.nvars();
    if (rels.size() != n) throw DimensionMismatch("one relation per presentation variable");
    if (quotients) {
        quotients->clear();
        quotients->assign(n, PresPoly(n, g.prime(), g.ambient_nvars()));
    }
    // Process variables from the top of the tower down; tails only involve
    // lower variables, so each pass is final for its variable.
    for (std::uint32_t j = n; j-- > 0;) {
        std::uint32_t pe = rels[j].pe;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [e, c] : g.terms()) {
                if (e[j] < pe) continue;
                PresPoly::Expo t = e;
                t[j] = static_cast<std::uint16_t>(e[j] - pe);
                PresPoly xt = PresPoly::monomial(n, t, c);
                // c X^e = (c X^t) rel_j + (c X^t) tail_j
                g.add_term(e, -c);
                // tails are stated in the same variable count
                g = g + xt * rels[j].tail;
                if (quotients) (*quotients)[j] = (*quotients)[j] + xt;
                changed = true;
                break;
            }
        }
    }
    return g;
}

}  // namespace insep
