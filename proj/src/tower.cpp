#include "insep/tower.hpp"

#include <algorithm>
#include <deque>

namespace insep {

namespace {

// Extends a field by one element: the frontier starts at the current basis
// and is repeatedly multiplied by the new element until the span stabilizes.
// The result is closed under multiplication, hence a field.
RowSpace extend_span(const AmbientField& amb, const RowSpace& current, const SparseRow& gen_row) {
    RowSpace space = current;
    std::deque<SparseRow> frontier(current.rows().begin(), current.rows().end());
    while (!frontier.empty()) {
        SparseRow w = std::move(frontier.front());
        frontier.pop_front();
        SparseRow prod = amb.coord_mul(w, gen_row);
        auto res = space.insert(prod);
        if (res.added) frontier.push_back(res.stored);
    }
    return space;
}

}  // namespace

IntermediateField::IntermediateField(std::shared_ptr<const AmbientField> amb, RowSpace space,
                                     std::vector<RatFunc> gens)
    : amb_(std::move(amb)), space_(std::move(space)), gens_(std::move(gens)) {
    basis_.reserve(space_.rank());
    for (const auto& row : space_.rows()) basis_.push_back(amb_->reconstruct(row));
    if (gens_.empty() && space_.rank() > 1) {
        // Fields assembled from raw rows generate themselves by their basis.
        for (const auto& b : basis_)
            if (!amb_->descend(b).empty()) gens_.push_back(b);
    }
}

IntermediateField IntermediateField::closure(std::shared_ptr<const AmbientField> amb,
                                             std::vector<RatFunc> gens) {
    RowSpace space(amb->prime(), amb->nvars(), amb->dim());
    SparseRow one{{0, RatFunc::constant(amb->prime(), amb->nvars(), 1)}};
    space.insert(one);
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        space = extend_span(*amb, space, amb->descend(g));
    }
    return IntermediateField(amb, std::move(space), std::move(gens));
}

IntermediateField IntermediateField::base_field(std::shared_ptr<const AmbientField> amb) {
    return closure(std::move(amb), {});
}

IntermediateField IntermediateField::full_field(std::shared_ptr<const AmbientField> amb) {
    std::vector<RatFunc> vars;
    for (std::uint32_t j = 0; j < amb->nvars(); ++j) vars.push_back(amb->variable(j));
    return closure(std::move(amb), std::move(vars));
}

IntermediateField IntermediateField::from_rows(std::shared_ptr<const AmbientField> amb,
                                               const std::vector<SparseRow>& rows, bool verify) {
    RowSpace space(amb->prime(), amb->nvars(), amb->dim());
    SparseRow one{{0, RatFunc::constant(amb->prime(), amb->nvars(), 1)}};
    space.insert(one);
    for (const auto& r : rows) space.insert(r);
    if (verify) {
        const auto& basis = space.rows();
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i; j < basis.size(); ++j)
                if (!space.contains(amb->coord_mul(basis[i], basis[j])))
                    throw Error("rows do not span a multiplicatively closed space");
    }
    return IntermediateField(amb, std::move(space), {});
}

bool IntermediateField::subfield_of(const IntermediateField& o) const {
    for (const auto& row : space_.rows())
        if (!o.space_.contains(row)) return false;
    return true;
}

std::uint64_t degree_over(const IntermediateField& big, const IntermediateField& small) {
    if (!small.subfield_of(big)) throw NotASubfield("degree of a non-extension requested");
    if (big.dim() % small.dim() != 0) throw Error("inconsistent module dimensions");
    return big.dim() / small.dim();
}

std::uint32_t tower_exponent(const IntermediateField& big, const IntermediateField& small) {
    for (std::uint32_t n = 0; n <= big.ambient()->exponent(); ++n) {
        bool ok = true;
        for (const auto& g : big.gens())
            if (!small.contains(g.pow_frobenius(n))) {
                ok = false;
                break;
            }
        if (ok) return n;
    }
    throw Error("exponent exceeds the ambient bound");
}

IntermediateField intersect_fields(const IntermediateField& a, const IntermediateField& b) {
    auto rows = intersect_spaces(a.space().rows(), b.space().rows(), a.space().ncols(),
                                 a.ambient()->prime(), a.ambient()->nvars());
    return IntermediateField::from_rows(a.ambient(), rows);
}

IntermediateField compositum(const IntermediateField& a, const IntermediateField& b) {
    std::vector<RatFunc> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return IntermediateField::closure(a.ambient(), std::move(gens));
}

IntermediateField power_compositum(const IntermediateField& base, const IntermediateField& src,
                                   std::uint32_t i) {
    std::vector<RatFunc> gens = base.gens();
    for (const auto& g : src.gens()) gens.push_back(g.pow_frobenius(i));
    return IntermediateField::closure(base.ambient(), std::move(gens));
}

DisjointnessResult linear_disjointness(const IntermediateField& a, const IntermediateField& b) {
    const auto& amb = *a.ambient();
    std::uint32_t p = amb.prime(), nv = amb.nvars();
    auto c_rows = intersect_spaces(a.space().rows(), b.space().rows(), a.space().ncols(), p, nv);

    // Greedy basis of a over the intersection C: the span of C * chosen is
    // maintained as a plain module over the ambient base.
    RowSpace span(p, nv, amb.dim());
    std::vector<SparseRow> chosen_rows;
    DisjointnessResult out;
    for (const auto& beta : a.space().rows()) {
        if (span.contains(beta)) continue;
        chosen_rows.push_back(beta);
        out.elements.push_back(amb.reconstruct(beta));
        for (const auto& c : c_rows) span.insert(amb.coord_mul(c, beta));
    }

    // The chosen elements stay independent over b exactly when the products
    // with a basis of b are independent over the ambient base.
    RowSpace prods(p, nv, amb.dim(), true);
    std::uint32_t nb = b.dim();
    for (std::uint32_t j = 0; j < chosen_rows.size(); ++j) {
        for (std::uint32_t m = 0; m < nb; ++m) {
            auto res = prods.insert(amb.coord_mul(b.space().rows()[m], chosen_rows[j]));
            if (res.added) continue;
            // relation over the insertion order (j', m') -> j'*nb + m'
            std::vector<RatFunc> mu(j + 1, RatFunc(p, nv));
            for (const auto& [idx, t] : *res.relation)
                mu[idx / nb] += t.pow_frobenius(amb.exponent()) * b.basis_elements()[idx % nb];
            out.disjoint = false;
            out.elements.erase(out.elements.begin() + (j + 1), out.elements.end());
            out.coefficients = std::move(mu);
            return out;
        }
    }
    out.disjoint = true;
    return out;
}

Presentation::Presentation(IntermediateField base, const std::vector<RatFunc>& gens)
    : base_(base),
      top_(base),
      solver_(base.ambient()->prime(), base.ambient()->nvars(), base.ambient()->dim(), true) {
    const auto& amb = *base_.ambient();
    std::uint32_t p = amb.prime(), nv = amb.nvars();

    // Stage selection: keep each generator not already present; its exponent
    // is the least n >= 1 whose Frobenius power falls into the running field.
    std::vector<RatFunc> kept;
    {
        RowSpace space = base_.space();
        for (const auto& g : gens) {
            if (g.is_zero() || space.contains(amb.descend(g))) continue;
            kept.push_back(g);
            space = extend_span(amb, space, amb.descend(g));
        }
        std::vector<RatFunc> tg = base_.gens();
        tg.insert(tg.end(), kept.begin(), kept.end());
        top_ = IntermediateField::closure(base_.ambient(), tg);
    }
    std::uint32_t n = static_cast<std::uint32_t>(kept.size());

    kappa_ = base_.basis_elements();
    mono_expos_.assign(1, PresPoly::Expo(n, 0));
    mono_rows_.assign(1, SparseRow{{0, RatFunc::constant(p, nv, 1)}});
    for (std::uint32_t k = 0; k < base_.dim(); ++k) {
        auto res = solver_.insert(base_.space().rows()[k]);
        if (!res.added) throw Error("base field basis not independent");
        labels_.emplace_back(0, k);
    }

    IntermediateField cur = base_;
    for (std::uint32_t i = 0; i < n; ++i) {
        Stage st{kept[i], 0, 1, PresPoly(n, p, nv)};
        std::uint32_t ei = 0;
        for (std::uint32_t c = 1; c <= amb.exponent(); ++c) {
            if (cur.contains(st.u.pow_frobenius(c))) {
                ei = c;
                break;
            }
        }
        if (ei == 0) throw Error("generator power never reaches the stage field");
        st.ei = ei;
        st.pe = 1;
        for (std::uint32_t c = 0; c < ei; ++c) st.pe *= p;

        // Tail: express u^(p^ei) over the current stage field with base
        // coefficients; the tracked solver gives coefficients against the
        // kappa * monomial columns directly (as p^e-th roots).
        auto coeffs = solver_.express(amb.descend(st.u.pow_frobenius(ei)));
        if (!coeffs) throw Error("stage power escaped the presentation span");
        std::map<std::uint32_t, RatFunc> by_mono;
        for (std::uint32_t t = 0; t < coeffs->size(); ++t) {
            if ((*coeffs)[t].is_zero()) continue;
            auto [mono, k] = labels_[t];
            RatFunc add = (*coeffs)[t].pow_frobenius(amb.exponent()) * kappa_[k];
            auto [it, inserted] = by_mono.try_emplace(mono, add);
            if (!inserted) it->second += add;
        }
        for (auto& [mono, c] : by_mono) st.tail.add_term(mono_expos_[mono], c);

        stages_.push_back(std::move(st));
        append_columns(i);
        std::vector<RatFunc> cg = cur.gens();
        cg.push_back(kept[i]);
        cur = IntermediateField::closure(base_.ambient(), std::move(cg));
    }

    if (solver_.rank() != top_.dim())
        throw Error("presentation monomials do not span the field");
    if (!cur.same_field(top_)) throw Error("stage fields drifted from the closure");
}

void Presentation::append_columns(std::uint32_t stage_index) {
    const auto& amb = *base_.ambient();
    const Stage& st = stages_[stage_index];
    SparseRow u_row = amb.descend(st.u);
    std::size_t prev_count = mono_expos_.size();
    SparseRow upow = u_row;
    for (std::uint32_t c = 1; c < st.pe; ++c) {
        for (std::size_t m = 0; m < prev_count; ++m) {
            PresPoly::Expo e = mono_expos_[m];
            e[stage_index] = static_cast<std::uint16_t>(c);
            SparseRow row = amb.coord_mul(mono_rows_[m], upow);
            std::uint32_t mono_idx = static_cast<std::uint32_t>(mono_expos_.size());
            mono_expos_.push_back(std::move(e));
            mono_rows_.push_back(row);
            for (std::uint32_t k = 0; k < base_.dim(); ++k) {
                auto res = solver_.insert(amb.coord_mul(row, base_.space().rows()[k]));
                if (!res.added) throw Error("presentation columns are dependent");
                labels_.emplace_back(mono_idx, k);
            }
        }
        if (c + 1 < st.pe) upow = amb.coord_mul(upow, u_row);
    }
}

std::vector<RatFunc> Presentation::gen_values() const {
    std::vector<RatFunc> out;
    out.reserve(stages_.size());
    for (const auto& st : stages_) out.push_back(st.u);
    return out;
}

std::vector<Relation> Presentation::relations() const {
    std::vector<Relation> out;
    out.reserve(stages_.size());
    for (const auto& st : stages_) out.push_back({st.pe, st.tail});
    return out;
}

std::uint64_t Presentation::degree() const {
    std::uint64_t d = 1;
    for (const auto& st : stages_) d *= st.pe;
    return d;
}

const DMat& Presentation::jacobian() const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (!jac_ready_) {
        const auto& amb = *base_.ambient();
        std::uint32_t n = ngens();
        std::vector<RatFunc> u = gen_values();
        jac_ = dmat_zero(n, n, amb.prime(), amb.nvars());
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < i; ++j)
                jac_[i][j] = -stages_[i].tail.partial(j).eval(u);
        jac_ready_ = true;
    }
    return jac_;
}

PresPoly Presentation::express(const RatFunc& f) const {
    const auto& amb = *base_.ambient();
    std::string key = f.key();
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    auto coeffs = solver_.express(amb.descend(f));
    if (!coeffs) throw NotInField("element lies outside the presented field");
    PresPoly out(ngens(), amb.prime(), amb.nvars());
    std::map<std::uint32_t, RatFunc> by_mono;
    for (std::uint32_t t = 0; t < coeffs->size(); ++t) {
        if ((*coeffs)[t].is_zero()) continue;
        auto [mono, k] = labels_[t];
        RatFunc add = (*coeffs)[t].pow_frobenius(amb.exponent()) * kappa_[k];
        auto [it, inserted] = by_mono.try_emplace(mono, add);
        if (!inserted) it->second += add;
    }
    for (auto& [mono, c] : by_mono) out.add_term(mono_expos_[mono], c);
    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(std::move(key), out);
    return out;
}

GeneratorSearch minimal_generators(const IntermediateField& top, const IntermediateField& base) {
    GeneratorSearch out;
    if (top.same_field(base)) return out;
    if (!base.subfield_of(top)) throw NotASubfield("generator search requires an extension");
    const auto& amb = *top.ambient();
    std::uint32_t p = amb.prime(), nv = amb.nvars();

    Presentation pres(base, top.basis_elements());
    std::uint32_t n = pres.ngens();
    std::vector<RatFunc> u = pres.gen_values();

    RowSpace span(p, nv, n);
    for (const auto& row : pres.jacobian()) span.insert(dense_to_sparse(row));
    std::uint32_t jrank = span.rank();

    for (const auto& alpha : top.basis_elements()) {
        if (span.rank() == n) break;
        PresPoly psi = pres.express(alpha);
        DVec d(n, RatFunc(p, nv));
        for (std::uint32_t j = 0; j < n; ++j) d[j] = psi.partial(j).eval(u);
        if (span.insert(dense_to_sparse(d)).added) out.generators.push_back(alpha);
    }
    if (span.rank() != n) throw Error("differential classes failed to span");
    out.minimal_count = static_cast<std::uint32_t>(out.generators.size());
    if (out.minimal_count != n - jrank) throw Error("generator count mismatch");

    std::vector<RatFunc> check = base.gens();
    check.insert(check.end(), out.generators.begin(), out.generators.end());
    if (!IntermediateField::closure(top.ambient(), check).same_field(top))
        throw Error("selected generators do not generate");
    return out;
}

}  // namespace insep
