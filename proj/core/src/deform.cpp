#include "linfty/deform.hpp"

#include <stdexcept>

#include "linfty/linalg.hpp"

namespace linfty {

namespace {

Scalar mc_sign(int k) {
    // -(-1)^{k(k+1)/2}: +, +, -, -, +, +, ..
    return Scalar(((k * (k + 1) / 2) % 2) ? 1 : -1);
}

Scalar factorial(int k) {
    Scalar f(1);
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

Scalar mult_factorial(const Tuple& tuple) {
    Scalar f(1);
    int run = 1;
    for (std::size_t i = 1; i < tuple.size(); ++i) {
        if (tuple[i] == tuple[i - 1]) {
            ++run;
            f *= run;
        } else {
            run = 1;
        }
    }
    return f;
}

}  // namespace

const std::map<Tuple, FormalSeries>& DeformedStructure::op(int arity) const {
    static const std::map<Tuple, FormalSeries> empty;
    auto it = ops.find(arity);
    return it == ops.end() ? empty : it->second;
}

FormalSeries DeformedStructure::op_value(int arity, const Tuple& canonical) const {
    const auto& table = op(arity);
    auto it = table.find(canonical);
    if (it != table.end()) return it->second;
    int deg = 2 - arity;
    for (int i : canonical) deg += space.degree(i);
    return FormalSeries(space, params, param_caps, deg);
}

DeformedStructure deform_structure(const LInfinityStructure& l, const FormalSeries& gamma, int arity_cap,
                                   int order) {
    if (gamma.degree() != 1) throw std::invalid_argument("deform_structure: Gamma must have degree 1");
    if (!gamma.is_zero() && gamma.min_order() < 1)
        throw std::invalid_argument("deform_structure: Gamma must have nilpotent coefficients");
    if (arity_cap > l.arity_cap()) throw std::invalid_argument("deform_structure: arity cap beyond the structure");

    DeformedStructure out;
    out.space = l.space();
    out.params = gamma.vars();
    out.param_caps = {order};

    if (arity_cap + order > l.arity_cap())
        throw std::invalid_argument("deform_structure: needs operations through arity cap + order");

    std::vector<Variable> params;
    for (int i = 0; i < gamma.vars()->size(); ++i) params.push_back(gamma.vars()->var(i));
    out.combined = coordinate_frame(l.space(), params, true);
    out.caps = {arity_cap, order};

    // the t-bands of the translated field draw on source arities up to
    // arity_cap + order; build the field wide, translate, then re-truncate
    std::vector<int> wide{arity_cap + order, order};
    PolyVectorField q = to_vector_field(l, out.combined, wide);

    // translation x_b -> x_b + coordinates of Gamma[1]
    const int dim = l.space().dim();
    std::vector<GradedPoly> images;
    images.reserve(out.combined->size());
    for (int b = 0; b < dim; ++b) {
        GradedPoly img = GradedPoly::variable(out.combined, wide, b);
        for (const auto& [mono, vec] : gamma.terms()) {
            if (is_zero(vec[b])) continue;
            Monomial big(out.combined->size());
            for (int i = 0; i < gamma.vars()->size(); ++i)
                if (mono.exponent(i)) big = big.with(dim + i, mono.exponent(i));
            img.add_term(big, vec[b]);
        }
        images.push_back(std::move(img));
    }
    for (int i = dim; i < out.combined->size(); ++i)
        images.push_back(GradedPoly::variable(out.combined, wide, i));

    PolyVectorField translated = q.substituted(images);
    out.field = PolyVectorField(out.space, out.combined, out.caps, 1);
    for (int a = 0; a < dim; ++a) {
        GradedPoly trimmed(out.combined, out.caps);
        for (const auto& [m, coeff] : translated.component(a).terms()) trimmed.add_term(m, coeff);
        out.field.set_component(a, std::move(trimmed));
    }

    // read the Taylor data back: coordinate exponents give the tuple, the
    // parameter part stays as the series monomial
    out.constant_term = FormalSeries(out.space, out.params, out.param_caps, 2);
    for (int a = 0; a < dim; ++a) {
        for (const auto& [mono, c] : out.field.component(a).terms()) {
            Tuple tuple;
            for (int i = 0; i < dim; ++i)
                for (int e = 0; e < mono.exponent(i); ++e) tuple.push_back(i);
            Monomial pm(out.params->size());
            for (int i = 0; i < out.params->size(); ++i)
                if (mono.exponent(dim + i)) pm = pm.with(i, mono.exponent(dim + i));
            const int n = static_cast<int>(tuple.size());
            Vec unit = vec_zero(dim);
            if (n == 0) {
                unit[a] = c;
                out.constant_term.add_term(pm, unit);
                continue;
            }
            if (n > arity_cap) continue;
            Scalar value = c * mult_factorial(tuple) * Scalar(hat_sign(out.space, tuple));
            auto [it, inserted] = out.ops[n].try_emplace(
                tuple, FormalSeries(out.space, out.params, out.param_caps, [&] {
                    int deg = 2 - n;
                    for (int i : tuple) deg += out.space.degree(i);
                    return deg;
                }()));
            unit[a] = value;
            it->second.add_term(pm, unit);
        }
    }
    return out;
}

FormalSeries deformed_differential(const LInfinityStructure& l, const FormalSeries& gamma, const Vec& v,
                                   int order) {
    if (gamma.degree() != 1) throw std::invalid_argument("deformed_differential: Gamma must have degree 1");
    auto vdeg = l.space().homogeneous_degree(v);
    if (!vdeg) throw std::invalid_argument("deformed_differential: v must be homogeneous nonzero");
    std::vector<int> caps = gamma.caps();
    FormalSeries acc(l.space(), gamma.vars(), caps, *vdeg + 1);
    FormalSeries vc = FormalSeries::constant(l.space(), gamma.vars(), caps, v);
    const int top = std::min(l.arity_cap(), order + 1);
    for (int k = 1; k <= top; ++k) {
        if (l.op(k).is_zero()) continue;
        std::vector<FormalSeries> args(k - 1, gamma);
        args.push_back(vc);
        FormalSeries term = eval_multi_on_series(l.op(k), args);
        term *= mc_sign(k) / factorial(k - 1);
        acc += term;
    }
    return acc;
}

namespace {

/// mu_l(head, e_rest..) where mu_l is a series-valued graded-antisymmetric
/// operation and head is itself a series: the head coefficient monomial
/// crosses the trailing basis arguments.
FormalSeries series_op_eval_front(const DeformedStructure& d, int l, const FormalSeries& head,
                                  const Tuple& rest) {
    const GradedSpace& space = d.space;
    int out_deg = head.degree() + 2 - l;
    for (int i : rest) out_deg += space.degree(i);
    FormalSeries acc(space, d.params, d.param_caps, out_deg);
    int rest_par = 0;
    for (int i : rest) rest_par += space.par(i);
    for (const auto& [mono, vec] : head.terms()) {
        int msign = mono.par(*d.params) * (rest_par & 1) ? -1 : 1;
        for (int b = 0; b < space.dim(); ++b) {
            if (is_zero(vec[b])) continue;
            Tuple t;
            t.reserve(rest.size() + 1);
            t.push_back(b);
            t.insert(t.end(), rest.begin(), rest.end());
            TupleNorm norm = normalize_tuple(space, t);
            if (norm.zero) continue;
            FormalSeries val = d.op_value(l, norm.tuple);
            if (val.is_zero()) continue;
            // multiply by the head coefficient monomial on the right
            for (const auto& [vm, vv] : val.terms()) {
                auto prod = mono_mul(*d.params, vm, mono);
                if (!prod) continue;
                Scalar c = vec[b] * Scalar(norm.sign * msign * prod->sign);
                acc.add_term(prod->mono, vec_scale(c, vv));
            }
        }
    }
    return acc;
}

}  // namespace

StructureReport check_deformed(const DeformedStructure& d, int max_arity) {
    if (max_arity > d.arity_cap()) throw std::invalid_argument("check_deformed: max_arity beyond the cap");
    StructureReport report;
    report.checked_arity = max_arity;
    const GradedSpace& space = d.space;
    for (int n = 1; n <= max_arity; ++n) {
        DefectList list;
        for (const Tuple& t : canonical_tuples(space, n)) {
            std::vector<int> degrees(t.size());
            for (std::size_t i = 0; i < t.size(); ++i) degrees[i] = space.degree(t[i]);
            int defect_deg = 3 - n;
            for (int i : t) defect_deg += space.degree(i);
            FormalSeries defect(space, d.params, d.param_caps, defect_deg);
            for (int k = 1; k <= n; ++k) {
                const int lw = n + 1 - k;
                if (lw > d.arity_cap()) continue;
                for (const Shuffle& sh : shuffles(k, n)) {
                    int sign_exp = perm_parity(sh.perm) + k * (lw - 1);
                    int sign = (sign_exp & 1 ? -1 : 1) * koszul_sign(sh.perm, degrees);
                    Tuple head(k), tail(n - k);
                    for (int i = 0; i < k; ++i) head[i] = t[sh.perm[i]];
                    for (int i = k; i < n; ++i) tail[i - k] = t[sh.perm[i]];
                    TupleNorm hn = normalize_tuple(space, head);
                    if (hn.zero) continue;
                    FormalSeries inner = d.op_value(k, hn.tuple);
                    if (inner.is_zero()) continue;
                    FormalSeries term = series_op_eval_front(d, lw, inner, tail);
                    term *= Scalar(sign * hn.sign);
                    defect += term;
                }
            }
            if (!defect.is_zero()) {
                DefectEntry e;
                e.tuple = t;
                list.push_back(std::move(e));
            }
        }
        report.defects.emplace(n, std::move(list));
    }
    return report;
}

}  // namespace linfty
