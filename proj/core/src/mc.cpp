#include "linfty/mc.hpp"

#include <stdexcept>

#include "linfty/linalg.hpp"

namespace linfty {

namespace {

Scalar mc_sign(int k) { return Scalar(((k * (k + 1) / 2) % 2) ? 1 : -1); }

Scalar factorial(int k) {
    Scalar f(1);
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

FormalSeries mc_residual(const LInfinityStructure& l, const FormalSeries& gamma, int order) {
    if (gamma.degree() != 1) throw std::invalid_argument("mc_residual: Gamma must have degree 1");
    if (gamma.space() != l.space()) throw std::invalid_argument("mc_residual: space mismatch");
    if (!gamma.is_zero() && gamma.min_order() < 1)
        throw std::invalid_argument("mc_residual: Gamma must have nilpotent coefficients");
    FormalSeries acc(l.space(), gamma.vars(), gamma.caps(), 2);
    const int top = std::min(l.arity_cap(), order);
    for (int k = 1; k <= top; ++k) {
        if (l.op(k).is_zero()) continue;
        std::vector<FormalSeries> args(k, gamma);
        FormalSeries term = eval_multi_on_series(l.op(k), args);
        term *= mc_sign(k) / factorial(k);
        acc += term;
    }
    return acc;
}

FormalSeries versal_solution(const Dgla& a, const HodgeData& h, const ParameterFrame& frame, int order) {
    if (a.space != h.space) throw std::invalid_argument("versal_solution: Hodge data mismatch");
    if (frame.harmonics().empty() && frame.size() != 0)
        throw std::invalid_argument("versal_solution: frame is not attached to harmonics");
    std::vector<int> caps{order};
    std::vector<FormalSeries> bands;
    FormalSeries gamma1(a.space, frame.vars(), caps, 1);
    for (int i = 0; i < frame.size(); ++i)
        gamma1.add_term(Monomial::unit(frame.size(), i), frame.harmonics()[i].rep);
    bands.push_back(gamma1);
    for (int m = 2; m <= order; ++m) {
        FormalSeries sum(a.space, frame.vars(), caps, 2);
        for (int k = 1; k <= m - 1; ++k)
            sum += eval_multi_on_series(a.bracket, {bands[k - 1], bands[m - k - 1]});
        FormalSeries next = sum.mapped(h.eta);
        next *= scalar(-1, 2);
        bands.push_back(next);
    }
    FormalSeries gamma = gamma1;
    for (int m = 2; m <= order; ++m) gamma += bands[m - 1];
    return gamma;
}

bool kuranishi_relation_holds(const Dgla& a, const HodgeData& h, const ParameterFrame& frame,
                              const FormalSeries& gamma) {
    FormalSeries lhs = gamma;
    FormalSeries br = eval_multi_on_series(a.bracket, {gamma, gamma});
    FormalSeries corr = br.mapped(h.eta);
    corr *= scalar(1, 2);
    lhs += corr;
    FormalSeries taut(a.space, frame.vars(), gamma.caps(), 1);
    for (int i = 0; i < frame.size(); ++i)
        taut.add_term(Monomial::unit(frame.size(), i), frame.harmonics()[i].rep);
    return lhs == taut;
}

LocusIdeal kuranishi_locus(const Dgla& a, const HodgeData& h, const FormalSeries& gamma, int order) {
    LocusIdeal ideal;
    ideal.vars = gamma.vars();
    ideal.caps = {order};
    FormalSeries pairing = eval_multi_on_series(a.bracket, {gamma, gamma}).mapped(h.p_h);
    if (pairing.is_zero()) return ideal;
    std::vector<Vec> reps;
    for (const auto& g : h.harmonics) reps.push_back(g.rep);
    std::vector<GradedPoly> gens(reps.size(), GradedPoly(ideal.vars, ideal.caps));
    for (const auto& [mono, v] : pairing.terms()) {
        auto coords = coordinates_in_span(reps, v);
        if (!coords) throw std::logic_error("kuranishi_locus: projection left the harmonic span");
        for (std::size_t i = 0; i < reps.size(); ++i)
            if (!is_zero((*coords)[i])) gens[i].add_term(mono, (*coords)[i]);
    }
    for (std::size_t i = 0; i < reps.size(); ++i)
        if (!gens[i].is_zero()) ideal.generators.emplace_back(h.harmonics[i].label, gens[i]);
    return ideal;
}

bool poly_in_ideal(const GradedPoly& f, const LocusIdeal& ideal) {
    if (f.is_zero()) return true;
    if (ideal.is_zero()) return false;
    // span of monomial multiples of the generators, then exact membership
    std::vector<Monomial> monos = all_monomials(*ideal.vars, ideal.caps);
    std::map<Monomial, int> index;
    for (const auto& m : monos) index.emplace(m, static_cast<int>(index.size()));
    std::vector<GradedPoly> span;
    for (const auto& [label, gen] : ideal.generators) {
        GradedPoly base = gen;
        for (const Monomial& m : monos) {
            GradedPoly mult(ideal.vars, ideal.caps);
            mult.add_term(m, Scalar(1));
            GradedPoly prod = mult * base;
            if (!prod.is_zero()) span.push_back(std::move(prod));
        }
    }
    if (span.empty()) return false;
    QMat mat(static_cast<int>(index.size()), static_cast<int>(span.size()));
    for (std::size_t c = 0; c < span.size(); ++c)
        for (const auto& [m, q] : span[c].terms()) mat.at(index.at(m), static_cast<int>(c)) = q;
    Vec rhs = vec_zero(static_cast<int>(index.size()));
    for (const auto& [m, q] : f.terms()) {
        auto it = index.find(m);
        if (it == index.end()) return false;
        rhs[it->second] = q;
    }
    return solve(mat, rhs).has_value();
}

bool series_in_ideal(const FormalSeries& s, const LocusIdeal& ideal) {
    for (int i = 0; i < s.space().dim(); ++i) {
        GradedPoly p = s.coordinate_poly(i);
        if (!poly_in_ideal(p, ideal)) return false;
    }
    return true;
}

DegenerationReport degeneration_check(const LInfinityStructure& l, const Dgla& a, const FormalSeries& gamma,
                                      const LocusIdeal& ideal, int order) {
    if (l.space() != a.space) throw std::invalid_argument("degeneration_check: mismatched provenance");
    DegenerationReport report;
    FormalSeries bracket_gg = eval_multi_on_series(a.bracket, {gamma, gamma});

    FormalSeries mu2_gg = eval_multi_on_series(l.op(2), {gamma, gamma});
    report.mu2_matches_bracket = series_in_ideal(mu2_gg - bracket_gg, ideal);

    const int top = std::min(l.arity_cap(), order);
    for (int n = 3; n <= top; ++n) {
        if (l.op(n).is_zero()) {
            report.higher_vanish[n] = true;
            continue;
        }
        std::vector<FormalSeries> args(n, gamma);
        FormalSeries val = eval_multi_on_series(l.op(n), args);
        report.higher_vanish[n] = series_in_ideal(val, ideal);
    }

    FormalSeries residual = mc_residual(l, gamma, order);
    FormalSeries classical = gamma.mapped(a.d);
    FormalSeries half = bracket_gg;
    half *= scalar(1, 2);
    classical += half;
    report.residual_classical = series_in_ideal(residual - classical, ideal);
    return report;
}

KuranishiBijectionReport kuranishi_bijection_check(const Dgla& a, const HomogeneousMap& eta,
                                                   const ArtinAlgebra& b) {
    auto bad = b.violations();
    if (!bad.empty()) throw std::invalid_argument("kuranishi_bijection_check: invalid Artin data: " + bad.front());
    KuranishiBijectionReport report;

    const int nu = b.nil_index;
    Dgla big = tensor_dgla(a, b);
    HomogeneousMap eta_b = tensor_endomorphism(eta, a.space, b);
    LInfinityStructure induced = tensor_with_artin(induce_l_infinity(a, eta, std::max(nu, 2)), b);

    auto bracket_series = [&](const FormalSeries& x, const FormalSeries& y) {
        return eval_multi_on_series(big.bracket, {x, y});
    };
    auto forward = [&](const FormalSeries& g) {
        FormalSeries corr = bracket_series(g, g).mapped(eta_b);
        corr *= scalar(1, 2);
        return g + corr;
    };
    auto newton = [&](const FormalSeries& u) {
        FormalSeries g = u;
        for (int i = 0; i <= nu + 1; ++i) {
            FormalSeries corr = bracket_series(g, g).mapped(eta_b);
            corr *= scalar(-1, 2);
            FormalSeries next = u + corr;
            if (next == g) return g;
            g = next;
        }
        throw std::logic_error("newton iteration failed to stabilize under nilpotency");
    };

    // generic degree-1 element with one even parameter per basis direction
    std::vector<int> deg1 = big.space.indices_in_degree(1);
    std::vector<Variable> svars;
    for (std::size_t i = 0; i < deg1.size(); ++i) svars.push_back({"s" + std::to_string(i + 1), 0, -1, 0});
    VarFramePtr sframe = make_frame(svars);
    std::vector<int> caps{nu};
    FormalSeries generic(big.space, sframe, caps, 1);
    for (std::size_t i = 0; i < deg1.size(); ++i)
        generic.add_term(Monomial::unit(static_cast<int>(deg1.size()), static_cast<int>(i)),
                         big.space.basis_vec(deg1[i]));

    FormalSeries u = forward(generic);
    report.roundtrip = (newton(u) == generic) && (forward(newton(generic)) == generic);

    FormalSeries residual = mc_residual(induced, generic, nu);
    FormalSeries lhs = u.mapped(big.d);
    FormalSeries rhs = residual - bracket_series(residual, generic).mapped(eta_b);
    report.forward_identity = (lhs == rhs);

    // parmetrize ker d in degree 1 and pull a generic closed element back
    QMat dmat(big.space.dim(), static_cast<int>(deg1.size()));
    for (std::size_t c = 0; c < deg1.size(); ++c) {
        Vec img = big.d.apply(big.space.basis_vec(deg1[c]));
        for (int r = 0; r < big.space.dim(); ++r) dmat.at(r, static_cast<int>(c)) = img[r];
    }
    std::vector<Vec> ker = kernel_basis(dmat);
    std::vector<Variable> kvars;
    for (std::size_t i = 0; i < ker.size(); ++i) kvars.push_back({"w" + std::to_string(i + 1), 0, -1, 0});
    if (ker.empty()) {
        report.kernel_direction = true;
    } else {
        VarFramePtr kframe = make_frame(kvars);
        FormalSeries closed(big.space, kframe, caps, 1);
        for (std::size_t i = 0; i < ker.size(); ++i) {
            Vec lift = vec_zero(big.space.dim());
            for (std::size_t c = 0; c < deg1.size(); ++c) lift[deg1[c]] = ker[i][c];
            closed.add_term(Monomial::unit(static_cast<int>(ker.size()), static_cast<int>(i)), lift);
        }
        FormalSeries pulled = newton(closed);
        report.kernel_direction = mc_residual(induced, pulled, nu).is_zero();
    }

    if (nu == 2) report.tangent_linearized = (residual == generic.mapped(big.d));
    return report;
}

FormalSeries gauge_direction(const LInfinityStructure& l, const FormalSeries& gamma, const Vec& alpha,
                             int order) {
    auto adeg = l.space().homogeneous_degree(alpha);
    if (!adeg || *adeg != 0) throw std::invalid_argument("gauge_direction: alpha must sit in degree 0");
    if (!mc_residual(l, gamma, order).is_zero())
        throw std::invalid_argument("gauge_direction: Gamma does not solve Maurer-Cartan to this order");

    const GradedSpace& space = l.space();
    const int dim = space.dim();
    std::vector<Variable> params;
    for (int i = 0; i < gamma.vars()->size(); ++i) params.push_back(gamma.vars()->var(i));
    VarFramePtr combined = coordinate_frame(space, params, true);
    std::vector<int> caps{l.arity_cap(), order};
    PolyVectorField q = to_vector_field(l, combined, caps);

    // coordinates of Gamma[1] as pure-parameter polynomials
    std::vector<GradedPoly> at_gamma;
    for (int b = 0; b < dim; ++b) {
        GradedPoly img(combined, caps);
        for (const auto& [mono, vec] : gamma.terms()) {
            if (is_zero(vec[b])) continue;
            Monomial big(combined->size());
            for (int i = 0; i < gamma.vars()->size(); ++i)
                if (mono.exponent(i)) big = big.with(dim + i, mono.exponent(i));
            img.add_term(big, vec[b]);
        }
        at_gamma.push_back(std::move(img));
    }
    for (int i = dim; i < combined->size(); ++i)
        at_gamma.push_back(GradedPoly::variable(combined, caps, i));

    FormalSeries out(space, gamma.vars(), gamma.caps(), 1);
    for (int c = 0; c < dim; ++c) {
        // [Q, Psi(alpha)]^c = sum_b alpha^b dQ^c/dx_b; the overall sign makes
        // the abelian case come out as d alpha
        GradedPoly comp(combined, caps);
        for (int bidx = 0; bidx < dim; ++bidx) {
            if (is_zero(alpha[bidx])) continue;
            comp += alpha[bidx] * q.component(c).derivative(bidx);
        }
        if (comp.is_zero()) continue;
        GradedPoly value = comp.substitute(at_gamma);
        for (const auto& [mono, coeff] : value.terms()) {
            Monomial pm(gamma.vars()->size());
            for (int i = 0; i < gamma.vars()->size(); ++i)
                if (mono.exponent(dim + i)) pm = pm.with(i, mono.exponent(dim + i));
            Vec unit = vec_zero(dim);
            unit[c] = -coeff;
            out.add_term(pm, unit);
        }
    }
    return out;
}

bool gauge_tangency_holds(const LInfinityStructure& l, const FormalSeries& gamma, const Vec& alpha,
                          int order) {
    FormalSeries x = gauge_direction(l, gamma, alpha, order);
    // extend the frame with a first-order direction parameter
    std::vector<Variable> vars;
    for (int i = 0; i < gamma.vars()->size(); ++i) vars.push_back(gamma.vars()->var(i));
    vars.push_back({"dir", 0, 1, 0});
    VarFramePtr ext = make_frame(vars);
    std::vector<int> caps{order + 1};
    const int eps = ext->size() - 1;

    FormalSeries moved = gamma.reframed(ext, caps, 0);
    FormalSeries xe = x.reframed(ext, caps, 0);
    // multiply the direction by eps
    FormalSeries eps_x(gamma.space(), ext, caps, 1);
    for (const auto& [mono, vec] : xe.terms()) eps_x.add_term(mono.with(eps, 1), vec);
    moved += eps_x;

    FormalSeries res = mc_residual(l, moved, order + 1);
    // the eps-linear part must vanish through the original order
    for (const auto& [mono, vec] : res.terms()) {
        if (mono.exponent(eps) != 1) continue;
        int torder = mono.total() - 1;
        if (torder <= order && !vec_is_zero(vec)) return false;
    }
    return true;
}

bool ModuliReport::pass() const {
    return induced_check.valid() && versal_relation && residual_zero && degeneration.pass();
}

ModuliReport moduli_report(const Dgla& a, const HodgeData& h, char mode, int order, int max_arity) {
    ModuliReport r;
    r.mode = mode;
    r.order = order;
    r.max_arity = max_arity;
    for (int deg : a.space.degrees_present()) {
        int b = h.betti(deg);
        if (b > 0) r.betti[deg] = b;
    }
    r.obstruction = obstruction_map(a, h);
    r.obstruction_zero = r.obstruction.is_zero();
    r.h2_zero = h.betti(2) == 0;
    r.mdef_equals_def = r.h2_zero;

    LInfinityStructure l = induce_l_infinity(a, h.eta, std::max(max_arity, order));
    r.induced_check = check_l_infinity(l, max_arity);

    r.frame = ParameterFrame::versal(h, mode);
    r.moduli_dim = r.frame.size();
    for (int i = 0; i < r.frame.size(); ++i) r.coordinates.push_back(r.frame.vars()->var(i).name);

    r.versal = versal_solution(a, h, r.frame, order);
    r.versal_relation = kuranishi_relation_holds(a, h, r.frame, r.versal);
    r.residual_zero = mc_residual(l, r.versal, order).is_zero();
    r.locus = kuranishi_locus(a, h, r.versal, order);
    r.degeneration = degeneration_check(l, a, r.versal, r.locus, order);
    return r;
}

}  // namespace linfty
