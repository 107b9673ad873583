#include "linfty/vector_field.hpp"

#include <stdexcept>

#include "linfty/linalg.hpp"

namespace linfty {

PolyVectorField::PolyVectorField(GradedSpace space, VarFramePtr frame, std::vector<int> caps, int degree)
    : space_(std::move(space)), frame_(std::move(frame)), caps_(std::move(caps)), degree_(degree) {
    if (!frame_ || frame_->size() < space_.dim())
        throw std::invalid_argument("PolyVectorField: frame must contain one variable per coordinate");
    for (int a = 0; a < space_.dim(); ++a)
        if (frame_->degree(a) != 1 - space_.degree(a))
            throw std::invalid_argument("PolyVectorField: coordinate degree must be 1 - deg(e_a)");
    components_.assign(space_.dim(), GradedPoly(frame_, caps_));
}

void PolyVectorField::set_component(int a, GradedPoly p) {
    if (a < 0 || a >= coords()) throw std::invalid_argument("component index out of range");
    if (!(*p.frame() == *frame_)) throw std::invalid_argument("component frame mismatch");
    auto deg = p.graded_degree();
    if (!p.is_zero() && (!deg || *deg != frame_->degree(a) + degree_))
        throw std::invalid_argument("component degree inconsistent with the field degree");
    components_[a] = std::move(p);
}

bool PolyVectorField::is_zero() const {
    for (const auto& c : components_)
        if (!c.is_zero()) return false;
    return true;
}

GradedPoly PolyVectorField::apply(const GradedPoly& f) const {
    GradedPoly out(frame_, caps_);
    for (int a = 0; a < coords(); ++a) {
        if (components_[a].is_zero()) continue;
        GradedPoly df = f.derivative(a);
        if (df.is_zero()) continue;
        out += components_[a] * df;
    }
    return out;
}

PolyVectorField PolyVectorField::substituted(const std::vector<GradedPoly>& images) const {
    PolyVectorField out = *this;
    for (int a = 0; a < coords(); ++a) out.components_[a] = components_[a].substitute(images);
    return out;
}

std::vector<GradedPoly> PolyVectorField::value_at_origin() const {
    std::vector<GradedPoly> out;
    std::vector<bool> keep(frame_->size(), true);
    for (int a = 0; a < coords(); ++a) keep[a] = false;
    for (int a = 0; a < coords(); ++a) out.push_back(components_[a].drop_variables(keep));
    return out;
}

VarFramePtr coordinate_frame(const GradedSpace& space, const std::vector<Variable>& params,
                             bool with_param_group) {
    std::vector<Variable> vars;
    for (int a = 0; a < space.dim(); ++a)
        vars.push_back({"x_" + space.label(a), 1 - space.degree(a), -1, 0});
    for (Variable p : params) {
        p.group = 1;
        vars.push_back(std::move(p));
    }
    return make_frame(std::move(vars), with_param_group ? 2 : 1);
}

int hat_sign(const GradedSpace& space, const Tuple& tuple) {
    const int n = static_cast<int>(tuple.size());
    int e = n;
    for (int i = 0; i < n; ++i) e += (n - 1 - i) * space.par(tuple[i]);
    return (e & 1) ? -1 : 1;
}

namespace {

Scalar multiplicity_factorial(const Tuple& tuple) {
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

Monomial tuple_monomial(const VarFrame& frame, const Tuple& tuple) {
    Monomial m(frame.size());
    for (int i : tuple) m = m.with(i, 1);
    return m;
}

}  // namespace

PolyVectorField to_vector_field(const LInfinityStructure& l, int cap) {
    return to_vector_field(l, coordinate_frame(l.space()), std::vector<int>{cap});
}

PolyVectorField to_vector_field(const LInfinityStructure& l, VarFramePtr frame, std::vector<int> caps) {
    const GradedSpace& space = l.space();
    PolyVectorField q(space, frame, caps, 1);
    const int cap = caps.at(0);
    if (cap > l.arity_cap()) throw std::invalid_argument("to_vector_field: cap exceeds available operations");
    std::vector<GradedPoly> comps(space.dim(), GradedPoly(frame, caps));
    for (int n = 1; n <= cap; ++n) {
        const MultiMap& op = l.op(n);
        for (const auto& [tuple, value] : op.entries()) {
            Scalar base = Scalar(hat_sign(space, tuple)) / multiplicity_factorial(tuple);
            Monomial mono = tuple_monomial(*frame, tuple);
            for (int a = 0; a < space.dim(); ++a)
                if (!is_zero(value[a])) comps[a].add_term(mono, base * value[a]);
        }
    }
    for (int a = 0; a < space.dim(); ++a) q.set_component(a, std::move(comps[a]));
    return q;
}

LInfinityStructure from_vector_field(const PolyVectorField& q) {
    const GradedSpace& space = q.space();
    const VarFrame& frame = *q.frame();
    if (frame.size() != space.dim())
        throw std::invalid_argument("from_vector_field: field carries parameter variables");
    const int cap = q.caps().at(0);
    LInfinityStructure l(space, cap);
    std::map<int, MultiMap> ops;
    for (int n = 1; n <= cap; ++n) ops.emplace(n, MultiMap(space, space, n, 2 - n));
    for (int a = 0; a < space.dim(); ++a) {
        for (const auto& [mono, c] : q.component(a).terms()) {
            Tuple tuple;
            for (int i = 0; i < frame.size(); ++i)
                for (int e = 0; e < mono.exponent(i); ++e) tuple.push_back(i);
            const int n = static_cast<int>(tuple.size());
            if (n < 1 || n > cap) continue;
            Scalar value = c * multiplicity_factorial(tuple) * Scalar(hat_sign(space, tuple));
            ops.at(n).add_entry(tuple, a, value);
        }
    }
    for (auto& [n, op] : ops) l.set_op(std::move(op));
    return l;
}

PolyVectorField square_vector_field(const PolyVectorField& q) {
    PolyVectorField s(q.space(), q.frame(), q.caps(), 2 * q.degree());
    for (int a = 0; a < q.coords(); ++a) s.set_component(a, q.apply(q.component(a)));
    return s;
}

}  // namespace linfty
