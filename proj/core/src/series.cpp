#include "linfty/series.hpp"

#include <stdexcept>

#include "linfty/linalg.hpp"

namespace linfty {

ParameterFrame ParameterFrame::versal(const HodgeData& hodge, char mode) {
    if (mode != '0' && mode != 'Z') throw std::invalid_argument("versal frame mode must be '0' or 'Z'");
    ParameterFrame out;
    out.mode_ = mode;
    std::vector<Variable> vars;
    int k = 0;
    for (const Harmonic& h : hodge.harmonics) {
        if (mode == '0' && h.degree != 1) continue;
        ++k;
        vars.push_back({"t" + std::to_string(k), 1 - h.degree, -1, 0});
        out.harmonics_.push_back(h);
    }
    out.vars_ = make_frame(std::move(vars));
    return out;
}

ParameterFrame ParameterFrame::generic(std::vector<Variable> vars) {
    ParameterFrame out;
    out.mode_ = 'g';
    out.vars_ = make_frame(std::move(vars));
    return out;
}

FormalSeries::FormalSeries(GradedSpace space, VarFramePtr vars, std::vector<int> caps, int degree)
    : space_(std::move(space)), vars_(std::move(vars)), caps_(std::move(caps)), degree_(degree) {
    if (!vars_) throw std::invalid_argument("FormalSeries without a parameter frame");
    if (static_cast<int>(caps_.size()) != vars_->groups())
        throw std::invalid_argument("FormalSeries: one cap per variable group required");
}

FormalSeries FormalSeries::constant(const GradedSpace& space, VarFramePtr vars, std::vector<int> caps,
                                    const Vec& v) {
    auto deg = space.homogeneous_degree(v);
    if (!deg) throw std::invalid_argument("FormalSeries::constant needs a homogeneous nonzero vector");
    FormalSeries s(space, std::move(vars), std::move(caps), *deg);
    s.add_term(Monomial(s.vars_->size()), v);
    return s;
}

void FormalSeries::add_term(const Monomial& m, const Vec& v) {
    if (m.nvars() != vars_->size()) throw std::invalid_argument("FormalSeries: monomial frame mismatch");
    if (static_cast<int>(v.size()) != space_.dim()) throw std::invalid_argument("FormalSeries: vector size mismatch");
    for (int g = 0; g < vars_->groups(); ++g)
        if (m.group_total(*vars_, g) > caps_[g]) return;
    for (int i = 0; i < vars_->size(); ++i) {
        int cap = vars_->var(i).max_exponent;
        if (cap >= 0 && m.exponent(i) > cap) return;
    }
    if (vec_is_zero(v)) return;
    int mdeg = m.graded_degree(*vars_);
    for (int j = 0; j < space_.dim(); ++j)
        if (!linfty::is_zero(v[j]) && space_.degree(j) + mdeg != degree_)
            throw std::invalid_argument("FormalSeries: term violates homogeneity");
    auto [it, inserted] = terms_.emplace(m, v);
    if (!inserted) {
        it->second = vec_add(it->second, v);
    }
    if (vec_is_zero(it->second)) terms_.erase(it);
}

Vec FormalSeries::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? vec_zero(space_.dim()) : it->second;
}

int FormalSeries::min_order() const {
    int best = 0;
    bool first = true;
    for (const auto& [m, v] : terms_) {
        if (first || m.total() < best) best = m.total();
        first = false;
    }
    return best;
}

FormalSeries FormalSeries::operator-() const {
    FormalSeries s = *this;
    for (auto& [m, v] : s.terms_) v = vec_scale(Scalar(-1), v);
    return s;
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& other) {
    if (!(*vars_ == *other.vars_) || space_ != other.space_)
        throw std::invalid_argument("FormalSeries sum: frame or space mismatch");
    if (!other.terms_.empty() && !terms_.empty() && degree_ != other.degree_)
        throw std::invalid_argument("FormalSeries sum: degree mismatch");
    if (terms_.empty()) degree_ = other.degree_;
    for (const auto& [m, v] : other.terms_) add_term(m, v);
    return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& other) {
    *this += -other;
    return *this;
}

FormalSeries& FormalSeries::operator*=(const Scalar& c) {
    if (linfty::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v = vec_scale(c, v);
    return *this;
}

FormalSeries FormalSeries::mapped(const HomogeneousMap& f) const {
    if (f.source() != space_) throw std::invalid_argument("FormalSeries::mapped: space mismatch");
    FormalSeries out(f.target(), vars_, caps_, degree_ + f.degree());
    for (const auto& [m, v] : terms_) {
        Vec fv = f.apply(v);
        if (!vec_is_zero(fv)) out.add_term(m, fv);
    }
    return out;
}

FormalSeries FormalSeries::band(int order) const {
    FormalSeries out(space_, vars_, caps_, degree_);
    for (const auto& [m, v] : terms_)
        if (m.total() == order) out.add_term(m, v);
    return out;
}

GradedPoly FormalSeries::coordinate_poly(int index) const {
    GradedPoly p(vars_, caps_);
    for (const auto& [m, v] : terms_)
        if (!linfty::is_zero(v[index])) p.add_term(m, v[index]);
    return p;
}

FormalSeries FormalSeries::reframed(VarFramePtr vars, std::vector<int> caps, int var_offset) const {
    for (int i = 0; i < vars_->size(); ++i) {
        const Variable& a = vars_->var(i);
        const Variable& b = vars->var(var_offset + i);
        if (a.name != b.name || a.degree != b.degree)
            throw std::invalid_argument("FormalSeries::reframed: variables do not embed");
    }
    FormalSeries out(space_, vars, std::move(caps), degree_);
    for (const auto& [m, v] : terms_) {
        Monomial big(vars->size());
        for (int i = 0; i < vars_->size(); ++i)
            if (m.exponent(i)) big = big.with(var_offset + i, m.exponent(i));
        out.add_term(big, v);
    }
    return out;
}

std::string FormalSeries::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, v] : terms_) {
        if (!out.empty()) out += " + ";
        std::string ms = m.str(*vars_);
        out += "(" + space_.vec_str(v) + ")";
        if (ms != "1") out += "*" + ms;
    }
    return out;
}

bool FormalSeries::operator==(const FormalSeries& other) const {
    return space_ == other.space_ && *vars_ == *other.vars_ && terms_ == other.terms_;
}

FormalSeries operator+(FormalSeries a, const FormalSeries& b) {
    a += b;
    return a;
}

FormalSeries operator-(FormalSeries a, const FormalSeries& b) {
    a -= b;
    return a;
}

FormalSeries operator*(const Scalar& c, FormalSeries s) {
    s *= c;
    return s;
}

FormalSeries eval_multi_on_series(const MultiMap& m, const std::vector<FormalSeries>& args) {
    if (static_cast<int>(args.size()) != m.arity())
        throw std::invalid_argument("eval_multi_on_series: arity mismatch");
    const VarFramePtr& vars = args.front().vars();
    std::vector<int> caps = args.front().caps();
    int degree = m.degree();
    for (const auto& a : args) {
        if (!(*a.vars() == *vars) || a.space() != m.source())
            throw std::invalid_argument("eval_multi_on_series: frame or space mismatch");
        degree += a.degree();
    }
    FormalSeries out(m.target(), vars, caps, degree);
    if (m.is_zero()) return out;

    struct Pick {
        const Monomial* mono;
        const Vec* vec;
        int scalar_par;
        int vec_par;
    };
    std::vector<Pick> picks(args.size());
    const int n = m.arity();

    auto rec = [&](auto&& self, int slot) -> void {
        if (slot == n) {
            // product of the coefficient monomials, with interleave signs:
            // the scalar of slot i crosses the vector parts of slots > i
            int sign_exp = 0;
            int trailing_vec_par = 0;
            for (int i = n - 1; i >= 0; --i) {
                sign_exp += picks[i].scalar_par * trailing_vec_par;
                trailing_vec_par = (trailing_vec_par + picks[i].vec_par) & 1;
            }
            Monomial prod(vars->size());
            int msign = 1;
            bool dead = false;
            for (int i = 0; i < n && !dead; ++i) {
                auto p = mono_mul(*vars, prod, *picks[i].mono);
                if (!p) {
                    dead = true;
                    break;
                }
                prod = std::move(p->mono);
                msign *= p->sign;
            }
            if (dead) return;
            for (int g = 0; g < vars->groups(); ++g)
                if (prod.group_total(*vars, g) > caps[g]) return;
            std::vector<Vec> vecs;
            vecs.reserve(n);
            for (int i = 0; i < n; ++i) vecs.push_back(*picks[i].vec);
            Vec val = m.eval(vecs);
            if (vec_is_zero(val)) return;
            Scalar c(msign * ((sign_exp & 1) ? -1 : 1));
            out.add_term(prod, vec_scale(c, val));
            return;
        }
        for (const auto& [mono, vec] : args[slot].terms()) {
            int p = mono.par(*vars);
            picks[slot] = {&mono, &vec, p, parity(args[slot].degree() - mono.graded_degree(*vars))};
            self(self, slot + 1);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace linfty
