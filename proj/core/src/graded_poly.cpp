#include "linfty/graded_poly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace linfty {

VarFrame::VarFrame(std::vector<Variable> vars, int min_groups) : vars_(std::move(vars)) {
    if (min_groups < 1) throw std::invalid_argument("min_groups must be >= 1");
    groups_ = min_groups;
    std::set<std::string> seen;
    for (auto& v : vars_) {
        if (v.name.empty()) throw std::invalid_argument("empty variable name");
        if (!seen.insert(v.name).second) throw std::invalid_argument("duplicate variable '" + v.name + "'");
        if (v.group < 0) throw std::invalid_argument("negative variable group");
        if (parity(v.degree) == 1) v.max_exponent = 1;  // odd squares vanish
        groups_ = std::max(groups_, v.group + 1);
    }
}

std::optional<int> VarFrame::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (vars_[i].name == name) return i;
    return std::nullopt;
}

bool VarFrame::operator==(const VarFrame& other) const {
    if (size() != other.size()) return false;
    for (int i = 0; i < size(); ++i) {
        const Variable &a = vars_[i], &b = other.vars_[i];
        if (a.name != b.name || a.degree != b.degree || a.max_exponent != b.max_exponent || a.group != b.group)
            return false;
    }
    return true;
}

VarFramePtr make_frame(std::vector<Variable> vars, int min_groups) {
    return std::make_shared<const VarFrame>(std::move(vars), min_groups);
}

Monomial Monomial::unit(int nvars, int var) {
    Monomial m(nvars);
    m.exp_[var] = 1;
    return m;
}

int Monomial::total() const {
    int t = 0;
    for (int e : exp_) t += e;
    return t;
}

int Monomial::group_total(const VarFrame& frame, int group) const {
    int t = 0;
    for (int i = 0; i < nvars(); ++i)
        if (frame.var(i).group == group) t += exp_[i];
    return t;
}

int Monomial::graded_degree(const VarFrame& frame) const {
    int d = 0;
    for (int i = 0; i < nvars(); ++i) d += exp_[i] * frame.degree(i);
    return d;
}

Monomial Monomial::with(int var, int delta) const {
    Monomial m = *this;
    m.exp_[var] += delta;
    return m;
}

std::string Monomial::str(const VarFrame& frame) const {
    std::string out;
    for (int i = 0; i < nvars(); ++i) {
        if (exp_[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += frame.var(i).name;
        if (exp_[i] > 1) out += "^" + std::to_string(exp_[i]);
    }
    return out.empty() ? "1" : out;
}

bool Monomial::operator<(const Monomial& other) const {
    int ta = total(), tb = other.total();
    if (ta != tb) return ta < tb;
    return exp_ < other.exp_;
}

std::optional<MonomialProduct> mono_mul(const VarFrame& frame, const Monomial& a, const Monomial& b) {
    MonomialProduct out;
    out.mono = a;
    int swaps = 0;
    // each odd variable of b moves left past the odd variables of a carrying
    // a larger frame index
    std::vector<int> odd_suffix(frame.size() + 1, 0);
    for (int i = frame.size() - 1; i >= 0; --i)
        odd_suffix[i] = odd_suffix[i + 1] + (frame.par(i) ? a.exponent(i) : 0);
    for (int j = 0; j < frame.size(); ++j) {
        int e = b.exponent(j);
        if (e == 0) continue;
        if (frame.par(j)) swaps += odd_suffix[j + 1];
        int total = a.exponent(j) + e;
        if (frame.var(j).max_exponent >= 0 && total > frame.var(j).max_exponent) return std::nullopt;
        out.mono = out.mono.with(j, e);
    }
    out.sign = (swaps & 1) ? -1 : 1;
    return out;
}

GradedPoly::GradedPoly(VarFramePtr frame, std::vector<int> caps)
    : frame_(std::move(frame)), caps_(std::move(caps)) {
    if (!frame_) throw std::invalid_argument("GradedPoly without a frame");
    if (static_cast<int>(caps_.size()) != frame_->groups())
        throw std::invalid_argument("GradedPoly: one truncation cap per variable group required");
    for (int c : caps_)
        if (c < 0) throw std::invalid_argument("negative truncation cap");
}

GradedPoly::GradedPoly(VarFramePtr frame, int cap) : GradedPoly(frame, std::vector<int>{cap}) {
    if (frame_->groups() != 1) throw std::invalid_argument("single-cap constructor needs a single-group frame");
}

GradedPoly GradedPoly::constant(VarFramePtr frame, std::vector<int> caps, const Scalar& c) {
    GradedPoly p(std::move(frame), std::move(caps));
    p.add_term(Monomial(p.frame_->size()), c);
    return p;
}

GradedPoly GradedPoly::variable(VarFramePtr frame, std::vector<int> caps, int var) {
    GradedPoly p(std::move(frame), std::move(caps));
    if (var < 0 || var >= p.frame_->size()) throw std::invalid_argument("variable index out of range");
    p.add_term(Monomial::unit(p.frame_->size(), var), Scalar(1));
    return p;
}

Scalar GradedPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void GradedPoly::add_term(const Monomial& m, const Scalar& c) {
    if (m.nvars() != frame_->size()) throw std::invalid_argument("monomial frame mismatch");
    if (linfty::is_zero(c)) return;
    for (int g = 0; g < frame_->groups(); ++g)
        if (m.group_total(*frame_, g) > caps_[g]) return;
    for (int i = 0; i < frame_->size(); ++i) {
        int cap = frame_->var(i).max_exponent;
        if (cap >= 0 && m.exponent(i) > cap) return;
    }
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (linfty::is_zero(it->second)) terms_.erase(it);
    }
}

std::optional<int> GradedPoly::graded_degree() const {
    std::optional<int> deg;
    for (const auto& [m, c] : terms_) {
        int d = m.graded_degree(*frame_);
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& other) {
    if (!(*frame_ == *other.frame_)) throw std::invalid_argument("polynomial frame mismatch");
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& other) {
    if (!(*frame_ == *other.frame_)) throw std::invalid_argument("polynomial frame mismatch");
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

GradedPoly& GradedPoly::operator*=(const Scalar& c) {
    if (linfty::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, q] : terms_) q *= c;
    return *this;
}

GradedPoly GradedPoly::derivative(int var) const {
    if (var < 0 || var >= frame_->size()) throw std::invalid_argument("variable index out of range");
    GradedPoly out(frame_, caps_);
    const int pv = frame_->par(var);
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(var);
        if (e == 0) continue;
        int sign_exp = 0;
        if (pv) {
            for (int i = 0; i < var; ++i) sign_exp += m.exponent(i) * frame_->par(i);
        }
        Scalar factor = Scalar(e) * c;
        if (sign_exp & 1) factor = -factor;
        out.add_term(m.with(var, -1), factor);
    }
    return out;
}

GradedPoly GradedPoly::substitute(const std::vector<GradedPoly>& images) const {
    if (static_cast<int>(images.size()) != frame_->size())
        throw std::invalid_argument("substitute: one image per variable required");
    for (int i = 0; i < frame_->size(); ++i) {
        auto d = images[i].graded_degree();
        if (!images[i].is_zero() && (!d || *d != frame_->degree(i)))
            throw std::invalid_argument("substitute: image degree mismatch at variable " + frame_->var(i).name);
    }
    GradedPoly out(frame_, caps_);
    for (const auto& [m, c] : terms_) {
        GradedPoly term = GradedPoly::constant(frame_, caps_, c);
        for (int i = 0; i < frame_->size() && !term.is_zero(); ++i)
            for (int e = 0; e < m.exponent(i); ++e) term = term * images[i];
        out += term;
    }
    return out;
}

GradedPoly GradedPoly::drop_variables(const std::vector<bool>& keep) const {
    if (static_cast<int>(keep.size()) != frame_->size()) throw std::invalid_argument("drop_variables: size mismatch");
    GradedPoly out(frame_, caps_);
    for (const auto& [m, c] : terms_) {
        bool ok = true;
        for (int i = 0; i < frame_->size() && ok; ++i)
            if (!keep[i] && m.exponent(i) > 0) ok = false;
        if (ok) out.add_term(m, c);
    }
    return out;
}

std::string GradedPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        Scalar a = c;
        if (out.empty()) {
            if (sgn(a) < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += sgn(a) < 0 ? " - " : " + ";
            if (sgn(a) < 0) a = -a;
        }
        std::string ms = m.str(*frame_);
        if (ms == "1")
            out += scalar_str(a);
        else if (a == 1)
            out += ms;
        else
            out += scalar_str(a) + "*" + ms;
    }
    return out;
}

bool GradedPoly::operator==(const GradedPoly& other) const {
    return *frame_ == *other.frame_ && terms_ == other.terms_;
}

std::vector<Monomial> all_monomials(const VarFrame& frame, const std::vector<int>& caps) {
    std::vector<Monomial> out;
    Monomial m(frame.size());
    auto ok = [&](const Monomial& cand) {
        for (int g = 0; g < frame.groups(); ++g)
            if (cand.group_total(frame, g) > caps[g]) return false;
        return true;
    };
    auto rec = [&](auto&& self, int var) -> void {
        if (var == frame.size()) {
            out.push_back(m);
            return;
        }
        int hi = frame.var(var).max_exponent;
        for (int e = 0;; ++e) {
            if (hi >= 0 && e > hi) break;
            m = m.with(var, e);
            if (!ok(m)) {
                m = m.with(var, -e);
                break;
            }
            self(self, var + 1);
            m = m.with(var, -e);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

GradedPoly operator+(GradedPoly a, const GradedPoly& b) {
    a += b;
    return a;
}

GradedPoly operator-(GradedPoly a, const GradedPoly& b) {
    a -= b;
    return a;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
    if (!(*a.frame() == *b.frame())) throw std::invalid_argument("polynomial frame mismatch");
    std::vector<int> caps(a.caps().size());
    for (std::size_t g = 0; g < caps.size(); ++g) caps[g] = std::min(a.caps()[g], b.caps()[g]);
    GradedPoly out(a.frame(), caps);
    const VarFrame& frame = *a.frame();
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            bool over = false;
            for (std::size_t g = 0; g < caps.size() && !over; ++g)
                if (ma.group_total(frame, static_cast<int>(g)) + mb.group_total(frame, static_cast<int>(g)) >
                    caps[g])
                    over = true;
            if (over) continue;
            auto prod = mono_mul(frame, ma, mb);
            if (!prod) continue;
            Scalar c = ca * cb;
            if (prod->sign < 0) c = -c;
            out.add_term(prod->mono, c);
        }
    }
    return out;
}

GradedPoly operator*(const Scalar& c, GradedPoly p) {
    p *= c;
    return p;
}

}  // namespace linfty
