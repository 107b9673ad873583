#include "linfty/multi_map.hpp"

#include <stdexcept>

#include "linfty/linalg.hpp"

namespace linfty {

TupleNorm normalize_tuple(const GradedSpace& space, Tuple t) {
    TupleNorm out;
    int s = 0;
    // insertion sort, counting the parity picked up by each adjacent swap:
    // swapping generators a, b costs -(-1)^{par(a) par(b)}
    for (std::size_t i = 1; i < t.size(); ++i) {
        for (std::size_t j = i; j > 0 && t[j - 1] > t[j]; --j) {
            s += 1 + space.par(t[j - 1]) * space.par(t[j]);
            std::swap(t[j - 1], t[j]);
        }
    }
    for (std::size_t i = 1; i < t.size(); ++i) {
        if (t[i] == t[i - 1] && space.par(t[i]) == 0) {
            out.zero = true;
            return out;
        }
    }
    out.tuple = std::move(t);
    out.sign = (s & 1) ? -1 : 1;
    return out;
}

std::vector<Tuple> canonical_tuples(const GradedSpace& space, int arity) {
    std::vector<Tuple> out;
    if (arity < 1 || space.dim() == 0) return out;
    Tuple t;
    auto rec = [&](auto&& self, int next_min) -> void {
        if (static_cast<int>(t.size()) == arity) {
            out.push_back(t);
            return;
        }
        for (int i = next_min; i < space.dim(); ++i) {
            if (!t.empty() && t.back() == i && space.par(i) == 0) continue;  // killed by antisymmetry
            t.push_back(i);
            self(self, i);
            t.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

MultiMap::MultiMap(GradedSpace source, GradedSpace target, int arity, int degree)
    : source_(std::move(source)), target_(std::move(target)), arity_(arity), degree_(degree) {
    if (arity < 1) throw std::invalid_argument("MultiMap arity must be >= 1");
}

MultiMap MultiMap::zero(const GradedSpace& space, int arity, int degree) {
    return MultiMap(space, space, arity, degree);
}

void MultiMap::set(const Tuple& canonical, Vec value) {
    if (static_cast<int>(canonical.size()) != arity_) throw std::invalid_argument("MultiMap::set: arity mismatch");
    if (static_cast<int>(value.size()) != target_.dim()) throw std::invalid_argument("MultiMap::set: value size mismatch");
    TupleNorm norm = normalize_tuple(source_, canonical);
    if (norm.zero || norm.tuple != canonical)
        throw std::invalid_argument("MultiMap::set: tuple is not canonical");
    if (vec_is_zero(value)) {
        values_.erase(canonical);
        return;
    }
    int want = degree_;
    for (int i : canonical) want += source_.degree(i);
    for (int j = 0; j < target_.dim(); ++j)
        if (!linfty::is_zero(value[j]) && target_.degree(j) != want)
            throw std::invalid_argument("MultiMap::set: value not homogeneous of the required degree");
    values_[canonical] = std::move(value);
}

void MultiMap::add_entry(const Tuple& any, int target_index, const Scalar& coeff) {
    if (linfty::is_zero(coeff)) return;
    TupleNorm norm = normalize_tuple(source_, any);
    if (norm.zero)
        throw std::invalid_argument("MultiMap::add_entry: tuple is annihilated by antisymmetry");
    Vec v = values_.count(norm.tuple) ? values_[norm.tuple] : vec_zero(target_.dim());
    v[target_index] += Scalar(norm.sign) * coeff;
    set(norm.tuple, std::move(v));
}

Vec MultiMap::eval_basis(const Tuple& any) const {
    if (static_cast<int>(any.size()) != arity_) throw std::invalid_argument("MultiMap::eval_basis: arity mismatch");
    TupleNorm norm = normalize_tuple(source_, any);
    if (norm.zero) return vec_zero(target_.dim());
    auto it = values_.find(norm.tuple);
    if (it == values_.end()) return vec_zero(target_.dim());
    return norm.sign == 1 ? it->second : vec_scale(Scalar(-1), it->second);
}

Vec MultiMap::eval(const std::vector<Vec>& args) const {
    if (static_cast<int>(args.size()) != arity_) throw std::invalid_argument("MultiMap::eval: arity mismatch");
    for (const Vec& a : args)
        if (static_cast<int>(a.size()) != source_.dim()) throw std::invalid_argument("MultiMap::eval: argument size mismatch");
    Vec acc = vec_zero(target_.dim());
    Tuple idx(arity_);
    Scalar c;
    auto rec = [&](auto&& self, int slot, const Scalar& coeff) -> void {
        if (slot == arity_) {
            Vec v = eval_basis(idx);
            vec_add_scaled(acc, coeff, v);
            return;
        }
        for (int i = 0; i < source_.dim(); ++i) {
            if (linfty::is_zero(args[slot][i])) continue;
            idx[slot] = i;
            self(self, slot + 1, Scalar(coeff * args[slot][i]));
        }
    };
    rec(rec, 0, Scalar(1));
    return acc;
}

Vec MultiMap::eval_front(const Vec& head, const Tuple& rest) const {
    if (static_cast<int>(rest.size()) + 1 != arity_) throw std::invalid_argument("MultiMap::eval_front: arity mismatch");
    if (static_cast<int>(head.size()) != source_.dim()) throw std::invalid_argument("MultiMap::eval_front: head size mismatch");
    Vec acc = vec_zero(target_.dim());
    Tuple idx(arity_);
    std::copy(rest.begin(), rest.end(), idx.begin() + 1);
    for (int i = 0; i < source_.dim(); ++i) {
        if (linfty::is_zero(head[i])) continue;
        idx[0] = i;
        vec_add_scaled(acc, head[i], eval_basis(idx));
    }
    return acc;
}

void MultiMap::add_scaled(const MultiMap& other, const Scalar& c) {
    if (other.arity_ != arity_ || other.degree_ != degree_ || other.source_ != source_ || other.target_ != target_)
        throw std::invalid_argument("MultiMap::add_scaled: shape mismatch");
    for (const auto& [t, v] : other.values_) {
        Vec cur = values_.count(t) ? values_[t] : vec_zero(target_.dim());
        vec_add_scaled(cur, c, v);
        set(t, std::move(cur));
    }
}

bool MultiMap::operator==(const MultiMap& other) const {
    return arity_ == other.arity_ && degree_ == other.degree_ && source_ == other.source_ &&
           target_ == other.target_ && values_ == other.values_;
}

TensorMap::TensorMap(GradedSpace source, GradedSpace target, int arity, int degree)
    : source_(std::move(source)), target_(std::move(target)), arity_(arity), degree_(degree) {
    if (arity < 1) throw std::invalid_argument("TensorMap arity must be >= 1");
}

void TensorMap::set(const Tuple& t, Vec value) {
    if (static_cast<int>(t.size()) != arity_) throw std::invalid_argument("TensorMap::set: arity mismatch");
    if (static_cast<int>(value.size()) != target_.dim()) throw std::invalid_argument("TensorMap::set: value size mismatch");
    for (int i : t)
        if (i < 0 || i >= source_.dim()) throw std::invalid_argument("TensorMap::set: index out of range");
    if (vec_is_zero(value)) {
        values_.erase(t);
        return;
    }
    int want = degree_;
    for (int i : t) want += source_.degree(i);
    for (int j = 0; j < target_.dim(); ++j)
        if (!linfty::is_zero(value[j]) && target_.degree(j) != want)
            throw std::invalid_argument("TensorMap::set: value not homogeneous of the required degree");
    values_[t] = std::move(value);
}

void TensorMap::add_entry(const Tuple& t, int target_index, const Scalar& coeff) {
    if (linfty::is_zero(coeff)) return;
    Vec v = values_.count(t) ? values_[t] : vec_zero(target_.dim());
    v[target_index] += coeff;
    set(t, std::move(v));
}

Vec TensorMap::eval_basis(const Tuple& t) const {
    if (static_cast<int>(t.size()) != arity_) throw std::invalid_argument("TensorMap::eval_basis: arity mismatch");
    auto it = values_.find(t);
    if (it == values_.end()) return vec_zero(target_.dim());
    return it->second;
}

Vec TensorMap::eval(const std::vector<Vec>& args) const {
    if (static_cast<int>(args.size()) != arity_) throw std::invalid_argument("TensorMap::eval: arity mismatch");
    Vec acc = vec_zero(target_.dim());
    Tuple idx(arity_);
    auto rec = [&](auto&& self, int slot, const Scalar& coeff) -> void {
        if (slot == arity_) {
            vec_add_scaled(acc, coeff, eval_basis(idx));
            return;
        }
        for (int i = 0; i < source_.dim(); ++i) {
            if (linfty::is_zero(args[slot][i])) continue;
            idx[slot] = i;
            self(self, slot + 1, Scalar(coeff * args[slot][i]));
        }
    };
    rec(rec, 0, Scalar(1));
    return acc;
}

Vec TensorMap::eval_insert(const Tuple& prefix, const Vec& mid, const Tuple& suffix) const {
    if (static_cast<int>(prefix.size() + suffix.size()) + 1 != arity_)
        throw std::invalid_argument("TensorMap::eval_insert: arity mismatch");
    Vec acc = vec_zero(target_.dim());
    Tuple idx;
    idx.reserve(arity_);
    idx.insert(idx.end(), prefix.begin(), prefix.end());
    idx.push_back(0);
    idx.insert(idx.end(), suffix.begin(), suffix.end());
    const std::size_t slot = prefix.size();
    for (int i = 0; i < source_.dim(); ++i) {
        if (linfty::is_zero(mid[i])) continue;
        idx[slot] = i;
        vec_add_scaled(acc, mid[i], eval_basis(idx));
    }
    return acc;
}

bool TensorMap::operator==(const TensorMap& other) const {
    return arity_ == other.arity_ && degree_ == other.degree_ && source_ == other.source_ &&
           target_ == other.target_ && values_ == other.values_;
}

}  // namespace linfty
