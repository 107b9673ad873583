#include "linfty/a_infinity.hpp"

#include <stdexcept>

#include "linfty/linalg.hpp"

namespace linfty {

AInfinityStructure::AInfinityStructure(GradedSpace space, int arity_cap)
    : space_(std::move(space)), cap_(arity_cap) {
    if (cap_ < 1) throw std::invalid_argument("arity cap must be >= 1");
}

AInfinityStructure::AInfinityStructure(const AInfinityStructure& other) {
    std::scoped_lock lock(other.mu_);
    space_ = other.space_;
    cap_ = other.cap_;
    gen_ = other.gen_;
    ops_ = other.ops_;
}

AInfinityStructure& AInfinityStructure::operator=(const AInfinityStructure& other) {
    if (this == &other) return *this;
    std::scoped_lock lock(mu_, other.mu_);
    space_ = other.space_;
    cap_ = other.cap_;
    gen_ = other.gen_;
    ops_ = other.ops_;
    return *this;
}

void AInfinityStructure::set_op(TensorMap op) {
    if (op.source() != space_ || op.target() != space_)
        throw std::invalid_argument("operation space mismatch");
    if (op.degree() != 2 - op.arity())
        throw std::invalid_argument("m_n must have degree 2-n");
    if (op.arity() > cap_) throw std::invalid_argument("operation arity beyond the cap");
    std::scoped_lock lock(mu_);
    int arity = op.arity();
    ops_.insert_or_assign(arity, std::move(op));
}

const TensorMap& AInfinityStructure::op(int arity) const {
    if (arity < 1 || arity > cap_)
        throw std::out_of_range("operation arity " + std::to_string(arity) + " outside the cap");
    {
        std::scoped_lock lock(mu_);
        auto it = ops_.find(arity);
        if (it != ops_.end()) return it->second;
    }
    TensorMap generated = gen_ ? gen_(*this, arity) : TensorMap(space_, space_, arity, 2 - arity);
    if (generated.arity() != arity || generated.degree() != 2 - arity)
        throw std::logic_error("generator returned an operation of the wrong shape");
    std::scoped_lock lock(mu_);
    auto [it, inserted] = ops_.emplace(arity, std::move(generated));
    return it->second;
}

std::vector<int> AInfinityStructure::stored_arities() const {
    std::scoped_lock lock(mu_);
    std::vector<int> out;
    for (const auto& [n, op] : ops_)
        if (!op.is_zero()) out.push_back(n);
    return out;
}

Vec associativity_defect(const AInfinityStructure& a, int n, const Tuple& tuple) {
    if (static_cast<int>(tuple.size()) != n)
        throw std::invalid_argument("associativity_defect: tuple size mismatch");
    const GradedSpace& space = a.space();
    Vec acc = vec_zero(space.dim());
    for (int l = 1; l <= n; ++l) {
        const int k = n + 1 - l;
        const TensorMap& outer = a.op(k);
        const TensorMap& inner = a.op(l);
        if (outer.is_zero() || inner.is_zero()) continue;
        for (int j = 0; j + l <= n && j <= k - 1; ++j) {
            int prefix_par = 0;
            for (int i = 0; i < j; ++i) prefix_par += space.par(tuple[i]);
            int r = l * prefix_par + j * (l - 1) + (k - 1) * l;
            Tuple mid_args(tuple.begin() + j, tuple.begin() + j + l);
            Vec mid = inner.eval_basis(mid_args);
            if (vec_is_zero(mid)) continue;
            Tuple prefix(tuple.begin(), tuple.begin() + j);
            Tuple suffix(tuple.begin() + j + l, tuple.end());
            vec_add_scaled(acc, Scalar(r & 1 ? -1 : 1), outer.eval_insert(prefix, mid, suffix));
        }
    }
    return acc;
}

StructureReport check_a_infinity(const AInfinityStructure& a, int max_arity) {
    if (max_arity > a.arity_cap()) throw std::invalid_argument("check_a_infinity: max_arity beyond the cap");
    StructureReport report;
    report.checked_arity = max_arity;
    const int dim = a.space().dim();
    for (int n = 1; n <= max_arity; ++n) {
        DefectList list;
        Tuple t(n, 0);
        while (true) {
            Vec defect = associativity_defect(a, n, t);
            if (!vec_is_zero(defect)) list.push_back({t, std::move(defect)});
            int pos = n - 1;
            while (pos >= 0 && t[pos] == dim - 1) t[pos--] = 0;
            if (pos < 0) break;
            ++t[pos];
        }
        report.defects.emplace(n, std::move(list));
    }
    return report;
}

LInfinityStructure symmetrize(const AInfinityStructure& a, int max_arity) {
    if (max_arity > a.arity_cap()) throw std::invalid_argument("symmetrize: max_arity beyond the cap");
    const GradedSpace& space = a.space();
    LInfinityStructure l(space, max_arity);
    for (int n = 1; n <= max_arity; ++n) {
        const TensorMap& m = a.op(n);
        MultiMap sym(space, space, n, 2 - n);
        if (!m.is_zero()) {
            auto perms = all_permutations(n);
            for (const Tuple& t : canonical_tuples(space, n)) {
                std::vector<int> degrees(t.size());
                for (std::size_t i = 0; i < t.size(); ++i) degrees[i] = space.degree(t[i]);
                Vec acc = vec_zero(space.dim());
                for (const Perm& p : perms) {
                    Tuple permuted(n);
                    for (int i = 0; i < n; ++i) permuted[i] = t[p[i]];
                    vec_add_scaled(acc, Scalar(wedge_sign(p, degrees)), m.eval_basis(permuted));
                }
                if (!vec_is_zero(acc)) sym.set(t, std::move(acc));
            }
        }
        l.set_op(std::move(sym));
    }
    return l;
}

}  // namespace linfty
