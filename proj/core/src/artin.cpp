#include "linfty/artin.hpp"

#include <stdexcept>

#include "linfty/linalg.hpp"

namespace linfty {

Vec ArtinAlgebra::basis_vec(int i) const {
    Vec v = vec_zero(dim());
    v[i] = 1;
    return v;
}

Vec ArtinAlgebra::mul(const Vec& a, const Vec& b) const {
    Vec out = vec_zero(dim());
    for (int i = 0; i < dim(); ++i) {
        if (is_zero(a[i])) continue;
        for (int j = 0; j < dim(); ++j) {
            if (is_zero(b[j])) continue;
            vec_add_scaled(out, a[i] * b[j], table[i][j]);
        }
    }
    return out;
}

std::vector<std::string> ArtinAlgebra::violations() const {
    std::vector<std::string> bad;
    const int n = dim();
    if (static_cast<int>(degrees.size()) != n || static_cast<int>(table.size()) != n)
        return {"table shape mismatch"};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Vec& v = table[i][j];
            for (int k = 0; k < n; ++k)
                if (!is_zero(v[k]) && degrees[k] != degrees[i] + degrees[j])
                    bad.push_back("degree of " + labels[i] + "*" + labels[j]);
            int sign = parity(degrees[i]) * parity(degrees[j]) ? -1 : 1;
            if (!(v == vec_scale(Scalar(sign), table[j][i])))
                bad.push_back("commutativity of " + labels[i] + "," + labels[j]);
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec lhs = mul(table[i][j], basis_vec(k));
                Vec rhs = mul(basis_vec(i), table[j][k]);
                if (!(lhs == rhs)) bad.push_back("associativity");
            }
    // m^nil = 0 and m^{nil-1} != 0: powers of the whole ideal via table folds
    std::vector<Vec> power;  // spanning set of m^k
    for (int i = 0; i < n; ++i) power.push_back(basis_vec(i));
    int k = 1;
    while (k < nil_index && !power.empty()) {
        std::vector<Vec> next;
        for (const Vec& p : power)
            for (int i = 0; i < n; ++i) {
                Vec q = mul(p, basis_vec(i));
                if (!vec_is_zero(q)) next.push_back(q);
            }
        power = std::move(next);
        ++k;
    }
    if (!power.empty()) bad.push_back("nilpotency index");
    return bad;
}

ArtinAlgebra ArtinAlgebra::dual_numbers() {
    ArtinAlgebra b;
    b.name = "k[e]/(e^2)";
    b.labels = {"e"};
    b.degrees = {0};
    b.table = {{vec_zero(1)}};
    b.nil_index = 2;
    return b;
}

ArtinAlgebra ArtinAlgebra::truncated_polynomial(int k) {
    if (k < 2) throw std::invalid_argument("truncated_polynomial: k >= 2 required");
    ArtinAlgebra b;
    b.name = "k[t]/(t^" + std::to_string(k) + ")";
    for (int i = 1; i < k; ++i) {
        b.labels.push_back(i == 1 ? "t" : "t^" + std::to_string(i));
        b.degrees.push_back(0);
    }
    const int n = k - 1;
    b.table.assign(n, std::vector<Vec>(n, vec_zero(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i + j <= n) b.table[i - 1][j - 1][i + j - 1] = 1;
    b.nil_index = k;
    return b;
}

ArtinAlgebra ArtinAlgebra::odd_line(int degree) {
    if (parity(degree) != 1) throw std::invalid_argument("odd_line: degree must be odd");
    ArtinAlgebra b;
    b.name = "k[theta]/(theta^2)";
    b.labels = {"theta"};
    b.degrees = {degree};
    b.table = {{vec_zero(1)}};
    b.nil_index = 2;
    return b;
}

GradedSpace tensor_space(const GradedSpace& g, const ArtinAlgebra& b) {
    std::vector<std::pair<std::string, int>> basis;
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j)
            basis.emplace_back(g.label(i) + "*" + b.labels[j], g.degree(i) + b.degrees[j]);
    return GradedSpace(basis);
}

namespace {

int interleave_sign(const GradedSpace& g, const ArtinAlgebra& b, const Tuple& gs, const Tuple& bs) {
    // scalar b_i crosses the vectors v_j for j > i
    int e = 0;
    int trailing = 0;
    for (int i = static_cast<int>(gs.size()) - 1; i >= 0; --i) {
        e += parity(b.degrees[bs[i]]) * trailing;
        trailing = (trailing + parity(g.degree(gs[i]))) & 1;
    }
    return (e & 1) ? -1 : 1;
}

}  // namespace

LInfinityStructure tensor_with_artin(const LInfinityStructure& l, const ArtinAlgebra& b) {
    auto bad = b.violations();
    if (!bad.empty()) throw std::invalid_argument("tensor_with_artin: invalid Artin data: " + bad.front());
    const GradedSpace& g = l.space();
    GradedSpace big = tensor_space(g, b);
    const int bd = b.dim();
    LInfinityStructure out(big, l.arity_cap());
    for (int n = 1; n <= l.arity_cap(); ++n) {
        MultiMap op(big, big, n, 2 - n);
        if (n < b.nil_index && !l.op(n).is_zero()) {
            for (const Tuple& t : canonical_tuples(big, n)) {
                Tuple gs(n), bs(n);
                for (int i = 0; i < n; ++i) {
                    gs[i] = t[i] / bd;
                    bs[i] = t[i] % bd;
                }
                Vec gval = l.op(n).eval_basis(gs);
                if (vec_is_zero(gval)) continue;
                // fold the coefficient product left to right
                Vec bval = b.basis_vec(bs[0]);
                for (int i = 1; i < n && !vec_is_zero(bval); ++i) bval = b.mul(bval, b.basis_vec(bs[i]));
                if (vec_is_zero(bval)) continue;
                int sign = interleave_sign(g, b, gs, bs);
                Vec value = vec_zero(big.dim());
                for (int gi = 0; gi < g.dim(); ++gi) {
                    if (is_zero(gval[gi])) continue;
                    for (int bj = 0; bj < bd; ++bj)
                        if (!is_zero(bval[bj])) value[gi * bd + bj] += Scalar(sign) * gval[gi] * bval[bj];
                }
                if (!vec_is_zero(value)) op.set(t, std::move(value));
            }
        }
        out.set_op(std::move(op));
    }
    return out;
}

Dgla tensor_dgla(const Dgla& a, const ArtinAlgebra& b) {
    LInfinityStructure l = tensor_with_artin(as_l_infinity(a, 2), b);
    GradedSpace big = l.op(1).source();
    HomogeneousMap d(big, big, 1);
    for (const auto& [t, v] : l.op(1).entries())
        for (int r = 0; r < big.dim(); ++r)
            if (!is_zero(v[r])) d.set(r, t[0], v[r]);
    return Dgla(big, d, l.op(2));
}

HomogeneousMap tensor_endomorphism(const HomogeneousMap& f, const GradedSpace& g, const ArtinAlgebra& b) {
    if (f.source() != g || f.target() != g) throw std::invalid_argument("tensor_endomorphism: space mismatch");
    GradedSpace big = tensor_space(g, b);
    HomogeneousMap out(big, big, f.degree());
    const int bd = b.dim();
    for (int c = 0; c < g.dim(); ++c)
        for (int r = 0; r < g.dim(); ++r) {
            if (is_zero(f.at(r, c))) continue;
            for (int j = 0; j < bd; ++j) out.set(r * bd + j, c * bd + j, f.at(r, c));
        }
    return out;
}

}  // namespace linfty
