#include "linfty/graded_space.hpp"

#include <set>
#include <stdexcept>

namespace linfty {

GradedSpace::GradedSpace(std::vector<std::pair<std::string, int>> basis) {
    auto payload = std::make_shared<Basis>();
    std::set<std::string> seen;
    for (auto& [label, degree] : basis) {
        if (label.empty()) throw std::invalid_argument("empty basis label");
        if (!seen.insert(label).second) throw std::invalid_argument("duplicate basis label '" + label + "'");
        payload->labels.push_back(std::move(label));
        payload->degrees.push_back(degree);
    }
    basis_ = std::move(payload);
}

std::optional<int> GradedSpace::index_of(const std::string& label) const {
    for (int i = 0; i < dim(); ++i)
        if (basis_->labels[i] == label) return i;
    return std::nullopt;
}

std::vector<int> GradedSpace::indices_in_degree(int degree) const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (this->degree(i) == degree) out.push_back(i);
    return out;
}

std::vector<int> GradedSpace::degrees_present() const {
    std::set<int> degs;
    for (int i = 0; i < dim(); ++i) degs.insert(degree(i));
    return {degs.begin(), degs.end()};
}

GradedSpace GradedSpace::shifted(int n) const {
    GradedSpace s = *this;
    s.shift_ += n;
    return s;
}

bool GradedSpace::operator==(const GradedSpace& other) const {
    if (basis_ == other.basis_ && shift_ == other.shift_) return true;
    if (dim() != other.dim()) return false;
    for (int i = 0; i < dim(); ++i)
        if (label(i) != other.label(i) || degree(i) != other.degree(i)) return false;
    return true;
}

std::optional<int> GradedSpace::homogeneous_degree(const Vec& v) const {
    if (static_cast<int>(v.size()) != dim()) throw std::invalid_argument("vector size does not match space");
    std::optional<int> deg;
    for (int i = 0; i < dim(); ++i) {
        if (is_zero(v[i])) continue;
        if (deg && *deg != degree(i)) return std::nullopt;
        deg = degree(i);
    }
    return deg ? deg : std::nullopt;
}

Vec GradedSpace::basis_vec(int i) const {
    Vec v(static_cast<std::size_t>(dim()));
    v[i] = 1;
    return v;
}

std::string GradedSpace::vec_str(const Vec& v) const {
    std::string out;
    for (int i = 0; i < dim(); ++i) {
        if (is_zero(v[i])) continue;
        if (!out.empty()) out += " + ";
        if (v[i] == 1)
            out += label(i);
        else
            out += scalar_str(v[i]) + "*" + label(i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace linfty
