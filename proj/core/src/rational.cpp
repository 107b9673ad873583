#include "linfty/rational.hpp"

#include <stdexcept>

namespace linfty {

Scalar scalar(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

Scalar parse_scalar(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Scalar q;
    // mpq parsing accepts "p" and "p/q" but tolerates junk like "1/2/3"
    // via partial reads, so validate the character set first.
    std::size_t slashes = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '-' && i == 0) continue;
        if (c == '/') {
            ++slashes;
            if (slashes > 1 || i == 0 || i + 1 == text.size())
                throw std::invalid_argument("malformed rational '" + text + "'");
            continue;
        }
        if (c < '0' || c > '9')
            throw std::invalid_argument("malformed rational '" + text + "'");
    }
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("rational with zero denominator '" + text + "'");
    q.canonicalize();
    return q;
}

std::string scalar_str(const Scalar& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace linfty
