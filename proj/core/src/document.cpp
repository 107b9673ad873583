#include "linfty/document.hpp"

#include <sstream>

#include "linfty/linalg.hpp"

namespace linfty {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

struct DocBuilder {
    AlgebraDocument doc;
    std::vector<ParseError> errors;
    std::map<std::string, int> degrees;

    void fail(int line, const std::string& msg) { errors.push_back({line, msg}); }

    bool known(int line, const std::string& label) {
        if (degrees.count(label)) return true;
        fail(line, "unknown label '" + label + "'");
        return false;
    }

    std::optional<Scalar> coeff(int line, const std::string& text) {
        try {
            return parse_scalar(text);
        } catch (const std::exception& e) {
            fail(line, e.what());
            return std::nullopt;
        }
    }
};

}  // namespace

ParseResult parse_document(const std::string& text) {
    DocBuilder b;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks.front().front() == '[') {
            if (toks.size() != 1 || toks.front().back() != ']') {
                b.fail(lineno, "malformed section header");
                continue;
            }
            section = toks.front().substr(1, toks.front().size() - 2);
            if (section != "basis" && section != "d" && section != "bracket" && section != "eta" &&
                section != "product" && section != "options")
                b.fail(lineno, "unknown section '" + section + "'");
            if (section == "eta") b.doc.has_eta = true;
            if (section == "product") b.doc.has_product = true;
            continue;
        }
        if (section == "basis") {
            if (toks.size() != 2) {
                b.fail(lineno, "basis entry needs 'label degree'");
                continue;
            }
            try {
                int deg = std::stoi(toks[1]);
                if (b.degrees.count(toks[0])) {
                    b.fail(lineno, "duplicate basis label '" + toks[0] + "'");
                    continue;
                }
                b.degrees.emplace(toks[0], deg);
                b.doc.basis.emplace_back(toks[0], deg);
            } catch (const std::exception&) {
                b.fail(lineno, "malformed degree '" + toks[1] + "'");
            }
            continue;
        }
        if (section == "d" || section == "eta") {
            if (toks.size() != 3) {
                b.fail(lineno, "entry needs 'from to coeff'");
                continue;
            }
            if (!b.known(lineno, toks[0]) || !b.known(lineno, toks[1])) continue;
            auto c = b.coeff(lineno, toks[2]);
            if (!c) continue;
            int want = section == "d" ? 1 : -1;
            if (b.degrees[toks[1]] != b.degrees[toks[0]] + want) {
                b.fail(lineno, "degree mismatch: " + toks[0] + " -> " + toks[1]);
                continue;
            }
            auto& table = section == "d" ? b.doc.d_entries : b.doc.eta_entries;
            auto [it, inserted] = table.emplace(std::make_pair(toks[0], toks[1]), *c);
            if (!inserted) it->second += *c;
            if (is_zero(it->second)) table.erase(it);
            continue;
        }
        if (section == "bracket" || section == "product") {
            if (toks.size() != 4) {
                b.fail(lineno, "entry needs 'a b to coeff'");
                continue;
            }
            if (!b.known(lineno, toks[0]) || !b.known(lineno, toks[1]) || !b.known(lineno, toks[2])) continue;
            auto c = b.coeff(lineno, toks[3]);
            if (!c) continue;
            if (b.degrees[toks[2]] != b.degrees[toks[0]] + b.degrees[toks[1]]) {
                b.fail(lineno, "degree mismatch: [" + toks[0] + ", " + toks[1] + "] -> " + toks[2]);
                continue;
            }
            std::string a = toks[0], bb = toks[1];
            Scalar cc = *c;
            if (section == "bracket") {
                // canonicalize the pair in declaration order with the wedge sign
                int ia = 0, ib = 0;
                for (std::size_t i = 0; i < b.doc.basis.size(); ++i) {
                    if (b.doc.basis[i].first == a) ia = static_cast<int>(i);
                    if (b.doc.basis[i].first == bb) ib = static_cast<int>(i);
                }
                if (ia > ib) {
                    std::swap(a, bb);
                    std::swap(ia, ib);
                    int sign = parity(b.degrees[a]) * parity(b.degrees[bb]) ? 1 : -1;
                    cc *= sign;
                } else if (ia == ib && parity(b.degrees[a]) == 0) {
                    b.fail(lineno, "bracket entry [" + a + ", " + a + "] is annihilated by antisymmetry");
                    continue;
                }
            }
            auto& table = section == "bracket" ? b.doc.bracket_entries : b.doc.product_entries;
            auto [it, inserted] = table.emplace(std::make_tuple(a, bb, toks[2]), cc);
            if (!inserted) it->second += cc;
            if (is_zero(it->second)) table.erase(it);
            continue;
        }
        if (section == "options") {
            if (toks.size() != 2) {
                b.fail(lineno, "option needs 'name value'");
                continue;
            }
            try {
                if (toks[0] == "max-arity")
                    b.doc.max_arity = std::stoi(toks[1]);
                else if (toks[0] == "order")
                    b.doc.order = std::stoi(toks[1]);
                else if (toks[0] == "mode") {
                    if (toks[1] != "0" && toks[1] != "Z") throw std::invalid_argument("mode");
                    b.doc.mode = toks[1][0];
                } else if (toks[0] == "seed")
                    b.doc.seed = std::stoull(toks[1]);
                else
                    b.fail(lineno, "unknown option '" + toks[0] + "'");
            } catch (const std::exception&) {
                b.fail(lineno, "malformed option value '" + toks[1] + "'");
            }
            continue;
        }
        b.fail(lineno, "entry outside any section");
    }
    ParseResult out;
    out.errors = std::move(b.errors);
    if (out.errors.empty()) out.doc = std::move(b.doc);
    return out;
}

std::string serialize_document(const AlgebraDocument& doc) {
    std::ostringstream out;
    out << "[basis]\n";
    for (const auto& [label, deg] : doc.basis) out << label << " " << deg << "\n";
    out << "[d]\n";
    for (const auto& [key, c] : doc.d_entries) out << key.first << " " << key.second << " " << scalar_str(c) << "\n";
    out << "[bracket]\n";
    for (const auto& [key, c] : doc.bracket_entries)
        out << std::get<0>(key) << " " << std::get<1>(key) << " " << std::get<2>(key) << " " << scalar_str(c)
            << "\n";
    if (doc.has_eta) {
        out << "[eta]\n";
        for (const auto& [key, c] : doc.eta_entries)
            out << key.first << " " << key.second << " " << scalar_str(c) << "\n";
    }
    if (doc.has_product) {
        out << "[product]\n";
        for (const auto& [key, c] : doc.product_entries)
            out << std::get<0>(key) << " " << std::get<1>(key) << " " << std::get<2>(key) << " "
                << scalar_str(c) << "\n";
    }
    out << "[options]\n";
    out << "max-arity " << doc.max_arity << "\n";
    out << "order " << doc.order << "\n";
    out << "mode " << doc.mode << "\n";
    out << "seed " << doc.seed << "\n";
    return out.str();
}

GradedSpace doc_space(const AlgebraDocument& doc) { return GradedSpace(doc.basis); }

Dgla doc_dgla(const AlgebraDocument& doc) {
    GradedSpace space = doc_space(doc);
    HomogeneousMap d(space, space, 1);
    for (const auto& [key, c] : doc.d_entries) d.set(*space.index_of(key.second), *space.index_of(key.first), c);
    MultiMap bracket(space, space, 2, 0);
    for (const auto& [key, c] : doc.bracket_entries)
        bracket.add_entry({*space.index_of(std::get<0>(key)), *space.index_of(std::get<1>(key))},
                          *space.index_of(std::get<2>(key)), c);
    return Dgla(space, d, bracket);
}

std::optional<Dga> doc_dga(const AlgebraDocument& doc) {
    if (!doc.has_product) return std::nullopt;
    GradedSpace space = doc_space(doc);
    HomogeneousMap d(space, space, 1);
    for (const auto& [key, c] : doc.d_entries) d.set(*space.index_of(key.second), *space.index_of(key.first), c);
    TensorMap product(space, space, 2, 0);
    for (const auto& [key, c] : doc.product_entries)
        product.add_entry({*space.index_of(std::get<0>(key)), *space.index_of(std::get<1>(key))},
                          *space.index_of(std::get<2>(key)), c);
    return Dga(space, d, product);
}

std::optional<HomogeneousMap> doc_eta(const AlgebraDocument& doc) {
    if (!doc.has_eta) return std::nullopt;
    GradedSpace space = doc_space(doc);
    HomogeneousMap eta(space, space, -1);
    for (const auto& [key, c] : doc.eta_entries)
        eta.set(*space.index_of(key.second), *space.index_of(key.first), c);
    return eta;
}

AlgebraDocument document_from_dga(const Dga& a) {
    AlgebraDocument doc;
    const GradedSpace& s = a.space;
    for (int i = 0; i < s.dim(); ++i) doc.basis.emplace_back(s.label(i), s.degree(i));
    for (int c = 0; c < s.dim(); ++c)
        for (int r = 0; r < s.dim(); ++r)
            if (!is_zero(a.d.at(r, c))) doc.d_entries.emplace(std::make_pair(s.label(c), s.label(r)), a.d.at(r, c));
    doc.has_product = true;
    for (const auto& [t, v] : a.product.entries())
        for (int r = 0; r < s.dim(); ++r)
            if (!is_zero(v[r]))
                doc.product_entries.emplace(std::make_tuple(s.label(t[0]), s.label(t[1]), s.label(r)), v[r]);
    // the commutator bracket, canonically ordered
    Dgla c = commutator_dgla(a);
    for (const auto& [t, v] : c.bracket.entries())
        for (int r = 0; r < s.dim(); ++r)
            if (!is_zero(v[r]))
                doc.bracket_entries.emplace(std::make_tuple(s.label(t[0]), s.label(t[1]), s.label(r)), v[r]);
    return doc;
}

}  // namespace linfty
