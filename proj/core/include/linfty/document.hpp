#pragma once

#include <optional>
#include <string>

#include "linfty/dga.hpp"
#include "linfty/dgla.hpp"

namespace linfty {

/// Line-oriented description of a graded algebra: sections [basis], [d],
/// [bracket], [eta], [product], [options], one entry per line, `#` comments.
/// Entries accumulate; parsing canonicalizes them so that serialize/parse
/// round-trips byte-identically.
struct AlgebraDocument {
    std::vector<std::pair<std::string, int>> basis;

    // canonical maps: d and eta keyed by (from, to); bracket and product by
    // (a, b, to) with bracket keys in basis order and the wedge sign folded in
    std::map<std::pair<std::string, std::string>, Scalar> d_entries;
    std::map<std::pair<std::string, std::string>, Scalar> eta_entries;
    std::map<std::tuple<std::string, std::string, std::string>, Scalar> bracket_entries;
    std::map<std::tuple<std::string, std::string, std::string>, Scalar> product_entries;

    bool has_eta = false;
    bool has_product = false;

    int max_arity = 5;
    int order = 5;
    char mode = 'Z';
    std::uint64_t seed = 0;

    bool operator==(const AlgebraDocument& other) const = default;
};

struct ParseError {
    int line = 0;
    std::string message;
};

struct ParseResult {
    std::optional<AlgebraDocument> doc;
    std::vector<ParseError> errors;
    bool ok() const { return doc.has_value() && errors.empty(); }
};

ParseResult parse_document(const std::string& text);

/// Canonical text form; parse(serialize(doc)) == doc, byte for byte on a
/// second serialize.
std::string serialize_document(const AlgebraDocument& doc);

GradedSpace doc_space(const AlgebraDocument& doc);
Dgla doc_dgla(const AlgebraDocument& doc);
std::optional<Dga> doc_dga(const AlgebraDocument& doc);
std::optional<HomogeneousMap> doc_eta(const AlgebraDocument& doc);

/// Canonical document for an algebra built in code (used by `fixtures`).
AlgebraDocument document_from_dga(const Dga& a);

}  // namespace linfty
