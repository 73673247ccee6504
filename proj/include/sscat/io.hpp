#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "sscat/category.hpp"
#include "sscat/chain.hpp"
#include "sscat/monoid.hpp"
#include "sscat/simplicial.hpp"
#include "sscat/specseq.hpp"
#include "sscat/sset.hpp"
#include "sscat/theorems.hpp"

namespace sscat::io {

using Json = nlohmann::ordered_json;

/// Malformed or invalid document. `path` is a JSON pointer to the offending field.
class FormatError : public Error {
public:
    FormatError(std::string path, const std::string& what);
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// Well-formed document whose contents fail the owning module's validator.
class InvalidDocument : public FormatError {
public:
    using FormatError::FormatError;
};

struct FunctorDocument {
    FinNonUnitalCategory source;
    FinNonUnitalCategory target;
    FunctorData functor;
    bool operator==(const FunctorDocument&) const = default;
};

struct NatTransDocument {
    FinNonUnitalCategory source;
    FinNonUnitalCategory target;
    FunctorData f;
    FunctorData g;
    NatTransData eta;
    bool operator==(const NatTransDocument&) const = default;
};

struct ActionDocument {
    FinMonoid monoid;
    MonoidAction action;
    bool operator==(const ActionDocument&) const = default;
};

using Document = std::variant<SemiSimplicialSet, SimplicialSet, BiSemiSimplicialSet, FinNonUnitalCategory,
                              FunctorDocument, NatTransDocument, FinMonoid, MonoidPresentation, ActionDocument,
                              SparseMatrix>;

/// The "type" tag of a document.
std::string type_name(const Document& d);

Json to_json(const SemiSimplicialSet& x);
Json to_json(const SimplicialSet& y);
Json to_json(const BiSemiSimplicialSet& b);
Json to_json(const FinNonUnitalCategory& c);
Json to_json(const FunctorDocument& f);
Json to_json(const NatTransDocument& n);
Json to_json(const FinMonoid& m);
Json to_json(const MonoidPresentation& p);
Json to_json(const ActionDocument& a);
Json to_json(const SparseMatrix& m);
Json to_json(const Document& d);

/// Parses and validates any tagged document. Throws FormatError.
Document from_json(const Json& j);

/// Reads one document; parse errors and schema violations raise FormatError.
Document load_file(const std::filesystem::path& path);
/// Two-space indented, trailing newline.
void save_file(const Document& d, const std::filesystem::path& path);
std::string dump(const Json& j);

/// Extracts a specific alternative or throws FormatError naming both types.
template <class T>
T expect(Document d, const std::string& want)
{
    if (auto* v = std::get_if<T>(&d)) return std::move(*v);
    throw FormatError("/type", "expected a '" + want + "' document, got '" + type_name(d) + "'");
}

// Reports ----------------------------------------------------------------------

/// Deterministic body; `seconds` is added under "timing" only when requested.
Json report_json(const CheckReport& r, bool with_timing = false);
/// Z-style group names over Z; "F2^3" or "Q" style over fields.
std::string group_name(const FPAbelianGroup& g, const Ring& ring);
Json homology_json(const std::vector<HomologyGroup>& groups, const Ring& ring);
Json pages_json(const std::vector<SSPage>& pages);
Json convergence_json(const ConvergenceReport& c);

}  // namespace sscat::io
