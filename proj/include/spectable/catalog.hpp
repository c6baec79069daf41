#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spectable/group.hpp"

namespace spectable {

class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A character table failed its orthogonality checks and cannot be used.
class UnverifiedTableError : public CatalogError {
public:
    using CatalogError::CatalogError;
};

/// Requested name is not present; carries the names that are.
class UnknownNameError : public std::runtime_error {
public:
    UnknownNameError(const std::string& what, std::vector<std::string> available)
        : std::runtime_error(what), available(std::move(available)) {}
    std::vector<std::string> available;
};

struct Irrep {
    std::string name;
    size_t dim = 0;
    bool spinor = false;
    std::vector<Cyclotomic> values;  // indexed like FiniteGroup::classes
};

struct CharacterTable {
    std::vector<Irrep> irreps;
    std::map<std::string, std::string> aliases;
    bool verified = false;

    /// Resolves aliases; throws UnknownNameError.
    size_t index(const std::string& name) const;
    const Irrep& operator[](const std::string& name) const { return irreps[index(name)]; }
    std::vector<std::string> names() const;
};

struct OrthogonalityReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

// ---------------------------------------------------------------------------
// Catalog file contents, before any arithmetic.

struct ClassSpec {
    std::string name;
    std::optional<std::string> word;
    std::optional<int> element_order;
    std::optional<std::string> trace;
    size_t size = 0;
    std::optional<Rational> angle;  // multiple of pi
    int line = 0;
};

struct IrrepSpec {
    std::string name;
    std::optional<bool> spinor;
    std::vector<std::string> values;
    int line = 0;
};

struct GeneratorSpec {
    std::string label;
    std::string matrix;
    int line = 0;
};

struct RepSpec {
    std::string name;
    std::vector<GeneratorSpec> generators;
};

struct GroupSpec {
    std::string name;
    std::string source;
    std::optional<size_t> order;
    int cyclotomic_order = 120;
    std::string defining = "defining";
    std::optional<std::string> cover;
    std::vector<GeneratorSpec> generators;
    std::vector<ClassSpec> classes;
    std::vector<IrrepSpec> irreps;
    std::vector<RepSpec> reps;
    std::vector<std::pair<std::string, std::string>> aliases;
};

/// Parses one catalog file; errors carry the source and line number.
GroupSpec parse_group_spec(std::string_view text, const std::string& source = "<text>");

/// Parses `[[a,b],[c,d]]` with Cyclotomic literal entries.
Matrix parse_matrix(std::string_view text, int order);

/// Matches table columns to the computed classes of `group` (by explicit
/// word, else by the signature order/size/trace), then records class names
/// and angles on the group. Throws CatalogError on ambiguous or failed matches.
CharacterTable load_character_table(const GroupSpec& spec, FiniteGroup& group);
CharacterTable load_character_table(std::string_view text, FiniteGroup& group);

/// Row and column orthogonality, sum of squared dimensions, spinor flags and
/// class-angle consistency, all exact.
OrthogonalityReport verify_orthogonality(const CharacterTable& table, const FiniteGroup& group);

/// Trace a rotation by `angle`*pi has in the spin-1/2 (dim 2) or vector
/// (dim 3) realization.
Cyclotomic rotation_trace(const Rational& angle, size_t dim);

// ---------------------------------------------------------------------------

struct GroupData {
    GroupSpec spec;
    FiniteGroup group;
    CharacterTable table;
    OrthogonalityReport report;
    std::string defining_rep;
    std::map<std::string, Representation> reps;

    /// Looks up a representation by name or irrep alias.
    const Representation& rep(const std::string& name) const;
    std::vector<std::string> rep_names() const;
    /// Throws CatalogError unless the table verified.
    const CharacterTable& verified_table() const;
};

/// Builds the group, its character table and extra representations.
/// `cyclotomic_override` must be a multiple of the file's order.
GroupData build_group(const GroupSpec& spec, std::optional<int> cyclotomic_override = std::nullopt);

/// Directory of `.grp` files, scanned eagerly and built lazily.
class Catalog {
public:
    explicit Catalog(std::filesystem::path directory, std::optional<int> cyclotomic_override = std::nullopt);

    /// SPECTABLE_CATALOG if set, otherwise the bundled catalog.
    static std::filesystem::path default_directory();

    const std::filesystem::path& directory() const { return directory_; }
    std::vector<std::string> names() const;
    bool contains(const std::string& name) const { return specs_.count(name) != 0; }
    const GroupSpec& spec(const std::string& name) const;
    const GroupData& get(const std::string& name) const;

private:
    std::filesystem::path directory_;
    std::optional<int> override_;
    std::map<std::string, GroupSpec> specs_;
    mutable std::mutex mutex_;
    mutable std::map<std::string, std::unique_ptr<GroupData>> built_;
};

}  // namespace spectable
