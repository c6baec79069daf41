#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "spectable/matrix.hpp"

namespace spectable {

class GroupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Generator {
    std::string label;
    Matrix matrix;
};

/// Matrices of one representation, aligned with the element indices of a FiniteGroup.
struct Representation {
    std::string name;
    size_t dim = 0;
    std::vector<Matrix> elements;
};

struct ConjugacyClass {
    std::string name;
    size_t size = 0;
    int element_order = 1;
    size_t representative = 0;
    std::vector<size_t> members;
    Cyclotomic trace;             // in the defining representation
    std::optional<Rational> angle;  // rotation angle as a multiple of pi
};

/// Closed set of unitary matrices with words over the generators and
/// conjugacy-class structure. Element 0 is the identity.
class FiniteGroup {
public:
    std::string name;
    int cyclotomic_order = 1;
    std::vector<Generator> generators;
    Representation defining;
    std::vector<std::vector<size_t>> words;  // generator indices, identity = {}
    std::vector<int> element_order;
    std::vector<size_t> inverse;
    std::vector<ConjugacyClass> classes;
    std::vector<size_t> class_of;
    std::optional<size_t> minus_identity;

    size_t order() const { return defining.elements.size(); }
    size_t dim() const { return defining.dim; }
    std::optional<size_t> find(const Matrix& m) const;

    std::string word_string(size_t element) const;
    /// Parses `a.b.a` (or `e`) into an element index.
    size_t evaluate_word(const std::string& word) const;
    size_t multiply(size_t a, size_t b) const;

    /// Builds a representation from generator images; throws GroupError if the
    /// images do not define a homomorphism.
    Representation representation(const std::string& name, const std::vector<Generator>& images) const;

    /// Class representatives' matrices in the given representation.
    std::vector<Matrix> class_matrices(const Representation& rep) const;

private:
    std::unordered_map<std::string, size_t> index_;
    friend FiniteGroup close_group(const std::vector<Generator>&, size_t, const std::string&);
};

/// Breadth-first closure of the generators; throws GroupError when the closure
/// exceeds max_order or a generator is not unitary.
FiniteGroup close_group(const std::vector<Generator>& generators, size_t max_order, const std::string& name = "");

/// Conjugacy classes ordered by element order, size, canonical trace, then
/// first member index.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& group);

}  // namespace spectable
