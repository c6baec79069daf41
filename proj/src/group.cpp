#include "spectable/group.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace spectable {

std::optional<size_t> FiniteGroup::find(const Matrix& m) const {
    auto it = index_.find(m.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::string FiniteGroup::word_string(size_t element) const {
    const auto& w = words.at(element);
    if (w.empty()) return "e";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += '.';
        s += generators[w[i]].label;
    }
    return s;
}

size_t FiniteGroup::evaluate_word(const std::string& word) const {
    Matrix m = Matrix::identity(dim(), cyclotomic_order);
    if (word != "e") {
        std::stringstream in(word);
        std::string letter;
        while (std::getline(in, letter, '.')) {
            auto gen = std::find_if(generators.begin(), generators.end(),
                                    [&](const Generator& g) { return g.label == letter; });
            if (gen == generators.end())
                throw GroupError("unknown generator '" + letter + "' in word '" + word + "'");
            m = m * gen->matrix;
        }
    }
    auto idx = find(m);
    if (!idx) throw GroupError("word '" + word + "' does not evaluate to a group element");
    return *idx;
}

size_t FiniteGroup::multiply(size_t a, size_t b) const {
    auto idx = find(defining.elements[a] * defining.elements[b]);
    if (!idx) throw GroupError("group is not closed under multiplication");
    return *idx;
}

Representation FiniteGroup::representation(const std::string& rep_name, const std::vector<Generator>& images) const {
    std::vector<const Matrix*> image_of(generators.size(), nullptr);
    for (size_t g = 0; g < generators.size(); ++g) {
        for (const auto& img : images)
            if (img.label == generators[g].label) image_of[g] = &img.matrix;
        if (!image_of[g])
            throw GroupError("representation " + rep_name + " has no image for generator " + generators[g].label);
    }
    const size_t d = image_of[0]->rows();
    for (const auto* m : image_of)
        if (!m->is_square() || m->rows() != d)
            throw GroupError("representation " + rep_name + " has generator images of inconsistent size");

    Representation rep;
    rep.name = rep_name;
    rep.dim = d;
    rep.elements.reserve(order());
    for (size_t i = 0; i < order(); ++i) {
        Matrix m = Matrix::identity(d, cyclotomic_order);
        for (size_t g : words[i]) m = m * *image_of[g];
        rep.elements.push_back(std::move(m));
    }
    // Consistency on every Cayley-graph edge makes the word map a homomorphism.
    for (size_t i = 0; i < order(); ++i)
        for (size_t g = 0; g < generators.size(); ++g) {
            const size_t j = *find(defining.elements[i] * generators[g].matrix);
            if (!(rep.elements[i] * *image_of[g] == rep.elements[j]))
                throw GroupError("representation " + rep_name + " is not a homomorphism (element " + word_string(i) +
                                 " times " + generators[g].label + ")");
        }
    return rep;
}

std::vector<Matrix> FiniteGroup::class_matrices(const Representation& rep) const {
    std::vector<Matrix> out;
    out.reserve(classes.size());
    for (const auto& c : classes) out.push_back(rep.elements[c.representative]);
    return out;
}

FiniteGroup close_group(const std::vector<Generator>& generators, size_t max_order, const std::string& name) {
    if (generators.empty()) throw GroupError("close_group: no generators");
    const size_t d = generators.front().matrix.rows();
    const int order = generators.front().matrix.order();
    for (const auto& g : generators) {
        if (!g.matrix.is_square() || g.matrix.rows() != d)
            throw GroupError("generator " + g.label + " has the wrong shape");
        if (g.matrix.order() != order) throw GroupError("generator " + g.label + " uses a different cyclotomic order");
        if (!g.matrix.is_unitary()) throw GroupError("generator " + g.label + " is not unitary");
    }

    FiniteGroup group;
    group.name = name;
    group.cyclotomic_order = order;
    group.generators = generators;
    group.defining.name = "defining";
    group.defining.dim = d;

    auto add = [&](Matrix m, std::vector<size_t> word) {
        const std::string key = m.key();
        if (group.index_.count(key)) return false;
        if (group.defining.elements.size() >= max_order)
            throw GroupError("closure of " + (name.empty() ? std::string("group") : name) + " exceeds max order " +
                             std::to_string(max_order));
        group.index_.emplace(key, group.defining.elements.size());
        group.defining.elements.push_back(std::move(m));
        group.words.push_back(std::move(word));
        return true;
    };
    add(Matrix::identity(d, order), {});
    for (size_t head = 0; head < group.defining.elements.size(); ++head) {
        for (size_t g = 0; g < generators.size(); ++g) {
            auto word = group.words[head];
            word.push_back(g);
            add(group.defining.elements[head] * generators[g].matrix, std::move(word));
        }
    }

    const size_t n = group.order();
    group.inverse.resize(n);
    group.element_order.resize(n);
    for (size_t i = 0; i < n; ++i) {
        const auto& m = group.defining.elements[i];
        group.inverse[i] = *group.find(m.adjoint());
        int k = 1;
        Matrix power = m;
        while (!power.is_identity()) {
            power = power * m;
            ++k;
        }
        group.element_order[i] = k;
    }
    const Matrix minus = Cyclotomic(order, -1) * Matrix::identity(d, order);
    group.minus_identity = group.find(minus);

    group.classes = conjugacy_classes(group);
    group.class_of.assign(n, 0);
    for (size_t c = 0; c < group.classes.size(); ++c)
        for (size_t m : group.classes[c].members) group.class_of[m] = c;
    return group;
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& group) {
    const size_t n = group.order();
    std::vector<bool> seen(n, false);
    std::vector<ConjugacyClass> classes;
    for (size_t x = 0; x < n; ++x) {
        if (seen[x]) continue;
        ConjugacyClass c;
        std::deque<size_t> queue{x};
        seen[x] = true;
        while (!queue.empty()) {
            const size_t y = queue.front();
            queue.pop_front();
            c.members.push_back(y);
            for (const auto& g : group.generators) {
                const Matrix& a = group.defining.elements[y];
                for (const Matrix& conj : {g.matrix * a * g.matrix.adjoint(), g.matrix.adjoint() * a * g.matrix}) {
                    const size_t z = *group.find(conj);
                    if (!seen[z]) {
                        seen[z] = true;
                        queue.push_back(z);
                    }
                }
            }
        }
        std::sort(c.members.begin(), c.members.end());
        c.size = c.members.size();
        c.representative = c.members.front();
        c.element_order = group.element_order[c.representative];
        c.trace = group.defining.elements[c.representative].trace();
        classes.push_back(std::move(c));
    }
    std::stable_sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
        if (a.element_order != b.element_order) return a.element_order < b.element_order;
        if (a.size != b.size) return a.size < b.size;
        const int t = compare(a.trace, b.trace);
        if (t != 0) return t < 0;
        return a.representative < b.representative;
    });
    return classes;
}

}  // namespace spectable
