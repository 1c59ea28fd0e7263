#include "periodk/quiver.hpp"

#include <algorithm>
#include <set>

#include "periodk/error.hpp"

namespace periodk {

Quiver::Quiver(std::size_t vertices, std::vector<Arrow> arrows) : vertices_(vertices), arrows_(std::move(arrows)) {
    if (vertices_ == 0) throw Error(ErrorKind::InvalidArgument, "quiver needs at least one vertex");
    std::set<std::string> labels;
    std::vector<std::size_t> indegree(vertices_, 0);
    for (const auto& a : arrows_) {
        if (a.source >= vertices_ || a.target >= vertices_)
            throw Error(ErrorKind::InvalidArgument, "arrow '" + a.label + "' has an endpoint out of range");
        if (a.label.empty() || !labels.insert(a.label).second)
            throw Error(ErrorKind::InvalidArgument, "arrow labels must be unique and nonempty: '" + a.label + "'");
        ++indegree[a.target];
    }
    // Kahn's algorithm; leftovers mean a directed cycle.
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < vertices_; ++v)
        if (indegree[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
        std::size_t v = ready.front();
        ready.erase(ready.begin());
        topo_.push_back(v);
        for (const auto& a : arrows_)
            if (a.source == v && --indegree[a.target] == 0) ready.push_back(a.target);
    }
    if (topo_.size() != vertices_) throw Error(ErrorKind::CyclicQuiver, "quiver has a directed cycle");
}

std::optional<std::size_t> Quiver::arrow_index(const std::string& label) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].label == label) return i;
    return std::nullopt;
}

std::string Quiver::path_name(const Path& p) const {
    if (p.word.empty()) return "e" + std::to_string(p.source + 1);
    std::string out;
    for (auto a : p.word) out += arrows_[a].label;
    return out;
}

QuiverAlgebra::QuiverAlgebra(Quiver quiver, Field field, std::vector<Path> relations)
    : quiver_(std::move(quiver)), field_(field), relations_(std::move(relations)) {
    for (const auto& r : relations_) {
        if (r.length() < 2)
            throw Error(ErrorKind::InadmissibleRelation, "relations must be paths of length >= 2");
        for (std::size_t k = 0; k + 1 < r.word.size(); ++k) {
            const auto& later = quiver_.arrow(r.word[k]);
            const auto& earlier = quiver_.arrow(r.word[k + 1]);
            if (earlier.target != later.source)
                throw Error(ErrorKind::InadmissibleRelation,
                            "relation " + quiver_.path_name(r) + " is not a composable path");
        }
        if (r.source != quiver_.arrow(r.word.back()).source || r.target != quiver_.arrow(r.word.front()).target)
            throw Error(ErrorKind::InadmissibleRelation, "relation endpoints disagree with its arrows");
    }
    basis_ = periodk::path_basis(*this);
}

bool QuiverAlgebra::is_zero_path(const std::vector<std::size_t>& word) const {
    for (const auto& r : relations_)
        if (std::search(word.begin(), word.end(), r.word.begin(), r.word.end()) != word.end()) return true;
    return false;
}

Path QuiverAlgebra::path_from_labels(const std::vector<std::string>& labels) const {
    if (labels.empty()) throw Error(ErrorKind::InadmissibleRelation, "empty relation");
    Path p;
    for (const auto& l : labels) {
        auto idx = quiver_.arrow_index(l);
        if (!idx) throw Error(ErrorKind::InadmissibleRelation, "unknown arrow label '" + l + "' in relation");
        p.word.push_back(*idx);
    }
    p.source = quiver_.arrow(p.word.back()).source;
    p.target = quiver_.arrow(p.word.front()).target;
    return p;
}

std::vector<Path> path_basis(const QuiverAlgebra& algebra) {
    const Quiver& q = algebra.quiver();
    std::vector<Path> out;
    // Depth-first growth from each idempotent. Monomial ideal: once a path is
    // zero every extension is zero, so pruning is exact.
    std::vector<Path> stack;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) stack.push_back(Path{v, v, {}});
    std::reverse(stack.begin(), stack.end());
    while (!stack.empty()) {
        Path p = std::move(stack.back());
        stack.pop_back();
        out.push_back(p);
        std::vector<Path> next;
        for (std::size_t a = 0; a < q.arrows().size(); ++a) {
            if (q.arrow(a).source != p.target) continue;
            Path ext{p.source, q.arrow(a).target, {}};
            ext.word.reserve(p.word.size() + 1);
            ext.word.push_back(a);
            ext.word.insert(ext.word.end(), p.word.begin(), p.word.end());
            if (algebra.is_zero_path(ext.word)) continue;
            next.push_back(std::move(ext));
        }
        for (auto it = next.rbegin(); it != next.rend(); ++it) stack.push_back(std::move(*it));
    }
    return out;
}

AlgebraPtr linear_a(std::size_t n, Field field, bool kill_length_two) {
    std::vector<Arrow> arrows;
    for (std::size_t k = 1; k < n; ++k) arrows.push_back(Arrow{k, k - 1, "a" + std::to_string(k)});
    Quiver q(n, std::move(arrows));
    std::vector<Path> relations;
    if (kill_length_two)
        for (std::size_t k = 1; k + 1 < n; ++k)
            relations.push_back(Path{k + 1, k - 1, {k - 1, k}});
    return std::make_shared<const QuiverAlgebra>(std::move(q), field, std::move(relations));
}

}  // namespace periodk
