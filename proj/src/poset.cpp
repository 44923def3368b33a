#include "lcgraph/poset.hpp"

#include <algorithm>
#include <unordered_map>

namespace lcg {

Poset::Poset(std::vector<std::string> element_names,
             const std::vector<std::pair<std::string, std::string>>& cover_pairs)
    : names_(std::move(element_names)) {
    const int n = size();
    if (n == 0) throw Error("poset needs at least one element");

    std::unordered_map<std::string_view, int> by_name;
    for (int i = 0; i < n; ++i) {
        if (!by_name.emplace(names_[i], i).second)
            throw Error("duplicate poset element name: " + names_[i]);
    }

    leq_.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) leq_[i * n + i] = 1;
    for (const auto& [lo, hi] : cover_pairs) {
        auto l = by_name.find(lo);
        auto h = by_name.find(hi);
        if (l == by_name.end()) throw UnknownColorError("unknown poset element: " + lo);
        if (h == by_name.end()) throw UnknownColorError("unknown poset element: " + hi);
        covers_.emplace_back(l->second, h->second);
        leq_[l->second * n + h->second] = 1;
    }

    // Warshall closure.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (leq_[i * n + k])
                for (int j = 0; j < n; ++j)
                    if (leq_[k * n + j]) leq_[i * n + j] = 1;

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (leq_[i * n + j] && leq_[j * n + i])
                throw CycleError("cover relation closes into a cycle through " + names_[i] +
                                 " and " + names_[j]);

    for (int i = 0; i < n; ++i) {
        bool least = true, greatest = true;
        for (int j = 0; j < n; ++j) {
            least = least && leq(i, j);
            greatest = greatest && leq(j, i);
        }
        if (least) bottom_ = i;
        if (greatest) top_ = i;
    }
    if (bottom_ < 0) throw NoBoundError("poset has no least element");
    if (top_ < 0) throw NoBoundError("poset has no greatest element");
}

Poset Poset::named(std::string_view name) {
    if (name == "chain2") return Poset({"0", "1"}, {{"0", "1"}});
    if (name == "chain3") return Poset({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}});
    if (name == "m2")
        return Poset({"0", "b", "r", "1"}, {{"0", "b"}, {"0", "r"}, {"b", "1"}, {"r", "1"}});
    if (name == "m3")
        return Poset({"0", "a", "b", "c", "1"},
                     {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
    throw Error("unknown built-in poset: " + std::string(name));
}

const std::vector<std::string>& Poset::builtin_names() {
    static const std::vector<std::string> names = {"chain2", "chain3", "m2", "m3"};
    return names;
}

std::optional<int> Poset::find(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

int Poset::index(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw UnknownColorError("unknown color name: " + std::string(name));
}

std::vector<int> Poset::middles() const {
    std::vector<int> mids;
    for (int i = 0; i < size(); ++i)
        if (i != bottom_ && i != top_) mids.push_back(i);
    return mids;
}

Poset::Shape Poset::shape() const {
    bool chain = true;
    for (int i = 0; i < size() && chain; ++i)
        for (int j = 0; j < size() && chain; ++j)
            if (!comparable(i, j)) chain = false;
    if (chain) return Shape::Chain;

    const auto mids = middles();
    for (size_t i = 0; i < mids.size(); ++i)
        for (size_t j = i + 1; j < mids.size(); ++j)
            if (comparable(mids[i], mids[j])) return Shape::Other;
    return Shape::Diamond;
}

std::string to_string(Poset::Shape s) {
    switch (s) {
        case Poset::Shape::Chain: return "chain";
        case Poset::Shape::Diamond: return "diamond";
        default: return "other";
    }
}

}  // namespace lcg
