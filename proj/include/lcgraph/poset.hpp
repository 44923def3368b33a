#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcgraph/errors.hpp"

namespace lcg {

/// A finite bounded partial order of colors. Elements are addressed by index;
/// the order relation is kept closed (reflexive and transitive) as a matrix.
class Poset {
public:
    enum class Shape { Chain, Diamond, Other };

    /// Builds the poset as the reflexive-transitive closure of the given
    /// cover pairs (lower, upper). Throws CycleError if the closure violates
    /// antisymmetry, NoBoundError if there is no least or no greatest element.
    Poset(std::vector<std::string> element_names,
          const std::vector<std::pair<std::string, std::string>>& cover_pairs);

    /// Built-in posets: "chain2", "chain3", "m2", "m3".
    static Poset named(std::string_view name);
    static const std::vector<std::string>& builtin_names();

    int size() const { return static_cast<int>(names_.size()); }
    bool leq(int a, int b) const { return leq_[a * size() + b]; }
    bool less(int a, int b) const { return a != b && leq(a, b); }
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

    int bottom() const { return bottom_; }
    int top() const { return top_; }

    const std::string& name(int i) const { return names_[i]; }
    std::optional<int> find(std::string_view name) const;
    /// Throws UnknownColorError when the name is not an element.
    int index(std::string_view name) const;

    /// Middle layer: every element other than bottom and top.
    std::vector<int> middles() const;

    Shape shape() const;

    /// Cover pairs used to build the poset, as index pairs.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    bool operator==(const Poset& other) const {
        return names_ == other.names_ && leq_ == other.leq_;
    }

private:
    std::vector<std::string> names_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<char> leq_;  // row-major size*size closure matrix
    int bottom_ = -1;
    int top_ = -1;
};

std::string to_string(Poset::Shape s);

}  // namespace lcg
