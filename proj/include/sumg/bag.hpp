#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sumg/graph.hpp"

namespace sumg {

/// Finite multiset of positive integers, kept sorted.
class LabelBag {
public:
    LabelBag() = default;
    explicit LabelBag(std::vector<Label> values);

    const std::vector<Label>& values() const { return values_; }
    std::vector<Label> distinct_values() const;
    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }

    bool contains(Label x) const;
    int multiplicity(Label x) const;

    bool operator==(const LabelBag& other) const = default;

    // Bag file: whitespace-separated positive integers, '#' comments.
    static LabelBag parse(std::istream& in);
    static LabelBag parse_file(const std::string& path);
    static LabelBag parse_string(const std::string& text);
    std::string to_string() const;

private:
    std::vector<Label> values_;
};

}  // namespace sumg
