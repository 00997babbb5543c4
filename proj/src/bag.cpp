#include "sumg/bag.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sumg {

LabelBag::LabelBag(std::vector<Label> values) : values_(std::move(values)) {
    for (Label x : values_) {
        if (x < 1) throw std::invalid_argument("bag values must be positive, got " + std::to_string(x));
    }
    std::sort(values_.begin(), values_.end());
}

std::vector<Label> LabelBag::distinct_values() const {
    std::vector<Label> out = values_;
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool LabelBag::contains(Label x) const {
    return std::binary_search(values_.begin(), values_.end(), x);
}

int LabelBag::multiplicity(Label x) const {
    auto [lo, hi] = std::equal_range(values_.begin(), values_.end(), x);
    return static_cast<int>(hi - lo);
}

LabelBag LabelBag::parse(std::istream& in) {
    std::vector<Label> values;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::string tok;
        while (tokens >> tok) {
            try {
                std::size_t used = 0;
                long long v = std::stoll(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                values.push_back(v);
            } catch (const std::exception&) {
                throw std::runtime_error("bag file line " + std::to_string(lineno) +
                                         ": bad integer '" + tok + "'");
            }
        }
    }
    try {
        return LabelBag(std::move(values));
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("bag file: ") + e.what());
    }
}

LabelBag LabelBag::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open bag file '" + path + "'");
    return parse(in);
}

LabelBag LabelBag::parse_string(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

std::string LabelBag::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out << ' ';
        out << values_[i];
    }
    return out.str();
}

}  // namespace sumg
