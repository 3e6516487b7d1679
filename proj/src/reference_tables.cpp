#include "planarlim/reference_tables.hpp"

#include <sstream>
#include <stdexcept>

#include "planarlim/reference_data.hpp"

namespace planarlim {

Partition parse_monomial(const std::string& text) {
    if (text == "1") return Partition();
    std::vector<Partition::Part> parts;
    std::stringstream ss(text);
    std::string factor;
    while (std::getline(ss, factor, '*')) {
        if (factor.size() < 2 || factor[0] != 'a') throw std::invalid_argument("bad monomial factor: " + factor);
        size_t caret = factor.find('^');
        size_t start = factor[1] == '_' ? 2 : 1;
        int j = std::stoi(factor.substr(start, caret == std::string::npos ? std::string::npos : caret - start));
        int m = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
        parts.emplace_back(j, m);
    }
    return Partition(parts);
}

CoefficientTable parse_coefficient_table(const std::string& text) {
    CoefficientTable out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        std::stringstream ls(line);
        std::string coeff, mono;
        if (!(ls >> coeff)) continue;
        if (!(ls >> mono)) throw std::invalid_argument("coefficient line without monomial: " + line);
        out.emplace_back(parse_monomial(mono), Rat::parse(coeff));
    }
    return out;
}

const CoefficientTable& reference_R() {
    static const CoefficientTable t = parse_coefficient_table(data::kReferenceR);
    return t;
}

const CoefficientTable& reference_S() {
    static const CoefficientTable t = parse_coefficient_table(data::kReferenceS);
    return t;
}

const CoefficientTable& reference_F0() {
    static const CoefficientTable t = parse_coefficient_table(data::kReferenceF0);
    return t;
}

}  // namespace planarlim
