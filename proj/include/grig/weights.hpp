#pragma once

#include <stdexcept>
#include <string>

#include "grig/numberfield.hpp"
#include "grig/words.hpp"

namespace grig {

// A weight assigns a positive cost to each generator; the induced length of
// an element is the cheapest total cost of a representing word.
struct WeightScheme {
    std::string name;
    FieldElement wa, wb, wc, wd;

    const FieldElement& of(char g) const {
        switch (g) {
            case 'a': return wa;
            case 'b': return wb;
            case 'c': return wc;
            case 'd': return wd;
        }
        throw std::invalid_argument("weight lookup of a non-generator");
    }

    bool all_positive() const {
        return wa.sign() > 0 && wb.sign() > 0 && wc.sign() > 0 && wd.sign() > 0;
    }
};

inline WeightScheme unit_weights() {
    return {"unit", FieldElement(1), FieldElement(1), FieldElement(1), FieldElement(1)};
}

// The distinguished weight:
//   w(a) = 1 - eta^3 = eta^2 + eta - 1     w(c) = 1 - eta^2
//   w(b) = eta^3     = 2 - eta - eta^2     w(d) = 1 - eta
inline WeightScheme omega_weights() {
    return {"omega",
            FieldElement(Rat(-1), Rat(1), Rat(1)),
            FieldElement(Rat(2), Rat(-1), Rat(-1)),
            FieldElement(Rat(1), Rat(0), Rat(-1)),
            FieldElement(Rat(1), Rat(-1), Rat(0))};
}

inline WeightScheme scheme_by_name(const std::string& name) {
    if (name == "unit") return unit_weights();
    if (name == "omega") return omega_weights();
    throw std::invalid_argument("unknown weight scheme: " + name);
}

inline FieldElement word_weight(const Word& w, const WeightScheme& ws) {
    FieldElement total;
    for (char ch : w) total += ws.of(ch);
    return total;
}

}  // namespace grig
