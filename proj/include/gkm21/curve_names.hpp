#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkm21 {

// Names for the 24 elliptic curves on E x E: four letters times indices
// 0,1,2, unprimed (first family) and primed (second family).
enum class CurveLetter { E, F, V, Pi };

struct CurveName {
    CurveLetter letter = CurveLetter::E;
    int index = 0;      // 0, 1, 2
    bool primed = false;
    friend bool operator==(const CurveName&, const CurveName&) = default;
    friend auto operator<=>(const CurveName&, const CurveName&) = default;
};

inline std::string to_string(const CurveName& n) {
    std::string s;
    switch (n.letter) {
        case CurveLetter::E: s = "E"; break;
        case CurveLetter::F: s = "F"; break;
        case CurveLetter::V: s = "V"; break;
        case CurveLetter::Pi: s = "pi"; break;
    }
    s += std::to_string(n.index);
    if (n.primed) s += "'";
    return s;
}

inline CurveName parse_curve_name(const std::string& text) {
    std::string t = text;
    CurveName n;
    if (!t.empty() && t.back() == '\'') {
        n.primed = true;
        t.pop_back();
    }
    size_t pos = 0;
    if (t.rfind("pi", 0) == 0) {
        n.letter = CurveLetter::Pi;
        pos = 2;
    } else if (!t.empty() && (t[0] == 'E' || t[0] == 'F' || t[0] == 'V')) {
        n.letter = t[0] == 'E' ? CurveLetter::E : (t[0] == 'F' ? CurveLetter::F : CurveLetter::V);
        pos = 1;
    } else {
        throw std::invalid_argument("unknown curve name '" + text + "'");
    }
    if (pos + 1 != t.size() || t[pos] < '0' || t[pos] > '2')
        throw std::invalid_argument("unknown curve name '" + text + "'");
    n.index = t[pos] - '0';
    return n;
}

// All 24 names: E0..pi2 then E0'..pi2', letter-major.
inline std::vector<CurveName> all_curve_names() {
    std::vector<CurveName> out;
    for (int primed = 0; primed < 2; ++primed)
        for (CurveLetter l : {CurveLetter::E, CurveLetter::F, CurveLetter::V, CurveLetter::Pi})
            for (int i = 0; i < 3; ++i) out.push_back(CurveName{l, i, primed != 0});
    return out;
}

// The eight base curves in the table order E0, F0, V0, pi0, E0', F0', V0', pi0'.
inline std::array<CurveName, 8> base_curve_names() {
    return {CurveName{CurveLetter::E, 0, false}, CurveName{CurveLetter::F, 0, false},
            CurveName{CurveLetter::V, 0, false}, CurveName{CurveLetter::Pi, 0, false},
            CurveName{CurveLetter::E, 0, true},  CurveName{CurveLetter::F, 0, true},
            CurveName{CurveLetter::V, 0, true},  CurveName{CurveLetter::Pi, 0, true}};
}

}  // namespace gkm21
