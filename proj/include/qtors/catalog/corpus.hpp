/*
   Copyright 2026 The quartic-torsion Authors.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QTORS_CATALOG_CORPUS_HPP
#define QTORS_CATALOG_CORPUS_HPP

#include <string_view>
#include <vector>

#include "qtors/torsion/structure.hpp"

namespace qtors {

/// A curve with its torsion over ℚ. Every entry is re-derived by the Lutz–Nagell
/// oracle in the tests; the stored value is only the expectation.
struct CorpusCurve {
    std::string_view spec;   // "a1,a2,a3,a4,a6"
    std::string_view label;  // Cremona label where known, else empty
    TorsionStructure rational;
};

/// One worked example: a curve over ℚ and a quartic field where its torsion grows.
struct ExampleRow {
    unsigned index;
    std::string_view curve;
    std::string_view label;
    std::string_view field;          // spec used for computation
    std::string_view printed_field;  // spec as published; differs from field only for the 13-torsion row
    TorsionStructure expected;
};

inline const std::vector<ExampleRow>& example_rows() {
    static const std::vector<ExampleRow> rows{
        {1, "1,0,0,-828,9072", "", "10,0,-20,0", "10,0,-20,0", {2, 10}},
        {2, "1,0,0,-5557266,-3547208700", "", "4,0,-26,0,13", "4,0,-26,0,13", {2, 12}},
        {3, "1,1,1,-5,2", "15a3", "-9,18,-6,-3", "-9,18,-6,-3", {2, 16}},
        // The published quartic has Galois group S4 and no 13-torsion over it. The field below is
        // generated by y(P) for a 13-torsion point P; it differs from the printed one in one digit
        // of the x coefficient and in the sign of the constant term.
        {4, "1,0,1,266982,42637516", "", "6842546623573620597,3933601383888,-187682160510,5688",
         "-6842546623573620597,3933601303888,-187682160510,5688", {1, 13}},
        {5, "1,1,1,-3,1", "50b1", "5,0,-10,0", "5,0,-10,0", {1, 15}},
        {6, "1,1,1,0,0", "15a8", "1,2,4,3", "1,2,4,3", {1, 16}},
        {7, "0,-1,1,-10,-20", "11a1", "1,1,1,1", "1,1,1,1", {5, 5}},
    };
    return rows;
}

/// y² = x(x² − 47x + 16³) over ℚ(√−7, √−15).
struct FujitaExample {
    std::string_view curve = "0,-47,0,4096,0";
    std::string_view field = "-7,-15";
    TorsionStructure expected{2, 16};
};

/// Small-height curves spanning all fifteen Mazur groups, plus the example-row curves and
/// the family seeds (fujita t=2, 6x6 t=2, 4x8 t=2, j=78608 s=1).
inline const std::vector<CorpusCurve>& embedded_corpus() {
    static const std::vector<CorpusCurve> c{
        {"0,0,1,-1,0", "37a1", {1, 1}},
        {"0,1,1,-2,0", "389a1", {1, 1}},
        {"0,-1,1,-7820,-263580", "11a2", {1, 1}},
        {"0,0,1,-7,6", "5077a1", {1, 1}},
        {"1,0,0,0,1", "", {1, 1}},
        {"1,-1,1,-2,-1", "", {1, 1}},
        {"0,0,0,1,1", "", {1, 1}},
        {"1,0,1,266982,42637516", "", {1, 1}},
        {"0,0,0,1,0", "", {1, 2}},
        {"0,0,0,-2,0", "", {1, 2}},
        {"0,0,0,2,0", "", {1, 2}},
        {"0,10,0,5,0", "", {1, 2}},
        {"1,0,1,-14,-64", "", {1, 2}},
        {"0,0,0,-432,0", "", {1, 2}},
        {"0,0,0,-43,-102", "", {1, 2}},
        {"1,1,0,-2,0", "", {1, 2}},
        {"0,0,1,0,0", "27a3", {1, 3}},
        {"0,1,1,-9,-15", "19a1", {1, 3}},
        {"0,0,1,0,-7", "27a1", {1, 3}},
        {"1,-1,1,-1,-14", "17a1", {1, 4}},
        {"0,0,0,4,0", "", {1, 4}},
        {"1,1,1,0,0", "15a8", {1, 4}},
        {"1,-1,1,-1,0", "", {1, 4}},
        {"1,1,1,-80,242", "", {1, 4}},
        {"0,-1,1,-10,-20", "11a1", {1, 5}},
        {"0,-1,1,0,0", "11a3", {1, 5}},
        {"1,1,1,-3,1", "50b1", {1, 5}},
        {"1,0,1,4,-6", "14a1", {1, 6}},
        {"0,0,0,0,1", "36a1", {1, 6}},
        {"1,0,1,-1,0", "", {1, 6}},
        {"0,1,0,-1,0", "", {1, 6}},
        {"0,0,0,-318529/768,-169543583/55296", "", {1, 6}},
        {"1,-1,1,-3,3", "26b1", {1, 7}},
        {"-1,-4,-4,0,0", "", {1, 7}},
        {"-5,-18,-18,0,0", "", {1, 7}},
        {"1,1,1,35,-28", "15a4", {1, 8}},
        {"-1/2,-3,-3,0,0", "", {1, 8}},
        {"0,-47,0,4096,0", "", {1, 8}},
        {"1,-1,1,-14,29", "54b3", {1, 9}},
        {"-3,-12,-12,0,0", "", {1, 9}},
        {"1,0,0,-45,81", "66c1", {1, 10}},
        {"-5,-24,-24,0,0", "", {1, 10}},
        {"1,0,0,-828,9072", "", {1, 10}},
        {"1,-1,1,-122,1721", "90c3", {1, 12}},
        {"43,-210,-210,0,0", "", {1, 12}},
        {"0,0,0,-1,0", "32a2", {2, 2}},
        {"0,0,0,-4,0", "", {2, 2}},
        {"0,0,0,-7,-6", "", {2, 2}},
        {"1,1,1,-10,-10", "15a1", {2, 4}},
        {"1,1,1,-5,2", "15a3", {2, 4}},
        {"1,0,0,-4,-1", "", {2, 4}},
        {"1,0,1,-19,26", "30a2", {2, 6}},
        {"11/5,-6/25,-6/25,0,0", "", {2, 6}},
        {"1,0,0,-5557266,-3547208700", "", {2, 6}},
        {"1,0,0,-1070,7812", "210e2", {2, 8}},
        {"0,337,0,20736,0", "", {2, 8}},
        {"1,36/625,36/625,0,0", "", {2, 8}},
    };
    return c;
}

/// Fields every corpus curve is run over: ℚ, three quadratic fields, ℚ(ζ₅), a second
/// cyclic quartic and ℚ(ζ₈).
inline const std::vector<std::string_view>& corpus_fields() {
    static const std::vector<std::string_view> f{"Q", "-1", "-3", "5", "1,1,1,1", "5,0,-10,0", "-1,2"};
    return f;
}

}  // namespace qtors

#endif  // QTORS_CATALOG_CORPUS_HPP
