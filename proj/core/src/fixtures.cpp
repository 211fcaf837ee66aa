#include "walkclass/fixtures.hpp"

#include <sstream>

namespace walkclass {

const std::vector<Table1Row>& table1() {
    static const std::vector<Table1Row> rows = {
        {"A000012", "00000001", "1, 1, 1, 1, 1, 1, 1, 1", 1, 0, 1, 1, 1, 1, 1, 0, 1, "0", "1"},
        {"A000079", "00000011", "1, 2, 4, 8, 16, 32, 64, 128", 1, 0, 1, 1, 1, 1, 2, 0, 1, "0", "1"},
        {"A001405", "00000101", "1, 1, 2, 3, 6, 10, 20, 35", 2, 1, 2, 3, 2, 2, 2, 0, 1, "-1/2",
         "(/ (sqrt 2) (gamma 1/2))"},
        {"A000244", "00001011", "1, 3, 9, 27, 81, 243, 729, 2187", 1, 0, 1, 1, 1, 1, 3, 0, 1, "0", "1"},
        {"A001006", "00110010", "1, 1, 2, 4, 9, 21, 51, 127", 2, 1, 2, 3, 2, 2, 3, 0, 1, "-3/2",
         "(/ (* 3 (sqrt 3)) (* 2 (gamma 1/2)))"},
        {"A005773", "00000111", "1, 2, 5, 13, 35, 96, 267, 750", 2, 1, 2, 3, 2, 2, 3, 0, 1, "-1/2",
         "(/ (sqrt 3) (gamma 1/2))"},
        {"A126087", "00010101", "1, 1, 3, 5, 15, 29, 87, 181", 3, 1, 2, 5, 2, 2, 0, 2, 2, "-3/2",
         "(/ (* 12 (sqrt 2)) (gamma 1/2))"},
        {"A151255", "10001100", "1, 1, 2, 3, 8, 15, 39, 77", 6, 8, 4, 16, -1, -1, 0, 2, 2, "-2",
         "(/ (* 24 (sqrt 2)) pi)"},
        {"A151265", "01010001", "1, 1, 3, 7, 17, 47, 125, 333", 6, 4, 4, 9, 6, 8, 3, 0, 1, "-3/4",
         "(/ (* 2 (sqrt 2)) (gamma 1/4))"},
        {"A151266", "00110001", "1, 1, 3, 7, 19, 49, 139, 379", 7, 10, 5, 16, -1, -1, 3, 0, 1, "-1/2",
         "(/ (sqrt 3) (* 2 (gamma 1/2)))"},
        {"A151278", "10001010", "1, 2, 4, 10, 26, 66, 178, 488", 7, 4, 4, 12, 6, 8, 3, 0, 1, "-3/4",
         "(/ (* 3 (sqrt 3)) (* (sqrt 2) (gamma 1/4)))"},
        {"A151281", "00001101", "1, 2, 6, 16, 48, 136, 408, 1184", 3, 1, 2, 5, 2, 2, 3, 0, 1, "0", "1/2"},
        {"A005558", "00111100", "1, 1, 3, 6, 20, 50, 175, 490", 2, 3, 3, 5, -1, -1, 4, 0, 1, "-2",
         "(/ 8 pi)"},
        {"A005566", "01011010", "1, 2, 6, 18, 60, 200, 700, 2450", 2, 2, 3, 4, -1, -1, 4, 0, 1, "-1",
         "(/ 4 pi)"},
        {"A018224", "10100101", "1, 1, 4, 9, 36, 100, 400, 1225", 2, 3, 3, 5, -1, -1, 4, 0, 1, "-1",
         "(/ 2 pi)"},
        {"A060899", "00011101", "1, 2, 8, 24, 96, 320, 1280, 4480", 2, 1, 2, 3, 2, 2, 4, 0, 1, "-1/2",
         "(/ (sqrt 2) (gamma 1/2))"},
        {"A060900", "10011001", "1, 2, 7, 21, 78, 260, 988, 3458", 2, 3, 3, 5, 8, 9, 4, 0, 1, "-2/3",
         "(/ (* 4 (sqrt 3)) (* 3 (gamma 1/3)))"},
        {"A128386", "10010101", "1, 1, 4, 7, 28, 58, 232, 523", 3, 1, 2, 5, 2, 2, 0, 2, 3, "-3/2",
         "(/ (* 6 (sqrt 2)) (gamma 1/2))"},
        {"A129637", "00001111", "1, 3, 11, 41, 157, 607, 2367, 9277", 3, 1, 2, 5, 2, 2, 4, 0, 1, "0",
         "1/2"},
        {"A151261", "10011100", "1, 1, 3, 5, 17, 34, 121, 265", 5, 8, 4, 15, -1, -1, 0, 2, 3, "-2",
         "(/ (* 12 (sqrt 3)) pi)"},
        {"A151282", "00010111", "1, 2, 6, 18, 58, 190, 638, 2170", 3, 1, 2, 5, 2, 2, 1, 2, 2, "-3/2",
         "(/ (* (pow A 2) (pow B 3/2)) (* (pow 2 3/4) (gamma 1/2)))"},
        {"A151291", "00111001", "1, 2, 7, 23, 84, 301, 1127, 4186", 6, 10, 5, 15, -1, -1, 4, 0, 1,
         "-1/2", "(/ 4 (* 3 (gamma 1/2)))"},
        {"A151275", "10110101", "1, 1, 5, 13, 61, 199, 939, 3389", 9, 18, 5, 24, -1, -1, 0, 2, 6, "-2",
         "(/ (* 12 (sqrt 30)) pi)"},
        {"A151287", "10111010", "1, 2, 6, 21, 76, 290, 1148, 4627", 7, 11, 5, 19, -1, -1, 2, 2, 2, "-2",
         "(/ (* (sqrt 8) (pow A 7/2)) pi)"},
        {"A151292", "10010111", "1, 2, 7, 23, 85, 314, 1207, 4682", 3, 1, 2, 5, 2, 2, 1, 2, 3, "-3/2",
         "(/ (* (pow 3 1/4) (pow C 2) (pow D 3/2)) (* 8 (gamma 1/2)))"},
        {"A151302", "10100111", "1, 2, 8, 29, 129, 535, 2467, 10844", 9, 18, 5, 24, -1, -1, 5, 0, 1,
         "-1/2", "(/ (sqrt 5) (* 3 (sqrt 2) (gamma 1/2)))"},
        {"A151307", "01011101", "1, 2, 9, 34, 151, 659, 2999, 13714", 8, 15, 5, 20, -1, -1, 5, 0, 1,
         "-1/2", "(/ (sqrt 5) (* 2 (sqrt 2) (gamma 1/2)))"},
        {"A151318", "00011111", "1, 3, 13, 55, 249, 1131, 5253, 24543", 2, 1, 2, 3, 2, 2, 5, 0, 1,
         "-1/2", "(/ (sqrt 5/2) (gamma 1/2))"},
        {"A129400", "01111110", "1, 2, 8, 32, 144, 672, 3264, 16256", 2, 1, 2, 3, 2, 2, 6, 0, 1, "-3/2",
         "(/ (* 3 (sqrt 3)) (* 2 (gamma 1/2)))"},
        {"A151297", "11011110", "1, 2, 7, 26, 105, 444, 1944, 8728", 7, 11, 5, 18, -1, -1, 2, 2, 3, "-2",
         "(/ (* (sqrt 3) (pow C 7/2)) (* 2 pi))"},
        {"A151312", "10111101", "1, 2, 10, 39, 210, 960, 5340, 26250", 4, 5, 3, 8, -1, -1, 6, 0, 1, "-1",
         "(/ (sqrt 6) pi)"},
        {"A151323", "11011011", "1, 3, 14, 67, 342, 1790, 9580, 52035", 2, 1, 2, 3, 4, 4, 6, 0, 1,
         "-3/4", "(/ (* (sqrt 2) (pow 3 3/4)) (gamma 1/4))"},
        {"A151326", "01011111", "1, 3, 15, 74, 392, 2116, 11652, 64967", 7, 14, 5, 18, -1, -1, 6, 0, 1,
         "-1/2", "(/ (* 2 (sqrt 3)) (* 3 (gamma 1/2)))"},
        {"A151314", "11110111", "1, 2, 11, 49, 277, 1479, 8679, 49974", 9, 18, 5, 24, -1, -1, 2, 2, 6,
         "-2", "(/ (* E (pow F 7/2)) (* 5 (sqrt 95) pi))"},
        {"A151329", "10111111", "1, 3, 16, 86, 509, 3065, 19088, 120401", 9, 18, 5, 24, -1, -1, 7, 0, 1,
         "-1/2", "(/ (sqrt 7/3) (* 3 (gamma 1/2)))"},
        {"A151331", "11111111", "1, 3, 18, 105, 684, 4550, 31340, 219555", 3, 4, 3, 6, -1, -1, 8, 0, 1,
         "-1", "(/ 8 (* 3 pi))"},
    };
    return rows;
}

const std::vector<Table2Row>& table2() {
    static const std::vector<Table2Row> rows = {
        {"A025237", "1, 1, 4, 10, 37, 121, 451, 1639", "00001000000000001100100100",
         "00000001000000001100100100", 2, 1, 2, 3, 2, 2},
        {"A149576", "1, 1, 5, 15, 51, 199, 755, 2789", "00001000010010100000000001",
         "00000001010010100000000001", 11, 22, 7, 31, 12, 17},
        {"A149847", "1, 2, 4, 14, 46, 134, 502, 1820", "10010010000000001000010000",
         "10010010000000001000000010", 8, 6, 4, 16, 6, 9},
    };
    return rows;
}

const std::vector<Table3Row>& table3() {
    static const std::vector<Table3Row> rows = {
        {"A148060", "1, 1, 2, 3, 12, 25, 77, 161",
         {"10010010000000001100000000", "10010010000000001000100000",
          "10010010100000000000010000", "10010010100000000000000010"},
         9, 17, 5, 28},
        {"A148438", "1, 1, 2, 6, 15, 43, 143, 437",
         {"00000000110010100000010000", "00000100010010100000000010",
          "00000000110010100000000010"},
         7, 10, 5, 17},
        {"A149090", "1, 1, 4, 7, 34, 73, 349, 817",
         {"10000000000000001100100100", "00110100100000000000000010",
          "00000010000000001100100100"},
         9, 17, 5, 28},
        {"A149589", "1, 1, 5, 15, 57, 205, 809, 3119",
         {"00001000000000000100100101", "00000001000000000100100101"},
         10, 21, 6, 29},
        {"A005817", "1, 1, 2, 4, 10, 25, 70, 196", {"00000100000010010010000000"}, 2, 2, 3, 4},
        {"A148005", "1, 1, 2, 3, 8, 15, 44, 91", {"00000010010001000000100000"}, 5, 8, 4, 15},
        {"A148052", "1, 1, 2, 3, 10, 20, 63, 133", {"00000010010001100100000000"}, 7, 18, 6, 27},
        {"A148068", "1, 1, 2, 3, 12, 25, 87, 189", {"10000010000001000100000100"}, 7, 17, 6, 25},
        {"A148072", "1, 1, 2, 4, 9, 21, 56, 148", {"00000100010000100000010000"}, 12, 57, 10, 69},
        {"A148162", "1, 1, 2, 4, 11, 31, 91, 267", {"00001000000001000100000100"}, 4, 3, 3, 6},
        {"A148284", "1, 1, 2, 5, 12, 32, 97, 282", {"00000100010010100000010000"}, 14, 57, 10, 71},
        {"A148331", "1, 1, 2, 5, 14, 42, 137, 464", {"00000010110100000000010000"}, 11, 43, 9, 53},
        {"A148507", "1, 1, 3, 5, 17, 34, 126, 279", {"00000010010011000000100000"}, 4, 6, 4, 11},
        {"A148525", "1, 1, 3, 5, 19, 39, 155, 349", {"00010000010001100000100000"}, 7, 16, 6, 25},
        {"A148548", "1, 1, 3, 5, 21, 44, 179, 405", {"10000000010001100000000100"}, 7, 19, 6, 28},
        {"A148689", "1, 1, 3, 7, 23, 64, 223, 687", {"00000100010000100000001000"}, 8, 25, 8, 31},
        {"A148703", "1, 1, 3, 7, 23, 71, 246, 848", {"00001000000001000100100100"}, 4, 3, 3, 6},
        {"A148790", "1, 1, 3, 8, 25, 77, 257, 853", {"00000000100110000000001000"}, 6, 12, 5, 18},
        {"A148934", "1, 1, 3, 9, 28, 100, 365, 1365", {"00000001010100000000101000"}, 5, 5, 4, 11},
        {"A149279", "1, 1, 4, 11, 44, 133, 585, 2067", {"00000100010010100000001000"}, 14, 62, 10, 75},
        {"A149290", "1, 1, 4, 11, 45, 166, 690, 2855", {"00001000000000101101000000"}, 11, 53, 9, 61},
        {"A149363", "1, 1, 4, 12, 44, 160, 635, 2520", {"00000000100110001001000000"}, 7, 16, 6, 24},
        {"A149632", "1, 1, 5, 15, 69, 217, 1061, 3923", {"00000000110010100000000001"}, 7, 11, 5, 16},
        {"A149713", "1, 1, 5, 17, 71, 289, 1269, 5529", {"00001000000000000101000101"}, 8, 22, 7, 29},
        {"A150054", "1, 2, 6, 18, 62, 215, 809, 3045", {"00001000010001100000010000"}, 12, 39, 9, 52},
        {"A150370", "1, 2, 7, 23, 94, 366, 1572, 6510", {"00000100010001100000001000"}, 14, 62, 10, 75},
        {"A150410", "1, 2, 7, 24, 94, 370, 1537, 6440", {"00000000100111000000001000"}, 4, 6, 4, 11},
        {"A150471", "1, 2, 7, 25, 99, 402, 1687, 7242", {"00001000001010001000010000"}, 12, 33, 8, 42},
        {"A150499", "1, 2, 7, 25, 101, 414, 1773, 7680", {"00000001001011000000000010"}, 14, 48, 9, 61},
        {"A150764", "1, 2, 8, 30, 126, 530, 2330, 10290", {"00000100000110001000001000"}, 7, 13, 6, 19},
        {"A150950", "1, 2, 9, 35, 155, 677, 3095, 14118", {"00001000000000000100101001"}, 8, 23, 7, 29},
        {"A151053", "1, 3, 10, 37, 144, 586, 2454, 10491", {"00001000010001010000010000"}, 14, 38, 9, 48},
    };
    return rows;
}

const std::vector<SpotSequence>& spot_sequences() {
    static const std::vector<SpotSequence> rows = {
        {"A026378", "00000000000011010000010010",
         "1, 4, 17, 75, 339, 1558, 7247, 34016, 160795, 764388"},
        {"A005817", "00000100000010010010000000", "1, 1, 2, 4, 10, 25, 70, 196, 588, 1764"},
        {"A149080", "00100010000000000100000001",
         "1, 1, 4, 7, 28, 70, 280, 787, 3148, 9526, 38104"},
        {"A149424", "00001000001010000000000001",
         "1, 1, 4, 13, 40, 136, 496, 1753, 6256, 22912, 85216"},
    };
    return rows;
}

std::vector<Int> parse_terms(const std::string& csv) {
    std::vector<Int> out;
    std::string tok;
    std::istringstream in(csv);
    while (std::getline(in, tok, ',')) {
        const auto a = tok.find_first_not_of(" \t");
        const auto b = tok.find_last_not_of(" \t");
        out.emplace_back(tok.substr(a, b - a + 1));
    }
    return out;
}

SurdQ table1_rho(const Table1Row& row) {
    return SurdQ{Rat(row.rho_a), Rat(row.rho_b), Int(row.rho_c)};
}

const Table1Row* table1_find(const std::vector<std::string>& member_bits) {
    for (const Table1Row& row : table1())
        for (const std::string& b : member_bits)
            if (b == row.bits) return &row;
    return nullptr;
}

namespace {

PolyQ poly(std::vector<long> asc) {
    std::vector<Rat> c;
    c.reserve(asc.size());
    for (long x : asc) c.emplace_back(x);
    return PolyQ(std::move(c));
}

} // namespace

const DiffOp& kreweras_ode() {
    static const DiffOp L = {{
        poly({36, 3798, 12852, -55404, -159408, 116640}),
        poly({-756, 1518, 5724, 100548, -223236, -530712, 408240}),
        poly({120, -1704, 2739, -4383, 110106, -177228, -325620, 268272}),
        poly({0, 104, -810, 1098, -3078, 31590, -42768, -58320, 52488}),
        poly({0, 0, 16, -92, 108, -324, 2376, -2916, -2916, 2916}),
    }};
    return L;
}

const RecOp& kreweras_rec() {
    static const RecOp R = {{
                                poly({-318816, -612360, -374220, -87480, -6804}),
                                poly({-353160, -424116, -182088, -33696, -2268}),
                                poly({748116, 828360, 336528, 59184, 3780}),
                                poly({-21888, -70056, -38538, -7614, -504}),
                                poly({72210, 54843, 15369, 1878, 84}),
                                poly({-155058, -107965, -28099, -3242, -140}),
                                poly({37128, 24848, 6194, 682, 28}),
                            },
                            0};
    return R;
}

const AlgEq& kreweras_algeq() {
    static const AlgEq P = {{
        poly({2, 1, 43}),
        poly({-2, 10, -66, 162}),
        poly({0, -9, 53, -213, 405}),
        poly({0, 0, -16, 120, -396, 540}),
        poly({0, 0, 0, -14, 120, -369, 405}),
        poly({0, 0, 0, 0, -6, 54, -162, 162}),
        poly({0, 0, 0, 0, 0, -1, 9, -27, 27}),
    }};
    return P;
}

} // namespace walkclass
