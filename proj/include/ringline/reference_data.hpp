#pragma once

#include <array>
#include <string_view>

/// Reference structures for the GF(2)xGF(2)xGF(2) geometry. The verify
/// suites and the acceptance tests compare computed output against these
/// frozen tables; the library never derives anything from them.
namespace ringline::refdata {

/// Element letters in display order.
inline constexpr std::string_view kLetters = "abcdefgh";

/// 8x8 operation tables over the letters, row r = kLetters[r].
inline constexpr std::array<std::string_view, 8> kAddTable = {
    "abcdefgh",  // a
    "baefcdhg",  // b
    "ceagbhdf",  // c
    "dfgahbce",  // d
    "ecbhagfd",  // e
    "fdhbgaec",  // f
    "ghdcfeab",  // g
    "hgfedcba",  // h
};

inline constexpr std::array<std::string_view, 8> kMulTable = {
    "aaaaaaaa",  // a
    "abaabbab",  // b
    "aacacacc",  // c
    "aaadaddd",  // d
    "abcaebce",  // e
    "abadbfdf",  // f
    "aacdcdgg",  // g
    "abcdefgh",  // h
};

/// Canonical label orders used by every shell table.
inline constexpr std::array<std::string_view, 12> kInnerOrder = {
    "I1S", "I2S", "I3S", "I1F", "I2F", "I3F",
    "J1S", "J2S", "J3S", "J1F", "J2F", "J3F"};

inline constexpr std::array<std::string_view, 12> kOuterOrder = {
    "F1+", "F2+", "F3+", "F1-", "F2-", "F3-",
    "S1+", "S2+", "S3+", "S1-", "S2-", "S3-"};

inline constexpr std::array<std::string_view, 3> kNucleusOrder = {"U", "V",
                                                                  "W"};

/// The 27 points by label: coordinates as element letters.
struct LabelledPoint {
  std::string_view label;
  char alpha;
  char beta;
};

inline constexpr std::array<LabelledPoint, 27> kPoints = {{
    {"U", 'h', 'a'},   {"V", 'a', 'h'},   {"W", 'h', 'h'},
    {"I1S", 'h', 'b'}, {"I2S", 'h', 'c'}, {"I3S", 'h', 'd'},
    {"I1F", 'h', 'e'}, {"I2F", 'h', 'f'}, {"I3F", 'h', 'g'},
    {"J1S", 'b', 'h'}, {"J2S", 'c', 'h'}, {"J3S", 'd', 'h'},
    {"J1F", 'e', 'h'}, {"J2F", 'f', 'h'}, {"J3F", 'g', 'h'},
    {"S1+", 'e', 'd'}, {"S2+", 'f', 'c'}, {"S3+", 'g', 'b'},
    {"S1-", 'd', 'e'}, {"S2-", 'c', 'f'}, {"S3-", 'b', 'g'},
    {"F1+", 'e', 'f'}, {"F2+", 'e', 'g'}, {"F3+", 'f', 'g'},
    {"F1-", 'f', 'e'}, {"F2-", 'g', 'e'}, {"F3-", 'g', 'f'},
}};

/// Distant('+') / neighbour('-') tables, rows and columns in the canonical
/// orders above.

/// Inner shell x inner shell.
inline constexpr std::array<std::string_view, 12> kInnerTable = {
    "-----+-++--+",  // I1S
    "----+-+-+-+-",  // I2S
    "---+--++-+--",  // I3S
    "--+-----+---",  // I1F
    "-+-----+----",  // I2F
    "+-----+-----",  // I3F
    "-++--+-----+",  // J1S
    "+-+-+-----+-",  // J2S
    "++-+-----+--",  // J3S
    "--+-----+---",  // J1F
    "-+-----+----",  // J2F
    "+-----+-----",  // J3F
};

/// Outer shell x outer shell.
inline constexpr std::array<std::string_view, 12> kOuterTable = {
    "--+-+--+-+--",  // F1+
    "---+-+--++--",  // F2+
    "+---+---+-+-",  // F3+
    "-+---++---+-",  // F1-
    "+-+---+----+",  // F2-
    "-+-+---+---+",  // F3-
    "---++----+--",  // S1+
    "+----+----+-",  // S2+
    "-++--------+",  // S3+
    "++----+-----",  // S1-
    "--++---+----",  // S2-
    "----++--+---",  // S3-
};

/// Outer shell rows x inner shell columns.
inline constexpr std::array<std::string_view, 12> kCrossTable = {
    "-+---+--+--+",  // F1+
    "+---+---+-+-",  // F2+
    "+--+---+-+--",  // F3+
    "--+--+-+---+",  // F1-
    "--+-+-+---+-",  // F2-
    "-+-+--+--+--",  // F3-
    "---+----+-++",  // S1+
    "----+--+-+-+",  // S2+
    "-----++--++-",  // S3+
    "--+-++---+--",  // S1-
    "-+-+-+----+-",  // S2-
    "+--++------+",  // S3-
};

/// Nucleus rows x inner shell columns.
inline constexpr std::array<std::string_view, 3> kNucleusInnerTable = {
    "------++++++",  // U
    "++++++------",  // V
    "------------",  // W
};

/// Nucleus rows x outer shell columns.
inline constexpr std::array<std::string_view, 3> kNucleusOuterTable = {
    "------------",  // U
    "------------",  // V
    "------++++++",  // W
};

}  // namespace ringline::refdata
