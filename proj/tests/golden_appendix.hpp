#pragma once

// Frozen reference data: every subpermutation of the Thue-Morse word of
// length 2 through 9, grouped by ascent/descent form. Doubled groups list
// the member with the larger first rank first.

#include <map>
#include <string>
#include <vector>

namespace golden {

struct FormEntry {
  std::string form;
  std::vector<std::vector<int>> perms;
};

inline const std::map<int, std::vector<FormEntry>>& appendix() {
  static const std::map<int, std::vector<FormEntry>> table = {
      {2,
       {
           {"0", {{1, 2}}},
           {"1", {{2, 1}}},
       }},
      {3,
       {
           {"00", {{1, 2, 3}}},
           {"01", {{2, 3, 1}, {1, 3, 2}}},
           {"10", {{3, 1, 2}, {2, 1, 3}}},
           {"11", {{3, 2, 1}}},
       }},
      {4,
       {
           {"001", {{1, 2, 4, 3}}},
           {"010", {{2, 4, 1, 3}, {1, 3, 2, 4}}},
           {"011", {{2, 4, 3, 1}}},
           {"100", {{3, 1, 2, 4}}},
           {"101", {{4, 2, 3, 1}, {3, 1, 4, 2}}},
           {"110", {{4, 3, 1, 2}}},
       }},
      {5,
       {
           {"0010", {{1, 2, 4, 3, 5}}},
           {"0011", {{2, 3, 5, 4, 1}, {1, 3, 5, 4, 2}}},
           {"0100", {{2, 4, 1, 3, 5}}},
           {"0101", {{1, 4, 2, 5, 3}}},
           {"0110", {{3, 5, 4, 1, 2}, {2, 5, 4, 1, 3}}},
           {"1001", {{4, 1, 2, 5, 3}, {3, 1, 2, 5, 4}}},
           {"1010", {{5, 2, 4, 1, 3}}},
           {"1011", {{4, 2, 5, 3, 1}}},
           {"1100", {{5, 3, 1, 2, 4}, {4, 3, 1, 2, 5}}},
           {"1101", {{5, 4, 2, 3, 1}}},
       }},
      {6,
       {
           {"00101", {{1, 2, 5, 3, 6, 4}}},
           {"00110", {{2, 4, 6, 5, 1, 3}, {1, 3, 6, 5, 2, 4}}},
           {"01001", {{2, 5, 1, 3, 6, 4}}},
           {"01011", {{2, 5, 3, 6, 4, 1}}},
           {"01100", {{3, 6, 4, 1, 2, 5}, {2, 5, 4, 1, 3, 6}}},
           {"01101", {{3, 6, 5, 2, 4, 1}}},
           {"10010", {{4, 1, 2, 5, 3, 6}}},
           {"10011", {{5, 2, 3, 6, 4, 1}, {4, 1, 3, 6, 5, 2}}},
           {"10100", {{5, 2, 4, 1, 3, 6}}},
           {"10110", {{5, 2, 6, 4, 1, 3}}},
           {"11001", {{6, 4, 1, 2, 5, 3}, {5, 3, 1, 2, 6, 4}}},
           {"11010", {{6, 5, 2, 4, 1, 3}}},
       }},
      {7,
       {
           {"001011", {{1, 3, 6, 4, 7, 5, 2}}},
           {"001100", {{2, 4, 7, 5, 1, 3, 6}}},
           {"001101", {{2, 4, 7, 6, 3, 5, 1}}},
           {"010010", {{2, 5, 1, 3, 6, 4, 7}}},
           {"010011", {{3, 6, 2, 4, 7, 5, 1}}},
           {"010110", {{2, 6, 3, 7, 5, 1, 4}}},
           {"011001", {{3, 7, 5, 1, 2, 6, 4}, {2, 6, 4, 1, 3, 7, 5}}},
           {"011010", {{4, 7, 6, 2, 5, 1, 3}}},
           {"100101", {{4, 1, 2, 6, 3, 7, 5}}},
           {"100110", {{6, 2, 4, 7, 5, 1, 3}, {5, 1, 3, 7, 6, 2, 4}}},
           {"101001", {{6, 2, 5, 1, 3, 7, 4}}},
           {"101100", {{5, 2, 6, 4, 1, 3, 7}}},
           {"101101", {{6, 3, 7, 5, 2, 4, 1}}},
           {"110010", {{6, 4, 1, 2, 5, 3, 7}}},
           {"110011", {{6, 4, 1, 3, 7, 5, 2}}},
           {"110100", {{7, 5, 2, 4, 1, 3, 6}}},
       }},
      {8,
       {
           {"0010110", {{1, 3, 7, 4, 8, 6, 2, 5}}},
           {"0011001", {{2, 4, 8, 6, 1, 3, 7, 5}}},
           {"0011010", {{2, 5, 8, 7, 3, 6, 1, 4}}},
           {"0100101", {{2, 5, 1, 3, 7, 4, 8, 6}}},
           {"0100110", {{3, 7, 2, 5, 8, 6, 1, 4}}},
           {"0101100", {{2, 6, 3, 7, 5, 1, 4, 8}}},
           {"0101101", {{3, 7, 4, 8, 6, 2, 5, 1}}},
           {"0110010", {{3, 7, 5, 1, 2, 6, 4, 8}}},
           {"0110011", {{3, 7, 5, 1, 4, 8, 6, 2}}},
           {"0110100", {{4, 8, 6, 2, 5, 1, 3, 7}}},
           {"1001011", {{5, 1, 3, 7, 4, 8, 6, 2}}},
           {"1001100", {{6, 2, 4, 8, 5, 1, 3, 7}}},
           {"1001101", {{6, 2, 4, 8, 7, 3, 5, 1}}},
           {"1010010", {{6, 2, 5, 1, 3, 7, 4, 8}}},
           {"1010011", {{7, 3, 6, 2, 4, 8, 5, 1}}},
           {"1011001", {{6, 2, 7, 4, 1, 3, 8, 5}}},
           {"1011010", {{7, 4, 8, 6, 2, 5, 1, 3}}},
           {"1100101", {{7, 4, 1, 2, 6, 3, 8, 5}}},
           {"1100110", {{7, 5, 1, 3, 8, 6, 2, 4}}},
           {"1101001", {{8, 6, 2, 5, 1, 3, 7, 4}}},
       }},
      {9,
       {
           {"00101100", {{1, 3, 7, 4, 8, 6, 2, 5, 9}}},
           {"00101101", {{2, 4, 8, 5, 9, 7, 3, 6, 1}, {1, 4, 8, 5, 9, 7, 3, 6, 2}}},
           {"00110010", {{2, 4, 8, 6, 1, 3, 7, 5, 9}}},
           {"00110100", {{2, 5, 9, 7, 3, 6, 1, 4, 8}}},
           {"01001011", {{3, 6, 1, 4, 8, 5, 9, 7, 2}, {2, 6, 1, 4, 8, 5, 9, 7, 3}}},
           {"01001100", {{3, 7, 2, 5, 9, 6, 1, 4, 8}}},
           {"01011001", {{2, 7, 3, 8, 5, 1, 4, 9, 6}}},
           {"01011010", {{4, 8, 5, 9, 7, 2, 6, 1, 3}, {3, 8, 5, 9, 7, 2, 6, 1, 4}}},
           {"01100101", {{3, 8, 5, 1, 2, 7, 4, 9, 6}}},
           {"01100110", {{3, 8, 6, 1, 4, 9, 7, 2, 5}}},
           {"01101001", {{5, 9, 7, 2, 6, 1, 3, 8, 4}, {4, 9, 7, 2, 6, 1, 3, 8, 5}}},
           {"10010110", {{6, 1, 3, 8, 4, 9, 7, 2, 5}, {5, 1, 3, 8, 4, 9, 7, 2, 6}}},
           {"10011001", {{7, 2, 4, 9, 6, 1, 3, 8, 5}}},
           {"10011010", {{7, 2, 5, 9, 8, 3, 6, 1, 4}}},
           {"10100101", {{7, 2, 5, 1, 3, 8, 4, 9, 6}, {6, 2, 5, 1, 3, 8, 4, 9, 7}}},
           {"10100110", {{8, 3, 7, 2, 5, 9, 6, 1, 4}}},
           {"10110011", {{7, 3, 8, 5, 1, 4, 9, 6, 2}}},
           {"10110100", {{8, 4, 9, 6, 2, 5, 1, 3, 7}, {7, 4, 9, 6, 2, 5, 1, 3, 8}}},
           {"11001011", {{8, 5, 1, 3, 7, 4, 9, 6, 2}}},
           {"11001101", {{8, 6, 2, 4, 9, 7, 3, 5, 1}}},
           {"11010010", {{9, 6, 2, 5, 1, 3, 7, 4, 8}, {8, 6, 2, 5, 1, 3, 7, 4, 9}}},
           {"11010011", {{9, 7, 3, 6, 2, 4, 8, 5, 1}}},
       }},
  };
  return table;
}

}  // namespace golden
