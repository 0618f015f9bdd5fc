#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "gpnef/errors.hpp"

namespace gpnef {

enum class Family : char {
  A = 'A',
  B = 'B',
  C = 'C',
  D = 'D',
  E = 'E',
  F = 'F',
  G = 'G',
};

inline char family_letter(Family f) { return static_cast<char>(f); }

// A simple Lie type in Bourbaki numbering. Nodes are 1-based everywhere in
// the public interface.
struct CartanType {
  Family family = Family::A;
  int rank = 1;

  static CartanType make(Family f, int rank);
  static CartanType parse(std::string_view text);  // "A3", "E6", ...

  std::string to_string() const {
    return std::string(1, family_letter(family)) + std::to_string(rank);
  }

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

inline CartanType CartanType::make(Family f, int rank) {
  auto fail = [&](int lo, const char* extra = nullptr) {
    std::string msg = "type ";
    msg += family_letter(f);
    msg += " requires rank >= " + std::to_string(lo);
    if (extra) msg += extra;
    msg += " (got " + std::to_string(rank) + ")";
    throw ConfigError(msg);
  };
  switch (f) {
    case Family::A:
      if (rank < 1) fail(1);
      break;
    case Family::B:
      if (rank < 2) fail(2);
      break;
    case Family::C:
      if (rank < 2) fail(2);
      break;
    case Family::D:
      if (rank < 4) fail(4);
      break;
    case Family::E:
      if (rank < 6 || rank > 8)
        throw ConfigError("type E requires rank in {6, 7, 8} (got " +
                          std::to_string(rank) + ")");
      break;
    case Family::F:
      if (rank != 4)
        throw ConfigError("type F requires rank 4 (got " +
                          std::to_string(rank) + ")");
      break;
    case Family::G:
      if (rank != 2)
        throw ConfigError("type G requires rank 2 (got " +
                          std::to_string(rank) + ")");
      break;
    default:
      throw ConfigError("unknown family");
  }
  return CartanType{f, rank};
}

inline CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2)
    throw ConfigError("cannot parse type '" + std::string(text) +
                      "': expected a family letter followed by a rank");
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (letter < 'A' || letter > 'G')
    throw ConfigError("unknown family '" + std::string(1, text[0]) +
                      "' (expected one of A, B, C, D, E, F, G)");
  int rank = 0;
  for (size_t k = 1; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw ConfigError("cannot parse type '" + std::string(text) +
                        "': rank must be a positive integer");
    rank = rank * 10 + (text[k] - '0');
    if (rank > 1000)
      throw ConfigError("rank " + std::string(text.substr(1)) +
                        " is out of range (max 1000)");
  }
  return make(static_cast<Family>(letter), rank);
}

using IntMatrix = std::vector<std::vector<int>>;

// Cartan matrix, rows indexed by coroots: cartan[i][j] = <alpha_j, alpha_i^vee>.
// 0-based storage for 1-based Bourbaki nodes i+1, j+1.
inline IntMatrix cartan_matrix(const CartanType& ct) {
  const int n = ct.rank;
  IntMatrix c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto bond = [&](int i, int j) {  // simple edge between 1-based nodes
    c[i - 1][j - 1] = -1;
    c[j - 1][i - 1] = -1;
  };
  switch (ct.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      // alpha_n is the short root: <alpha_{n-1}, alpha_n^vee> = -2.
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1);
      c[n - 2][n - 1] = -1;
      c[n - 1][n - 2] = -2;
      break;
    case Family::C:
      // alpha_n is the long root: <alpha_n, alpha_{n-1}^vee> = -2.
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1);
      c[n - 2][n - 1] = -2;
      c[n - 1][n - 2] = -1;
      break;
    case Family::D:
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case Family::E:
      bond(1, 3);
      bond(3, 4);
      bond(2, 4);
      for (int i = 4; i < n; ++i) bond(i, i + 1);
      break;
    case Family::F:
      bond(1, 2);
      bond(3, 4);
      c[1][2] = -1;  // <alpha_3, alpha_2^vee>, alpha_2 long
      c[2][1] = -2;  // <alpha_2, alpha_3^vee>, alpha_3 short
      break;
    case Family::G:
      c[0][1] = -3;  // <alpha_2, alpha_1^vee>, alpha_1 short
      c[1][0] = -1;
      break;
  }
  return c;
}

}  // namespace gpnef
