#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mcgame/game.hpp"

namespace mcgame {

struct LoadOptions {
  // Subtract v(0) from every entry before validation.
  bool normalize = false;
  Limits limits;
};

struct LoadedGame {
  MultichoiceGame game;
  // k_i as written in the file; every entry equals game.k() when uniform.
  std::vector<int> k_list;
  bool heterogeneous = false;
  // v(0) as read, before normalization.
  double raw_zero = 0.0;
};

// Parses {"n": int, "k": int | [int...], "values": [real...]}.
LoadedGame parse_game(const std::string& text, const LoadOptions& options = {});
LoadedGame load_game(const std::string& path, const LoadOptions& options = {});

// Canonical uniform document; reloading it reproduces the table bit for bit.
std::string serialize_game(const MultichoiceGame& v);

// One "x1,...,xn,value" row per lattice point, 17 significant digits.
std::string game_to_csv(const MultichoiceGame& v);

}  // namespace mcgame
