#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcgame/game.hpp"

namespace mcgame {

enum class Method { closed_form, derivative_sum, recursive, cellsum };

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

// Interaction of T by the chosen method.
double interaction_by(const MultichoiceGame& v, Coalition T, Method method,
                      const Limits& limits = {});

struct IndexReport {
  std::string target;
  Method method = Method::closed_form;
  int max_order = 0;
  // importance[i] for every attribute.
  std::vector<double> importance;
  // Every T with 1 <= |T| <= max_order, in coalition_less order.
  std::vector<std::pair<Coalition, double>> interactions;
  double elapsed_seconds = 0.0;
};

IndexReport interaction_all_upto(const MultichoiceGame& v, int max_order, Method method,
                                 const Limits& limits = {}, std::string target = "game");

}  // namespace mcgame
