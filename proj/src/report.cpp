#include "mcgame/report.hpp"

#include <chrono>

#include "mcgame/choquet.hpp"
#include "mcgame/error.hpp"
#include "mcgame/indices.hpp"

namespace mcgame {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::derivative_sum: return "derivative_sum";
    case Method::recursive: return "recursive";
    case Method::cellsum: return "cellsum";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::closed_form, Method::derivative_sum, Method::recursive,
                   Method::cellsum}) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

double interaction_by(const MultichoiceGame& v, Coalition T, Method method,
                      const Limits& limits) {
  switch (method) {
    case Method::closed_form: return interaction(v, T, limits);
    case Method::derivative_sum: return interaction_via_derivatives(v, T, limits);
    case Method::recursive: return interaction_recursive(v, T, limits);
    case Method::cellsum: return interaction_cellsum(v, T, limits);
  }
  throw GameError("unknown method");
}

IndexReport interaction_all_upto(const MultichoiceGame& v, int max_order, Method method,
                                 const Limits& limits, std::string target) {
  if (max_order < 1 || max_order > v.n()) {
    throw GameError("order must lie in [1, " + std::to_string(v.n()) + "]");
  }
  const auto start = std::chrono::steady_clock::now();
  IndexReport report;
  report.target = std::move(target);
  report.method = method;
  report.max_order = max_order;
  report.importance.resize(v.n());
  for (Coalition T : coalitions_up_to(v.n(), max_order)) {
    const double value = interaction_by(v, T, method, limits);
    if (T.size() == 1) report.importance[T.members().front()] = value;
    report.interactions.emplace_back(T, value);
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace mcgame
