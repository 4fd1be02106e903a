#include "mcgame/rational.hpp"

#include <deque>
#include <mutex>

#include "mcgame/error.hpp"

namespace mcgame {

const Integer& factorial(int n) {
  if (n < 0) throw GameError("factorial of a negative number");
  static std::mutex mutex;
  // deque keeps references stable as the table grows.
  static std::deque<Integer> table{Integer(1)};
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<int>(table.size()) <= n) {
    table.push_back(table.back() * static_cast<unsigned>(table.size()));
  }
  return table[n];
}

}  // namespace mcgame
