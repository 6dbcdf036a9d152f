#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dsa {

// Thrown when a construction exceeds its state cap (subset constructions on
// nonterminating inputs, unfolding past the size guard, oracle run budgets).
class CapExceededError : public std::runtime_error {
  public:
    CapExceededError(const std::string& what, std::size_t states_created)
        : std::runtime_error(what), states_created_(states_created) {}
    std::size_t states_created() const { return states_created_; }

  private:
    std::size_t states_created_;
};

}  // namespace dsa
