#include "hecke/generator.hpp"

#include "hecke/errors.hpp"

namespace hecke {

void validate_generator(const Generator& g, int d) {
  if (g.kind == Generator::Kind::S && (g.i < 1 || g.i > d))
    throw DomainError("generator " + g.name() + ": index must lie in [1, " + std::to_string(d) + "]");
  if (g.kind == Generator::Kind::T && g.digits.size() != static_cast<std::size_t>(d) + 1)
    throw DomainError("generator " + g.name() + ": torus element needs d+1 digits");
}

}  // namespace hecke
