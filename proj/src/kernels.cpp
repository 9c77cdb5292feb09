#include "kgconf/kernels.hpp"

namespace kgconf {

std::string_view to_string(Execution e) {
  return e == Execution::serial ? "serial" : "parallel";
}

}  // namespace kgconf
