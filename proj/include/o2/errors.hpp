#ifndef O2_ERRORS_HPP
#define O2_ERRORS_HPP

#include <stdexcept>

namespace o2 {

struct NotBalancedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TooShortError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A decomposition the theory guarantees to exist was not found.
/// Always indicates an implementation bug.
struct InternalIncompletenessError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace o2

#endif
