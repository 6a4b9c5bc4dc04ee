#ifndef PN2SC_IDS_H_
#define PN2SC_IDS_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace pn2sc {

// Stable element identity. Names are mutable attributes; links are keyed by Id.
template <class Tag>
struct Id {
  std::uint32_t value = 0;

  friend auto operator<=>(const Id&, const Id&) = default;
};

using PlaceId = Id<struct PlaceTag>;
using TransitionId = Id<struct TransitionTag>;
using StateId = Id<struct StateTag>;
using EdgeId = Id<struct EdgeTag>;

// Raised when an operation's precondition was violated by the caller
// (double delete, stale match, phase-ordering bug). Never a user input error.
class InternalFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pn2sc

template <class Tag>
struct std::hash<pn2sc::Id<Tag>> {
  std::size_t operator()(pn2sc::Id<Tag> id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};

#endif  // PN2SC_IDS_H_
