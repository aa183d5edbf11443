#ifndef revaf_enumerate_hpp
#define revaf_enumerate_hpp

#include <cstddef>
#include <vector>

#include "revaf/af.hpp"

namespace revaf {

enum class Semantics { ConflictFree, Admissible, Complete, Preferred, Stable, Grounded };

const char* semantics_name(Semantics s);
Semantics semantics_from_name(const std::string& name); // DomainError on unknown name

inline constexpr std::size_t kDefaultEnumerationBound = 20;

// Exhaustively tests all 2^|A| subsets against the selected definition.
// Returned sets are sorted lexicographically; the list is ordered by size,
// then lexicographically. For Grounded the result is the single subset-minimal
// complete extension. Frameworks larger than max_args raise SizeLimitError.
// This is the reference oracle the other solvers are checked against.
std::vector<KeySet> enumerate_extensions(const Framework& f, Semantics sem,
                                         std::size_t max_args = kDefaultEnumerationBound);

} // namespace revaf

#endif
