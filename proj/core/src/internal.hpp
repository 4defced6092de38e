#ifndef ECF_SRC_INTERNAL_HPP
#define ECF_SRC_INTERNAL_HPP

namespace ecf::detail {

/// Initializes libsodium once per process; throws on failure.
void ensure_sodium();

}  // namespace ecf::detail

#endif
