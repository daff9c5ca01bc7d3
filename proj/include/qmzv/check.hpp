#pragma once
#include <stdexcept>
#include <string>

namespace qmzv {

// Always-on invariant check (independent of NDEBUG); used for contracts
// that must hold even in release builds, e.g. per-term valuation bounds.
inline void check(bool ok, const std::string& msg) {
    if (!ok) throw std::logic_error(msg);
}

}  // namespace qmzv
