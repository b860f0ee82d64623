#include "seqlab/guards.hpp"

#include "seqlab/errors.hpp"

#include <string>

namespace seqlab {

namespace {
std::size_t g_guard_bytes = std::size_t{1} << 30;
}

void set_guard_bytes(std::size_t bytes) { g_guard_bytes = bytes; }

std::size_t guard_bytes() { return g_guard_bytes; }

void check_alloc(std::size_t count, std::size_t per_entry, const char* what) {
    if (per_entry != 0 && count > g_guard_bytes / per_entry)
        throw ResourceLimit(std::string(what) + ": " + std::to_string(count) +
                            " entries exceed the byte guard");
}

} // namespace seqlab
