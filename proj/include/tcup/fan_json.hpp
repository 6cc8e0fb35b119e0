#ifndef TCUP_FAN_JSON_HPP
#define TCUP_FAN_JSON_HPP

#include <string>

#include "tcup/fan.hpp"

namespace tcup {

/**
 * Fan file format:
 *   {"rank": n, "rays": [[int,...],...], "max_cones": [[idx,...],...]}
 * with 0-based ray indices.  load_fan / emit_fan round-trip bit-exactly on
 * emitted text (the emitter is canonical: fixed key order, compact).
 */
Fan load_fan_json(const std::string& text);
Fan load_fan_file(const std::string& path);
std::string emit_fan_json(const Fan& fan);

} // namespace tcup

#endif
