#pragma once
// Minimal SHA-256 used for content-addressing catalog entries and input
// digests in run manifests.  Not intended for security; only for stable,
// collision-resistant cache keys.

#include <string>

namespace picardium {

// hex digest of an arbitrary byte string
std::string sha256_hex(const std::string& data);

}  // namespace picardium
