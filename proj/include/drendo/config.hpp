#ifndef DRENDO_CONFIG_HPP
#define DRENDO_CONFIG_HPP

#include <memory>
#include <string>

#include "drendo/drinfeld.hpp"

namespace drendo {

/// Owns the field context a module was loaded against.
struct LoadedModule {
    std::unique_ptr<Fq> field;
    GlobalDrinfeldModule phi;
};

// JSON schema: { "p": 3, "n": 1, "fq_modulus": "w^2 + w + 1" (n > 1 only,
// optional), "rank": 2, "phi_T": ["T", "1"] } with coefficients given as
// polynomial strings, optionally "num/den".
LoadedModule load_module_json(const std::string& text);
LoadedModule load_module_file(const std::string& path);

}  // namespace drendo

#endif
