#include "artin/complex.hpp"

#include <stdexcept>

namespace artin {

std::string family_name(Family f) { return f == Family::A ? "A" : "B"; }

std::string module_name(ModuleKind m) {
    switch (m) {
        case ModuleKind::Trivial: return "trivial";
        case ModuleKind::Laurent: return "laurent";
        case ModuleKind::Mod1PlusT: return "mod1+t";
        case ModuleKind::Mod1MinusT: return "mod1-t";
        case ModuleKind::Mod1MinusT2: return "mod1-t2";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "A" || s == "a") return Family::A;
    if (s == "B" || s == "b") return Family::B;
    throw std::invalid_argument("unknown family: " + s);
}

ModuleKind parse_module(const std::string& s) {
    if (s == "trivial") return ModuleKind::Trivial;
    if (s == "laurent") return ModuleKind::Laurent;
    if (s == "mod1+t") return ModuleKind::Mod1PlusT;
    if (s == "mod1-t") return ModuleKind::Mod1MinusT;
    if (s == "mod1-t2") return ModuleKind::Mod1MinusT2;
    throw std::invalid_argument("unknown coefficient module: " + s);
}

} // namespace artin
