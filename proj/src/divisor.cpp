#include "tfg/divisor.hpp"

#include <sstream>

namespace tfg {

std::string to_string(ValidationKind kind) {
    switch (kind) {
        case ValidationKind::DegreeMismatch: return "DegreeMismatch";
        case ValidationKind::CommonDivisor: return "CommonDivisor";
        case ValidationKind::CharacteristicDivides: return "CharacteristicDivides";
        case ValidationKind::EmptyPartition: return "EmptyPartition";
    }
    return "?";
}

Int global_parts_gcd(const SurfaceConfig& cfg) {
    Int g = 0;
    for (const Partition* p : {&cfg.f.zeros, &cfg.f.poles, &cfg.g.zeros, &cfg.g.poles})
        g = gcd_of(p->parts(), g);
    return g;
}

Int side_gcd(const Partition& a, const Partition& b, Int extra) {
    return gcd_of(a.parts(), gcd_of(b.parts(), extra));
}

Int parts_lcm(const SurfaceConfig& cfg) {
    Int l = 1;
    for (const Partition* p : {&cfg.f.zeros, &cfg.f.poles, &cfg.g.zeros, &cfg.g.poles})
        for (Int x : p->parts()) l = std::lcm(l, x);
    return l;
}

std::optional<ValidationError> validate_config(const SurfaceConfig& cfg) {
    auto err = [](ValidationKind kind, const std::string& detail) {
        return ValidationError{kind, detail};
    };
    for (auto [name, fd] : {std::pair{"f", &cfg.f}, std::pair{"g", &cfg.g}}) {
        if (fd->zeros.empty() || fd->poles.empty())
            return err(ValidationKind::EmptyPartition,
                       std::string(name) + " must have at least one zero and one pole");
        if (fd->zeros.sum() != fd->poles.sum()) {
            std::ostringstream os;
            os << name << ": zero orders sum to " << fd->zeros.sum()
               << " but pole orders sum to " << fd->poles.sum();
            return err(ValidationKind::DegreeMismatch, os.str());
        }
    }
    if (Int g = global_parts_gcd(cfg); g > 1) {
        std::ostringstream os;
        os << "all multiplicities share the common divisor " << g;
        return err(ValidationKind::CommonDivisor, os.str());
    }
    if (cfg.characteristic > 0) {
        for (const Partition* p : {&cfg.f.zeros, &cfg.f.poles, &cfg.g.zeros, &cfg.g.poles})
            for (Int x : p->parts())
                if (std::gcd(x, cfg.characteristic) != 1) {
                    std::ostringstream os;
                    os << "multiplicity " << x << " is not coprime to the characteristic "
                       << cfg.characteristic;
                    return err(ValidationKind::CharacteristicDivides, os.str());
                }
    }
    return std::nullopt;
}

} // namespace tfg
