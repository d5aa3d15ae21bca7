#pragma once

#include <stdexcept>
#include <string>

namespace compton {

// Input violates a documented precondition (unnormalized spinor, off-shell
// momentum, malformed state vector, ...).
struct precondition_error : std::invalid_argument {
    explicit precondition_error(const std::string& what)
        : std::invalid_argument(what) {}
};

// Kinematically impossible configuration (negative energies, spacelike
// electron momentum, ...).
struct kinematics_error : std::domain_error {
    explicit kinematics_error(const std::string& what)
        : std::domain_error(what) {}
};

// A propagator denominator vanished; the requested point sits on a
// kinematic singularity of the scattering tensor.
struct singularity_error : std::domain_error {
    explicit singularity_error(const std::string& what)
        : std::domain_error(what) {}
};

} // namespace compton
