#pragma once

#include <string>

namespace pathideal {

/// Number of leading linear steps of a minimal free resolution.
/// INF means the resolution stays linear through its whole (finite) length,
/// equivalently regularity equals the generating degree.
struct LinearitySteps {
    bool infinite = false;
    int value = 0; // meaningful only when !infinite

    static LinearitySteps inf() { return {true, 0}; }
    static LinearitySteps finite(int k) { return {false, k}; }

    std::string str() const { return infinite ? "INF" : std::to_string(value); }

    friend bool operator==(LinearitySteps a, LinearitySteps b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
    // INF compares greatest
    friend bool operator<(LinearitySteps a, LinearitySteps b) {
        if (a.infinite) return false;
        if (b.infinite) return true;
        return a.value < b.value;
    }
    friend bool operator>=(LinearitySteps a, LinearitySteps b) { return !(a < b); }
};

} // namespace pathideal
