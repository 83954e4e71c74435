#pragma once

#include <optional>

#include "incompat/formula.hpp"

namespace incompat {

// The translation T from the LFI signature into the NBI signature: variables
// are fixed, |/&/->/! are homomorphic, and @a maps to T(a) # !T(a).
Formula translate_T(const Formula& f);

// Inverse on the image of T. A NBI formula is in the image exactly when every
// #-subformula has the shape b # !b with b itself in the image; otherwise
// returns nullopt.
std::optional<Formula> invert_T(const Formula& f);

}  // namespace incompat
