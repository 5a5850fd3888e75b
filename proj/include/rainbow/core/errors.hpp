#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

// Base for everything thrown by the library. CLI maps kinds to exit codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or out-of-contract input (bad parameters, unknown vertices, ...).
struct InputError : Error {
    using Error::Error;
};

// A stated precondition inequality fails; message carries the numeric slack.
struct FeasibilityError : Error {
    using Error::Error;
};

// A step the proof guarantees cannot fail did fail; indicates a bug or a
// violated unchecked assumption. Message carries a trace of the step.
struct InvariantBreachError : Error {
    using Error::Error;
};

// Guarded exhaustive search asked to run on an instance above its size cap.
struct SizeError : Error {
    using Error::Error;
};

// Requested combinatorial object does not exist (e.g. STS with m=5).
struct ExistenceError : Error {
    using Error::Error;
};

// Edge list does not have the required shape (not a tree, not a spider, ...).
struct ShapeError : Error {
    using Error::Error;
};

// Tree-growing step ran out of candidates (small-n slack of the lemma).
struct GrowthError : Error {
    int step = -1;
    long leaf_pair_vertices = -1;
    long low_degree_neighbours = -1;
    GrowthError(const std::string& what, int step_, long vp, long z)
        : Error(what), step(step_), leaf_pair_vertices(vp), low_degree_neighbours(z) {}
};

// Star-extension cascade failed; message names the first failed count.
struct ExtensionError : Error {
    using Error::Error;
};

// Rainbow-cycle search dead-ended; message reports remaining candidates.
struct CycleError : Error {
    using Error::Error;
};

// Spider parameter surgery failed in both branches.
struct SurgeryError : Error {
    using Error::Error;
};

}  // namespace rainbow
