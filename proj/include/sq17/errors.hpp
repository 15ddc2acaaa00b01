#pragma once

#include <stdexcept>
#include <string>

namespace sq17 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Construction / parsing
struct IdOutOfRange : Error { using Error::Error; };
struct SelfLoop : Error { using Error::Error; };
struct DuplicateNeighbor : Error { using Error::Error; };
struct AsymmetricAdjacency : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// Graph edits
struct NoSuchVertex : Error { using Error::Error; };
struct NoSuchEdge : Error { using Error::Error; };
struct NotOnSameFace : Error { using Error::Error; };
struct EdgeExists : Error { using Error::Error; };

// Metrics
struct DegenerateFaces : Error { using Error::Error; };

// Reduction
struct InvalidChord : Error { using Error::Error; };
struct StaleWitness : Error { using Error::Error; };
struct IrreducibleGraph : Error { using Error::Error; };

// Coloring
struct NoColorAvailable : Error { using Error::Error; };
struct PartialColoring : Error { using Error::Error; };
struct DegreeTooHigh : Error { using Error::Error; };
struct NotConnected : Error { using Error::Error; };

// Oracle / generator
struct TooLarge : Error { using Error::Error; };
struct UnknownName : Error { using Error::Error; };
struct Unsatisfiable : Error { using Error::Error; };

}  // namespace sq17
