#pragma once

#include <stdexcept>
#include <string>

namespace hgs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// sphere
struct IdentityMapError : Error { using Error::Error; };
struct CoincidentFixedPoints : Error { using Error::Error; };

// disk
struct InvalidDisk : Error { using Error::Error; };
struct NonpositiveRadius : Error { using Error::Error; };

// special
struct GammaPole : Error { using Error::Error; };
struct SinePole : Error { using Error::Error; };
struct DegenerateNormalization : Error { using Error::Error; };

// apollonius
struct DisksNotDisjoint : Error { using Error::Error; };
struct NumericalRootOutsideInterval : Error { using Error::Error; };
struct PointNotInterior : Error { using Error::Error; };
struct PhaseRequired : Error { using Error::Error; };
struct PointNotOnA : Error { using Error::Error; };

// schottky
struct NonLoxodromicGenerator : Error { using Error::Error; };
struct DepthTooLarge : Error { using Error::Error; };

// loops
struct BranchJump : Error { using Error::Error; };
struct DiskConstructionFailed : Error { using Error::Error; };
struct ProfileNotAudited : Error { using Error::Error; };

// serialization / cli
struct ParseError : Error { using Error::Error; };

} // namespace hgs
