#pragma once

#include <stdexcept>
#include <string>

namespace salemhk {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInput : Error {
    using Error::Error;
};

struct DegenerateForm : Error {
    using Error::Error;
};

// Raised by Sturm counting when a finite interval endpoint is a root.
struct EndpointRoot : Error {
    using Error::Error;
};

struct InvalidInvolution : Error {
    using Error::Error;
};

struct SignatureMismatch : Error {
    using Error::Error;
};

struct SamplingFailed : Error {
    using Error::Error;
};

} // namespace salemhk
